#include "doctest.h"

#include "ffdesign/indicator.hpp"
#include "ffdesign/poly.hpp"

#include "util.hpp"

using namespace ffd;
using testutil::fraction_from_int_points;
using testutil::poly_from_table;
using testutil::q;

TEST_CASE("polynomial arithmetic stays canonical") {
    auto x1 = Poly::variable(2, 0);
    auto x2 = Poly::variable(2, 1);
    auto p = (x1 + x2) * (x1 - x2);
    CHECK(p.coeff({2, 0}) == 1);
    CHECK(p.coeff({0, 2}) == -1);
    CHECK(p.coeff({1, 1}) == 0);
    CHECK(p.terms().size() == 2);
    CHECK((p - p).is_zero());
    CHECK((p * q(0)).is_zero());
    CHECK(p.eval({q(3), q(2)}) == q(5));
    auto one = Poly::constant(2, 1);
    CHECK((p * one) == p);
    CHECK(-p == Poly::zero(2) - p);
    CHECK_THROWS_AS(p + Poly::zero(3), std::invalid_argument);
}

TEST_CASE("divisor basis encodes the per-factor vanishing polynomial") {
    // {-1,1}: x^2 - 1, so g = 1
    auto s2 = DesignSpace::from_level_counts({2});
    CHECK(divisor_basis(s2).g[0] == std::vector<Rational>{1, 0});
    // {-1,0,1}: x^3 - x, so g = x
    auto s3 = DesignSpace::from_level_counts({3});
    CHECK(divisor_basis(s3).g[0] == std::vector<Rational>{0, 1, 0});
    // {0,1,2}: x(x-1)(x-2) = x^3 - 3x^2 + 2x, so g = 3x^2 - 2x
    DesignSpace s012({FactorSpec{{0, 1, 2}}});
    CHECK(divisor_basis(s012).g[0] == std::vector<Rational>{0, -2, 3});
    // {-3,-1,1,3}: (x^2-1)(x^2-9) = x^4 - 10x^2 + 9, so g = 10x^2 - 9
    auto s4 = DesignSpace::from_level_counts({4});
    CHECK(divisor_basis(s4).g[0] == std::vector<Rational>{-9, 0, 10, 0});
}

TEST_CASE("normal form agrees with the original polynomial on every design point") {
    auto space = DesignSpace::from_level_counts({2, 3});
    auto x1 = Poly::variable(2, 0);
    auto x2 = Poly::variable(2, 1);
    auto p = x1 * x1 * x2 * x2 * x2 + x1 * x1 * x1 + x2 * x2 * x2 * x2;
    auto r = reduce_mod_design(space, p);
    for (const auto& [a, c] : r.terms()) CHECK(space.in_exponent_set(a));
    for (const auto& i : space.run_indices()) {
        auto pt = space.point_of(i);
        CHECK(p.eval(pt) == r.eval(pt));
    }
    // x1^2 -> 1 and x2^3 -> x2 under the default codings
    CHECK(reduce_mod_design(space, x1 * x1) == Poly::constant(2, 1));
    CHECK(reduce_mod_design(space, x2 * x2 * x2) == x2);
}

TEST_CASE("indicator of an 8-run regular two-level fraction") {
    auto space = DesignSpace::from_level_counts({2, 2, 2, 2, 2});
    auto f = fraction_from_int_points(
        space, {{1, 1, 1, 1, 1},
                {1, 1, -1, 1, -1},
                {1, -1, 1, -1, 1},
                {1, -1, -1, -1, -1},
                {-1, 1, 1, -1, -1},
                {-1, 1, -1, -1, 1},
                {-1, -1, 1, 1, -1},
                {-1, -1, -1, 1, 1}});
    auto expected = poly_from_table(5, {{{0, 0, 0, 0, 0}, {1, 4}},
                                        {{1, 1, 0, 1, 0}, {1, 4}},
                                        {{1, 0, 1, 0, 1}, {1, 4}},
                                        {{0, 1, 1, 1, 1}, {1, 4}}});
    CHECK(indicator_of(space, f).poly == expected);
    CHECK(fraction_of_indicator(space, expected) == f);
}

TEST_CASE("indicator of a 6-run non-regular two-level fraction") {
    auto space = DesignSpace::from_level_counts({2, 2, 2, 2});
    auto f = fraction_from_int_points(space, {{1, 1, 1, 1},
                                              {1, 1, -1, -1},
                                              {1, -1, 1, -1},
                                              {-1, 1, -1, -1},
                                              {-1, -1, 1, -1},
                                              {-1, -1, -1, 1}});
    auto expected = poly_from_table(4, {{{0, 0, 0, 0}, {3, 8}},
                                        {{0, 0, 0, 1}, {-1, 8}},
                                        {{0, 1, 1, 0}, {-1, 8}},
                                        {{0, 1, 1, 1}, {3, 8}},
                                        {{1, 0, 1, 0}, {1, 8}},
                                        {{1, 0, 1, 1}, {1, 8}},
                                        {{1, 1, 0, 0}, {1, 8}},
                                        {{1, 1, 0, 1}, {1, 8}}});
    CHECK(indicator_of(space, f).poly == expected);
}

TEST_CASE("indicator of a 4-point fraction of the 2x2x3 space") {
    auto space = DesignSpace::from_level_counts({2, 2, 3});
    // index set {(111),(122),(213),(223)}
    auto f = fraction_from_int_points(space, {{-1, -1, -1}, {-1, 1, 0}, {1, -1, 1}, {1, 1, 1}});
    auto expected = poly_from_table(3, {{{0, 0, 0}, {2, 8}},
                                        {{1, 0, 0}, {-2, 8}},
                                        {{0, 1, 0}, {2, 8}},
                                        {{0, 0, 1}, {1, 8}},
                                        {{0, 0, 2}, {1, 8}},
                                        {{1, 1, 0}, {-2, 8}},
                                        {{1, 0, 1}, {3, 8}},
                                        {{0, 1, 1}, {1, 8}},
                                        {{1, 1, 1}, {-1, 8}},
                                        {{1, 0, 2}, {3, 8}},
                                        {{0, 1, 2}, {-3, 8}},
                                        {{1, 1, 2}, {3, 8}}});
    CHECK(indicator_of(space, f).poly == expected);
}

TEST_CASE("indicator of the 9-run regular three-level fraction has 27 terms") {
    auto space = DesignSpace::from_level_counts({3, 3, 3, 3});
    auto f = fraction_from_int_points(space, {{-1, -1, -1, 0},
                                              {-1, 0, 1, 1},
                                              {-1, 1, 0, -1},
                                              {0, -1, 1, -1},
                                              {0, 0, 0, 0},
                                              {0, 1, -1, 1},
                                              {1, -1, 0, 1},
                                              {1, 0, -1, -1},
                                              {1, 1, 1, 0}});
    auto expected = poly_from_table(
        4, {{{0, 0, 0, 0}, {1, 1}},
            {{2, 0, 0, 0}, {-1, 1}},  {{0, 2, 0, 0}, {-1, 1}},
            {{0, 0, 2, 0}, {-1, 1}},  {{0, 0, 0, 2}, {-1, 1}},
            {{2, 2, 0, 0}, {1, 1}},   {{2, 0, 2, 0}, {1, 1}},
            {{2, 0, 0, 2}, {1, 1}},   {{0, 2, 2, 0}, {1, 1}},
            {{0, 2, 0, 2}, {1, 1}},   {{0, 0, 2, 2}, {1, 1}},
            {{2, 1, 1, 0}, {1, 4}},   {{2, 1, 0, 1}, {-1, 4}},
            {{2, 0, 1, 1}, {1, 4}},   {{1, 2, 1, 0}, {1, 4}},
            {{1, 2, 0, 1}, {1, 4}},   {{0, 2, 1, 1}, {-1, 4}},
            {{1, 1, 2, 0}, {1, 4}},   {{1, 0, 2, 1}, {-1, 4}},
            {{0, 1, 2, 1}, {1, 4}},   {{1, 1, 0, 2}, {-1, 4}},
            {{1, 0, 1, 2}, {-1, 4}},  {{0, 1, 1, 2}, {-1, 4}},
            {{2, 2, 2, 0}, {-3, 4}},  {{2, 2, 0, 2}, {-3, 4}},
            {{2, 0, 2, 2}, {-3, 4}},  {{0, 2, 2, 2}, {-3, 4}}});
    auto ind = indicator_of(space, f);
    CHECK(ind.poly.terms().size() == 27);
    CHECK(ind.poly == expected);
    CHECK(fraction_of_indicator(space, expected) == f);
}

TEST_CASE("indicator round trip and idempotence on random fractions") {
    auto space = DesignSpace::from_level_counts({2, 3, 3});
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    auto next = [&]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    };
    for (int trial = 0; trial < 25; ++trial) {
        Fraction f = empty_fraction(space);
        for (auto& v : f.y) v = next() & 1u;
        auto ind = indicator_of(space, f);
        CHECK(is_indicator(space, ind.poly));
        CHECK(fraction_of_indicator(space, ind.poly) == f);
        for (const auto& i : space.run_indices()) {
            auto val = ind.poly.eval(space.point_of(i));
            CHECK(val == Rational(f.y[space.run_rank(i)]));
        }
    }
}

TEST_CASE("non-indicators are detected") {
    auto space = DesignSpace::from_level_counts({2, 2});
    auto half = Poly::constant(2, q(1, 2));
    CHECK(!is_indicator(space, half));
    CHECK_THROWS_AS(fraction_of_indicator(space, half), NotIndicatorError);
    auto x1 = Poly::variable(2, 0);
    CHECK(!is_indicator(space, x1));
    CHECK(is_indicator(space, Poly::zero(2)));
    CHECK(is_indicator(space, Poly::constant(2, 1)));
}

TEST_CASE("theta vector round trip follows the exponent order") {
    auto space = DesignSpace::from_level_counts({2, 2, 3});
    auto f = fraction_from_int_points(space, {{-1, -1, -1}, {1, 1, 1}});
    auto poly = indicator_of(space, f).poly;
    auto theta = theta_vector(space, poly);
    REQUIRE(theta.size() == 12);
    for (std::size_t k = 0; k < theta.size(); ++k)
        CHECK(theta[k] == poly.coeff(space.exponents()[k]));
    CHECK(poly_from_theta(space, theta) == poly);
}
