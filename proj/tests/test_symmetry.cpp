#include "doctest.h"

#include "ffdesign/contrast.hpp"
#include "ffdesign/indicator.hpp"
#include "ffdesign/symmetry.hpp"

#include "util.hpp"

#include <algorithm>
#include <set>

using namespace ffd;
using testutil::fraction_from_int_points;
using testutil::q;

TEST_CASE("group order counts level and factor permutations") {
    // 2x2x3: 2! * 2! * 3! level perms, and the two 2-level factors may swap
    auto s223 = DesignSpace::from_level_counts({2, 2, 3});
    CHECK(symmetry_group(s223).size() == 2 * 2 * 6 * 2);
    // 2x2x2x3: 2^3 * 3! level perms, 3! factor perms within the 2-level block
    auto s2223 = DesignSpace::from_level_counts({2, 2, 2, 3});
    CHECK(symmetry_group(s2223).size() == 8 * 6 * 6);
    // 3x3: 3!^2 level perms, 2 factor perms
    auto s33 = DesignSpace::from_level_counts({3, 3});
    CHECK(symmetry_group(s33).size() == 36 * 2);
    // the group is duplicate-free
    auto group = symmetry_group(s223);
    std::set<std::pair<std::vector<int>, std::vector<std::vector<int>>>> seen;
    for (const auto& g : group) seen.insert({g.factor_perm, g.level_perms});
    CHECK(seen.size() == group.size());
}

TEST_CASE("factors only permute onto factors with the same level count") {
    auto space = DesignSpace::from_level_counts({2, 3, 2});
    for (const auto& g : symmetry_group(space)) {
        for (int j = 0; j < 3; ++j)
            CHECK(space.levels_of(g.factor_perm[j]) == space.levels_of(j));
    }
    CHECK(symmetry_group(space).size() == 2 * 6 * 2 * 2);
}

TEST_CASE("compose, inverse and identity form a group action") {
    auto space = DesignSpace::from_level_counts({2, 2, 3});
    auto group = symmetry_group(space);
    auto id = identity_element(space);
    Fraction f = fraction_from_int_points(
        space, {{-1, -1, -1}, {-1, -1, 1}, {-1, 1, 0}, {1, -1, 0}, {1, -1, 1}, {1, 1, -1}});
    CHECK(apply(space, id, f) == f);
    std::uint64_t state = 7;
    auto pick = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return group[(state >> 33) % group.size()];
    };
    for (int trial = 0; trial < 40; ++trial) {
        auto g = pick();
        auto h = pick();
        CHECK(compose(space, g, inverse_element(space, g)) == id);
        CHECK(compose(space, inverse_element(space, g), g) == id);
        // action compatibility on indices and fractions
        auto gh = compose(space, g, h);
        for (const auto& i : space.run_indices())
            CHECK(apply_to_index(space, gh, i) == apply_to_index(space, g, apply_to_index(space, h, i)));
        CHECK(apply(space, gh, f) == apply(space, g, apply(space, h, f)));
        CHECK(apply(space, g, f).size() == f.size());
    }
}

TEST_CASE("permutation matrix realizes the action on responses") {
    auto space = DesignSpace::from_level_counts({2, 3});
    for (const auto& g : symmetry_group(space)) {
        auto P = permutation_matrix(space, g);
        for (unsigned mask = 0; mask < 64; mask += 7) {
            Fraction f = empty_fraction(space);
            std::vector<Rational> y(6);
            for (int k = 0; k < 6; ++k) {
                f.y[k] = (mask >> k) & 1u;
                y[k] = f.y[k];
            }
            std::vector<Rational> moved(6);
            auto fg = apply(space, g, f);
            for (int k = 0; k < 6; ++k) moved[k] = fg.y[k];
            CHECK(P.apply(y) == moved);
        }
    }
}

TEST_CASE("theta and mu transforms agree with recomputation for every group element") {
    auto space = DesignSpace::from_level_counts({2, 2, 3});
    auto cm = contrast_matrix(space);
    auto f = fraction_from_int_points(
        space, {{-1, -1, -1}, {-1, -1, 1}, {-1, 1, 0}, {1, -1, 0}, {1, -1, 1}, {1, 1, -1}});
    auto theta = theta_vector(space, indicator_of(space, f).poly);
    auto mu = contrast_rep(space, cm, f).mu;
    for (const auto& g : symmetry_group(space)) {
        auto fg = apply(space, g, f);
        CHECK(theta_transform(space, g, theta) ==
              theta_vector(space, indicator_of(space, fg).poly));
        CHECK(mu_transform(space, cm, g, mu) == contrast_rep(space, cm, fg).mu);
    }
}

TEST_CASE("complement flips the indicator coefficients") {
    auto space = DesignSpace::from_level_counts({2, 2, 3});
    auto cm = contrast_matrix(space);
    std::uint64_t state = 3;
    for (int trial = 0; trial < 30; ++trial) {
        Fraction f = empty_fraction(space);
        for (auto& v : f.y) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            v = (state >> 33) & 1u;
        }
        auto fb = complement(f);
        CHECK(fb.size() == space.run_count() - f.size());
        CHECK(complement(fb) == f);
        auto theta = theta_vector(space, indicator_of(space, f).poly);
        auto thetab = theta_vector(space, indicator_of(space, fb).poly);
        for (std::size_t a = 0; a < theta.size(); ++a) {
            if (space.exponents()[a] == ExponentVector{0, 0, 0})
                CHECK(thetab[a] == 1 - theta[a]);
            else
                CHECK(thetab[a] == -theta[a]);
        }
        CHECK(strength(space, cm, f) == strength(space, cm, fb));
    }
}

TEST_CASE("canonical form is an idempotent orbit invariant") {
    auto space = DesignSpace::from_level_counts({2, 2, 3});
    auto group = symmetry_group(space);
    auto f = fraction_from_int_points(
        space, {{-1, -1, -1}, {-1, -1, 1}, {-1, 1, 0}, {1, -1, 0}, {1, -1, 1}, {1, 1, -1}});
    auto canon = canonical_form(space, group, f);
    CHECK(canonical_form(space, group, canon) == canon);
    for (const auto& g : group) {
        auto moved = apply(space, g, f);
        CHECK(canonical_form(space, group, moved) == canon);
        CHECK(canon <= moved);
    }
}

TEST_CASE("classify partitions fractions into orbits sorted by size") {
    auto space = DesignSpace::from_level_counts({2, 3});
    auto group = symmetry_group(space);
    // all 15 two-point fractions of the 2x3 space
    std::vector<Fraction> all;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            Fraction f = empty_fraction(space);
            f.y[a] = f.y[b] = 1;
            all.push_back(f);
        }
    auto orbits = classify(space, all);
    std::size_t total = 0;
    for (std::size_t r = 0; r + 1 < orbits.size(); ++r)
        CHECK(orbits[r].members.size() <= orbits[r + 1].members.size());
    for (const auto& orbit : orbits) {
        total += orbit.members.size();
        CHECK(orbit.representative == canonical_form(space, group, orbit.members.front()));
        for (const auto& member : orbit.members)
            CHECK(canonical_form(space, group, member) == orbit.representative);
    }
    CHECK(total == all.size());
    // 2-subsets of 2x3 split into: same row (3 cells apart), same column,
    // and diagonal pairs
    CHECK(orbits.size() == 3);

    auto dup = all;
    dup.push_back(all.front());
    CHECK_THROWS_AS(classify(space, dup), std::invalid_argument);
}
