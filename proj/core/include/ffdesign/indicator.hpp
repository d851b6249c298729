#pragma once

#include "ffdesign/fraction.hpp"
#include "ffdesign/poly.hpp"

#include <stdexcept>
#include <vector>

namespace ffd {

struct NotIndicatorError : std::domain_error {
    explicit NotIndicatorError(const std::string& what) : std::domain_error(what) {}
};

// Per factor j, the coefficients of g_j (degree < r_j) with
// x_j^{r_j} - g_j = prod_{a in A_j} (x_j - a). The set {x_j^{r_j} - g_j} is a
// reduced Groebner basis of the design ideal for any monomial order, so
// normal forms are obtained by per-variable substitution alone.
struct DivisorBasis {
    std::vector<std::vector<Rational>> g; // g[j][e] = coefficient of x_j^e
};

DivisorBasis divisor_basis(const DesignSpace& space);

// Normal form modulo the design ideal: repeatedly substitutes
// x_j^{r_j} -> g_j until the support lies in L. Agrees with the input as a
// function on every point of the design.
Poly reduce_mod_design(const DesignSpace& space, const Poly& p);
Poly reduce_mod_design(const DesignSpace& space, const DivisorBasis& db, const Poly& p);

// The unique polynomial with support in L that is 1 on F and 0 elsewhere;
// coefficients are theta = X^{-1} y.
struct IndicatorPoly {
    Poly poly;
};

IndicatorPoly indicator_of(const DesignSpace& space, const Fraction& f);

// Coefficient vector over L in the space's exponent order.
std::vector<Rational> theta_vector(const DesignSpace& space, const Poly& p);
Poly poly_from_theta(const DesignSpace& space, const std::vector<Rational>& theta);

// Evaluates p at every design point; throws NotIndicatorError if any value is
// outside {0,1}.
Fraction fraction_of_indicator(const DesignSpace& space, const Poly& p);

// True iff reduce(p^2 - p) == 0.
bool is_indicator(const DesignSpace& space, const Poly& p);

} // namespace ffd
