#pragma once

#include "ffdesign/indicator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ffd {

// One summand of a quadratic form mu_a(theta): coeff * theta_{a1} * theta_{a2}
// with a1 <= a2 in the space's exponent order. Unordered pairs are stored once
// with the coefficient doubled when a1 != a2.
struct QuadTerm {
    Rational coeff;
    ExponentVector a1, a2;

    bool operator==(const QuadTerm&) const = default;
};

// For each a in L (exponent order), the quadratic form mu_a such that for any
// concrete theta, mu_a(theta) is the x^a coefficient of reduce((sum theta_b x^b)^2).
// The indicator-function criterion is theta_a = mu_a(theta) for all a.
struct RelationSystem {
    std::vector<std::vector<QuadTerm>> mu; // indexed by exponent rank
};

RelationSystem relation_system(const DesignSpace& space);

Rational evaluate_quadratic(const std::vector<QuadTerm>& form, const DesignSpace& space,
                            const std::vector<Rational>& theta);

// True iff theta_a = mu_a(theta) exactly for every a in L.
bool check_relations(const DesignSpace& space, const RelationSystem& system,
                     const std::vector<Rational>& theta);

// A linear form sum_a coeffs[a] * theta_a + constant + size_coeff * s, where s
// is the symbolic size variable; emitted as an extra generator "... = 0".
struct LinearConstraint {
    std::vector<Rational> coeffs; // over L in exponent order
    Rational constant = 0;
    Rational size_coeff = 0;
};

enum class RelationFormat { plain, cas_ideal };

// Deterministic text for the system theta_a - mu_a = 0 plus appended linear
// constraints. Variables are named "t" + exponent digits (requires r_j <= 10);
// the symbolic size variable is "s".
std::string emit_relations(const DesignSpace& space, const RelationSystem& system,
                           const std::vector<LinearConstraint>& constraints,
                           RelationFormat format);

// Variable name "t" + concatenated exponent digits. Throws when some r_j > 10.
std::string theta_var_name(const DesignSpace& space, const ExponentVector& a);

} // namespace ffd
