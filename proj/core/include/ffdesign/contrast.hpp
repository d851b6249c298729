#pragma once

#include "ffdesign/fraction.hpp"
#include "ffdesign/poly.hpp"
#include "ffdesign/relations.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ffd {

// Row label of the contrast matrix: a factor subset J (1-based, sorted; empty
// for the constant row) and a tuple itilde in prod_{j in J} [r_j - 1].
// Printed the way the paper writes subscripts: "123(112)", "Const." for J = {}.
struct ContrastLabel {
    std::vector<int> J;
    std::vector<int> itilde;

    std::string to_string() const;
    auto operator<=>(const ContrastLabel&) const = default;
};

// The m x m contrast matrix. Row order: constant row, then strata k = 1..n;
// within a stratum, J lexicographic over sorted subsets; within J, itilde
// lexicographic. stratum_offset[k] is the first row of stratum k, with
// stratum_offset[n+1] == m.
struct ContrastMatrix {
    std::vector<ContrastLabel> labels;
    std::vector<std::size_t> stratum_offset;
    ExactMatrix C;
};

ContrastMatrix contrast_matrix(const DesignSpace& space);

// mu = C y; the constant entry equals the fraction size, and mu does not
// depend on the level coding.
struct ContrastRep {
    std::vector<Rational> mu; // aligned with ContrastMatrix::labels
};

ContrastRep contrast_rep(const DesignSpace& space, const ContrastMatrix& cm, const Fraction& f);

// mu = C X theta (theta over L in exponent order).
ContrastRep contrast_rep_from_theta(const DesignSpace& space, const ContrastMatrix& cm,
                                    const std::vector<Rational>& theta);

// The z variables as polynomials in x: z = ((CX)^{-1})^T x, one Poly per
// label, so that sum_labels mu_label * z_label == sum_a theta_a x^a whenever
// mu = C X theta.
std::vector<Poly> z_basis(const DesignSpace& space, const ContrastMatrix& cm);

// Counts of selected runs per level combination on the factor subset J.
struct MarginalTable {
    std::vector<int> J;
    std::map<std::vector<int>, long> counts; // key: i_J
};

MarginalTable marginal(const DesignSpace& space, const Fraction& f, const std::vector<int>& J);

// Strength t via C_k y = 0 for k = 1..t.
bool check_strength_contrast(const DesignSpace& space, const ContrastMatrix& cm,
                             const Fraction& f, int t);
// Strength t via the equal-marginal condition y_J(i_J) = s / m_J for |J| <= t.
bool check_strength_marginal(const DesignSpace& space, const Fraction& f, int t);

// Largest t with check_strength_contrast true; 0 means not even equireplicated.
// The empty fraction has strength n (all marginal counts equal 0 = s/m_J).
int strength(const DesignSpace& space, const ContrastMatrix& cm, const Fraction& f);
int strength(const DesignSpace& space, const Fraction& f);

// All s in [1, m] that are common multiples of {prod_{j in J} r_j : |J| = t}.
// Includes s = m (the full design); callers may filter to proper fractions.
std::vector<long> compatible_sizes(const DesignSpace& space, int t);

// The linear constraints 1^T X theta = s and C_k X theta = 0 (k = 1..t) that
// pin size and strength in the emitted relation system. When `size` is given
// the size row uses the concrete value, otherwise the symbolic variable s.
std::vector<LinearConstraint> orthogonality_constraints(const DesignSpace& space,
                                                        const ContrastMatrix& cm, int t,
                                                        std::optional<Rational> size);

} // namespace ffd
