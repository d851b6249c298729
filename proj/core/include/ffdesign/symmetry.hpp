#pragma once

#include "ffdesign/contrast.hpp"
#include "ffdesign/fraction.hpp"

#include <vector>

namespace ffd {

// A symmetry of the design space: per-factor level permutations (acting on
// level indices, not level values, so the action is coding-independent) and a
// permutation of factors that only maps factors onto factors with the same
// number of levels.
//
// Action on a run index: (g.i)_{sigma(j)} = pi_j(i_j), i.e. factor j moves to
// position sigma(j) carrying its level-permuted coordinate along.
struct GroupElement {
    std::vector<int> factor_perm;               // sigma, 0-based positions
    std::vector<std::vector<int>> level_perms;  // pi_j over 0..r_j-1, per source factor

    bool operator==(const GroupElement&) const = default;
};

GroupElement identity_element(const DesignSpace& space);
GroupElement compose(const DesignSpace& space, const GroupElement& g, const GroupElement& h); // g after h
GroupElement inverse_element(const DesignSpace& space, const GroupElement& g);

// The full group: all level permutations of each factor combined with all
// factor permutations within equal-level-count blocks; deterministic order.
std::vector<GroupElement> symmetry_group(const DesignSpace& space);

RunIndex apply_to_index(const DesignSpace& space, const GroupElement& g, const RunIndex& i);

// y'(g.i) = y(i).
Fraction apply(const DesignSpace& space, const GroupElement& g, const Fraction& f);

// P_g with P_g y = apply(g, F).y for every response y.
ExactMatrix permutation_matrix(const DesignSpace& space, const GroupElement& g);

// theta' = X^{-1} P_g X theta.
std::vector<Rational> theta_transform(const DesignSpace& space, const GroupElement& g,
                                      const std::vector<Rational>& theta);

// mu' = C P_g C^{-1} mu.
std::vector<Rational> mu_transform(const DesignSpace& space, const ContrastMatrix& cm,
                                   const GroupElement& g, const std::vector<Rational>& mu);

// ybar = 1 - y. The indicator coefficients satisfy thetabar_0 = 1 - theta_0
// and thetabar_a = -theta_a for a != 0.
Fraction complement(const Fraction& f);

// Lexicographically smallest membership vector over the orbit of F; idempotent.
Fraction canonical_form(const DesignSpace& space, const std::vector<GroupElement>& group,
                        const Fraction& f);

struct Orbit {
    Fraction representative; // canonical form
    std::vector<Fraction> members;
};

// Partition of the input by canonical form; orbits sorted by (member count,
// canonical membership vector). Throws on duplicate input fractions.
std::vector<Orbit> classify(const DesignSpace& space, const std::vector<Fraction>& fractions);

} // namespace ffd
