#pragma once

#include "ffdesign/fraction.hpp"

#include <vector>

namespace ffd {

struct EnumerationOptions {
    bool canonical_only = false; // keep only canonical orbit representatives
    int jobs = 1;                // worker threads for the subtree search
};

struct EnumerationResult {
    std::vector<Fraction> solutions; // lexicographic membership-vector order
    bool size_compatible = true;     // false: s is not a compatible size for strength t
};

// Exhaustive backtracking over the 0/1 membership vector with marginal-count
// pruning: every J-marginal cell (|J| <= t) is capped at s/m_J and must remain
// reachable from the unassigned suffix. Output is schedule-independent.
EnumerationResult enumerate_orthogonal(const DesignSpace& space, long s, int t,
                                       const EnumerationOptions& options = {});

long count_orthogonal(const DesignSpace& space, long s, int t,
                      const EnumerationOptions& options = {});

} // namespace ffd
