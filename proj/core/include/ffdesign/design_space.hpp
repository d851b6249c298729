#pragma once

#include "ffdesign/exact_matrix.hpp"
#include "ffdesign/rational.hpp"

#include <map>
#include <vector>

namespace ffd {

// One factor: an ordered list of at least two pairwise-distinct rational levels.
struct FactorSpec {
    std::vector<Rational> levels;
};

// 1-based run coordinates (i_1, ..., i_n), i_j in [r_j].
using RunIndex = std::vector<int>;
// Nonnegative exponents (a_1, ..., a_n); membership in L means a_j <= r_j - 1.
using ExponentVector = std::vector<int>;

// A full factorial design: the factors, the run index set in lexicographic
// order (leftmost coordinate most significant), and the exponent set L in
// graded-lex order (degree ascending, then lexicographic; the all-zero vector
// comes first). Coefficient data throughout the library is keyed by exponent
// vector; the exponent order governs printing only.
class DesignSpace {
public:
    explicit DesignSpace(std::vector<FactorSpec> factors);

    // Default codings from level counts: {-1,1} for r=2, {-1,0,1} for r=3,
    // -(r-1)/2..(r-1)/2 for odd r, odd integers +-1,+-3,...,+-(r-1) for even r.
    static DesignSpace from_level_counts(const std::vector<int>& counts);

    int factor_count() const { return static_cast<int>(factors_.size()); }
    std::size_t run_count() const { return m_; }
    int levels_of(int j) const { return static_cast<int>(factors_[j].levels.size()); }
    const std::vector<FactorSpec>& factors() const { return factors_; }

    const std::vector<RunIndex>& run_indices() const { return runs_; }
    const std::vector<ExponentVector>& exponents() const { return exps_; }

    std::size_t run_rank(const RunIndex& i) const; // throws on out-of-range index
    std::size_t exponent_rank(const ExponentVector& a) const;
    bool in_exponent_set(const ExponentVector& a) const;

    std::vector<Rational> point_of(const RunIndex& i) const;

    // m x m matrix with entry (i, a) = prod_j A_j[i_j]^{a_j}.
    ExactMatrix model_matrix() const;

private:
    std::vector<FactorSpec> factors_;
    std::size_t m_ = 0;
    std::vector<std::size_t> stride_; // run_rank = sum (i_j - 1) * stride_[j]
    std::vector<RunIndex> runs_;
    std::vector<ExponentVector> exps_;
    std::map<ExponentVector, std::size_t> exp_rank_;
};

} // namespace ffd
