#include "ffdesign/design_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ffd {

namespace {

int total_degree(const ExponentVector& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
}

} // namespace

DesignSpace::DesignSpace(std::vector<FactorSpec> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("design space: empty factor list");
    for (const auto& f : factors_) {
        if (f.levels.size() < 2) throw std::invalid_argument("design space: factor needs at least 2 levels");
        std::set<Rational> distinct(f.levels.begin(), f.levels.end());
        if (distinct.size() != f.levels.size())
            throw std::invalid_argument("design space: duplicate level within a factor");
    }
    const int n = factor_count();
    m_ = 1;
    for (int j = 0; j < n; ++j) m_ *= static_cast<std::size_t>(levels_of(j));

    stride_.assign(n, 1);
    for (int j = n - 2; j >= 0; --j) stride_[j] = stride_[j + 1] * levels_of(j + 1);

    runs_.reserve(m_);
    RunIndex i(n, 1);
    for (std::size_t k = 0; k < m_; ++k) {
        runs_.push_back(i);
        for (int j = n - 1; j >= 0; --j) {
            if (++i[j] <= levels_of(j)) break;
            i[j] = 1;
        }
    }

    exps_.reserve(m_);
    ExponentVector a(n, 0);
    for (std::size_t k = 0; k < m_; ++k) {
        exps_.push_back(a);
        for (int j = n - 1; j >= 0; --j) {
            if (++a[j] <= levels_of(j) - 1) break;
            a[j] = 0;
        }
    }
    std::sort(exps_.begin(), exps_.end(), grlex_less);
    for (std::size_t k = 0; k < m_; ++k) exp_rank_[exps_[k]] = k;
}

DesignSpace DesignSpace::from_level_counts(const std::vector<int>& counts) {
    std::vector<FactorSpec> specs;
    specs.reserve(counts.size());
    for (int r : counts) {
        if (r < 2) throw std::invalid_argument("design space: level count must be >= 2");
        FactorSpec f;
        if (r % 2 == 1) {
            for (int v = -(r - 1) / 2; v <= (r - 1) / 2; ++v) f.levels.emplace_back(v);
        } else {
            for (int v = -(r - 1); v <= r - 1; v += 2) f.levels.emplace_back(v);
        }
        specs.push_back(std::move(f));
    }
    return DesignSpace(std::move(specs));
}

std::size_t DesignSpace::run_rank(const RunIndex& i) const {
    if (static_cast<int>(i.size()) != factor_count())
        throw std::invalid_argument("run index: wrong arity");
    std::size_t rank = 0;
    for (int j = 0; j < factor_count(); ++j) {
        if (i[j] < 1 || i[j] > levels_of(j)) throw std::out_of_range("run index out of range");
        rank += static_cast<std::size_t>(i[j] - 1) * stride_[j];
    }
    return rank;
}

std::size_t DesignSpace::exponent_rank(const ExponentVector& a) const {
    const auto it = exp_rank_.find(a);
    if (it == exp_rank_.end()) throw std::out_of_range("exponent vector not in L");
    return it->second;
}

bool DesignSpace::in_exponent_set(const ExponentVector& a) const {
    return exp_rank_.count(a) != 0;
}

std::vector<Rational> DesignSpace::point_of(const RunIndex& i) const {
    run_rank(i); // validates
    std::vector<Rational> p(factors_.size());
    for (int j = 0; j < factor_count(); ++j) p[j] = factors_[j].levels[i[j] - 1];
    return p;
}

ExactMatrix DesignSpace::model_matrix() const {
    ExactMatrix x(m_, m_);
    // Per-factor power tables: pw[j][i][a] = A_j[i]^a.
    std::vector<std::vector<std::vector<Rational>>> pw(factors_.size());
    for (int j = 0; j < factor_count(); ++j) {
        const int r = levels_of(j);
        pw[j].assign(r, std::vector<Rational>(r));
        for (int i = 0; i < r; ++i) {
            pw[j][i][0] = 1;
            for (int a = 1; a < r; ++a) pw[j][i][a] = pw[j][i][a - 1] * factors_[j].levels[i];
        }
    }
    for (std::size_t ri = 0; ri < m_; ++ri) {
        const RunIndex& i = runs_[ri];
        for (std::size_t ci = 0; ci < m_; ++ci) {
            const ExponentVector& a = exps_[ci];
            Rational v = 1;
            for (int j = 0; j < factor_count(); ++j) v *= pw[j][i[j] - 1][a[j]];
            x.at(ri, ci) = std::move(v);
        }
    }
    return x;
}

} // namespace ffd
