#pragma once

#include "ffdesign/fraction.hpp"
#include "ffdesign/poly.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace testutil {

inline ffd::Rational q(long num, long den = 1) { return ffd::Rational(num, den); }

// A coefficient table as {exponents, {num, den}} pairs.
using CoeffTable = std::vector<std::pair<std::vector<int>, std::pair<long, long>>>;

inline ffd::Poly poly_from_table(int arity, const CoeffTable& table) {
    ffd::Poly p(arity);
    for (const auto& [exps, c] : table) p.add_term(exps, q(c.first, c.second));
    return p;
}

inline ffd::Fraction fraction_from_int_points(const ffd::DesignSpace& space,
                                              const std::vector<std::vector<int>>& points) {
    std::vector<std::vector<ffd::Rational>> rows;
    for (const auto& pt : points) rows.emplace_back(pt.begin(), pt.end());
    return ffd::fraction_from_points(space, rows);
}

// Independent strength oracle: counts every J-marginal cell directly from the
// run indices and compares against s / m_J, for all J with |J| <= t.
inline bool oracle_has_strength(const ffd::DesignSpace& space, const ffd::Fraction& f, int t) {
    const int n = space.factor_count();
    long s = static_cast<long>(f.size());
    std::vector<int> J;
    bool ok = true;
    auto check = [&]() {
        long mj = 1;
        for (int j : J) mj *= space.levels_of(j - 1);
        if (s % mj != 0) {
            ok = false;
            return;
        }
        std::map<std::vector<int>, long> counts;
        for (std::size_t k = 0; k < space.run_count(); ++k) {
            if (!f.y[k]) continue;
            std::vector<int> cell;
            for (int j : J) cell.push_back(space.run_indices()[k][j - 1]);
            ++counts[cell];
        }
        std::vector<int> cell(J.size(), 1);
        long want = s / mj;
        // every cell, including empty ones, must hit the target
        std::function<void(std::size_t)> walk = [&](std::size_t pos) {
            if (pos == J.size()) {
                auto it = counts.find(cell);
                if ((it == counts.end() ? 0 : it->second) != want) ok = false;
                return;
            }
            for (cell[pos] = 1; cell[pos] <= space.levels_of(J[pos] - 1); ++cell[pos]) walk(pos + 1);
        };
        walk(0);
    };
    std::function<void(int, int)> subsets = [&](int from, int left) {
        if (left == 0) {
            check();
            return;
        }
        for (int j = from; j <= n && ok; ++j) {
            J.push_back(j);
            subsets(j + 1, left - 1);
            J.pop_back();
        }
    };
    for (int k = 1; k <= t && ok; ++k) subsets(1, k);
    return ok;
}

} // namespace testutil
