#include "ffdesign/contrast.hpp"

#include <functional>
#include <numeric>

namespace ffd {

std::string ContrastLabel::to_string() const {
    if (J.empty()) return "Const.";
    std::string s;
    for (int j : J) s += std::to_string(j);
    s += "(";
    for (int i : itilde) s += std::to_string(i);
    s += ")";
    return s;
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> J(k);
    // lexicographic combinations of {1..n}
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(J);
            return;
        }
        for (int j = start; j <= n; ++j) {
            J[depth] = j;
            rec(j + 1, depth + 1);
        }
    };
    rec(1, 0);
}

} // namespace

ContrastMatrix contrast_matrix(const DesignSpace& space) {
    const int n = space.factor_count();
    const std::size_t m = space.run_count();
    ContrastMatrix cm;
    cm.labels.push_back(ContrastLabel{});
    cm.stratum_offset.assign(static_cast<std::size_t>(n) + 2, 0);
    cm.stratum_offset[0] = 0;
    cm.stratum_offset[1] = 1;
    for (int k = 1; k <= n; ++k) {
        for_each_subset(n, k, [&](const std::vector<int>& J) {
            std::vector<int> it(k, 1);
            while (true) {
                cm.labels.push_back(ContrastLabel{J, it});
                int pos = k - 1;
                while (pos >= 0 && ++it[pos] > space.levels_of(J[pos] - 1) - 1) it[pos--] = 1;
                if (pos < 0) break;
            }
        });
        cm.stratum_offset[k + 1] = cm.labels.size();
    }

    cm.C = ExactMatrix(m, m);
    for (std::size_t row = 0; row < m; ++row) {
        const ContrastLabel& lab = cm.labels[row];
        const int k = static_cast<int>(lab.J.size());
        for (std::size_t col = 0; col < m; ++col) {
            const RunIndex& i = space.run_indices()[col];
            if (k == 0) {
                cm.C.at(row, col) = 1;
                continue;
            }
            std::vector<int> iJ(k);
            for (int d = 0; d < k; ++d) iJ[d] = i[lab.J[d] - 1];
            int v = 0;
            if (k == 1) {
                if (iJ[0] == 1)
                    v = 1;
                else if (iJ[0] == lab.itilde[0] + 1)
                    v = -1;
            } else {
                bool head = true;
                for (int d = 0; d + 1 < k; ++d) head = head && iJ[d] == lab.itilde[d];
                if (head && iJ[k - 1] == 1)
                    v = 1;
                else if (head && iJ[k - 1] == lab.itilde[k - 1] + 1)
                    v = -1;
            }
            cm.C.at(row, col) = v;
        }
    }
    return cm;
}

ContrastRep contrast_rep(const DesignSpace& space, const ContrastMatrix& cm, const Fraction& f) {
    if (f.y.size() != space.run_count())
        throw std::invalid_argument("contrast_rep: fraction does not belong to space");
    std::vector<Rational> y(f.y.size());
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = int(f.y[k]);
    return ContrastRep{cm.C.apply(y)};
}

ContrastRep contrast_rep_from_theta(const DesignSpace& space, const ContrastMatrix& cm,
                                    const std::vector<Rational>& theta) {
    return ContrastRep{cm.C.apply(space.model_matrix().apply(theta))};
}

std::vector<Poly> z_basis(const DesignSpace& space, const ContrastMatrix& cm) {
    const ExactMatrix cx_inv = (cm.C * space.model_matrix()).inverse();
    const std::size_t m = space.run_count();
    std::vector<Poly> z;
    z.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        Poly p(space.factor_count());
        // z_k = sum_a ((CX)^{-1})(a, k) x^a
        for (std::size_t a = 0; a < m; ++a) p.add_term(space.exponents()[a], cx_inv.at(a, k));
        z.push_back(std::move(p));
    }
    return z;
}

MarginalTable marginal(const DesignSpace& space, const Fraction& f, const std::vector<int>& J) {
    for (int j : J)
        if (j < 1 || j > space.factor_count())
            throw std::invalid_argument("marginal: factor index out of range");
    MarginalTable t;
    t.J = J;
    // All cells present, zero-filled.
    std::vector<int> cell(J.size(), 1);
    while (true) {
        t.counts[cell] = 0;
        int pos = static_cast<int>(J.size()) - 1;
        while (pos >= 0 && ++cell[pos] > space.levels_of(J[pos] - 1)) cell[pos--] = 1;
        if (pos < 0) break;
        if (J.empty()) break;
    }
    if (J.empty()) t.counts[{}] = 0;
    for (std::size_t k = 0; k < space.run_count(); ++k) {
        if (!f.y[k]) continue;
        const RunIndex& i = space.run_indices()[k];
        std::vector<int> key(J.size());
        for (std::size_t d = 0; d < J.size(); ++d) key[d] = i[J[d] - 1];
        ++t.counts[key];
    }
    return t;
}

bool check_strength_contrast(const DesignSpace& space, const ContrastMatrix& cm,
                             const Fraction& f, int t) {
    if (t < 0 || t > space.factor_count())
        throw std::invalid_argument("strength t out of range");
    std::vector<Rational> y(f.y.size());
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = int(f.y[k]);
    for (std::size_t row = cm.stratum_offset[1];
         row < cm.stratum_offset[static_cast<std::size_t>(t) + 1]; ++row) {
        Rational dot = 0;
        for (std::size_t col = 0; col < y.size(); ++col)
            if (f.y[col]) dot += cm.C.at(row, col);
        if (dot != 0) return false;
    }
    return true;
}

bool check_strength_marginal(const DesignSpace& space, const Fraction& f, int t) {
    if (t < 0 || t > space.factor_count())
        throw std::invalid_argument("strength t out of range");
    const long s = static_cast<long>(f.size());
    const int n = space.factor_count();
    for (int k = 1; k <= t; ++k) {
        bool ok = true;
        for_each_subset(n, k, [&](const std::vector<int>& J) {
            if (!ok) return;
            long mJ = 1;
            for (int j : J) mJ *= space.levels_of(j - 1);
            if (s % mJ != 0) {
                ok = false;
                return;
            }
            const long target = s / mJ;
            const auto table = marginal(space, f, J);
            for (const auto& [cell, cnt] : table.counts)
                if (cnt != target) {
                    ok = false;
                    return;
                }
        });
        if (!ok) return false;
    }
    return true;
}

int strength(const DesignSpace& space, const ContrastMatrix& cm, const Fraction& f) {
    int t = 0;
    while (t < space.factor_count() && check_strength_contrast(space, cm, f, t + 1)) ++t;
    return t;
}

int strength(const DesignSpace& space, const Fraction& f) {
    return strength(space, contrast_matrix(space), f);
}

std::vector<long> compatible_sizes(const DesignSpace& space, int t) {
    if (t < 1 || t > space.factor_count())
        throw std::invalid_argument("compatible_sizes: t out of range");
    long l = 1;
    for_each_subset(space.factor_count(), t, [&](const std::vector<int>& J) {
        long mJ = 1;
        for (int j : J) mJ *= space.levels_of(j - 1);
        l = std::lcm(l, mJ);
    });
    std::vector<long> sizes;
    for (long s = l; s <= static_cast<long>(space.run_count()); s += l) sizes.push_back(s);
    return sizes;
}

std::vector<LinearConstraint> orthogonality_constraints(const DesignSpace& space,
                                                        const ContrastMatrix& cm, int t,
                                                        std::optional<Rational> size) {
    if (t < 0 || t > space.factor_count())
        throw std::invalid_argument("orthogonality_constraints: t out of range");
    const ExactMatrix cx = cm.C * space.model_matrix();
    const std::size_t m = space.run_count();
    std::vector<LinearConstraint> out;

    LinearConstraint size_row;
    size_row.coeffs.resize(m);
    for (std::size_t a = 0; a < m; ++a) size_row.coeffs[a] = cx.at(0, a); // constant row = 1^T X
    if (size)
        size_row.constant = -*size;
    else
        size_row.size_coeff = -1;
    out.push_back(std::move(size_row));

    for (std::size_t row = cm.stratum_offset[1];
         row < cm.stratum_offset[static_cast<std::size_t>(t) + 1]; ++row) {
        LinearConstraint lc;
        lc.coeffs.resize(m);
        for (std::size_t a = 0; a < m; ++a) lc.coeffs[a] = cx.at(row, a);
        out.push_back(std::move(lc));
    }
    return out;
}

} // namespace ffd
