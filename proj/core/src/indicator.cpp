#include "ffdesign/indicator.hpp"

namespace ffd {

DivisorBasis divisor_basis(const DesignSpace& space) {
    DivisorBasis db;
    db.g.reserve(space.factor_count());
    for (int j = 0; j < space.factor_count(); ++j) {
        const auto& levels = space.factors()[j].levels;
        const int r = static_cast<int>(levels.size());
        // Expand prod (x - a) as monic coefficients c[0..r].
        std::vector<Rational> c(r + 1);
        c[0] = 1;
        int deg = 0;
        for (const auto& a : levels) {
            for (int e = ++deg; e >= 1; --e) c[e] = c[e - 1] - a * c[e];
            c[0] = -a * c[0];
        }
        // c[e] is the coefficient of x^e. g = x^r - prod(x - a): drop the
        // leading 1, negate the rest.
        std::vector<Rational> g(r);
        for (int e = 0; e < r; ++e) g[e] = -c[e];
        db.g.push_back(std::move(g));
    }
    return db;
}

namespace {

// Normal form of x_j^e as coefficients over 1, x_j, ..., x_j^{r_j-1}.
std::vector<Rational> univariate_nf(const DivisorBasis& db, int j, int e) {
    const int r = static_cast<int>(db.g[j].size());
    std::vector<Rational> cur(r);
    if (e < r) {
        cur[e] = 1;
        return cur;
    }
    cur[r - 1] = 1; // x^{r-1}
    for (int step = r - 1; step < e; ++step) {
        // Multiply by x_j, replacing the overflow x_j^r by g_j.
        Rational top = cur[r - 1];
        for (int k = r - 1; k >= 1; --k) cur[k] = cur[k - 1];
        cur[0] = 0;
        if (top != 0)
            for (int k = 0; k < r; ++k) cur[k] += top * db.g[j][k];
    }
    return cur;
}

} // namespace

Poly reduce_mod_design(const DesignSpace& space, const DivisorBasis& db, const Poly& p) {
    const int n = space.factor_count();
    if (p.arity() != n) throw std::invalid_argument("reduce_mod_design: arity mismatch");
    Poly out(n);
    for (const auto& [a, c] : p.terms()) {
        if (space.in_exponent_set(a)) {
            out.add_term(a, c);
            continue;
        }
        // Tensor the per-variable normal forms together.
        std::vector<std::pair<ExponentVector, Rational>> acc{{ExponentVector(n, 0), c}};
        for (int j = 0; j < n; ++j) {
            const auto nf = univariate_nf(db, j, a[j]);
            std::vector<std::pair<ExponentVector, Rational>> next;
            for (const auto& [e, v] : acc)
                for (int k = 0; k < static_cast<int>(nf.size()); ++k) {
                    if (nf[k] == 0) continue;
                    ExponentVector e2 = e;
                    e2[j] = k;
                    next.emplace_back(std::move(e2), v * nf[k]);
                }
            acc = std::move(next);
        }
        for (const auto& [e, v] : acc) out.add_term(e, v);
    }
    return out;
}

Poly reduce_mod_design(const DesignSpace& space, const Poly& p) {
    return reduce_mod_design(space, divisor_basis(space), p);
}

IndicatorPoly indicator_of(const DesignSpace& space, const Fraction& f) {
    if (f.y.size() != space.run_count())
        throw std::invalid_argument("indicator_of: fraction does not belong to space");
    std::vector<Rational> y(space.run_count());
    for (std::size_t k = 0; k < space.run_count(); ++k) y[k] = int(f.y[k]);
    const auto theta = solve_exact(space.model_matrix(), y);
    return IndicatorPoly{poly_from_theta(space, theta)};
}

std::vector<Rational> theta_vector(const DesignSpace& space, const Poly& p) {
    std::vector<Rational> theta(space.run_count());
    for (const auto& [a, c] : p.terms()) theta[space.exponent_rank(a)] = c;
    return theta;
}

Poly poly_from_theta(const DesignSpace& space, const std::vector<Rational>& theta) {
    if (theta.size() != space.run_count())
        throw std::invalid_argument("poly_from_theta: wrong length");
    Poly p(space.factor_count());
    for (std::size_t k = 0; k < theta.size(); ++k) p.add_term(space.exponents()[k], theta[k]);
    return p;
}

Fraction fraction_of_indicator(const DesignSpace& space, const Poly& p) {
    Fraction f = empty_fraction(space);
    for (std::size_t k = 0; k < space.run_count(); ++k) {
        const Rational v = p.eval(space.point_of(space.run_indices()[k]));
        if (v == 1)
            f.y[k] = 1;
        else if (v != 0)
            throw NotIndicatorError("polynomial evaluates to " + to_string(v) +
                                    " at a design point; not an indicator function");
    }
    return f;
}

bool is_indicator(const DesignSpace& space, const Poly& p) {
    if (p.arity() != space.factor_count()) return false;
    return reduce_mod_design(space, p * p - p).is_zero();
}

} // namespace ffd
