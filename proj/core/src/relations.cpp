#include "ffdesign/relations.hpp"

#include <sstream>

namespace ffd {

RelationSystem relation_system(const DesignSpace& space) {
    const auto db = divisor_basis(space);
    const int n = space.factor_count();
    const std::size_t m = space.run_count();
    RelationSystem sys;
    sys.mu.assign(m, {});
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = p; q < m; ++q) {
            const auto& a1 = space.exponents()[p];
            const auto& a2 = space.exponents()[q];
            ExponentVector sum(n);
            for (int j = 0; j < n; ++j) sum[j] = a1[j] + a2[j];
            const Poly nf = reduce_mod_design(space, db, Poly::monomial(sum, 1));
            const Rational mult = (p == q) ? 1 : 2;
            for (const auto& [a, c] : nf.terms())
                sys.mu[space.exponent_rank(a)].push_back({mult * c, a1, a2});
        }
    }
    return sys;
}

Rational evaluate_quadratic(const std::vector<QuadTerm>& form, const DesignSpace& space,
                            const std::vector<Rational>& theta) {
    Rational v = 0;
    for (const auto& t : form)
        v += t.coeff * theta[space.exponent_rank(t.a1)] * theta[space.exponent_rank(t.a2)];
    return v;
}

bool check_relations(const DesignSpace& space, const RelationSystem& system,
                     const std::vector<Rational>& theta) {
    if (theta.size() != space.run_count())
        throw std::invalid_argument("check_relations: theta must be defined on all of L");
    for (std::size_t k = 0; k < space.run_count(); ++k)
        if (theta[k] != evaluate_quadratic(system.mu[k], space, theta)) return false;
    return true;
}

std::string theta_var_name(const DesignSpace& space, const ExponentVector& a) {
    for (int j = 0; j < space.factor_count(); ++j)
        if (space.levels_of(j) > 10)
            throw std::invalid_argument("variable naming requires at most 10 levels per factor");
    std::string name = "t";
    for (int e : a) name += static_cast<char>('0' + e);
    return name;
}

namespace {

// Appends " +/- |c|*body" (or the leading-term form when out is empty).
void append_term(std::string& out, const Rational& c, const std::string& body) {
    if (c == 0) return;
    const bool neg = c < 0;
    Rational mag = neg ? Rational(-c) : c;
    std::string t;
    if (mag != 1 || body.empty()) {
        t = to_string(mag);
        if (!body.empty()) t += "*";
    }
    t += body;
    if (out.empty())
        out = neg ? "-" + t : t;
    else
        out += (neg ? " - " : " + ") + t;
}

std::string quad_form_string(const DesignSpace& space, const std::vector<QuadTerm>& form) {
    std::string out;
    for (const auto& t : form) {
        std::string body = theta_var_name(space, t.a1);
        if (t.a1 == t.a2)
            body += "^2";
        else
            body += "*" + theta_var_name(space, t.a2);
        append_term(out, t.coeff, body);
    }
    return out;
}

std::string constraint_string(const DesignSpace& space, const LinearConstraint& lc) {
    std::string out;
    for (std::size_t k = 0; k < lc.coeffs.size(); ++k)
        append_term(out, lc.coeffs[k], theta_var_name(space, space.exponents()[k]));
    append_term(out, lc.constant, "");
    append_term(out, lc.size_coeff, "s");
    if (out.empty()) out = "0";
    return out;
}

} // namespace

std::string emit_relations(const DesignSpace& space, const RelationSystem& system,
                           const std::vector<LinearConstraint>& constraints,
                           RelationFormat format) {
    std::vector<std::string> generators;
    generators.reserve(space.run_count() + constraints.size());
    for (std::size_t k = 0; k < space.run_count(); ++k) {
        const std::string var = theta_var_name(space, space.exponents()[k]);
        const std::string mu = quad_form_string(space, system.mu[k]);
        generators.push_back(mu.empty() ? var : var + " - (" + mu + ")");
    }
    bool uses_size_var = false;
    for (const auto& lc : constraints) {
        if (lc.size_coeff != 0) uses_size_var = true;
        generators.push_back(constraint_string(space, lc));
    }

    std::ostringstream out;
    switch (format) {
    case RelationFormat::plain:
        for (const auto& g : generators) out << g << " = 0\n";
        break;
    case RelationFormat::cas_ideal: {
        out << "R = QQ[";
        for (std::size_t k = 0; k < space.run_count(); ++k) {
            if (k) out << ",";
            out << theta_var_name(space, space.exponents()[k]);
        }
        if (uses_size_var) out << ",s";
        out << "];\n";
        out << "I = ideal(\n";
        for (std::size_t k = 0; k < generators.size(); ++k)
            out << "  " << generators[k] << (k + 1 < generators.size() ? "," : "") << "\n";
        out << ");\n";
        break;
    }
    default:
        throw std::invalid_argument("emit_relations: unknown format");
    }
    return out.str();
}

} // namespace ffd
