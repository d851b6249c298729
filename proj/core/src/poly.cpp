#include "ffdesign/poly.hpp"

#include <stdexcept>

namespace ffd {

namespace {

void check_arity(const Poly& a, const Poly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("poly arithmetic: arity mismatch");
}

} // namespace

Poly Poly::constant(int arity, Rational c) {
    Poly p(arity);
    p.add_term(ExponentVector(arity, 0), c);
    return p;
}

Poly Poly::monomial(ExponentVector a, Rational c) {
    Poly p(static_cast<int>(a.size()));
    p.add_term(std::move(a), c);
    return p;
}

Poly Poly::variable(int arity, int j) {
    if (j < 0 || j >= arity) throw std::invalid_argument("poly variable index out of range");
    ExponentVector a(arity, 0);
    a[j] = 1;
    return monomial(std::move(a), 1);
}

Rational Poly::coeff(const ExponentVector& a) const {
    const auto it = terms_.find(a);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const ExponentVector& a, const Rational& c) {
    if (static_cast<int>(a.size()) != arity_)
        throw std::invalid_argument("poly term: wrong arity");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& rhs) const {
    check_arity(*this, rhs);
    Poly out = *this;
    for (const auto& [a, c] : rhs.terms_) out.add_term(a, c);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    check_arity(*this, rhs);
    Poly out = *this;
    for (const auto& [a, c] : rhs.terms_) out.add_term(a, -c);
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    check_arity(*this, rhs);
    Poly out(arity_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : rhs.terms_) {
            ExponentVector ab(arity_);
            for (int j = 0; j < arity_; ++j) ab[j] = a[j] + b[j];
            out.add_term(ab, ca * cb);
        }
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    Poly out(arity_);
    if (c == 0) return out;
    for (const auto& [a, ca] : terms_) out.terms_.emplace(a, ca * c);
    return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw std::invalid_argument("poly eval: wrong point arity");
    Rational sum = 0;
    for (const auto& [a, c] : terms_) {
        Rational v = c;
        for (int j = 0; j < arity_; ++j)
            for (int e = 0; e < a[j]; ++e) v *= point[j];
        sum += v;
    }
    return sum;
}

} // namespace ffd
