#pragma once

#include "ffdesign/design_space.hpp"
#include "ffdesign/rational.hpp"

#include <map>
#include <vector>

namespace ffd {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Canonical: no zero coefficients are stored.
class Poly {
public:
    explicit Poly(int arity) : arity_(arity) {}

    static Poly zero(int arity) { return Poly(arity); }
    static Poly constant(int arity, Rational c);
    static Poly monomial(ExponentVector a, Rational c);
    static Poly variable(int arity, int j); // x_{j+1}

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<ExponentVector, Rational>& terms() const { return terms_; }

    Rational coeff(const ExponentVector& a) const;
    void add_term(const ExponentVector& a, const Rational& c);

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly operator*(const Rational& c) const;
    Poly operator-() const { return *this * Rational(-1); }

    bool operator==(const Poly& rhs) const = default;

    Rational eval(const std::vector<Rational>& point) const;

private:
    int arity_;
    std::map<ExponentVector, Rational> terms_;
};

} // namespace ffd
