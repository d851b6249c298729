#pragma once

#include "ffdesign/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace ffd {

struct SingularMatrixError : std::runtime_error {
    SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

// Dense matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExactMatrix transposed() const;
    ExactMatrix operator*(const ExactMatrix& rhs) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    Rational determinant() const;
    ExactMatrix inverse() const; // throws SingularMatrixError

    bool operator==(const ExactMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Unique exact solution of Ax = b for square nonsingular A.
// Throws std::invalid_argument on dimension mismatch, SingularMatrixError
// when no pivot exists.
std::vector<Rational> solve_exact(const ExactMatrix& a, const std::vector<Rational>& b);

} // namespace ffd
