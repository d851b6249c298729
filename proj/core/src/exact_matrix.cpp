#include "ffdesign/exact_matrix.hpp"

namespace ffd {

namespace {

// Row-reduces the left square block of `aug` in place, carrying the full
// augmented width along. Returns false when a zero pivot column is found.
bool eliminate(std::vector<std::vector<Rational>>& aug, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && aug[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        if (pivot != col) std::swap(aug[pivot], aug[col]);
        const Rational inv_p = Rational(1) / aug[col][col];
        for (std::size_t c = col; c < aug[col].size(); ++c) aug[col][c] *= inv_p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            const Rational f = aug[r][col];
            for (std::size_t c = col; c < aug[r].size(); ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    return true;
}

} // namespace

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    ExactMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& v = at(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    return out;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply: dimension mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (at(r, c) != 0) out[r] += at(r, c) * v[c];
    return out;
}

Rational ExactMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = rows_;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a[r][c] = at(r, c);
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv_p = Rational(1) / a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rational f = a[r][col] * inv_p;
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = rows_;
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = at(r, c);
        aug[r][n + r] = 1;
    }
    if (!eliminate(aug, n)) throw SingularMatrixError();
    ExactMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = aug[r][n + c];
    return inv;
}

std::vector<Rational> solve_exact(const ExactMatrix& a, const std::vector<Rational>& b) {
    if (a.rows() != a.cols()) throw std::invalid_argument("solve_exact: matrix not square");
    if (b.size() != a.rows()) throw std::invalid_argument("solve_exact: dimension mismatch");
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = a.at(r, c);
        aug[r][n] = b[r];
    }
    if (!eliminate(aug, n)) throw SingularMatrixError();
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n];
    return x;
}

} // namespace ffd
