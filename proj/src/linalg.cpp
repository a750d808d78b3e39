#include "gvm/linalg.hpp"

#include <utility>

namespace gvm {

std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& a) {
    const std::size_t n = a.rows();
    Matrix<Rational> m = a;
    Matrix<Rational> inv = Matrix<Rational>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m(piv, col) == 0) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        Rational p = m(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            m(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m(r, col) == 0) continue;
            Rational f = m(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

std::optional<std::vector<Rational>> solve(const Matrix<Rational>& a, const std::vector<Rational>& b) {
    auto inv = inverse(a);
    if (!inv) return std::nullopt;
    return inv->apply(b);
}

std::size_t matrix_rank(Matrix<Rational> a) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
        std::size_t piv = rank;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(rank, j));
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (a(r, col) == 0) continue;
            Rational f = a(r, col) / a(rank, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace gvm
