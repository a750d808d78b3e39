#pragma once

#include "gvm/matrix.hpp"
#include "gvm/rational.hpp"

#include <optional>

namespace gvm {

// Gauss-Jordan over Q. Returns nullopt for singular input.
std::optional<Matrix<Rational>> inverse(const Matrix<Rational>& a);

// Solves a x = b for square invertible a.
std::optional<std::vector<Rational>> solve(const Matrix<Rational>& a, const std::vector<Rational>& b);

// Rank of a rational matrix.
std::size_t matrix_rank(Matrix<Rational> a);

}  // namespace gvm
