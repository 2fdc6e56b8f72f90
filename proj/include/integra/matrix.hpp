#pragma once

#include <cstddef>
#include <vector>

#include "integra/ring.hpp"

namespace integra {

/// Dense row-major matrix over a ring.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Ring& ring, std::size_t rows, std::size_t cols);
  Matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::vector<Element> data);

  static Matrix identity(const Ring& ring, std::size_t n);
  /// Integer entries, each mapped into `ring`.
  static Matrix from_integers(const Ring& ring, const std::vector<std::vector<long>>& rows);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  const std::vector<Element>& data() const noexcept { return data_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Element& c, const Matrix& m);

/// Division-free; cofactor expansion up to 6x6, Berkowitz beyond.
Element det(const Matrix& m);
/// Laplace expansion along the first row, for any size.
Element det_cofactor(const Matrix& m);
/// Transposed cofactor matrix: adjugate(M) * M = det(M) * I.
Matrix adjugate(const Matrix& m);
/// det(X I - M) as lowest-first coefficients over m.ring(); monic of degree n.
/// Berkowitz algorithm, so no division is performed.
std::vector<Element> charpoly(const Matrix& m);
/// Matrix substitution p(M) for lowest-first coefficients over M.ring().
Matrix poly_at_matrix(std::span<const Element> coeffs, const Matrix& m);

}  // namespace integra
