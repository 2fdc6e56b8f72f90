#include "integra/matrix.hpp"

namespace integra {

Matrix::Matrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, Element::zero(ring)) {}

Matrix::Matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::vector<Element> data)
    : ring_(ring), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols)
    throw Error(ErrorCode::dimension_mismatch, std::to_string(data_.size()) + " entries for a " +
                                                   std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  for (const auto& e : data_)
    if (!(e.ring() == ring))
      throw Error(ErrorCode::ring_mismatch, "matrix entry " + e.str() + " is not in " + ring.str());
}

Matrix Matrix::identity(const Ring& ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Element::one(ring);
  return m;
}

Matrix Matrix::from_integers(const Ring& ring, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<Element> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(ErrorCode::dimension_mismatch, "ragged matrix rows");
    for (long v : row) data.push_back(Element::from_integer(ring, v));
  }
  return Matrix(ring, r, c, std::move(data));
}

namespace {

void require_ring(const Matrix& a, const Matrix& b) {
  if (!(a.ring() == b.ring()))
    throw Error(ErrorCode::ring_mismatch, "matrices over " + a.ring().str() + " and " + b.ring().str());
}

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square())
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + " of a " + std::to_string(m.rows()) + "x" +
                                                   std::to_string(m.cols()) + " matrix");
}

Matrix minor_of(const Matrix& m, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = m.rows();
  Matrix out(m.ring(), n - 1, n - 1);
  for (std::size_t i = 0, oi = 0; i < n; ++i) {
    if (i == skip_row) continue;
    for (std::size_t j = 0, oj = 0; j < n; ++j) {
      if (j == skip_col) continue;
      out(oi, oj++) = m(i, j);
    }
    ++oi;
  }
  return out;
}

// Coefficients of det(X I - M), highest degree first.
std::vector<Element> berkowitz(const Matrix& a) {
  const Ring& ring = a.ring();
  const std::size_t n = a.rows();
  std::vector<Element> p{Element::one(ring)};
  if (n == 0) return p;
  p.push_back(-a(0, 0));
  for (std::size_t k = 1; k < n; ++k) {
    // Leading (k+1)x(k+1) block [[A_k, C], [R, a_kk]].
    std::vector<Element> col{Element::one(ring), -a(k, k)};
    std::vector<Element> v(k);  // A_k^j C
    for (std::size_t i = 0; i < k; ++i) v[i] = a(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      Element rc = Element::zero(ring);
      for (std::size_t i = 0; i < k; ++i) rc += a(k, i) * v[i];
      col.push_back(-rc);
      if (j + 1 < k) {
        std::vector<Element> next(k, Element::zero(ring));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < k; ++c) next[r] += a(r, c) * v[c];
        v = std::move(next);
      }
    }
    // Lower-triangular Toeplitz (k+2)x(k+1) applied to p.
    std::vector<Element> q(k + 2, Element::zero(ring));
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j) q[i] += col[i - j] * p[j];
    p = std::move(q);
  }
  return p;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::dimension_mismatch, "sum of differently shaped matrices");
  std::vector<Element> data = a.data();
  for (std::size_t i = 0; i < data.size(); ++i) data[i] += b.data()[i];
  return Matrix(a.ring(), a.rows(), a.cols(), std::move(data));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_ring(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrorCode::dimension_mismatch, std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                   " times " + std::to_string(b.rows()) + "x" +
                                                   std::to_string(b.cols()));
  Matrix out(a.ring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Matrix scalar_mul(const Element& c, const Matrix& m) {
  if (!(c.ring() == m.ring()))
    throw Error(ErrorCode::ring_mismatch, "scalar in " + c.ring().str() + " for matrix over " + m.ring().str());
  std::vector<Element> data = m.data();
  for (auto& e : data) e = c * e;
  return Matrix(m.ring(), m.rows(), m.cols(), std::move(data));
}

Element det_cofactor(const Matrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return Element::one(m.ring());
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Element acc = Element::zero(m.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    Element term = m(0, j) * det_cofactor(minor_of(m, 0, j));
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Element det(const Matrix& m) {
  require_square(m, "determinant");
  if (m.rows() <= 6) return det_cofactor(m);
  Element d = berkowitz(m).back();
  return m.rows() % 2 == 0 ? d : -d;
}

Matrix adjugate(const Matrix& m) {
  require_square(m, "adjugate");
  const std::size_t n = m.rows();
  Matrix out(m.ring(), n, n);
  if (n == 0) return out;
  if (n == 1) {
    out(0, 0) = Element::one(m.ring());
    return out;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element c = det(minor_of(m, i, j));
      out(j, i) = (i + j) % 2 == 0 ? c : -c;
    }
  return out;
}

std::vector<Element> charpoly(const Matrix& m) {
  require_square(m, "characteristic polynomial");
  std::vector<Element> p = berkowitz(m);
  return {p.rbegin(), p.rend()};
}

Matrix poly_at_matrix(std::span<const Element> coeffs, const Matrix& m) {
  require_square(m, "matrix substitution");
  Matrix acc(m.ring(), m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.ring(), m.rows());
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * m + scalar_mul(coeffs[k], id);
  return acc;
}

}  // namespace integra
