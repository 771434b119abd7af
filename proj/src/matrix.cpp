#include "had/matrix.hpp"

#include <utility>

#include "had/error.hpp"

namespace had {

Matrix Matrix::from_ints(const PrimeField& field,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw Error(Errc::ShapeMismatch, "ragged matrix literal");
    std::size_t j = 0;
    for (std::int64_t x : row) m(i, j++) = field.from_int(x);
    ++i;
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem{1};
  return m;
}

std::vector<FieldElem> Matrix::column(std::size_t c) const {
  std::vector<FieldElem> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::hconcat(const Matrix& other) const {
  if (other.rows_ != rows_) throw Error(Errc::ShapeMismatch, "hconcat with different row counts");
  Matrix out(rows_, cols_ + other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
  }
  return out;
}

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "matrix product dimensions");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElem aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = field.add(out(i, j), field.mul(aik, b(k, j)));
    }
  return out;
}

std::vector<FieldElem> multiply(const PrimeField& field, const Matrix& a, std::span<const FieldElem> v) {
  if (a.cols() != v.size()) throw Error(Errc::ShapeMismatch, "matrix-vector dimensions");
  std::vector<FieldElem> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = field.add(out[i], field.mul(a(i, k), v[k]));
  return out;
}

namespace {

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(const PrimeField& field, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const FieldElem scale = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const FieldElem factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const PrimeField& field, Matrix m) {
  // Forward elimination only; cheaper than a full RREF.
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const FieldElem inv_pivot = field.inv(m(row, col));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      const FieldElem factor = field.mul(m(r, col), inv_pivot);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
    }
    ++row;
  }
  return row;
}

Matrix kernel_basis(const PrimeField& field, const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = rref(field, reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix basis(m.cols(), m.cols() - pivots.size());
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = field.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], out) = field.neg(reduced(r, free));
    ++out;
  }
  return basis;
}

Matrix independent_columns(const PrimeField& field, const Matrix& m) {
  Matrix reduced = m;
  const auto pivots = rref(field, reduced);
  Matrix out(m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, pivots[k]);
  return out;
}

Matrix inverse(const PrimeField& field, const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::ShapeMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug = m.hconcat(Matrix::identity(n));
  const auto pivots = rref(field, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(Errc::SingularTransform, "matrix is not invertible");
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Matrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, SeedStream& rng) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.random(rng);
  return m;
}

Matrix random_invertible(const PrimeField& field, std::size_t n, SeedStream rng) {
  for (;;) {
    Matrix g = random_matrix(field, n + 1, n + 1, rng);
    if (rank(field, g) == n + 1) return g;
  }
}

Matrix scale_rows(const PrimeField& field, std::span<const FieldElem> v, const Matrix& m) {
  if (v.size() != m.rows()) throw Error(Errc::ShapeMismatch, "diagonal scaling dimensions");
  Matrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = field.mul(v[r], m(r, c));
  return out;
}

}  // namespace had
