#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "had/field.hpp"

namespace had {

/// Dense row-major matrix of field elements. Storage only; every algorithm
/// takes the field explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds from small integer rows, reduced into `field`. Rows must be rectangular.
  static Matrix from_ints(const PrimeField& field,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const FieldElem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<FieldElem> column(std::size_t c) const;

  Matrix transpose() const;

  /// Appends the columns of `other`; row counts must agree.
  Matrix hconcat(const Matrix& other) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElem> data_;
};

Matrix multiply(const PrimeField& field, const Matrix& a, const Matrix& b);
std::vector<FieldElem> multiply(const PrimeField& field, const Matrix& a, std::span<const FieldElem> v);

/// Rank by Gaussian elimination with first-nonzero pivoting.
std::size_t rank(const PrimeField& field, Matrix m);

/// Columns form a basis of the right kernel {k : M k = 0}.
Matrix kernel_basis(const PrimeField& field, const Matrix& m);

/// The columns of `m` at its pivot positions: an independent set spanning the column space.
Matrix independent_columns(const PrimeField& field, const Matrix& m);

/// Throws Error(SingularTransform) if `m` is not invertible.
Matrix inverse(const PrimeField& field, const Matrix& m);

/// Uniformly random invertible (n+1)x(n+1) matrix: a representative of a
/// random element of PGL(n+1). Resamples until full rank.
Matrix random_invertible(const PrimeField& field, std::size_t n, SeedStream rng);

Matrix random_matrix(const PrimeField& field, std::size_t rows, std::size_t cols, SeedStream& rng);

/// diag(v) * m, i.e. row i of m scaled by v[i].
Matrix scale_rows(const PrimeField& field, std::span<const FieldElem> v, const Matrix& m);

}  // namespace had
