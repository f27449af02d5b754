#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lhd/field.hpp"

namespace lhd {

/// Dense matrix over a Field, row-major.
///
/// A linear map f: V -> W is stored as a dim(W) x dim(V) matrix whose columns
/// are the images of the basis of V. Tensor bases are lexicographic with the
/// left factor major: e_i (x) e_j sits at index i * dim(right) + j.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Builds from integer rows; every row must have the same length.
  Matrix(Field field, std::initializer_list<std::initializer_list<long>> rows);
  Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<mpq_class> entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return {field, rows, cols}; }
  /// Column vector e_i in dimension n.
  static Matrix unit(Field field, std::size_t n, std::size_t i);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  /// Stores v reduced into the field.
  void set(std::size_t i, std::size_t j, const mpq_class& v);
  void set(std::size_t i, std::size_t j, long v) { set(i, j, mpq_class(v)); }
  Scalar scalar(std::size_t i, std::size_t j) const { return Scalar(field_, (*this)(i, j)); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const mpq_class& s) const;
  Matrix transpose() const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

  Matrix column(std::size_t j) const;
  Matrix columns(std::span<const std::size_t> which) const;
  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;
  /// Index of the first column where this and o differ, if any.
  std::optional<std::size_t> first_differing_column(const Matrix& o) const;

  std::string to_string() const;

  const std::vector<mpq_class>& entries() const noexcept { return data_; }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(std::initializer_list<Matrix> factors);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal matrix diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// The flip V (x) W -> W (x) V for dim V = m, dim W = n.
Matrix swap_matrix(Field field, std::size_t m, std::size_t n);

/// Permutation of tensor factors: factor k of the source (of dimension
/// dims[k]) becomes factor perm[k] of the target.
Matrix permute_factors(Field field, std::span<const std::size_t> dims,
                       std::span<const std::size_t> perm);

/// kron(a, b) * x without materializing the Kronecker product.
Matrix kron_apply(const Matrix& a, const Matrix& b, const Matrix& x);
/// permute_factors(field, dims, perm) * x, as a row permutation of x.
Matrix permute_factor_rows(const Matrix& x, std::span<const std::size_t> dims,
                           std::span<const std::size_t> perm);

}  // namespace lhd
