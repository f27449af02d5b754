#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lhd/matrix.hpp"

namespace lhd {

/// A subspace of k^n, held as an n x d matrix with independent columns.
class Subspace {
 public:
  /// The zero subspace of k^ambient.
  Subspace(Field field, std::size_t ambient);
  /// Throws DimensionError if the columns of basis are dependent.
  explicit Subspace(Matrix basis);

  static Subspace whole(Field field, std::size_t ambient);

  const Field& field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.rows(); }
  std::size_t dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

  /// True if every column of vectors lies in the subspace.
  bool contains(const Matrix& vectors) const;
  bool operator==(const Subspace& o) const;

 private:
  Matrix basis_;
};

/// Reduced row echelon form: nonzero rows only, leading entries 1.
struct RowEchelon {
  Matrix rows;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Null space, with the basis read off the reduced row echelon form (one
/// vector per free column, that column set to 1).
Subspace kernel(const Matrix& m);
/// Column space, with the canonical basis of the reduced column echelon form.
Subspace image(const Matrix& m);

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);

/// A matrix L with L * m = id for m of full column rank; nullopt otherwise.
std::optional<Matrix> left_inverse(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// The unique X with e * X = m when e is injective and the columns of m lie
/// in the image of e; nullopt otherwise.
std::optional<Matrix> factor_through(const Matrix& e, const Matrix& m);

/// Determinant by fraction-free (Bareiss) elimination over Q, plain Gaussian
/// elimination over F_p.
mpq_class determinant(const Matrix& m);

// ---------------------------------------------------------------------------
// Constrained linear solving.

/// The product left * X * right, for an unknown matrix X.
struct LinearTerm {
  Matrix left;
  Matrix right;
};

/// sum(terms) = rhs.
struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Matrix rhs;
};

struct UnknownShape {
  std::size_t rows;
  std::size_t cols;
};

/// Terms expressing left * (X (x) id_n) * right as a sum of left' * X * right'.
std::vector<LinearTerm> kron_identity_terms(const Matrix& left, std::size_t n,
                                            const Matrix& right, UnknownShape shape);

struct ConstrainedSolution {
  /// One solution (free variables set to zero), absent when inconsistent.
  std::optional<Matrix> particular;
  /// Basis of the solutions of the homogeneous system.
  std::vector<Matrix> homogeneous;
};

/// Throws DimensionError when a constraint's pieces do not fit the unknown.
ConstrainedSolution solve_constrained_all(Field field, UnknownShape shape,
                                          std::span<const LinearConstraint> constraints);

/// One exact solution, or nullopt when the system is inconsistent.
std::optional<Matrix> solve_constrained(Field field, UnknownShape shape,
                                        std::span<const LinearConstraint> constraints);

}  // namespace lhd
