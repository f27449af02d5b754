#include "lhd/linalg.hpp"

#include <algorithm>

#include "elimination.hpp"
#include "lhd/errors.hpp"

namespace lhd {

namespace {

detail::SparseVector sparse_row(const Matrix& m, std::size_t i) {
  detail::SparseVector row;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (sgn(m(i, j)) != 0) row.emplace_back(static_cast<std::uint32_t>(j), m(i, j));
  return row;
}

std::vector<detail::ReducedRow> reduce_rows(const Matrix& m) {
  detail::RowReducer reducer(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) reducer.add_row(sparse_row(m, i));
  return reducer.reduced();
}

// Basis vectors of the solution set of the homogeneous rows over the first
// `unknowns` columns: one per free column.
Matrix null_vectors(const Field& field, const std::vector<detail::ReducedRow>& rows,
                    std::size_t unknowns) {
  std::vector<bool> is_pivot(unknowns, false);
  for (const auto& r : rows)
    if (r.pivot < unknowns) is_pivot[r.pivot] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < unknowns; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::vector<std::size_t> slot(unknowns, 0);
  for (std::size_t k = 0; k < free_cols.size(); ++k) slot[free_cols[k]] = k;

  Matrix out(field, unknowns, free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) out.set(free_cols[k], k, 1);
  for (const auto& r : rows) {
    if (r.pivot >= unknowns) continue;
    for (const auto& [c, v] : r.entries)
      if (c != r.pivot && c < unknowns) out.set(r.pivot, slot[c], field.neg(v));
  }
  return out;
}

void require_same_field(const Subspace& u, const Subspace& v) {
  if (!(u.field() == v.field())) throw FieldMismatch("subspaces over different fields");
  if (u.ambient() != v.ambient())
    throw DimensionError("ambient dimensions differ: " + std::to_string(u.ambient()) + " vs " +
                         std::to_string(v.ambient()));
}

}  // namespace

Subspace::Subspace(Field field, std::size_t ambient) : basis_(field, ambient, 0) {}

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
  if (rank(basis_) != basis_.cols()) throw DimensionError("subspace basis columns are dependent");
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  return Subspace(Matrix::identity(field, ambient));
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient()) throw DimensionError("vector does not live in the ambient space");
  return rank(hstack(basis_, vectors)) == dim();
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient() == o.ambient() && dim() == o.dim() && contains(o.basis_);
}

RowEchelon rref(const Matrix& m) {
  auto rows = reduce_rows(m);
  RowEchelon out{Matrix(m.field(), rows.size(), m.cols()), {}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.pivots.push_back(rows[i].pivot);
    for (const auto& [c, v] : rows[i].entries) out.rows.set(i, c, v);
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  detail::RowReducer reducer(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) reducer.add_row(sparse_row(m, i));
  return reducer.rank();
}

Subspace kernel(const Matrix& m) {
  return Subspace(null_vectors(m.field(), reduce_rows(m), m.cols()));
}

Subspace image(const Matrix& m) { return Subspace(rref(m.transpose()).rows.transpose()); }

Subspace intersect(const Subspace& u, const Subspace& v) {
  require_same_field(u, v);
  const Matrix joint = hstack(u.basis(), v.basis().scaled(-1));
  const Matrix coeffs = kernel(joint).basis();
  return image(u.basis() * coeffs.block(0, 0, u.dim(), coeffs.cols()));
}

Subspace sum(const Subspace& u, const Subspace& v) {
  require_same_field(u, v);
  return image(hstack(u.basis(), v.basis()));
}

std::optional<Matrix> left_inverse(const Matrix& m) {
  const std::size_t n = m.rows(), k = m.cols();
  detail::RowReducer reducer(m.field(), k + n);
  for (std::size_t i = 0; i < n; ++i) {
    auto row = sparse_row(m, i);
    row.emplace_back(static_cast<std::uint32_t>(k + i), mpq_class(1));
    reducer.add_row(std::move(row));
  }
  Matrix out(m.field(), k, n);
  std::size_t found = 0;
  for (const auto& r : reducer.reduced()) {
    if (r.pivot >= k) continue;
    ++found;
    for (const auto& [c, v] : r.entries)
      if (c >= k) out.set(r.pivot, c - k, v);
  }
  if (found != k) return std::nullopt;
  return out;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  return left_inverse(m);
}

std::optional<Matrix> factor_through(const Matrix& e, const Matrix& m) {
  if (e.rows() != m.rows()) throw DimensionError("factor_through: row counts differ");
  auto left = left_inverse(e);
  if (!left) return std::nullopt;
  Matrix x = *left * m;
  if (!(e * x == m)) return std::nullopt;
  return x;
}

mpq_class determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const Field& field = m.field();
  if (n == 0) return 1;

  if (!field.is_rationals()) {
    mpq_class det = 1;
    std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t piv = k;
      while (piv < n && sgn(rows[piv][k]) == 0) ++piv;
      if (piv == n) return 0;
      if (piv != k) {
        std::swap(rows[piv], rows[k]);
        det = field.neg(det);
      }
      det = field.mul(det, rows[k][k]);
      const mpq_class inv = field.inv(rows[k][k]);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (sgn(rows[i][k]) == 0) continue;
        const mpq_class f = field.mul(rows[i][k], inv);
        for (std::size_t j = k; j < n; ++j)
          rows[i][j] = field.sub(rows[i][j], field.mul(f, rows[k][j]));
      }
    }
    return det;
  }

  // Clear denominators row by row, then run Bareiss on the integer matrix.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
    scale *= lcm;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && sgn(a[piv][k]) == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpq_class det(a[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

std::vector<LinearTerm> kron_identity_terms(const Matrix& left, std::size_t n,
                                            const Matrix& right, UnknownShape shape) {
  const Field& field = left.field();
  std::vector<LinearTerm> terms;
  terms.reserve(n);
  const Matrix id_rows = Matrix::identity(field, shape.rows);
  const Matrix id_cols = Matrix::identity(field, shape.cols);
  for (std::size_t k = 0; k < n; ++k) {
    const Matrix ek = Matrix::unit(field, n, k);
    terms.push_back({left * kron(id_rows, ek), kron(id_cols, ek.transpose()) * right});
  }
  return terms;
}

ConstrainedSolution solve_constrained_all(Field field, UnknownShape shape,
                                          std::span<const LinearConstraint> constraints) {
  const std::size_t unknowns = shape.rows * shape.cols;
  using Sparse = std::vector<std::pair<std::size_t, const mpq_class*>>;

  detail::RowReducer reducer(field, unknowns + 1);
  for (const auto& con : constraints) {
    const Matrix& rhs = con.rhs;
    if (!(rhs.field() == field)) throw FieldMismatch("constraint over a different field");
    struct Prepared {
      std::vector<Sparse> left_rows;
      std::vector<Sparse> right_cols;
    };
    std::vector<Prepared> prepared;
    for (const auto& t : con.terms) {
      if (t.left.rows() != rhs.rows() || t.left.cols() != shape.rows ||
          t.right.rows() != shape.cols || t.right.cols() != rhs.cols())
        throw DimensionError("constraint term " + std::to_string(t.left.rows()) + "x" +
                             std::to_string(t.left.cols()) + " * X * " +
                             std::to_string(t.right.rows()) + "x" + std::to_string(t.right.cols()) +
                             " does not fit unknown " + std::to_string(shape.rows) + "x" +
                             std::to_string(shape.cols) + " and rhs " +
                             std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
      Prepared p{std::vector<Sparse>(rhs.rows()), std::vector<Sparse>(rhs.cols())};
      for (std::size_t r = 0; r < t.left.rows(); ++r)
        for (std::size_t i = 0; i < t.left.cols(); ++i)
          if (sgn(t.left(r, i)) != 0) p.left_rows[r].emplace_back(i, &t.left(r, i));
      for (std::size_t j = 0; j < t.right.rows(); ++j)
        for (std::size_t s = 0; s < t.right.cols(); ++s)
          if (sgn(t.right(j, s)) != 0) p.right_cols[s].emplace_back(j, &t.right(j, s));
      prepared.push_back(std::move(p));
    }
    for (std::size_t r = 0; r < rhs.rows(); ++r)
      for (std::size_t s = 0; s < rhs.cols(); ++s) {
        detail::SparseVector row;
        for (const auto& p : prepared)
          for (const auto& [i, a] : p.left_rows[r])
            for (const auto& [j, b] : p.right_cols[s])
              row.emplace_back(static_cast<std::uint32_t>(i * shape.cols + j), field.mul(*a, *b));
        if (sgn(rhs(r, s)) != 0) row.emplace_back(static_cast<std::uint32_t>(unknowns), rhs(r, s));
        if (!row.empty()) reducer.add_row(std::move(row));
      }
  }

  const auto rows = reducer.reduced();
  ConstrainedSolution out;
  const Matrix basis = null_vectors(field, rows, unknowns);
  for (std::size_t k = 0; k < basis.cols(); ++k) {
    Matrix x(field, shape.rows, shape.cols);
    for (std::size_t v = 0; v < unknowns; ++v) x.set(v / shape.cols, v % shape.cols, basis(v, k));
    out.homogeneous.push_back(std::move(x));
  }
  const bool inconsistent =
      std::any_of(rows.begin(), rows.end(), [&](const auto& r) { return r.pivot == unknowns; });
  if (!inconsistent) {
    Matrix x(field, shape.rows, shape.cols);
    for (const auto& r : rows)
      for (const auto& [c, v] : r.entries)
        if (c == unknowns) x.set(r.pivot / shape.cols, r.pivot % shape.cols, v);
    out.particular = std::move(x);
  }
  return out;
}

std::optional<Matrix> solve_constrained(Field field, UnknownShape shape,
                                        std::span<const LinearConstraint> constraints) {
  return solve_constrained_all(field, shape, constraints).particular;
}

}  // namespace lhd
