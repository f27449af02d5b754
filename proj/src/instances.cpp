#include "lhd/instances.hpp"

#include <stdexcept>
#include <utility>

#include "lhd/linalg.hpp"

namespace lhd {

namespace {

std::pair<Matrix, Matrix> raw_direct_sum(const Matrix& d1, const Matrix& e1, const Matrix& d2, const Matrix& e2) {
  const std::size_t n1 = e1.cols(), n2 = e2.cols(), n = n1 + n2;
  Matrix delta(e1.field(), n * n, n);
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t r = 0; r < n1 * n1; ++r) delta.set((r / n1) * n + r % n1, j, d1(r, j));
  for (std::size_t j = 0; j < n2; ++j)
    for (std::size_t r = 0; r < n2 * n2; ++r) delta.set((n1 + r / n2) * n + n1 + r % n2, n1 + j, d2(r, j));
  return {std::move(delta), hstack(e1, e2)};
}

// The coalgebra dual to 2x2 matrices: delta e_ij = sum_k e_ik (x) e_kj.
std::pair<Matrix, Matrix> matrix_coalgebra(Field field) {
  Matrix delta(field, 16, 4), counit(field, 1, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const std::size_t ij = i * 2 + j;
      for (std::size_t k = 0; k < 2; ++k) delta.set((i * 2 + k) * 4 + (k * 2 + j), ij, 1);
      if (i == j) counit.set(0, ij, 1);
    }
  return {std::move(delta), std::move(counit)};
}

}  // namespace

Coalgebra trigonometric_coalgebra(Field field) {
  Matrix delta(field, 4, 2);
  delta.set(0, 0, 1);   // c (x) c
  delta.set(3, 0, -1);  // -s (x) s
  delta.set(2, 1, 1);   // s (x) c
  delta.set(1, 1, 1);   // c (x) s
  return Coalgebra(std::move(delta), Matrix(field, {{1, 0}}), {"c", "s"});
}

Coalgebra dual_numbers_coalgebra(Field field) {
  Matrix delta(field, 4, 2);
  delta.set(0, 0, 1);  // g (x) g
  delta.set(1, 1, 1);  // g (x) x
  delta.set(2, 1, 1);  // x (x) g
  return Coalgebra(std::move(delta), Matrix(field, {{1, 0}}), {"g", "x"});
}

std::vector<std::string> labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Coalgebra random_grouplike(Rng& rng, Field field, std::size_t max_labels, const std::string& prefix) {
  return grouplike_coalgebra(field, labels(1 + rng.below(max_labels), prefix));
}

Coalgebra random_constructed_coalgebra(Rng& rng, Field field, std::size_t max_dim) {
  if (max_dim < 2) return grouplike_coalgebra(field, labels(1));
  switch (rng.below(3)) {
    case 0:
      if (field.characteristic() != 2 && rng.below(4) == 0) return trigonometric_coalgebra(field);
      return random_grouplike(rng, field, max_dim);
    case 1: {
      const std::size_t left = 1 + rng.below(max_dim - 1);
      Coalgebra a = random_constructed_coalgebra(rng, field, left);
      Coalgebra b = random_constructed_coalgebra(rng, field, max_dim - a.dim());
      return direct_sum(a, b);
    }
    default: {
      Coalgebra a = random_constructed_coalgebra(rng, field, max_dim / 2);
      Coalgebra b = random_constructed_coalgebra(rng, field, max_dim / a.dim());
      return product(a, b).coalgebra;
    }
  }
}

CoalgebraMorphism random_grouplike_morphism(Rng& rng, const Coalgebra& source, const Coalgebra& target) {
  std::vector<std::size_t> map(source.dim());
  for (auto& m : map) m = rng.below(target.dim());
  return grouplike_morphism(source, target, map);
}

Comodule point_comodule(const Coalgebra& c, std::size_t b) {
  const Matrix e = Matrix::unit(c.field(), c.dim(), b);
  if (!(c.delta() * e == kron(e, e))) throw std::invalid_argument("point comodule needs a group-like basis vector");
  return Comodule(c, e);
}

namespace {

std::vector<std::size_t> grouplike_basis_vectors(const Coalgebra& c) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < c.dim(); ++b) {
    const Matrix e = Matrix::unit(c.field(), c.dim(), b);
    if (c.delta() * e == kron(e, e)) out.push_back(b);
  }
  return out;
}

Matrix random_invertible(Rng& rng, Field field, std::size_t n) {
  // Unit triangular factors keep the determinant 1.
  Matrix lower = Matrix::identity(field, n), upper = Matrix::identity(field, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower.set(i, j, rng.between(-2, 2));
      upper.set(j, i, rng.between(-2, 2));
    }
  return lower * upper;
}

}  // namespace

Comodule random_conjugate(Rng& rng, const Comodule& v) {
  const Matrix s = random_invertible(rng, v.field(), v.dim());
  const Matrix s_inv = *inverse(s);
  return Comodule(v.base(), kron_apply(s_inv, Matrix::identity(v.field(), v.base().dim()), v.coaction() * s));
}

Comodule random_comodule(Rng& rng, const Coalgebra& c, std::size_t max_dim) {
  const auto points = grouplike_basis_vectors(c);
  Comodule v = zero_comodule(c);
  const std::size_t target = rng.below(max_dim + 1);
  for (int guard = 0; guard < 8 && v.dim() < target; ++guard) {
    const bool use_point = !points.empty() && (c.dim() > target - v.dim() || rng.below(3) != 0);
    if (use_point) {
      v = direct_sum(v, point_comodule(c, points[rng.below(points.size())]));
    } else if (v.dim() + c.dim() <= max_dim) {
      v = direct_sum(v, regular_comodule(c));
    }
  }
  return random_conjugate(rng, v);
}

std::vector<CorruptedStructure> corrupted_structures(Rng& rng, Field field, std::size_t count) {
  std::vector<CorruptedStructure> out;
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t n = 3 + rng.below(2);
    Coalgebra base = grouplike_coalgebra(field, labels(n));
    Matrix delta = base.delta(), counit = base.counit();
    // Three distinct basis indices.
    const std::size_t i = rng.below(n), j = (i + 1 + rng.below(n - 1)) % n;
    std::size_t k = 0;
    while (k == i || k == j) ++k;
    switch (t % 4) {
      case 0:
        counit.set(0, k, 2);
        out.push_back({std::move(delta), std::move(counit), "counit"});
        break;
      case 1:
        // Symmetric, but e_i (x) e_j survives the counit.
        delta.set(i * n + j, k, 1);
        delta.set(j * n + i, k, 1);
        out.push_back({std::move(delta), std::move(counit), "counit"});
        break;
      case 2: {
        // Add c u (x) u with u = e_i - e_j to delta e_k: counital and symmetric,
        // but u (x) u (x) e_k and e_k (x) u (x) u no longer cancel.
        const long c = rng.between(1, 3);
        delta.set(i * n + i, k, c);
        delta.set(j * n + j, k, c);
        delta.set(i * n + j, k, -c);
        delta.set(j * n + i, k, -c);
        out.push_back({std::move(delta), std::move(counit), "coassociativity"});
        break;
      }
      default: {
        auto [md, me] = matrix_coalgebra(field);
        auto [d, e] = rng.coin() ? raw_direct_sum(md, me, delta, counit) : raw_direct_sum(delta, counit, md, me);
        out.push_back({std::move(d), std::move(e), "cocommutativity"});
        break;
      }
    }
  }
  return out;
}

}  // namespace lhd
