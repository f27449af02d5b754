#include "lhd/coalgebra.hpp"

#include <set>
#include <stdexcept>

#include "lhd/errors.hpp"

namespace lhd {

namespace {

std::vector<std::string> generic_labels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

bool distinct(const std::vector<std::string>& labels) {
  return std::set<std::string>(labels.begin(), labels.end()).size() == labels.size();
}

bool grouplike_basis(const Matrix& delta, const Matrix& counit) {
  const std::size_t n = counit.cols();
  for (std::size_t i = 0; i < n; ++i) {
    if (counit(0, i) != 1) return false;
    for (std::size_t r = 0; r < n * n; ++r)
      if (delta(r, i) != (r == i * n + i ? 1 : 0)) return false;
  }
  return true;
}

std::optional<AxiomFailure> compare(const char* axiom, const Matrix& lhs, const Matrix& rhs) {
  if (auto col = lhs.first_differing_column(rhs)) return AxiomFailure{axiom, *col};
  return std::nullopt;
}

[[noreturn]] void throw_failure(const AxiomFailure& f, const std::string& what) {
  throw AxiomViolation(f.axiom, f.basis_index,
                       what + " violates " + f.axiom + " at basis vector " + std::to_string(f.basis_index));
}

void require_same_base(const Coalgebra& a, const Coalgebra& b, const char* op) {
  if (!(a == b)) throw BaseMismatch(std::string(op) + ": coalgebras differ");
}

void require_same_field(const Coalgebra& a, const Coalgebra& b, const char* op) {
  if (!(a.field() == b.field()))
    throw FieldMismatch(std::string(op) + ": " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

std::optional<AxiomFailure> coalgebra_axiom_failure(const Matrix& delta, const Matrix& counit) {
  const std::size_t n = counit.cols();
  if (counit.rows() != 1 || delta.rows() != n * n || delta.cols() != n)
    throw DimensionError("coalgebra of dimension " + std::to_string(n) + " needs a " +
                         std::to_string(n * n) + "x" + std::to_string(n) + " comultiplication");
  const Field& f = delta.field();
  const Matrix id = Matrix::identity(f, n);
  if (auto e = compare("counit", kron_apply(counit, id, delta), id)) return e;
  if (auto e = compare("counit", kron_apply(id, counit, delta), id)) return e;
  if (auto e = compare("coassociativity", kron_apply(delta, id, delta), kron_apply(id, delta, delta)))
    return e;
  const std::size_t dims[] = {n, n}, flip[] = {1, 0};
  if (auto e = compare("cocommutativity", permute_factor_rows(delta, dims, flip), delta)) return e;
  return std::nullopt;
}

Coalgebra::Coalgebra(Matrix delta, Matrix counit, std::vector<std::string> labels) {
  if (!(delta.field() == counit.field())) throw FieldMismatch("comultiplication and counit fields differ");
  if (auto fail = coalgebra_axiom_failure(delta, counit)) throw_failure(*fail, "coalgebra");
  const std::size_t n = counit.cols();
  if (labels.empty()) labels = generic_labels(n);
  if (labels.size() != n) throw DimensionError("expected " + std::to_string(n) + " basis labels");
  if (!distinct(labels)) throw std::invalid_argument("repeated basis label");
  const bool gl = grouplike_basis(delta, counit);
  data_ = std::make_shared<const Data>(Data{std::move(delta), std::move(counit), std::move(labels), gl});
}

std::optional<std::size_t> Coalgebra::label_index(const std::string& label) const {
  const auto& ls = labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return i;
  return std::nullopt;
}

bool Coalgebra::operator==(const Coalgebra& o) const {
  return data_ == o.data_ || (same_structure(o) && labels() == o.labels());
}

bool Coalgebra::same_structure(const Coalgebra& o) const {
  return data_ == o.data_ || (delta() == o.delta() && counit() == o.counit());
}

std::optional<AxiomFailure> coalgebra_morphism_failure(const Coalgebra& source, const Coalgebra& target,
                                                       const Matrix& f) {
  require_same_field(source, target, "coalgebra morphism");
  if (f.rows() != target.dim() || f.cols() != source.dim())
    throw DimensionError("morphism matrix must be " + std::to_string(target.dim()) + "x" +
                         std::to_string(source.dim()));
  if (auto e = compare("comultiplication", target.delta() * f, kron_apply(f, f, source.delta()))) return e;
  if (auto e = compare("counit", target.counit() * f, source.counit())) return e;
  return std::nullopt;
}

CoalgebraMorphism::CoalgebraMorphism(Coalgebra source, Coalgebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (auto fail = coalgebra_morphism_failure(source_, target_, matrix_))
    throw_failure(*fail, "coalgebra morphism");
}

CoalgebraMorphism CoalgebraMorphism::identity(const Coalgebra& c) {
  return {c, c, Matrix::identity(c.field(), c.dim())};
}

CoalgebraMorphism CoalgebraMorphism::to_trivial(const Coalgebra& c) {
  return {c, trivial_coalgebra(c.field()), c.counit()};
}

CoalgebraMorphism CoalgebraMorphism::after(const CoalgebraMorphism& g) const {
  require_same_base(source_, g.target_, "composition");
  return {g.source_, target_, matrix_ * g.matrix_};
}

std::optional<std::vector<std::size_t>> CoalgebraMorphism::label_map() const {
  if (!source_.is_grouplike() || !target_.is_grouplike()) return std::nullopt;
  std::vector<std::size_t> out(matrix_.cols());
  for (std::size_t j = 0; j < matrix_.cols(); ++j) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
      if (sgn(matrix_(i, j)) == 0) continue;
      if (hit || matrix_(i, j) != 1) return std::nullopt;
      hit = i;
    }
    if (!hit) return std::nullopt;
    out[j] = *hit;
  }
  return out;
}

Coalgebra trivial_coalgebra(Field field) {
  return Coalgebra(Matrix(field, {{1}}), Matrix(field, {{1}}), {"*"});
}

Coalgebra grouplike_coalgebra(Field field, const std::vector<std::string>& labels) {
  if (labels.empty()) throw std::invalid_argument("group-like coalgebra needs at least one label");
  if (!distinct(labels)) throw std::invalid_argument("repeated group-like label");
  const std::size_t n = labels.size();
  Matrix delta(field, n * n, n), counit(field, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    delta.set(i * n + i, i, 1);
    counit.set(0, i, 1);
  }
  return Coalgebra(std::move(delta), std::move(counit), labels);
}

CoalgebraMorphism grouplike_morphism(const Coalgebra& source, const Coalgebra& target,
                                     const std::vector<std::size_t>& label_map) {
  if (label_map.size() != source.dim()) throw DimensionError("label map length differs from source size");
  Matrix m(source.field(), target.dim(), source.dim());
  for (std::size_t j = 0; j < label_map.size(); ++j) {
    if (label_map[j] >= target.dim()) throw DimensionError("label map points outside the target");
    m.set(label_map[j], j, 1);
  }
  return {source, target, std::move(m)};
}

Coalgebra direct_sum(const Coalgebra& c1, const Coalgebra& c2) {
  require_same_field(c1, c2, "direct_sum");
  const std::size_t n1 = c1.dim(), n2 = c2.dim(), n = n1 + n2;
  Matrix delta(c1.field(), n * n, n);
  for (std::size_t j = 0; j < n1; ++j)
    for (std::size_t a = 0; a < n1; ++a)
      for (std::size_t b = 0; b < n1; ++b) delta.set(a * n + b, j, c1.delta()(a * n1 + b, j));
  for (std::size_t j = 0; j < n2; ++j)
    for (std::size_t a = 0; a < n2; ++a)
      for (std::size_t b = 0; b < n2; ++b) delta.set((n1 + a) * n + n1 + b, n1 + j, c2.delta()(a * n2 + b, j));
  std::vector<std::string> labels = c1.labels();
  labels.insert(labels.end(), c2.labels().begin(), c2.labels().end());
  if (!distinct(labels)) labels.clear();
  return Coalgebra(std::move(delta), hstack(c1.counit(), c2.counit()), std::move(labels));
}

Product product(const Coalgebra& c1, const Coalgebra& c2) {
  require_same_field(c1, c2, "product");
  const Field& f = c1.field();
  const std::size_t n1 = c1.dim(), n2 = c2.dim();
  const std::size_t dims[] = {n1, n1, n2, n2}, middle_swap[] = {0, 2, 1, 3};
  Matrix delta = permute_factor_rows(kron(c1.delta(), c2.delta()), dims, middle_swap);
  std::vector<std::string> labels;
  for (const auto& x : c1.labels())
    for (const auto& y : c2.labels()) labels.push_back("(" + x + "," + y + ")");
  Coalgebra p(std::move(delta), kron(c1.counit(), c2.counit()), std::move(labels));
  CoalgebraMorphism p1(p, c1, kron(Matrix::identity(f, n1), c2.counit()));
  CoalgebraMorphism p2(p, c2, kron(c1.counit(), Matrix::identity(f, n2)));
  return {std::move(p), std::move(p1), std::move(p2)};
}

CoalgebraMorphism pairing(const CoalgebraMorphism& f, const CoalgebraMorphism& g, const Product& into) {
  require_same_base(f.source(), g.source(), "pairing");
  require_same_base(f.target(), into.p1.target(), "pairing");
  require_same_base(g.target(), into.p2.target(), "pairing");
  return {f.source(), into.coalgebra, kron_apply(f.matrix(), g.matrix(), f.source().delta())};
}

bool pairing_is_unique(const CoalgebraMorphism& f, const CoalgebraMorphism& g, const Product& into) {
  const CoalgebraMorphism h = pairing(f, g, into);
  const Field& k = f.source().field();
  const Coalgebra& d = f.source();
  const std::size_t n1 = into.p1.target().dim(), n2 = into.p2.target().dim(), np = n1 * n2;
  const UnknownShape shape{np, d.dim()};

  std::vector<LinearConstraint> system;
  system.push_back({{{into.p1.matrix(), Matrix::identity(k, d.dim())}}, f.matrix()});
  system.push_back({{{into.p2.matrix(), Matrix::identity(k, d.dim())}}, g.matrix()});
  // (id (x) p2) delta_P X - (X (x) id) (id (x) g) delta_D = 0
  std::vector<LinearTerm> closure{
      {kron_apply(Matrix::identity(k, np), into.p2.matrix(), into.coalgebra.delta()), Matrix::identity(k, d.dim())}};
  const Matrix right = kron_apply(Matrix::identity(k, d.dim()), g.matrix(), d.delta());
  for (auto& t : kron_identity_terms(Matrix::identity(k, np * n2).scaled(-1), n2, right, shape))
    closure.push_back(std::move(t));
  system.push_back({std::move(closure), Matrix::zero(k, np * n2, d.dim())});

  const auto sol = solve_constrained_all(k, shape, system);
  return sol.particular && sol.homogeneous.empty() && *sol.particular == h.matrix();
}

Subcoalgebra largest_subcoalgebra_in(const Coalgebra& c, const Subspace& w) {
  if (w.ambient() != c.dim()) throw DimensionError("subspace ambient dimension differs from the coalgebra");
  const Field& k = c.field();
  const std::size_t n = c.dim();
  const Matrix id = Matrix::identity(k, n);
  Matrix basis = w.basis();
  std::vector<std::size_t> chain{basis.cols()};
  while (basis.cols() > 0) {
    // Rows of q cut out the current subspace.
    const Matrix q = kernel(basis.transpose()).basis().transpose();
    if (q.rows() == 0) break;
    const Matrix image_delta = c.delta() * basis;
    const Matrix conditions = vstack(kron_apply(q, id, image_delta), kron_apply(id, q, image_delta));
    const Subspace keep = kernel(conditions);
    if (keep.dim() == basis.cols()) break;
    basis = basis * keep.basis();
    chain.push_back(basis.cols());
  }
  basis = image(basis).basis();

  const std::size_t d = basis.cols();
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < d && labels.size() == j; ++j) {
    std::optional<std::size_t> hit;
    bool unit = true;
    for (std::size_t i = 0; i < n && unit; ++i) {
      if (sgn(basis(i, j)) == 0) continue;
      if (hit || basis(i, j) != 1) unit = false;
      hit = i;
    }
    if (unit && hit) labels.push_back(c.labels()[*hit]);
  }
  if (labels.size() != d) labels.clear();

  if (d == 0) {
    Coalgebra zero(Matrix(k, 0, 0), Matrix(k, 1, 0));
    return {zero, CoalgebraMorphism(zero, c, Matrix(k, n, 0)), std::move(chain)};
  }
  const Matrix left = *left_inverse(basis);
  Coalgebra sub(kron_apply(left, left, c.delta() * basis), c.counit() * basis, std::move(labels));
  CoalgebraMorphism inclusion(sub, c, basis);
  return {std::move(sub), std::move(inclusion), std::move(chain)};
}

Subcoalgebra equalizer(const CoalgebraMorphism& f, const CoalgebraMorphism& g) {
  require_same_base(f.source(), g.source(), "equalizer");
  require_same_base(f.target(), g.target(), "equalizer");
  return largest_subcoalgebra_in(f.source(), kernel(f.matrix() - g.matrix()));
}

Pullback pullback(const CoalgebraMorphism& phi1, const CoalgebraMorphism& phi2) {
  require_same_base(phi1.target(), phi2.target(), "pullback");
  const Product prod = product(phi1.source(), phi2.source());
  Subcoalgebra eq = equalizer(phi1.after(prod.p1), phi2.after(prod.p2));
  CoalgebraMorphism u = prod.p1.after(eq.inclusion);
  CoalgebraMorphism v = prod.p2.after(eq.inclusion);
  return {std::move(eq.coalgebra), std::move(u), std::move(v)};
}

namespace {

// Product in the dual algebra: (a * b)_k = sum_ij a_i b_j delta[i n + j, k].
Matrix dual_multiply(const Coalgebra& c, const Matrix& a, const Matrix& b) {
  return kron(a, b) * c.delta();
}

Matrix dual_power(const Coalgebra& c, Matrix base, std::uint64_t e) {
  Matrix result = c.counit();
  while (e) {
    if (e & 1) result = dual_multiply(c, result, base);
    e >>= 1;
    if (e) base = dual_multiply(c, base, base);
  }
  return result;
}

}  // namespace

bool is_cosemisimple(const Coalgebra& c) {
  const Field& k = c.field();
  const std::size_t n = c.dim();
  if (n == 0) return true;
  const Matrix& delta = c.delta();
  if (k.is_rationals()) {
    // T_ij = Tr(L_i L_j) with (L_i)_{kl} = delta[i n + l, k].
    Matrix trace(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        mpq_class t = 0;
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) {
            const mpq_class& x = delta(i * n + b, a);
            if (sgn(x) == 0) continue;
            t += x * delta(j * n + a, b);
          }
        trace.set(i, j, t);
        trace.set(j, i, t);
      }
    return sgn(determinant(trace)) != 0;
  }
  Matrix frobenius(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix power = dual_power(c, Matrix::unit(k, n, i).transpose(), k.characteristic());
    for (std::size_t j = 0; j < n; ++j) frobenius.set(j, i, power(0, j));
  }
  return rank(frobenius) == n;
}

std::optional<CoalgebraMorphism> factor_through(const CoalgebraMorphism& m, const CoalgebraMorphism& f) {
  require_same_base(m.target(), f.target(), "factor_through");
  auto x = factor_through(m.matrix(), f.matrix());
  if (!x) return std::nullopt;
  return CoalgebraMorphism(f.source(), m.source(), std::move(*x));
}

}  // namespace lhd
