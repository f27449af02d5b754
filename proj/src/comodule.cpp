#include "lhd/comodule.hpp"

#include <random>
#include <stdexcept>

#include "lhd/errors.hpp"

namespace lhd {

namespace {

std::optional<AxiomFailure> compare(const char* axiom, const Matrix& lhs, const Matrix& rhs) {
  if (auto col = lhs.first_differing_column(rhs)) return AxiomFailure{axiom, *col};
  return std::nullopt;
}

[[noreturn]] void throw_failure(const AxiomFailure& f, const std::string& what) {
  throw AxiomViolation(f.axiom, f.basis_index,
                       what + " violates " + f.axiom + " at basis vector " + std::to_string(f.basis_index));
}

void require_same_base(const Coalgebra& a, const Coalgebra& b, const char* op) {
  if (!(a == b)) throw BaseMismatch(std::string(op) + ": comodules over different coalgebras");
}

Matrix flip_rows(const Matrix& x, std::size_t m, std::size_t n) {
  const std::size_t dims[] = {m, n}, flip[] = {1, 0};
  return permute_factor_rows(x, dims, flip);
}

// Restriction of a map known to land inside the image of an injective e.
Matrix restrict_through(const Matrix& e, const Matrix& m, const char* what) {
  auto x = factor_through(e, m);
  if (!x) throw std::logic_error(std::string(what) + " does not factor through the embedding");
  return std::move(*x);
}

ComoduleMorphism inverse_of(const ComoduleMorphism& f) {
  auto inv = inverse(f.matrix());
  if (!inv) throw std::logic_error("structural map is not invertible");
  return {f.target(), f.source(), std::move(*inv)};
}

}  // namespace

std::optional<AxiomFailure> comodule_axiom_failure(const Coalgebra& base, const Matrix& coaction) {
  const std::size_t n = base.dim(), m = coaction.cols();
  if (coaction.rows() != m * n)
    throw DimensionError("coaction of a " + std::to_string(m) + "-dimensional comodule must have " +
                         std::to_string(m * n) + " rows");
  if (!(coaction.field() == base.field())) throw FieldMismatch("coaction over a different field");
  const Field& k = base.field();
  const Matrix id_m = Matrix::identity(k, m), id_n = Matrix::identity(k, n);
  if (auto e = compare("counit", kron_apply(id_m, base.counit(), coaction), id_m)) return e;
  if (auto e = compare("coassociativity", kron_apply(id_m, base.delta(), coaction),
                       kron_apply(coaction, id_n, coaction)))
    return e;
  return std::nullopt;
}

Comodule::Comodule(Coalgebra base, Matrix coaction) : base_(std::move(base)), coaction_(std::move(coaction)) {
  if (auto fail = comodule_axiom_failure(base_, coaction_)) throw_failure(*fail, "comodule");
}

std::optional<AxiomFailure> comodule_morphism_failure(const Comodule& source, const Comodule& target,
                                                      const Matrix& f) {
  require_same_base(source.base(), target.base(), "comodule morphism");
  if (f.rows() != target.dim() || f.cols() != source.dim())
    throw DimensionError("comodule morphism matrix must be " + std::to_string(target.dim()) + "x" +
                         std::to_string(source.dim()));
  const Matrix id_n = Matrix::identity(source.field(), source.base().dim());
  return compare("colinearity", kron_apply(f, id_n, source.coaction()), target.coaction() * f);
}

bool is_comodule_morphism(const Comodule& source, const Comodule& target, const Matrix& f) {
  return !comodule_morphism_failure(source, target, f);
}

ComoduleMorphism::ComoduleMorphism(Comodule source, Comodule target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (auto fail = comodule_morphism_failure(source_, target_, matrix_)) throw_failure(*fail, "comodule morphism");
}

ComoduleMorphism ComoduleMorphism::identity(const Comodule& v) {
  return {v, v, Matrix::identity(v.field(), v.dim())};
}

ComoduleMorphism ComoduleMorphism::after(const ComoduleMorphism& g) const {
  if (!(g.target_ == source_)) throw BaseMismatch("composition of comodule morphisms that do not meet");
  return {g.source_, target_, matrix_ * g.matrix_};
}

Comodule regular_comodule(const Coalgebra& c) { return Comodule(c, c.delta()); }

Comodule cofree_comodule(const Coalgebra& c, std::size_t d) {
  return Comodule(c, kron(Matrix::identity(c.field(), d), c.delta()));
}

Comodule zero_comodule(const Coalgebra& c) { return Comodule(c, Matrix(c.field(), 0, 0)); }

Comodule graded_comodule(const Coalgebra& c, const std::vector<std::size_t>& dims) {
  if (!c.is_grouplike()) throw UnsupportedBase("graded comodules need a group-like base");
  if (dims.size() != c.dim()) throw DimensionError("one dimension per label expected");
  std::size_t m = 0;
  for (auto d : dims) m += d;
  const std::size_t n = c.dim();
  Matrix rho(c.field(), m * n, m);
  std::size_t j = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t r = 0; r < dims[x]; ++r, ++j) rho.set(j * n + x, j, 1);
  return Comodule(c, std::move(rho));
}

Comodule direct_sum(const Comodule& v, const Comodule& w) {
  require_same_base(v.base(), w.base(), "direct_sum");
  const std::size_t n = v.base().dim(), mv = v.dim(), mw = w.dim(), m = mv + mw;
  Matrix rho(v.field(), m * n, m);
  for (std::size_t j = 0; j < mv; ++j)
    for (std::size_t r = 0; r < mv * n; ++r) rho.set(r, j, v.coaction()(r, j));
  for (std::size_t j = 0; j < mw; ++j)
    for (std::size_t r = 0; r < mw * n; ++r) rho.set(mv * n + r, mv + j, w.coaction()(r, j));
  return Comodule(v.base(), std::move(rho));
}

std::vector<ComoduleMorphism> hom_space(const Comodule& v, const Comodule& w) {
  require_same_base(v.base(), w.base(), "hom_space");
  const Field& k = v.field();
  const std::size_t n = v.base().dim(), mv = v.dim(), mw = w.dim();
  const UnknownShape shape{mw, mv};
  // (X (x) id) rho_V - rho_W X = 0
  std::vector<LinearTerm> terms = kron_identity_terms(Matrix::identity(k, mw * n), n, v.coaction(), shape);
  terms.push_back({w.coaction().scaled(-1), Matrix::identity(k, mv)});
  const LinearConstraint colinear{std::move(terms), Matrix::zero(k, mw * n, mv)};
  const auto sol = solve_constrained_all(k, shape, std::span(&colinear, 1));
  std::vector<ComoduleMorphism> out;
  out.reserve(sol.homogeneous.size());
  for (const auto& h : sol.homogeneous) out.emplace_back(v, w, h);
  return out;
}

std::optional<ComoduleMorphism> find_isomorphism(const Comodule& v, const Comodule& w, std::uint64_t seed) {
  if (!(v.base() == w.base()) || v.dim() != w.dim()) return std::nullopt;
  if (v.dim() == 0) return ComoduleMorphism(v, w, Matrix(v.field(), 0, 0));
  const auto basis = hom_space(v, w);
  if (basis.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  const Field& k = v.field();
  const std::uint64_t range = k.is_rationals() ? 101 : k.characteristic();
  for (int attempt = 0; attempt < 32; ++attempt) {
    Matrix f(k, w.dim(), v.dim());
    for (const auto& b : basis) f = f + b.matrix().scaled(static_cast<long>(rng() % range) - (range == 101 ? 50 : 0));
    if (inverse(f)) return ComoduleMorphism(v, w, std::move(f));
  }
  return std::nullopt;
}

Cotensor cotensor(const Comodule& v, const Comodule& w) {
  require_same_base(v.base(), w.base(), "cotensor");
  const Field& k = v.field();
  const std::size_t n = v.base().dim(), mv = v.dim(), mw = w.dim();
  const Matrix id_v = Matrix::identity(k, mv), id_w = Matrix::identity(k, mw);
  const Matrix pair = kron(v.coaction(), id_w) - kron(id_v, flip_rows(w.coaction(), mw, n));
  Matrix e = image(kernel(pair).basis()).basis();
  Matrix rho = restrict_through(kron(e, Matrix::identity(k, n)), kron_apply(id_v, w.coaction(), e), "cotensor coaction");
  return {Comodule(v.base(), std::move(rho)), std::move(e)};
}

ComoduleMorphism cotensor_map(const ComoduleMorphism& f, const ComoduleMorphism& g) {
  const Cotensor from = cotensor(f.source(), g.source());
  const Cotensor to = cotensor(f.target(), g.target());
  Matrix m = restrict_through(to.embedding, kron_apply(f.matrix(), g.matrix(), from.embedding), "f (x) g");
  return {from.comodule, to.comodule, std::move(m)};
}

ComoduleMorphism associator(const Comodule& u, const Comodule& v, const Comodule& w) {
  const Field& k = u.field();
  const Cotensor vw = cotensor(v, w), u_vw = cotensor(u, vw.comodule);
  const Cotensor uv = cotensor(u, v), uv_w = cotensor(uv.comodule, w);
  // Both sides embed into the flat U (x) V (x) W.
  const Matrix right = kron_apply(Matrix::identity(k, u.dim()), vw.embedding, u_vw.embedding);
  const Matrix left = kron_apply(uv.embedding, Matrix::identity(k, w.dim()), uv_w.embedding);
  return {u_vw.comodule, uv_w.comodule, restrict_through(left, right, "associator")};
}

ComoduleMorphism left_unitor(const Comodule& x) {
  const Cotensor cx = cotensor(regular_comodule(x.base()), x);
  return {cx.comodule, x, kron_apply(x.base().counit(), Matrix::identity(x.field(), x.dim()), cx.embedding)};
}

ComoduleMorphism right_unitor(const Comodule& x) {
  const Cotensor xc = cotensor(x, regular_comodule(x.base()));
  return {xc.comodule, x, kron_apply(Matrix::identity(x.field(), x.dim()), x.base().counit(), xc.embedding)};
}

ComoduleMorphism braiding(const Comodule& u, const Comodule& v) {
  const Cotensor uv = cotensor(u, v), vu = cotensor(v, u);
  return {uv.comodule, vu.comodule,
          restrict_through(vu.embedding, flip_rows(uv.embedding, u.dim(), v.dim()), "braiding")};
}

StructuralIsos structural_isos(const Comodule& u, const Comodule& v, const Comodule& w) {
  return {associator(u, v, w), left_unitor(u), right_unitor(u), braiding(u, v)};
}

CheckReport pentagon_check(const Comodule& a, const Comodule& b, const Comodule& c, const Comodule& d) {
  CheckReport r("pentagon");
  const Cotensor ab = cotensor(a, b), cd = cotensor(c, d), bc = cotensor(b, c);
  const auto id_a = ComoduleMorphism::identity(a), id_d = ComoduleMorphism::identity(d);
  const ComoduleMorphism top = associator(ab.comodule, c, d).after(associator(a, b, cd.comodule));
  const ComoduleMorphism bottom = cotensor_map(associator(a, b, c), id_d)
                                      .after(associator(a, bc.comodule, d))
                                      .after(cotensor_map(id_a, associator(b, c, d)));
  r.add_dims("a(b(cd))", {top.source().dim()});
  r.expect(top.source() == bottom.source() && top.target() == bottom.target(), "pentagon endpoints");
  r.expect_equal("pentagon", top.matrix(), bottom.matrix());
  return r;
}

CheckReport triangle_check(const Comodule& x, const Comodule& y) {
  CheckReport r("triangle");
  const Comodule c = regular_comodule(x.base());
  const ComoduleMorphism lhs =
      cotensor_map(right_unitor(x), ComoduleMorphism::identity(y)).after(associator(x, c, y));
  const ComoduleMorphism rhs = cotensor_map(ComoduleMorphism::identity(x), left_unitor(y));
  r.add_dims("x(cy)", {lhs.source().dim()});
  r.expect(lhs.source() == rhs.source() && lhs.target() == rhs.target(), "triangle endpoints");
  r.expect_equal("triangle", lhs.matrix(), rhs.matrix());
  return r;
}

CheckReport symmetry_check(const Comodule& x, const Comodule& y) {
  CheckReport r("symmetry");
  const ComoduleMorphism twice = braiding(y, x).after(braiding(x, y));
  r.add_dims("xy", {twice.source().dim()});
  r.expect_equal("braiding involution", twice.matrix(), Matrix::identity(x.field(), twice.source().dim()));
  const ComoduleMorphism via = left_unitor(x).after(braiding(x, regular_comodule(x.base())));
  r.expect_equal("unitor symmetry", via.matrix(), right_unitor(x).matrix());
  return r;
}

CheckReport hexagon_check(const Comodule& a, const Comodule& b, const Comodule& c) {
  CheckReport r("hexagon");
  const Cotensor bc = cotensor(b, c), ab = cotensor(a, b);
  const auto id_b = ComoduleMorphism::identity(b), id_c = ComoduleMorphism::identity(c);
  const ComoduleMorphism lhs = inverse_of(associator(b, c, a))
                                   .after(braiding(a, bc.comodule))
                                   .after(inverse_of(associator(a, b, c)));
  const ComoduleMorphism rhs = cotensor_map(id_b, braiding(a, c))
                                   .after(inverse_of(associator(b, a, c)))
                                   .after(cotensor_map(braiding(a, b), id_c));
  r.add_dims("(ab)c", {lhs.source().dim()});
  r.expect(lhs.source() == rhs.source() && lhs.target() == rhs.target(), "hexagon endpoints");
  r.expect_equal("hexagon", lhs.matrix(), rhs.matrix());
  return r;
}

CheckReport coherence_check(const Comodule& u, const Comodule& v, const Comodule& w) {
  CheckReport r("coherence");
  r.add_dims("objects", {u.dim(), v.dim(), w.dim()});
  const StructuralIsos isos = structural_isos(u, v, w);
  r.add_dims("u(vw)", {isos.associator.source().dim()});
  r.expect(inverse(isos.associator.matrix()).has_value(), "associator invertible");
  r.expect(inverse(isos.left_unitor.matrix()).has_value(), "left unitor invertible");
  r.expect(inverse(isos.right_unitor.matrix()).has_value(), "right unitor invertible");
  r.expect(inverse(isos.braiding.matrix()).has_value(), "braiding invertible");
  r.absorb(pentagon_check(u, v, w, u));
  r.absorb(triangle_check(u, v));
  r.absorb(symmetry_check(u, v));
  r.absorb(symmetry_check(v, w));
  r.absorb(hexagon_check(u, v, w));
  const Comodule c = regular_comodule(u.base());
  r.expect_equal("unitors agree on C", left_unitor(c).matrix(), right_unitor(c).matrix());
  return r;
}

std::vector<Matrix> grading_projectors(const Comodule& v) {
  const Coalgebra& c = v.base();
  if (!c.is_grouplike()) throw UnsupportedBase("grading needs a group-like base");
  const Field& k = v.field();
  std::vector<Matrix> out;
  for (std::size_t x = 0; x < c.dim(); ++x)
    out.push_back(kron_apply(Matrix::identity(k, v.dim()), Matrix::unit(k, c.dim(), x).transpose(), v.coaction()));
  return out;
}

InternalHom internal_hom(const Comodule& v, const Comodule& w) {
  require_same_base(v.base(), w.base(), "internal_hom");
  const Coalgebra& c = v.base();
  if (!c.is_grouplike()) throw UnsupportedBase("internal hom is only available over group-like bases");
  const Field& k = v.field();
  const std::size_t n = c.dim(), mv = v.dim(), mw = w.dim();
  const auto pv = grading_projectors(v), pw = grading_projectors(w);
  std::vector<Matrix> vb, wb;
  std::vector<std::size_t> offset, dims;
  std::size_t total = 0;
  for (std::size_t x = 0; x < n; ++x) {
    vb.push_back(image(pv[x]).basis());
    wb.push_back(image(pw[x]).basis());
    offset.push_back(total);
    dims.push_back(vb[x].cols() * wb[x].cols());
    total += dims.back();
  }
  Comodule hom = graded_comodule(c, dims);

  // ev((x, i, j) (x) v) = (j-th coordinate of the x-part of v) * (i-th basis vector of W_x).
  Matrix flat(k, mw, total * mv);
  for (std::size_t x = 0; x < n; ++x) {
    if (dims[x] == 0) continue;
    const Matrix coords = *left_inverse(vb[x]) * pv[x];
    const std::size_t dv = vb[x].cols();
    for (std::size_t i = 0; i < wb[x].cols(); ++i)
      for (std::size_t j = 0; j < dv; ++j) {
        const std::size_t h = offset[x] + i * dv + j;
        for (std::size_t t = 0; t < mv; ++t) {
          if (sgn(coords(j, t)) == 0) continue;
          for (std::size_t r = 0; r < mw; ++r)
            if (sgn(wb[x](r, i)) != 0) flat.set(r, h * mv + t, k.mul(coords(j, t), wb[x](r, i)));
        }
      }
  }
  Cotensor with_v = cotensor(hom, v);
  ComoduleMorphism ev(with_v.comodule, w, flat * with_v.embedding);
  return {v, w, std::move(hom), std::move(with_v), std::move(ev), std::move(vb), std::move(wb), std::move(offset)};
}

ComoduleMorphism curry(const InternalHom& h, const Comodule& z, const ComoduleMorphism& f) {
  const Cotensor zv = cotensor(z, h.v);
  if (!(f.source() == zv.comodule) || !(f.target() == h.w))
    throw BaseMismatch("curry: f must map Z (x)^C V to W");
  const Field& k = z.field();
  const auto pz = grading_projectors(z), pw = grading_projectors(h.w);
  Matrix out(k, h.hom.dim(), z.dim());
  for (std::size_t x = 0; x < pz.size(); ++x) {
    const std::size_t dv = h.v_basis[x].cols(), dw = h.w_basis[x].cols();
    if (dv == 0 || dw == 0) continue;
    for (std::size_t j = 0; j < dv; ++j) {
      // z -> (P_x z) (x) b_j, then f, then coordinates in W_x.
      const Matrix feed = kron(pz[x], h.v_basis[x].column(j));
      const Matrix image_w = f.matrix() * restrict_through(zv.embedding, feed, "curry input");
      const Matrix a = restrict_through(h.w_basis[x], pw[x] * image_w, "curry output");
      for (std::size_t i = 0; i < dw; ++i)
        for (std::size_t t = 0; t < z.dim(); ++t) out.set(h.offset[x] + i * dv + j, t, a(i, t));
    }
  }
  return {z, h.hom, std::move(out)};
}

ComoduleMorphism uncurry(const InternalHom& h, const ComoduleMorphism& g) {
  return h.evaluation.after(cotensor_map(g, ComoduleMorphism::identity(h.v)));
}

std::optional<ComoduleMorphism> injective_splitting(const Comodule& v) {
  const Field& k = v.field();
  const std::size_t n = v.base().dim(), m = v.dim();
  const Comodule cofree = cofree_comodule(v.base(), m);
  if (m == 0) return ComoduleMorphism(cofree, v, Matrix(k, 0, 0));
  const UnknownShape shape{m, m * n};
  std::vector<LinearConstraint> system;
  system.push_back({{{Matrix::identity(k, m), v.coaction()}}, Matrix::identity(k, m)});
  std::vector<LinearTerm> colinear = kron_identity_terms(Matrix::identity(k, m * n), n, cofree.coaction(), shape);
  colinear.push_back({v.coaction().scaled(-1), Matrix::identity(k, m * n)});
  system.push_back({std::move(colinear), Matrix::zero(k, m * n, m * n)});
  auto sigma = solve_constrained(k, shape, system);
  if (!sigma) return std::nullopt;
  return ComoduleMorphism(cofree, v, std::move(*sigma));
}

bool is_injective(const Comodule& v) { return injective_splitting(v).has_value(); }

bool is_coflat(const Comodule& v) { return is_injective(v); }

}  // namespace lhd
