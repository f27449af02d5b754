#include "lhd/indexed.hpp"

#include <stdexcept>

#include "lhd/errors.hpp"
#include "lhd/linalg.hpp"

namespace lhd {

namespace {

void require_base(const Comodule& v, const Coalgebra& c, const char* op) {
  if (!(v.base() == c)) throw BaseMismatch(std::string(op) + ": comodule lives over the wrong coalgebra");
}

Matrix restrict_to(const Matrix& e, const Matrix& m, const char* what) {
  auto x = factor_through(e, m);
  if (!x) throw std::logic_error(std::string(what) + " leaves the expected subspace");
  return std::move(*x);
}

// Row-major flattening of a matrix into one column.
Matrix flatten(const Matrix& m) {
  return Matrix(m.field(), m.rows() * m.cols(), 1, m.entries());
}

Matrix flatten_all(const Field& k, std::size_t rows, const std::vector<ComoduleMorphism>& basis) {
  Matrix out(k, rows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const auto& e = basis[j].matrix().entries();
    for (std::size_t i = 0; i < rows; ++i) out.set(i, j, e[i]);
  }
  return out;
}

std::vector<std::size_t> graded_dims(const Comodule& v) {
  std::vector<std::size_t> out;
  for (const Matrix& p : grading_projectors(v)) out.push_back(rank(p));
  return out;
}

std::vector<std::size_t> component_dims(const Comodule& v) {
  return v.base().is_grouplike() ? graded_dims(v) : std::vector<std::size_t>{v.dim()};
}

// Builds a comodule morphism inside a check; a colinearity failure becomes
// the report's witness instead of an exception.
std::optional<ComoduleMorphism> checked_morphism(CheckReport& r, const std::string& name, const Comodule& s,
                                                 const Comodule& t, Matrix m) {
  if (auto fail = comodule_morphism_failure(s, t, m)) {
    r.fail(Witness{name + " is colinear", fail->basis_index, "", ""});
    return std::nullopt;
  }
  return ComoduleMorphism(s, t, std::move(m));
}

bool injective(const Matrix& m) { return rank(m) == m.cols(); }

}  // namespace

Comodule sigma(const CoalgebraMorphism& phi, const Comodule& v) {
  require_base(v, phi.source(), "sigma");
  return Comodule(phi.target(), kron_apply(Matrix::identity(v.field(), v.dim()), phi.matrix(), v.coaction()));
}

ComoduleMorphism sigma(const CoalgebraMorphism& phi, const ComoduleMorphism& f) {
  return {sigma(phi, f.source()), sigma(phi, f.target()), f.matrix()};
}

Comodule underlying_comodule(const CoalgebraMorphism& phi) { return sigma(phi, regular_comodule(phi.source())); }

PulledBack pullback_functor(const CoalgebraMorphism& phi, const Comodule& w) {
  require_base(w, phi.target(), "pullback_functor");
  const Coalgebra& d = phi.source();
  const Cotensor c = cotensor(w, underlying_comodule(phi));
  const Matrix rho = restrict_to(kron(c.embedding, Matrix::identity(w.field(), d.dim())),
                                 kron_apply(Matrix::identity(w.field(), w.dim()), d.delta(), c.embedding),
                                 "pulled back coaction");
  return {Comodule(d, rho), c.embedding};
}

ComoduleMorphism pullback_functor(const CoalgebraMorphism& phi, const ComoduleMorphism& f) {
  const PulledBack from = pullback_functor(phi, f.source()), to = pullback_functor(phi, f.target());
  const Matrix id_d = Matrix::identity(f.source().field(), phi.source().dim());
  return {from.comodule, to.comodule,
          restrict_to(to.embedding, kron_apply(f.matrix(), id_d, from.embedding), "phi^*(f)")};
}

ComoduleMorphism transpose_hat(const CoalgebraMorphism& phi, const Comodule& v, const ComoduleMorphism& f) {
  if (!(f.source() == sigma(phi, v))) throw BaseMismatch("transpose_hat: f must start at Sigma_phi V");
  const PulledBack target = pullback_functor(phi, f.target());
  const Matrix id_d = Matrix::identity(v.field(), phi.source().dim());
  return {v, target.comodule, restrict_to(target.embedding, kron_apply(f.matrix(), id_d, v.coaction()), "hat")};
}

ComoduleMorphism transpose_tilde(const CoalgebraMorphism& phi, const Comodule& w, const ComoduleMorphism& g) {
  const PulledBack pw = pullback_functor(phi, w);
  if (!(g.target() == pw.comodule)) throw BaseMismatch("transpose_tilde: g must end at phi^* W");
  const Matrix m = kron_apply(Matrix::identity(w.field(), w.dim()), phi.source().counit(), pw.embedding * g.matrix());
  return {sigma(phi, g.source()), w, m};
}

AdjunctionCertificate adjunction_certificate(const CoalgebraMorphism& phi, const Comodule& v, const Comodule& w) {
  const Field& k = v.field();
  const Comodule sv = sigma(phi, v);
  const PulledBack pw = pullback_functor(phi, w);
  const auto left = hom_space(sv, w), right = hom_space(v, pw.comodule);
  AdjunctionCertificate cert{left.size(), right.size(), Matrix(k, right.size(), left.size()),
                             Matrix(k, left.size(), right.size()), CheckReport("adjunction")};
  CheckReport& r = cert.report;
  r.add_dims("hom", {left.size(), right.size()});
  if (!r.expect(left.size() == right.size(), "hom dimensions agree")) return cert;
  const Matrix lb = flatten_all(k, w.dim() * v.dim(), left);
  const Matrix rb = flatten_all(k, pw.comodule.dim() * v.dim(), right);
  for (std::size_t j = 0; j < left.size(); ++j) {
    const Matrix c = restrict_to(rb, flatten(transpose_hat(phi, v, left[j]).matrix()), "hat coordinates");
    for (std::size_t i = 0; i < right.size(); ++i) cert.forward.set(i, j, c(i, 0));
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    const Matrix c = restrict_to(lb, flatten(transpose_tilde(phi, w, right[j]).matrix()), "tilde coordinates");
    for (std::size_t i = 0; i < left.size(); ++i) cert.backward.set(i, j, c(i, 0));
  }
  const Matrix id = Matrix::identity(k, left.size());
  r.expect_equal("tilde o hat = id", cert.backward * cert.forward, id);
  r.expect_equal("hat o tilde = id", cert.forward * cert.backward, id);
  return cert;
}

Comodule forall(const CoalgebraMorphism& phi, const Comodule& v) {
  require_base(v, phi.source(), "forall");
  if (!is_coflat(underlying_comodule(phi)))
    throw HypothesisViolated("forall: U(phi) is not coflat, so phi^* has no right adjoint");
  if (!phi.source().is_grouplike() || !phi.target().is_grouplike())
    throw UnsupportedBase("forall is only available between group-like coalgebras");
  const auto map = *phi.label_map();
  const auto dv = graded_dims(v);
  std::vector<std::size_t> dims(phi.target().dim(), 0);
  for (std::size_t x = 0; x < map.size(); ++x) dims[map[x]] += dv[x];
  return graded_comodule(phi.target(), dims);
}

ComoduleMorphism forall_counit(const CoalgebraMorphism& phi, const Comodule& v) {
  const Comodule all = forall(phi, v);
  const PulledBack pb = pullback_functor(phi, all);
  const Field& k = v.field();
  const auto map = *phi.label_map();
  const std::size_t nd = phi.source().dim(), nt = phi.target().dim();
  const auto proj = grading_projectors(v);
  // Row index of e_(x', x, i) (x) d_x inside forall V (x) D.
  Matrix m(k, v.dim(), all.dim() * nd);
  std::size_t j = 0;
  for (std::size_t xt = 0; xt < nt; ++xt)
    for (std::size_t x = 0; x < nd; ++x) {
      if (map[x] != xt) continue;
      const Matrix vb = image(proj[x]).basis();
      for (std::size_t i = 0; i < vb.cols(); ++i, ++j)
        for (std::size_t r = 0; r < v.dim(); ++r) m.set(r, j * nd + x, vb(r, i));
    }
  return {pb.comodule, v, m * pb.embedding};
}

AdjunctionCertificate forall_certificate(const CoalgebraMorphism& phi, const Comodule& w, const Comodule& v) {
  const Field& k = v.field();
  const Comodule all = forall(phi, v);
  const ComoduleMorphism counit = forall_counit(phi, v);
  const PulledBack pw = pullback_functor(phi, w);
  const auto right = hom_space(w, all), left = hom_space(pw.comodule, v);
  AdjunctionCertificate cert{left.size(), right.size(), Matrix(k, left.size(), right.size()),
                             Matrix(k, right.size(), left.size()), CheckReport("forall_adjunction")};
  CheckReport& r = cert.report;
  r.add_dims("hom", {left.size(), right.size()});
  if (!r.expect(left.size() == right.size(), "hom dimensions agree")) return cert;
  const Matrix lb = flatten_all(k, v.dim() * pw.comodule.dim(), left);
  for (std::size_t j = 0; j < right.size(); ++j) {
    const Matrix image_h = counit.after(pullback_functor(phi, right[j])).matrix();
    const Matrix c = restrict_to(lb, flatten(image_h), "transpose coordinates");
    for (std::size_t i = 0; i < left.size(); ++i) cert.forward.set(i, j, c(i, 0));
  }
  auto inv = inverse(cert.forward);
  if (!r.expect(inv.has_value(), "h -> counit o phi^*(h) is bijective")) return cert;
  cert.backward = std::move(*inv);
  return cert;
}

CheckReport sigma_triangle_check(const CoalgebraMorphism& phi, const Comodule& v, const Comodule& w) {
  CheckReport r("sigma_triangles");
  const Comodule sv = sigma(phi, v);
  const Comodule pw = pullback_functor(phi, w).comodule;
  const ComoduleMorphism unit_v = transpose_hat(phi, v, ComoduleMorphism::identity(sv));
  const ComoduleMorphism counit_sv = transpose_tilde(phi, sv, ComoduleMorphism::identity(unit_v.target()));
  r.expect_equal("eps_(Sigma V) o Sigma(eta_V) = id", counit_sv.after(sigma(phi, unit_v)).matrix(),
                 Matrix::identity(v.field(), sv.dim()));
  const ComoduleMorphism counit_w = transpose_tilde(phi, w, ComoduleMorphism::identity(pw));
  const ComoduleMorphism unit_pw = transpose_hat(phi, pw, ComoduleMorphism::identity(counit_w.source()));
  r.expect_equal("phi^*(eps_W) o eta_(phi^* W) = id", pullback_functor(phi, counit_w).after(unit_pw).matrix(),
                 Matrix::identity(v.field(), pw.dim()));
  r.add_dims("Sigma V, phi^* W", {sv.dim(), pw.dim()});
  return r;
}

ComoduleMorphism forall_transpose(const CoalgebraMorphism& phi, const Comodule& w, const ComoduleMorphism& g) {
  const Comodule& v = g.target();
  const AdjunctionCertificate cert = forall_certificate(phi, w, v);
  if (!cert.report.passed()) throw std::logic_error("forall_transpose: the forall adjunction failed");
  const Comodule all = forall(phi, v);
  const PulledBack pw = pullback_functor(phi, w);
  if (!(g.source() == pw.comodule)) throw BaseMismatch("forall_transpose: g must start at phi^* W");
  const Field& k = v.field();
  const auto left = hom_space(pw.comodule, v), right = hom_space(w, all);
  const Matrix c = restrict_to(flatten_all(k, v.dim() * pw.comodule.dim(), left), flatten(g.matrix()),
                               "transpose coordinates");
  const Matrix h = cert.backward * c;
  Matrix m(k, all.dim(), w.dim());
  for (std::size_t j = 0; j < right.size(); ++j) m = m + right[j].matrix().scaled(h(j, 0));
  return {w, all, m};
}

ComoduleMorphism forall_unit(const CoalgebraMorphism& phi, const Comodule& w) {
  return forall_transpose(phi, w, ComoduleMorphism::identity(pullback_functor(phi, w).comodule));
}

ComoduleMorphism forall(const CoalgebraMorphism& phi, const ComoduleMorphism& f) {
  return forall_transpose(phi, forall(phi, f.source()), f.after(forall_counit(phi, f.source())));
}

CheckReport forall_triangle_check(const CoalgebraMorphism& phi, const Comodule& w, const Comodule& v) {
  CheckReport r("forall_triangles");
  const Comodule pw = pullback_functor(phi, w).comodule;
  const ComoduleMorphism unit_w = forall_unit(phi, w);
  r.expect_equal("eps_(phi^* W) o phi^*(eta_W) = id",
                 forall_counit(phi, pw).after(pullback_functor(phi, unit_w)).matrix(),
                 Matrix::identity(v.field(), pw.dim()));
  const Comodule all = forall(phi, v);
  r.expect_equal("forall(eps_V) o eta_(forall V) = id",
                 forall(phi, forall_counit(phi, v)).after(forall_unit(phi, all)).matrix(),
                 Matrix::identity(v.field(), all.dim()));
  r.add_dims("forall V, phi^* W", {all.dim(), pw.dim()});
  return r;
}

PullbackSquare pullback_square(const CoalgebraMorphism& beta, const CoalgebraMorphism& alpha) {
  Pullback pb = pullback(beta, alpha);
  return {std::move(pb.u), std::move(pb.v), beta, alpha};
}

namespace {

struct Mediation {
  CoalgebraMorphism t;
  Matrix inclusion;  // D' into D1 (x) D2
};

Mediation mediate(const PullbackSquare& sq) {
  if (!(sq.delta.source() == sq.gamma.source()) || !(sq.delta.target() == sq.beta.source()) ||
      !(sq.gamma.target() == sq.alpha.source()) || !(sq.beta.target() == sq.alpha.target()))
    throw HypothesisViolated("square: morphisms do not fit together");
  if (!(sq.beta.after(sq.delta).matrix() == sq.alpha.after(sq.gamma).matrix()))
    throw HypothesisViolated("square does not commute");
  const Product prod = product(sq.beta.source(), sq.alpha.source());
  const Pullback computed = pullback(sq.beta, sq.alpha);
  const CoalgebraMorphism p = pairing(sq.delta, sq.gamma, prod);
  const CoalgebraMorphism incl = pairing(computed.u, computed.v, prod);
  if (!injective(p.matrix())) throw HypothesisViolated("square: <delta, gamma> is not injective");
  auto t = factor_through(p, incl);
  if (!t) throw HypothesisViolated("square: the pullback does not factor through <delta, gamma>");
  return {std::move(*t), incl.matrix()};
}

}  // namespace

void validate_square(const PullbackSquare& sq) {
  const Mediation m = mediate(sq);
  if (!inverse(m.t.matrix())) throw HypothesisViolated("square: D is not the pullback");
}

CoalgebraMorphism mediating_map(const PullbackSquare& sq) { return mediate(sq).t; }

namespace {

struct BeckChevalleyParts {
  Comodule source;  // beta^* Sigma_alpha V
  Comodule target;  // Sigma_delta gamma^* V
  std::optional<Matrix> phi, psi;
};

// Builds phi_V and psi_V, recording in r any step where the explicit formula
// leaves its subspace.
BeckChevalleyParts beck_chevalley_parts(CheckReport& r, const PullbackSquare& sq, const Comodule& v) {
  require_base(v, sq.alpha.source(), "beck_chevalley");
  const Mediation med = mediate(sq);
  const Field& k = v.field();
  const std::size_t mv = v.dim(), n1 = sq.beta.source().dim(), n2 = sq.alpha.source().dim();
  const Matrix id_v = Matrix::identity(k, mv);

  const PulledBack src = pullback_functor(sq.beta, sigma(sq.alpha, v));  // in V (x) D1
  const PulledBack mid = pullback_functor(sq.gamma, v);                  // in V (x) D
  BeckChevalleyParts out{src.comodule, sigma(sq.delta, mid.comodule), std::nullopt, std::nullopt};
  r.add_dims("V", {mv});
  r.add_dims("beta^* Sigma_alpha V", component_dims(out.source));
  r.add_dims("Sigma_delta gamma^* V", component_dims(out.target));
  r.add_dims("D'", {med.t.source().dim()});

  // v (x) d1 -> v_0 (x) t(d1 (x) v_1)
  const std::size_t dims[] = {mv, n2, n1}, perm[] = {0, 2, 1};
  const Matrix spread =
      permute_factor_rows(kron_apply(v.coaction(), Matrix::identity(k, n1), src.embedding), dims, perm);
  const auto in_dprime = factor_through(kron(id_v, med.inclusion), spread);
  if (r.expect(in_dprime.has_value(), "v_0 (x) (d1 (x) v_1) lies in V (x) D'")) {
    out.phi = factor_through(mid.embedding, kron_apply(id_v, med.t.matrix(), *in_dprime));
    r.expect(out.phi.has_value(), "phi_V lands in gamma^* V");
  }
  out.psi = factor_through(src.embedding, kron_apply(id_v, sq.delta.matrix(), mid.embedding));
  r.expect(out.psi.has_value(), "psi_V lands in beta^* Sigma_alpha V");
  return out;
}

}  // namespace

BeckChevalleyMaps beck_chevalley_maps(const PullbackSquare& sq, const Comodule& v) {
  CheckReport r("beck_chevalley");
  BeckChevalleyParts parts = beck_chevalley_parts(r, sq, v);
  if (!parts.phi || !parts.psi) throw std::logic_error("Beck-Chevalley maps are not well defined");
  return {ComoduleMorphism(parts.source, parts.target, std::move(*parts.phi)),
          ComoduleMorphism(parts.target, parts.source, std::move(*parts.psi))};
}

CheckReport beck_chevalley_check(const PullbackSquare& sq, const Comodule& v) {
  CheckReport r("beck_chevalley");
  const BeckChevalleyParts parts = beck_chevalley_parts(r, sq, v);
  if (!parts.phi || !parts.psi) return r;
  if (!checked_morphism(r, "phi_V", parts.source, parts.target, *parts.phi)) return r;
  if (!checked_morphism(r, "psi_V", parts.target, parts.source, *parts.psi)) return r;
  const Field& k = v.field();
  r.expect_equal("psi_V o phi_V = id", *parts.psi * *parts.phi, Matrix::identity(k, parts.source.dim()));
  r.expect_equal("phi_V o psi_V = id", *parts.phi * *parts.psi, Matrix::identity(k, parts.target.dim()));
  return r;
}

CheckReport beck_for_forall_check(const PullbackSquare& sq, const Comodule& v) {
  CheckReport r("beck_forall");
  require_base(v, sq.beta.source(), "beck_forall");
  validate_square(sq);
  const Comodule lhs = pullback_functor(sq.alpha, forall(sq.beta, v)).comodule;
  const Comodule rhs = forall(sq.gamma, pullback_functor(sq.delta, v).comodule);
  r.add_dims("alpha^* forall_beta V", graded_dims(lhs));
  r.add_dims("forall_gamma delta^* V", graded_dims(rhs));
  const auto iso = find_isomorphism(lhs, rhs);
  r.expect(iso.has_value(), "alpha^* forall_beta V ~ forall_gamma delta^* V", "no isomorphism found");
  return r;
}

CheckReport frobenius_check(const CoalgebraMorphism& phi, const Comodule& v, const Comodule& w) {
  CheckReport r("frobenius");
  require_base(v, phi.source(), "frobenius");
  require_base(w, phi.target(), "frobenius");
  const Field& k = v.field();
  const std::size_t mv = v.dim(), mw = w.dim(), n = phi.source().dim();

  const PulledBack pw = pullback_functor(phi, w);
  const Cotensor inner = cotensor(v, pw.comodule);
  const Comodule left = sigma(phi, inner.comodule);
  const Matrix left_flat = kron_apply(Matrix::identity(k, mv), pw.embedding, inner.embedding);  // in V (x) W (x) C
  const Cotensor right = cotensor(sigma(phi, v), w);
  r.add_dims("Sigma(V (x) phi^*W)", component_dims(left));
  r.add_dims("Sigma V (x) W", component_dims(right.comodule));

  // v (x) w (x) c -> v (x) w eps(c)
  const auto fwd = factor_through(
      right.embedding, kron_apply(Matrix::identity(k, mv * mw), phi.source().counit(), left_flat));
  if (!r.expect(fwd.has_value(), "phi well defined")) return r;
  // v (x) w -> v_0 (x) w (x) v_1
  const std::size_t dims[] = {mv, n, mw}, perm[] = {0, 2, 1};
  const Matrix spread =
      permute_factor_rows(kron_apply(v.coaction(), Matrix::identity(k, mw), right.embedding), dims, perm);
  const auto back = factor_through(left_flat, spread);
  if (!r.expect(back.has_value(), "psi well defined")) return r;

  if (!checked_morphism(r, "phi", left, right.comodule, *fwd)) return r;
  if (!checked_morphism(r, "psi", right.comodule, left, *back)) return r;
  r.expect_equal("psi o phi = id", *back * *fwd, Matrix::identity(k, left.dim()));
  r.expect_equal("phi o psi = id", *fwd * *back, Matrix::identity(k, right.comodule.dim()));
  return r;
}

namespace {

struct TensorIso {
  Matrix forward;  // phi^*V (x) phi^*W -> phi^*(V (x) W)
  Matrix backward;
  Comodule source;
  Comodule target;
};

// Maps between phi^*V (x)^C phi^*W, inside V (x) C (x) W (x) C, and
// phi^*(V (x)^D W), inside V (x) W (x) C.
std::optional<TensorIso> tensor_iso(CheckReport& r, const CoalgebraMorphism& phi, const Comodule& v,
                                    const Comodule& w) {
  const Field& k = v.field();
  const Coalgebra& c = phi.source();
  const std::size_t mv = v.dim(), mw = w.dim(), n = c.dim();
  const PulledBack pv = pullback_functor(phi, v), pw = pullback_functor(phi, w);
  const Cotensor split = cotensor(pv.comodule, pw.comodule);
  const Matrix split_flat = kron_apply(pv.embedding, pw.embedding, split.embedding);
  const Cotensor vw = cotensor(v, w);
  const PulledBack joined = pullback_functor(phi, vw.comodule);
  const Matrix joined_flat = kron_apply(vw.embedding, Matrix::identity(k, n), joined.embedding);

  // v (x) c (x) w (x) c' -> v (x) w (x) eps(c) c'
  const Matrix drop = kron_apply(kron(Matrix::identity(k, mv), c.counit()), Matrix::identity(k, mw * n), split_flat);
  const auto fwd = factor_through(joined_flat, drop);
  if (!r.expect(fwd.has_value(), "tensor map well defined")) return std::nullopt;
  // v (x) w (x) c -> v (x) c_1 (x) w (x) c_2
  const std::size_t dims[] = {mv, mw, n, n}, perm[] = {0, 2, 1, 3};
  const Matrix spread =
      permute_factor_rows(kron_apply(Matrix::identity(k, mv * mw), c.delta(), joined_flat), dims, perm);
  const auto back = factor_through(split_flat, spread);
  if (!r.expect(back.has_value(), "inverse tensor map well defined")) return std::nullopt;
  return TensorIso{*fwd, *back, split.comodule, joined.comodule};
}

}  // namespace

CheckReport ssmc_check(const CoalgebraMorphism& phi, const Comodule& v, const Comodule& w) {
  if (!is_cosemisimple(phi.source()) || !is_cosemisimple(phi.target()))
    throw HypothesisViolated("ssmc: both coalgebras must be cosemisimple");
  require_base(v, phi.target(), "ssmc");
  require_base(w, phi.target(), "ssmc");
  CheckReport r("ssmc");
  const Field& k = v.field();
  const Coalgebra& c = phi.source();

  const auto vw = tensor_iso(r, phi, v, w);
  if (!vw) return r;
  r.add_dims("phi^*V (x) phi^*W", component_dims(vw->source));
  r.add_dims("phi^*(V (x) W)", component_dims(vw->target));
  if (!checked_morphism(r, "tensor map", vw->source, vw->target, vw->forward)) return r;
  if (!checked_morphism(r, "inverse tensor map", vw->target, vw->source, vw->backward)) return r;
  r.expect_equal("tensor maps inverse (one way)", vw->backward * vw->forward, Matrix::identity(k, vw->source.dim()));
  r.expect_equal("tensor maps inverse (other way)", vw->forward * vw->backward, Matrix::identity(k, vw->target.dim()));

  // phi^*(D) -> C, d (x) c -> eps(d) c
  const PulledBack unit = pullback_functor(phi, regular_comodule(phi.target()));
  const Matrix to_c = kron_apply(phi.target().counit(), Matrix::identity(k, c.dim()), unit.embedding);
  if (checked_morphism(r, "unit map", unit.comodule, regular_comodule(c), to_c))
    r.expect(inverse(to_c).has_value(), "phi^*(D) ~ C", "unit map is not invertible");

  // phi^*(sigma_{V,W}) o m_{V,W} = m_{W,V} o sigma_{phi^*V, phi^*W}
  const auto wv = tensor_iso(r, phi, w, v);
  if (!wv) return r;
  const ComoduleMorphism pulled_braid = pullback_functor(phi, braiding(v, w));
  const PulledBack pv = pullback_functor(phi, v), pw = pullback_functor(phi, w);
  r.expect_equal("braiding compatibility", pulled_braid.matrix() * vw->forward,
                 wv->forward * braiding(pv.comodule, pw.comodule).matrix());

  if (c.is_grouplike() && phi.target().is_grouplike()) {
    const Comodule lhs = internal_hom(pv.comodule, pw.comodule).hom;
    const Comodule rhs = pullback_functor(phi, internal_hom(v, w).hom).comodule;
    r.add_dims("hom(phi^*V, phi^*W)", graded_dims(lhs));
    r.add_dims("phi^* hom(V, W)", graded_dims(rhs));
    r.expect(find_isomorphism(lhs, rhs).has_value(), "hom(phi^*V, phi^*W) ~ phi^* hom(V, W)", "no isomorphism found");
  } else {
    r.note("closedness not compared: base is not group-like");
  }
  return r;
}

CheckReport functoriality_check(const CoalgebraMorphism& phi, const CoalgebraMorphism& psi, const Comodule& v,
                                const Comodule& w) {
  CheckReport r("functoriality");
  const CoalgebraMorphism both = psi.after(phi);
  r.expect(sigma(psi, sigma(phi, v)) == sigma(both, v), "Sigma_psi Sigma_phi = Sigma_{psi phi}");
  r.expect(sigma(CoalgebraMorphism::identity(v.base()), v) == v, "Sigma_id = id");
  const Comodule once = pullback_functor(both, w).comodule;
  const Comodule twice = pullback_functor(phi, pullback_functor(psi, w).comodule).comodule;
  r.add_dims("(psi phi)^* W", component_dims(once));
  r.add_dims("phi^* psi^* W", component_dims(twice));
  r.expect(find_isomorphism(once, twice).has_value(), "(psi phi)^* ~ phi^* psi^*", "no isomorphism found");
  return r;
}

}  // namespace lhd
