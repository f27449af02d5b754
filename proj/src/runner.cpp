#include "lhd/runner.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "lhd/errors.hpp"
#include "lhd/hyperdoctrine.hpp"
#include "lhd/indexed.hpp"
#include "lhd/instances.hpp"
#include "lhd/linalg.hpp"
#include "lhd/oracle.hpp"

namespace lhd::dsl {

namespace {

struct Context {
  const Document& doc;
  const RunOptions& options;

  const Coalgebra& coalgebra(const std::string& n) const { return doc.coalgebras.at(n); }
  const CoalgebraMorphism& morphism(const std::string& n) const { return doc.morphisms.at(n); }
  const Comodule& comodule(const std::string& n) const { return doc.comodules.at(n); }
};

using Args = std::vector<std::string>;

// Records the oracle's dimensions next to the matrix ones when the base is
// group-like.
void oracle_agrees(CheckReport& r, const std::string& what, const Comodule& computed,
                   const oracle::GradedVectorSpace& expected) {
  const oracle::GradedVectorSpace got = oracle::to_graded(computed);
  r.add_dims("oracle " + what, expected.dims);
  r.expect(got == expected, "oracle agrees on " + what);
}

CheckReport axioms(const Context& cx, const Args& a) {
  CheckReport r("axioms");
  const std::string& n = a[0];
  if (cx.doc.coalgebras.count(n)) {
    const Coalgebra& c = cx.coalgebra(n);
    r.add_dims(n, {c.dim()});
    if (auto f = coalgebra_axiom_failure(c.delta(), c.counit())) r.fail(Witness{f->axiom, f->basis_index, "", ""});
    if (c.is_grouplike()) r.note(n + " is group-like");
  } else if (cx.doc.morphisms.count(n)) {
    const CoalgebraMorphism& f = cx.morphism(n);
    r.add_dims(n, {f.target().dim(), f.source().dim()});
    if (auto e = coalgebra_morphism_failure(f.source(), f.target(), f.matrix()))
      r.fail(Witness{e->axiom, e->basis_index, "", ""});
  } else {
    const Comodule& v = cx.comodule(n);
    r.add_dims(n, {v.dim()});
    if (auto e = comodule_axiom_failure(v.base(), v.coaction())) r.fail(Witness{e->axiom, e->basis_index, "", ""});
  }
  return r;
}

CheckReport cosemisimple(const Context& cx, const Args& a) {
  CheckReport r("cosemisimple");
  const Coalgebra& c = cx.coalgebra(a[0]);
  r.add_dims(a[0], {c.dim()});
  r.value = is_cosemisimple(c);
  if (c.is_grouplike()) r.expect(*r.value, "group-like coalgebras are cosemisimple");
  return r;
}

CheckReport injective(const Context& cx, const Args& a) {
  CheckReport r("injective");
  const Comodule& v = cx.comodule(a[0]);
  r.add_dims(a[0], {v.dim()});
  r.value = is_injective(v);
  r.expect(injective_splitting(v).has_value() == *r.value, "a splitting exists exactly when injective");
  r.expect(is_coflat(v) == *r.value, "coflat = injective");
  if (is_cosemisimple(v.base())) r.expect(*r.value, "over a cosemisimple base every comodule is injective");
  return r;
}

CheckReport cotensor_check(const Context& cx, const Args& a) {
  CheckReport r("cotensor");
  const Comodule& v = cx.comodule(a[0]);
  const Comodule& w = cx.comodule(a[1]);
  const Comodule& x = a.size() > 2 ? cx.comodule(a[2]) : v;
  const Cotensor c = cotensor(v, w);
  r.add_dims("left, right, cotensor", {v.dim(), w.dim(), c.comodule.dim()});
  r.expect(inverse(right_unitor(v).matrix()).has_value(), "V (x)^C C ~ V");
  r.absorb(coherence_check(v, w, x));
  if (v.base().is_grouplike())
    oracle_agrees(r, "V (x)^C W", c.comodule, oracle::graded_cotensor(oracle::to_graded(v), oracle::to_graded(w)));
  return r;
}

CheckReport hom(const Context& cx, const Args& a) {
  CheckReport r("hom");
  const Comodule& v = cx.comodule(a[0]);
  const Comodule& w = cx.comodule(a[1]);
  const auto maps = hom_space(v, w);
  r.add_dims("Hom^C(V, W)", {maps.size()});
  if (!v.base().is_grouplike()) {
    r.note("internal hom is built over group-like bases only");
    r.verdict = Verdict::unsupported;
    return r;
  }
  const InternalHom h = internal_hom(v, w);
  r.add_dims("hom(V, W)", {h.hom.dim()});
  const Comodule z = regular_comodule(v.base());
  const auto left = hom_space(cotensor(z, v).comodule, w), right = hom_space(z, h.hom);
  r.add_dims("Hom(C (x)^C V, W), Hom(C, hom(V, W))", {left.size(), right.size()});
  r.expect(left.size() == right.size(), "currying preserves hom dimensions");
  for (const auto& f : left) r.expect(uncurry(h, curry(h, z, f)) == f, "uncurry o curry = id");
  for (const auto& g : right) r.expect(curry(h, z, uncurry(h, g)) == g, "curry o uncurry = id");
  const auto gv = oracle::to_graded(v), gw = oracle::to_graded(w);
  oracle_agrees(r, "hom(V, W)", h.hom, oracle::graded_hom(gv, gw));
  r.expect(maps.size() == oracle::hom_dimension(gv, gw), "oracle agrees on dim Hom^C(V, W)");
  return r;
}

CheckReport adjunction(const Context& cx, const Args& a) {
  CheckReport r("adjunction");
  const CoalgebraMorphism& phi = cx.morphism(a[0]);
  const Comodule& v = cx.comodule(a[1]);
  const Comodule& w = cx.comodule(a[2]);
  r.absorb(adjunction_certificate(phi, v, w).report);
  r.absorb(sigma_triangle_check(phi, v, w));
  r.absorb(frobenius_check(phi, v, w));
  if (phi.source().is_grouplike() && phi.target().is_grouplike()) {
    r.absorb(forall_certificate(phi, w, v).report);
    r.absorb(forall_triangle_check(phi, w, v));
    const oracle::SetMap f = oracle::to_set_map(phi);
    oracle_agrees(r, "Sigma V", sigma(phi, v), oracle::graded_sigma(f, oracle::to_graded(v)));
    oracle_agrees(r, "phi^* W", pullback_functor(phi, w).comodule, oracle::graded_pullback(f, oracle::to_graded(w)));
    oracle_agrees(r, "forall V", forall(phi, v), oracle::graded_forall(f, oracle::to_graded(v)));
  } else {
    r.note("forall is only computed between group-like coalgebras");
  }
  if (a.size() > 3) {
    if (a.size() < 5) throw DimensionError("adjunction: a second morphism needs a comodule over its target");
    r.absorb(functoriality_check(phi, cx.morphism(a[3]), v, cx.comodule(a[4])));
  }
  return r;
}

CheckReport beck(const Context& cx, const Args& a) {
  CheckReport r("beck");
  const CoalgebraMorphism& beta = cx.morphism(a[0]);
  const CoalgebraMorphism& alpha = cx.morphism(a[1]);
  const Comodule& v = cx.comodule(a[2]);
  const PullbackSquare sq = pullback_square(beta, alpha);
  r.add_dims("D", {sq.delta.source().dim()});
  r.absorb(beck_chevalley_check(sq, v));
  if (beta.source().is_grouplike() && alpha.source().is_grouplike() && beta.target().is_grouplike()) {
    const auto [lhs, rhs] =
        oracle::graded_beck_chevalley(oracle::to_set_map(beta), oracle::to_set_map(alpha), oracle::to_graded(v));
    r.expect(lhs == rhs, "oracle square commutes");
    oracle_agrees(r, "beta^* Sigma_alpha V", pullback_functor(beta, sigma(alpha, v)).comodule, lhs);
  }
  return r;
}

CheckReport forall_beck(const Context& cx, const Args& a) {
  CheckReport r("forall-beck");
  const PullbackSquare sq = pullback_square(cx.morphism(a[0]), cx.morphism(a[1]));
  r.absorb(beck_for_forall_check(sq, cx.comodule(a[2])));
  return r;
}

CheckReport frobenius(const Context& cx, const Args& a) {
  return frobenius_check(cx.morphism(a[0]), cx.comodule(a[1]), cx.comodule(a[2]));
}

CheckReport ssmc(const Context& cx, const Args& a) {
  return ssmc_check(cx.morphism(a[0]), cx.comodule(a[1]), cx.comodule(a[2]));
}

CheckReport lnl(const Context& cx, const Args& a) {
  CheckReport r("lnl");
  const CoalgebraMorphism& f = cx.morphism(a[0]);
  const CoalgCObject obj(cx.morphism(a[1]));
  r.absorb(strong_monoidality_check(obj, obj));
  r.absorb(lnl_morphism_check(f, obj));
  const Reindexed l = L_f(f, obj);
  const CoalgebraMorphism id = L_f(f, obj, obj, CoalgebraMorphism::identity(obj.source()));
  r.expect_equal("L_f(id) = id", id.matrix(), Matrix::identity(f.source().field(), l.object.source().dim()));
  const CoalgCProduct prod = coalgC_product(obj, terminal_object(obj.base()));
  r.add_dims("D x id_C", {prod.object.source().dim()});
  r.expect(U_C(prod.object, obj, prod.pi1).matrix().rows() == obj.source().dim(), "U_C on the projection");
  return r;
}

CheckReport hyperdoctrine(const Context& cx, const Args& a) {
  const std::size_t n = a.size() > 1 ? std::stoul(a[1]) : 2;
  const std::size_t morphisms = a.size() > 2 ? std::stoul(a[2]) : 10;
  Rng rng(cx.options.seed);
  CheckReport r = hyperdoctrine_check(cx.coalgebra(a[0]), n, morphisms, rng, cx.options.max_dim);
  const BasePower p = base_power(cx.coalgebra(a[0]), n);
  r.add_dims("exists along pi_I of I x C", {exists_along_projection(p, regular_comodule(p.with_generator.coalgebra)).dim()});
  if (p.base.is_grouplike())
    r.add_dims("forall along pi_I of I x C",
               {forall_along_projection(p, regular_comodule(p.with_generator.coalgebra)).dim()});
  return r;
}

struct Entry {
  CheckCoverage coverage;
  std::function<CheckReport(const Context&, const Args&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = {
      {{"axioms",
        {"coalgebra_axiom_failure", "coalgebra_morphism_failure", "comodule_axiom_failure", "grouplike_coalgebra",
         "direct_sum", "product", "Coalgebra", "Comodule", "CoalgebraMorphism", "graded_comodule"}},
       axioms},
      {{"cosemisimple", {"is_cosemisimple"}}, cosemisimple},
      {{"injective", {"is_injective", "injective_splitting", "is_coflat"}}, injective},
      {{"cotensor",
        {"cotensor", "right_unitor", "coherence_check", "pentagon_check", "triangle_check", "symmetry_check",
         "hexagon_check", "structural_isos", "associator", "left_unitor", "braiding", "cotensor_map",
         "oracle::to_graded", "oracle::graded_cotensor"}},
       cotensor_check},
      {{"hom",
        {"hom_space", "internal_hom", "curry", "uncurry", "regular_comodule", "oracle::graded_hom",
         "oracle::hom_dimension"}},
       hom},
      {{"adjunction",
        {"sigma", "pullback_functor", "transpose_hat", "transpose_tilde", "adjunction_certificate",
         "sigma_triangle_check", "forall", "forall_counit", "forall_certificate", "forall_transpose", "forall_unit",
         "forall_triangle_check", "frobenius_check", "functoriality_check", "find_isomorphism", "oracle::to_set_map",
         "oracle::graded_sigma", "oracle::graded_pullback", "oracle::graded_forall"}},
       adjunction},
      {{"beck",
        {"pullback", "pairing", "factor_through", "pullback_square", "validate_square", "mediating_map",
         "beck_chevalley_maps", "beck_chevalley_check", "oracle::set_fiber_product",
         "oracle::graded_beck_chevalley"}},
       beck},
      {{"forall-beck", {"pullback_square", "beck_for_forall_check"}}, forall_beck},
      {{"frobenius", {"frobenius_check"}}, frobenius},
      {{"ssmc", {"ssmc_check", "cofree_comodule"}}, ssmc},
      {{"lnl",
        {"CoalgCObject", "terminal_object", "U_C", "coalgC_product", "strong_monoidality_check", "L_f",
         "lnl_morphism_check", "underlying_comodule"}},
       lnl},
      {{"hyperdoctrine",
        {"base_power", "exists_along_projection", "forall_along_projection", "product_map", "diagonal", "symmetry",
         "hyperdoctrine_condition1_check", "hyperdoctrine_condition2_check", "hyperdoctrine_condition3_check",
         "random_base_morphism", "hyperdoctrine_check", "random_comodule"}},
       hyperdoctrine},
  };
  return table;
}

CheckReport run_one(const Context& cx, const CheckDirective& d) {
  for (const Entry& e : entries()) {
    if (e.coverage.kind != d.kind) continue;
    try {
      CheckReport r = e.run(cx, d.args);
      r.check = d.kind;
      return r;
    } catch (const HypothesisViolated& err) {
      CheckReport r(d.kind);
      r.verdict = Verdict::unsupported;
      r.note(std::string("hypothesis not met: ") + err.what());
      return r;
    } catch (const UnsupportedBase& err) {
      CheckReport r(d.kind);
      r.verdict = Verdict::unsupported;
      r.note(err.what());
      return r;
    } catch (const std::exception& err) {
      CheckReport r(d.kind);
      r.fail("arguments fit together", err.what());
      return r;
    }
  }
  throw std::logic_error("no runner for check kind " + d.kind);
}

}  // namespace

const std::vector<CheckCoverage>& check_registry() {
  static const std::vector<CheckCoverage> table = [] {
    std::vector<CheckCoverage> out;
    for (const Entry& e : entries()) out.push_back(e.coverage);
    return out;
  }();
  return table;
}

std::vector<CheckReport> run(const Document& doc, const RunOptions& options) {
  const Context cx{doc, options};
  std::vector<CheckReport> out;
  for (const CheckDirective& d : doc.checks()) {
    const auto start = std::chrono::steady_clock::now();
    CheckReport r = run_one(cx, d);
    r.args = d.args;
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_json(const std::vector<CheckReport>& reports, int indent) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["args"] = r.args;
    j["verdict"] = to_string(r.verdict);
    j["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
    j["dims"] = nlohmann::ordered_json::array();
    for (const auto& [name, d] : r.dims) j["dims"].push_back({{"name", name}, {"dims", d}});
    if (r.witness)
      j["witness"] = {{"equation", r.witness->equation},
                      {"basis_index", r.witness->basis_index},
                      {"lhs", r.witness->lhs},
                      {"rhs", r.witness->rhs}};
    else
      j["witness"] = nullptr;
    j["notes"] = r.notes;
    j["millis"] = r.millis;
    out.push_back(std::move(j));
  }
  return out.dump(indent);
}

std::string to_text(const std::vector<CheckReport>& reports, bool verbose) {
  std::ostringstream os;
  for (const CheckReport& r : reports) {
    std::string verdict = to_string(r.verdict);
    for (auto& ch : verdict) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << verdict << "  " << r.check;
    for (const auto& a : r.args) os << " " << a;
    if (r.value) os << "  = " << (*r.value ? "true" : "false");
    os << "  (" << static_cast<long>(r.millis) << " ms)\n";
    if (r.witness) {
      os << "    violated: " << r.witness->equation << " at basis vector " << r.witness->basis_index << "\n";
      if (!r.witness->lhs.empty() || !r.witness->rhs.empty())
        os << "      lhs " << r.witness->lhs << "\n      rhs " << r.witness->rhs << "\n";
    }
    if (!verbose) continue;
    for (const auto& [name, d] : r.dims) {
      os << "    " << name << ":";
      for (auto x : d) os << " " << x;
      os << "\n";
    }
    for (const auto& n : r.notes) os << "    note: " << n << "\n";
  }
  return os.str();
}

int exit_status(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports)
    if (r.verdict == Verdict::fail) return 1;
  return 0;
}

}  // namespace lhd::dsl
