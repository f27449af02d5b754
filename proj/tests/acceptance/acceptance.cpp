// Runs every acceptance criterion and prints one PASS/FAIL line for each.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include "lhd/errors.hpp"
#include "lhd/hyperdoctrine.hpp"
#include "lhd/indexed.hpp"
#include "lhd/instances.hpp"
#include "lhd/oracle.hpp"

using namespace lhd;

namespace {

const Field Q = Field::rationals();

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool c, const std::string& what) {
    if (!c && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string why(const CheckReport& r) {
  if (!r.witness) return r.check + " " + to_string(r.verdict);
  return r.check + ": " + r.witness->equation + " at " + std::to_string(r.witness->basis_index);
}

Coalgebra trig() { return trigonometric_coalgebra(Q); }

Outcome axioms() {
  Outcome o;
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    const Coalgebra c = random_constructed_coalgebra(rng, Q, 1 + rng.below(6));
    const auto f = coalgebra_axiom_failure(c.delta(), c.counit());
    o.require(!f, "random coalgebra " + std::to_string(i) + " violates " + (f ? f->axiom : ""));
  }
  Rng bad(2);
  const auto corrupted = corrupted_structures(bad, Q, 10);
  o.require(corrupted.size() == 10, "ten corrupted structures");
  for (const auto& s : corrupted) {
    const auto f = coalgebra_axiom_failure(s.delta, s.counit);
    o.require(f && f->axiom == s.broken_axiom, "corrupted " + s.broken_axiom + " not named");
    bool thrown = false;
    try {
      Coalgebra(s.delta, s.counit);
    } catch (const AxiomViolation& e) {
      thrown = e.axiom() == s.broken_axiom;
    }
    o.require(thrown, "construction accepted a broken " + s.broken_axiom);
  }
  return o;
}

Outcome coherence() {
  Outcome o;
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Coalgebra c = random_grouplike(rng, Q, 3);
    const Comodule u = random_comodule(rng, c, 3), v = random_comodule(rng, c, 3), w = random_comodule(rng, c, 3);
    const CheckReport r = coherence_check(u, v, w);
    o.require(r.passed(), why(r));
    for (const Comodule* x : {&u, &v, &w}) {
      o.require(triangle_check(*x, v).passed(), "triangle");
      o.require(inverse(left_unitor(*x).matrix()).has_value(), "left unitor invertible");
      o.require(inverse(right_unitor(*x).matrix()).has_value(), "right unitor invertible");
    }
  }
  return o;
}

Outcome unit_iso() {
  Outcome o;
  Rng rng(4);
  for (int i = 0; i < 25; ++i) {
    const Coalgebra c = random_constructed_coalgebra(rng, Q, 4);
    const Comodule x = random_comodule(rng, c, 4);
    const ComoduleMorphism unitor = right_unitor(x);
    const auto inv = inverse(unitor.matrix());
    o.require(inv.has_value(), "X (x)^C C -> X is not invertible");
    if (!inv) continue;
    o.require(is_comodule_morphism(x, unitor.source(), *inv), "inverse of the unitor is not colinear");
    o.require(unitor.source().dim() == x.dim(), "dim X (x)^C C = dim X");
  }
  return o;
}

Outcome adjunction() {
  Outcome o;
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const Coalgebra c = random_grouplike(rng, Q, 4, "c"), d = random_grouplike(rng, Q, 4, "d");
    const CoalgebraMorphism phi = random_grouplike_morphism(rng, d, c);
    const AdjunctionCertificate cert =
        adjunction_certificate(phi, random_comodule(rng, d, 4), random_comodule(rng, c, 4));
    o.require(cert.report.passed() && cert.sigma_side == cert.pullback_side, why(cert.report));
  }
  // Cosemisimple bases without group-like bases, built from sums of cos/sin.
  const Coalgebra t = trig(), g = grouplike_coalgebra(Q, {"a", "b"});
  const Coalgebra tt = direct_sum(t, t), tg = direct_sum(t, g);
  const std::vector<CoalgebraMorphism> maps = {
      CoalgebraMorphism(tt, t, Matrix(Q, {{1, 0, 1, 0}, {0, 1, 0, 1}})),
      CoalgebraMorphism(t, tt, Matrix(Q, {{1, 0}, {0, 1}, {0, 0}, {0, 0}})),
      CoalgebraMorphism(t, tg, Matrix(Q, {{1, 0}, {0, 1}, {0, 0}, {0, 0}})),
      CoalgebraMorphism::identity(tg),
      CoalgebraMorphism(tt, tt, Matrix(Q, {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}})),
  };
  for (const auto& phi : maps) {
    o.require(!phi.source().is_grouplike(), "non-group-like instance");
    const AdjunctionCertificate cert = adjunction_certificate(phi, random_comodule(rng, phi.source(), 4),
                                                             random_comodule(rng, phi.target(), 4));
    o.require(cert.report.passed(), "non-group-like: " + why(cert.report));
  }
  return o;
}

Outcome beck_chevalley() {
  Outcome o;
  Rng rng(6);
  std::size_t agree = 0, total = 0;
  for (int i = 0; i < 25; ++i) {
    const Coalgebra c = random_grouplike(rng, Q, 3, "c");
    const Coalgebra d1 = random_grouplike(rng, Q, 3, "p"), d2 = random_grouplike(rng, Q, 3, "q");
    const CoalgebraMorphism beta = random_grouplike_morphism(rng, d1, c), alpha = random_grouplike_morphism(rng, d2, c);
    const Comodule v = random_comodule(rng, d2, 4);
    const PullbackSquare sq = pullback_square(beta, alpha);
    const CheckReport r = beck_chevalley_check(sq, v);
    o.require(r.passed(), why(r));
    const BeckChevalleyMaps m = beck_chevalley_maps(sq, v);
    const std::size_t n = m.phi.source().dim();
    o.require(m.psi.after(m.phi).matrix() == Matrix::identity(Q, n), "psi o phi = id");
    o.require(m.phi.after(m.psi).matrix() == Matrix::identity(Q, m.psi.source().dim()), "phi o psi = id");
    const auto [lhs, rhs] =
        oracle::graded_beck_chevalley(oracle::to_set_map(beta), oracle::to_set_map(alpha), oracle::to_graded(v));
    ++total;
    if ((lhs == rhs) == r.passed() && oracle::to_graded(m.phi.source()) == lhs) ++agree;
  }
  o.require(agree == total, "oracle agreement " + std::to_string(agree) + "/" + std::to_string(total));

  const Coalgebra c = grouplike_coalgebra(Q, {"a", "b"});
  const CoalgebraMorphism id = CoalgebraMorphism::identity(c);
  const PullbackSquare same{id, id, id, id};
  validate_square(same);
  const CheckReport r = beck_chevalley_check(same, random_comodule(rng, c, 4));
  o.require(r.passed(), "identity square: " + why(r));
  return o;
}

Outcome frobenius() {
  Outcome o;
  Rng rng(7);
  for (int i = 0; i < 25; ++i) {
    const Coalgebra c = random_grouplike(rng, Q, 4, "c"), d = random_grouplike(rng, Q, 3, "d");
    const CoalgebraMorphism phi = random_grouplike_morphism(rng, c, d);
    const CheckReport r = frobenius_check(phi, random_comodule(rng, c, 4), random_comodule(rng, d, 4));
    o.require(r.passed(), why(r));
  }
  return o;
}

Outcome ssmc() {
  Outcome o;
  Rng rng(8);
  for (int i = 0; i < 25; ++i) {
    const Coalgebra c = random_grouplike(rng, Q, 4, "c"), d = random_grouplike(rng, Q, 3, "d");
    const CoalgebraMorphism phi = random_grouplike_morphism(rng, c, d);
    const CheckReport r = ssmc_check(phi, random_comodule(rng, d, 3), random_comodule(rng, d, 3));
    o.require(r.passed(), why(r));
  }
  return o;
}

Outcome injectivity() {
  Outcome o;
  Rng rng(9);
  std::size_t injective = 0;
  for (int i = 0; i < 100; ++i) {
    const Coalgebra c = random_constructed_coalgebra(rng, Q, 4);
    o.require(is_cosemisimple(c), "generated base is cosemisimple");
    if (is_injective(random_comodule(rng, c, 4))) ++injective;
  }
  o.require(injective == 100, std::to_string(injective) + "/100 injective");
  const Coalgebra n = dual_numbers_coalgebra(Q);
  o.require(!is_cosemisimple(n), "dual numbers are not cosemisimple");
  o.require(!is_injective(point_comodule(n, 0)), "the simple comodule is not injective");
  o.require(is_injective(regular_comodule(n)), "the regular comodule is injective");
  return o;
}

Outcome hyperdoctrine() {
  Outcome o;
  Rng rng(10);
  const CheckReport r = hyperdoctrine_check(grouplike_coalgebra(Q, {"a", "b"}), 2, 10, rng, 4);
  o.require(r.passed(), why(r));
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  Rng rng(11);
  std::size_t disagreements = 0;
  auto same = [&](const Comodule& computed, const Coalgebra& base, const oracle::GradedVectorSpace& expected) {
    if (!(oracle::to_graded(computed) == expected) || !find_isomorphism(computed, oracle::from_graded(base, expected)))
      ++disagreements;
  };
  for (int i = 0; i < 100; ++i) {
    const Coalgebra c = random_grouplike(rng, Q, 4, "c"), d = random_grouplike(rng, Q, 4, "d");
    const CoalgebraMorphism phi = random_grouplike_morphism(rng, d, c);
    const oracle::SetMap f = oracle::to_set_map(phi);
    const Comodule v = random_comodule(rng, d, 4), w = random_comodule(rng, c, 4), w2 = random_comodule(rng, c, 3);
    const auto gv = oracle::to_graded(v), gw = oracle::to_graded(w), gw2 = oracle::to_graded(w2);

    same(cotensor(w, w2).comodule, c, oracle::graded_cotensor(gw, gw2));
    same(internal_hom(w, w2).hom, c, oracle::graded_hom(gw, gw2));
    if (hom_space(w, w2).size() != oracle::hom_dimension(gw, gw2)) ++disagreements;
    same(sigma(phi, v), c, oracle::graded_sigma(f, gv));
    same(pullback_functor(phi, w).comodule, d, oracle::graded_pullback(f, gw));
    same(forall(phi, v), c, oracle::graded_forall(f, gv));

    const Coalgebra e = random_grouplike(rng, Q, 4, "e");
    const CoalgebraMorphism psi = random_grouplike_morphism(rng, e, c);
    const Pullback pb = pullback(phi, psi);
    const auto fp = oracle::set_fiber_product(f, oracle::to_set_map(psi));
    std::vector<std::string> pairs;
    if (pb.coalgebra.is_grouplike()) {
      const auto u = *pb.u.label_map(), w_ = *pb.v.label_map();
      for (std::size_t k = 0; k < u.size(); ++k)
        pairs.push_back("(" + d.labels()[u[k]] + "," + e.labels()[w_[k]] + ")");
    }
    std::sort(pairs.begin(), pairs.end());
    auto expected = fp.labels;
    std::sort(expected.begin(), expected.end());
    if (pairs != expected) ++disagreements;
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
  return o;
}

std::string run_cli(const std::string& file) {
  const std::string cmd = std::string(LHD_BINARY) + " check --json --seed 1 " + file;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return "<popen failed>";
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  if (status != 0) out += "\n<exit " + std::to_string(status) + ">";
  return out;
}

Outcome cli_determinism() {
  Outcome o;
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(LHD_CORPUS_DIR))
    if (e.path().extension() == ".lhd") files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  o.require(files.size() >= 12, "corpus has " + std::to_string(files.size()) + " documents");
  const std::regex millis("\"millis\": [0-9.eE+-]+");
  for (const auto& f : files) {
    const std::string a = run_cli(f), b = run_cli(f);
    o.require(a.find("<exit") == std::string::npos, f + " did not exit 0");
    o.require(std::regex_replace(a, millis, "\"millis\": 0") == std::regex_replace(b, millis, "\"millis\": 0"),
              f + " is not byte-stable");
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0: no limit
  };
  const std::vector<Criterion> criteria = {
      {1, "coalgebra axioms and corrupted structures", axioms, 5},
      {2, "monoidal coherence", coherence, 30},
      {3, "X (x)^C C ~ X", unit_iso, 0},
      {4, "Sigma -| phi^*", adjunction, 0},
      {5, "Beck-Chevalley", beck_chevalley, 0},
      {6, "Frobenius reciprocity", frobenius, 0},
      {7, "phi^* strong symmetric monoidal closed", ssmc, 0},
      {8, "injectivity and coflatness", injectivity, 0},
      {9, "linear hyperdoctrine over grouplike{a,b}", hyperdoctrine, 120},
      {10, "graded oracle equivalence", oracle_equivalence, 0},
      {11, "CLI determinism on the corpus", cli_determinism, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) o.require(false, "over the time limit");
    if (!o.ok) ++failed;
    std::printf("criterion %2d  %s  %-45s %8.2f s%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                o.ok ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
