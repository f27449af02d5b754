#include <map>

#include "doctest.h"
#include "lhd/errors.hpp"
#include "lhd/hyperdoctrine.hpp"
#include "lhd/instances.hpp"
#include "lhd/linalg.hpp"

using namespace lhd;

namespace {

const Field Q = Field::rationals();

Coalgebra gl(std::initializer_list<const char*> ls) {
  return grouplike_coalgebra(Q, std::vector<std::string>(ls.begin(), ls.end()));
}

// Size of {(d1, d2) : f(d1) = g(d2)} for label maps.
std::size_t fibre_product_size(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  std::map<std::size_t, std::size_t> count;
  for (auto y : g) ++count[y];
  std::size_t n = 0;
  for (auto y : f) n += count[y];
  return n;
}

std::vector<std::size_t> graded_dims(const Comodule& v) {
  const std::size_t n = v.base().dim(), m = v.dim();
  std::vector<std::size_t> out(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    Matrix p(v.field(), m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) p.set(i, j, v.coaction()(i * n + x, j));
    out[x] = rank(p);
  }
  return out;
}

std::string why(const CheckReport& r) { return r.witness ? r.witness->equation + " " + r.witness->lhs : ""; }

}  // namespace

TEST_CASE("U_C") {
  const Coalgebra a = gl({"a"}), xy = gl({"x", "y"});
  CHECK(U_C(terminal_object(a)) == regular_comodule(a));
  const Comodule u = U_C(CoalgCObject(grouplike_morphism(xy, a, {0, 0})));
  CHECK(u.dim() == 2);
  CHECK(u.coaction() == Matrix::identity(Q, 2));

  const Coalgebra trig = trigonometric_coalgebra(Q);
  const Comodule plain = U_C(CoalgCObject(CoalgebraMorphism::to_trivial(trig)));
  CHECK(plain.coaction() == Matrix::identity(Q, 2));

  // Morphisms over the base map to comodule morphisms; others are refused.
  const CoalgCObject ox(grouplike_morphism(xy, a, {0, 0}));
  const CoalgebraMorphism swap = grouplike_morphism(xy, xy, {1, 0});
  CHECK(U_C(ox, ox, swap).matrix() == swap.matrix());
  const Coalgebra ab = gl({"a", "b"});
  const CoalgCObject split(grouplike_morphism(xy, ab, {0, 1}));
  CHECK_THROWS_AS(U_C(split, split, swap), BaseMismatch);
}

TEST_CASE("products in Coalg C") {
  const Coalgebra ab = gl({"a", "b"}), xyz = gl({"x", "y", "z"}), pq = gl({"p", "q"});
  const CoalgCObject o(grouplike_morphism(xyz, ab, {0, 0, 1}));
  const CoalgCProduct with_terminal = coalgC_product(o, terminal_object(ab));
  CHECK(with_terminal.object.source().dim() == 3);
  CHECK(inverse(with_terminal.pi1.matrix()).has_value());

  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    const Coalgebra c = random_grouplike(rng, Q, 3, "c");
    const Coalgebra d1 = random_grouplike(rng, Q, 3, "x"), d2 = random_grouplike(rng, Q, 3, "y");
    const CoalgebraMorphism f = random_grouplike_morphism(rng, d1, c), g = random_grouplike_morphism(rng, d2, c);
    const CoalgCProduct p = coalgC_product(CoalgCObject(f), CoalgCObject(g));
    CHECK(p.object.source().dim() == fibre_product_size(*f.label_map(), *g.label_map()));
    CHECK(f.after(p.pi1) == p.object.structure());
    CHECK(g.after(p.pi2) == p.object.structure());
    const CheckReport r = strong_monoidality_check(CoalgCObject(f), CoalgCObject(g));
    CHECK_MESSAGE(r.passed(), why(r));
  }
  const CoalgCObject op(grouplike_morphism(pq, ab, {1, 1}));
  CHECK_THROWS_AS(coalgC_product(o, CoalgCObject(grouplike_morphism(pq, gl({"a", "c"}), {0, 0}))), BaseMismatch);
  CHECK(coalgC_product(o, op).object.source().dim() == 2);
}

TEST_CASE("strong monoidality") {
  const Coalgebra ab = gl({"a", "b"});
  CHECK(strong_monoidality_check(terminal_object(ab), terminal_object(ab)).passed());
  const Coalgebra trig = trigonometric_coalgebra(Q);
  CHECK(strong_monoidality_check(terminal_object(trig), terminal_object(trig)).passed());
  const CoalgCObject t(CoalgebraMorphism::to_trivial(trig));
  const CheckReport r = strong_monoidality_check(t, CoalgCObject(CoalgebraMorphism::to_trivial(gl({"x", "y"}))));
  CHECK_MESSAGE(r.passed(), why(r));
  CHECK(r.dims[0].second == std::vector<std::size_t>{4});
  // The dual numbers need not be cosemisimple as objects.
  const Coalgebra dn = dual_numbers_coalgebra(Q);
  CHECK(strong_monoidality_check(CoalgCObject(CoalgebraMorphism::to_trivial(dn)),
                                 CoalgCObject(CoalgebraMorphism::to_trivial(dn)))
            .passed());
}

TEST_CASE("reindexing L_f") {
  const Coalgebra a = gl({"a"}), pq = gl({"p", "q"}), xy = gl({"x", "y"});
  const CoalgCObject o(grouplike_morphism(xy, a, {0, 0}));
  const Reindexed same = L_f(CoalgebraMorphism::identity(a), o);
  CHECK(inverse(same.to_source.matrix()).has_value());

  const CoalgebraMorphism f = grouplike_morphism(pq, a, {0, 0});
  const Reindexed l = L_f(f, o);
  CHECK(l.object.source().dim() == 4);
  CHECK(inverse(L_f(f, terminal_object(a)).object.structure().matrix()).has_value());

  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    const Coalgebra c = random_grouplike(rng, Q, 3, "c"), c2 = random_grouplike(rng, Q, 3, "p"),
                    d = random_grouplike(rng, Q, 3, "x");
    const CoalgebraMorphism g = random_grouplike_morphism(rng, c2, c), phi = random_grouplike_morphism(rng, d, c);
    const Reindexed r = L_f(g, CoalgCObject(phi));
    CHECK(r.object.source().dim() == fibre_product_size(*g.label_map(), *phi.label_map()));
    const CheckReport rep = lnl_morphism_check(g, CoalgCObject(phi));
    CHECK_MESSAGE(rep.passed(), why(rep));
    // Functoriality on the identity morphism.
    const CoalgebraMorphism lid = L_f(g, CoalgCObject(phi), CoalgCObject(phi), CoalgebraMorphism::identity(d));
    CHECK(lid.matrix() == Matrix::identity(Q, r.object.source().dim()));
  }
}

TEST_CASE("LNL morphisms") {
  const Coalgebra a = gl({"a"}), pq = gl({"p", "q"}), xy = gl({"x", "y"});
  const CoalgCObject o(grouplike_morphism(xy, a, {0, 0}));
  CHECK(lnl_morphism_check(CoalgebraMorphism::identity(a), o).passed());
  const CheckReport r = lnl_morphism_check(grouplike_morphism(pq, a, {0, 0}), o);
  CHECK(r.passed());
  CHECK(r.dims[0].second == r.dims[1].second);

  const Coalgebra trig = trigonometric_coalgebra(Q);
  const CheckReport tr = lnl_morphism_check(CoalgebraMorphism::to_trivial(trig),
                                            CoalgCObject(CoalgebraMorphism::to_trivial(gl({"x", "y"}))));
  CHECK_MESSAGE(tr.passed(), why(tr));

  const Coalgebra dn = dual_numbers_coalgebra(Q);
  CHECK_THROWS_AS(lnl_morphism_check(CoalgebraMorphism::to_trivial(dn), terminal_object(trivial_coalgebra(Q))),
                  HypothesisViolated);
}

TEST_CASE("base powers") {
  const Coalgebra ab = gl({"a", "b"});
  CHECK(base_power(ab, 0).power.same_structure(trivial_coalgebra(Q)));
  CHECK(base_power(ab, 1).power == ab);
  const BasePower two = base_power(ab, 2);
  CHECK(two.power.dim() == 4);
  CHECK(two.power.is_grouplike());
  CHECK(two.projections.size() == 2);
  const BasePower three = base_power(ab, 3);
  CHECK(three.power.dim() == 8);
  // pi_0 of (a,b,b) is a, pi_2 is b.
  const std::size_t abb = 0 * 4 + 1 * 2 + 1;
  CHECK((*three.projections[0].label_map())[abb] == 0);
  CHECK((*three.projections[2].label_map())[abb] == 1);
  CHECK_THROWS_AS(base_power(dual_numbers_coalgebra(Q), 2), HypothesisViolated);
}

TEST_CASE("quantifiers along projections") {
  const Coalgebra ab = gl({"a", "b"});
  const BasePower zero = base_power(ab, 0);
  const Comodule v0 = graded_comodule(zero.with_generator.coalgebra, {1, 2});
  CHECK(exists_along_projection(zero, v0).dim() == 3);
  CHECK(graded_dims(forall_along_projection(zero, v0)) == std::vector<std::size_t>{3});

  const BasePower one = base_power(ab, 1);
  const Comodule v1 = graded_comodule(one.with_generator.coalgebra, {1, 2, 0, 3});
  CHECK(graded_dims(exists_along_projection(one, v1)) == std::vector<std::size_t>{3, 3});
  CHECK(graded_dims(forall_along_projection(one, v1)) == std::vector<std::size_t>{3, 3});

  const Coalgebra a = gl({"a"});
  const BasePower single = base_power(a, 1);
  const Comodule s = graded_comodule(single.with_generator.coalgebra, {2});
  CHECK(forall_along_projection(single, s).dim() == 2);

  Rng rng(29);
  for (int t = 0; t < 3; ++t) {
    const Comodule v = random_comodule(rng, one.with_generator.coalgebra, 4);
    const Comodule w = random_comodule(rng, one.power, 3);
    const CheckReport c1 = hyperdoctrine_condition1_check(one, v, w);
    CHECK_MESSAGE(c1.passed(), why(c1));
    CHECK(frobenius_check(one.with_generator.p1, v, w).passed());
  }

  const Coalgebra trig = trigonometric_coalgebra(Q);
  const BasePower tp = base_power(trig, 1);
  const Comodule tv = regular_comodule(tp.with_generator.coalgebra);
  CHECK(exists_along_projection(tp, tv).dim() == 4);
  CHECK_THROWS_AS(forall_along_projection(tp, tv), UnsupportedBase);
  CHECK(hyperdoctrine_condition1_check(tp, tv, regular_comodule(trig)).verdict == Verdict::unsupported);
}

TEST_CASE("condition (2) squares") {
  const Coalgebra ab = gl({"a", "b"});
  const BasePower one = base_power(ab, 1), two = base_power(ab, 2);
  const Comodule v = graded_comodule(one.with_generator.coalgebra, {1, 0, 2, 1});
  const CheckReport same = hyperdoctrine_condition2_check(ab, CoalgebraMorphism::identity(ab), v);
  CHECK_MESSAGE(same.passed(), why(same));

  Rng rng(31);
  for (int t = 0; t < 4; ++t) {
    const Comodule vr = random_comodule(rng, one.with_generator.coalgebra, 4);
    for (const auto& pi : two.projections) {
      const CheckReport r = hyperdoctrine_condition2_check(ab, pi, vr);
      CHECK_MESSAGE(r.passed(), why(r));
    }
    const CheckReport d = hyperdoctrine_condition2_check(ab, diagonal(ab), random_comodule(rng, two.with_generator.coalgebra, 4));
    CHECK_MESSAGE(d.passed(), why(d));
  }

  // Over k everything degenerates to vector spaces.
  const Coalgebra k = trivial_coalgebra(Q);
  const BasePower kp = base_power(k, 2);
  const Comodule kv = graded_comodule(kp.with_generator.coalgebra, {3});
  CHECK(hyperdoctrine_condition2_check(k, kp.projections[0], graded_comodule(product(k, k).coalgebra, {3})).passed());
  CHECK(hyperdoctrine_condition1_check(kp, kv, graded_comodule(kp.power, {2})).passed());

  // A non-group-like generator still gets the exists square.
  const Coalgebra trig = trigonometric_coalgebra(Q);
  const CheckReport tr =
      hyperdoctrine_condition2_check(trig, CoalgebraMorphism::identity(trig), regular_comodule(product(trig, trig).coalgebra));
  CHECK(tr.verdict == Verdict::unsupported);
}

TEST_CASE("condition (3) and the full run") {
  const Coalgebra ab = gl({"a", "b"});
  const BasePower one = base_power(ab, 1), two = base_power(ab, 2);
  Rng rng(53);
  for (int t = 0; t < 3; ++t) {
    const Comodule v = random_comodule(rng, one.with_generator.coalgebra, 4);
    const Comodule w = random_comodule(rng, one.power, 3);
    for (const auto& pi : two.projections) {
      const CheckReport r = hyperdoctrine_condition3_check(ab, pi, v, w);
      CHECK_MESSAGE(r.passed(), why(r));
    }
  }

  // Tuples of projections and constants send labels to labels.
  for (int t = 0; t < 10; ++t) {
    const BasePower& from = t % 2 ? one : two;
    const CoalgebraMorphism f = random_base_morphism(rng, from, two);
    CHECK(f.source() == from.power);
    CHECK(f.target() == two.power);
    const auto map = f.label_map();
    REQUIRE(map.has_value());
  }
  CHECK(random_base_morphism(rng, two, base_power(ab, 0)).target().dim() == 1);

  Rng run(1);
  const CheckReport all = hyperdoctrine_check(ab, 2, 10, run, 4);
  CHECK_MESSAGE(all.passed(), why(all));
  CHECK(all.dims.front().second == std::vector<std::size_t>{1, 2, 4});

  const Coalgebra trig = trigonometric_coalgebra(Q);
  Rng trig_run(2);
  CHECK(hyperdoctrine_check(trig, 1, 2, trig_run, 4).verdict == Verdict::unsupported);
}
