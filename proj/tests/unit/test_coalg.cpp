#include <map>
#include <set>

#include "doctest.h"
#include "lhd/coalgebra.hpp"
#include "lhd/errors.hpp"
#include "lhd/instances.hpp"

using namespace lhd;

namespace {

const Field Q = Field::rationals();

Coalgebra gl(std::initializer_list<const char*> ls) {
  return grouplike_coalgebra(Q, std::vector<std::string>(ls.begin(), ls.end()));
}

}  // namespace

TEST_CASE("trivial coalgebra") {
  const Coalgebra k = trivial_coalgebra(Q);
  CHECK(k.dim() == 1);
  CHECK(k.delta() == Matrix(Q, {{1}}));
  CHECK(k.counit() == Matrix(Q, {{1}}));
  CHECK(is_cosemisimple(k));
  CHECK(product(k, k).coalgebra.same_structure(k));

  // Terminal: the counit condition alone pins down a morphism D -> k.
  Rng rng(1);
  for (int t = 0; t < 10; ++t) {
    const Coalgebra d = random_constructed_coalgebra(rng, Q, 6);
    const CoalgebraMorphism e = CoalgebraMorphism::to_trivial(d);
    const LinearConstraint counit{{{Matrix::identity(Q, 1), Matrix::identity(Q, d.dim())}}, d.counit()};
    const auto all = solve_constrained_all(Q, {1, d.dim()}, std::span(&counit, 1));
    REQUIRE(all.particular);
    CHECK(all.homogeneous.empty());
    CHECK(*all.particular == e.matrix());
  }
}

TEST_CASE("group-like coalgebras") {
  CHECK(gl({"a"}).same_structure(trivial_coalgebra(Q)));
  CHECK_FALSE(gl({"a"}) == trivial_coalgebra(Q));
  const Coalgebra ab = gl({"a", "b"});
  CHECK(ab.is_grouplike());
  CHECK(ab.delta().column(0) == Matrix::unit(Q, 4, 0));
  CHECK(ab.delta().column(1) == Matrix::unit(Q, 4, 3));
  CHECK(is_cosemisimple(gl({"a", "b", "c"})));
  CHECK(is_cosemisimple(grouplike_coalgebra(Field::prime(2), {"a", "b", "c"})));
  CHECK_THROWS_AS(gl({"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(grouplike_coalgebra(Q, {}), std::invalid_argument);
  CHECK_FALSE(trigonometric_coalgebra(Q).is_grouplike());
}

TEST_CASE("direct sums") {
  const Coalgebra k = trivial_coalgebra(Q);
  CHECK(direct_sum(k, k).same_structure(gl({"a", "b"})));
  const Coalgebra t = trigonometric_coalgebra(Q);
  const Coalgebra s = direct_sum(t, gl({"a", "b"}));
  CHECK(s.dim() == 4);
  CHECK(is_cosemisimple(s));
  CHECK_FALSE(is_cosemisimple(direct_sum(dual_numbers_coalgebra(Q), k)));
  CHECK_THROWS_AS(direct_sum(k, trivial_coalgebra(Field::prime(3))), FieldMismatch);
}

TEST_CASE("products and projections") {
  const Coalgebra c = trigonometric_coalgebra(Q);
  const Product ck = product(c, trivial_coalgebra(Q));
  CHECK(ck.coalgebra.same_structure(c));
  CHECK(ck.p1.matrix() == Matrix::identity(Q, 2));

  const Product xy = product(gl({"a", "b"}), gl({"x", "y", "z"}));
  CHECK(xy.coalgebra.dim() == 6);
  CHECK(xy.coalgebra.same_structure(gl({"1", "2", "3", "4", "5", "6"})));
  CHECK(xy.coalgebra.labels()[4] == "(b,y)");
  CHECK(xy.p1.label_map() == std::vector<std::size_t>{0, 0, 0, 1, 1, 1});
  CHECK(xy.p2.label_map() == std::vector<std::size_t>{0, 1, 2, 0, 1, 2});
  CHECK(is_cosemisimple(xy.coalgebra));
  CHECK(is_cosemisimple(product(c, c).coalgebra));
  CHECK_FALSE(is_cosemisimple(product(dual_numbers_coalgebra(Q), gl({"a"})).coalgebra));
}

TEST_CASE("pairing") {
  const Coalgebra k = trivial_coalgebra(Q);
  const Product kk = product(k, k);
  CHECK(pairing(CoalgebraMorphism::identity(k), CoalgebraMorphism::identity(k), kk).matrix() ==
        Matrix::identity(Q, 1));

  const Coalgebra ab = gl({"a", "b"});
  const Product sq = product(ab, ab);
  const CoalgebraMorphism diag = pairing(CoalgebraMorphism::identity(ab), CoalgebraMorphism::identity(ab), sq);
  CHECK(diag.label_map() == std::vector<std::size_t>{0, 3});

  const Coalgebra t = trigonometric_coalgebra(Q);
  const Product pt = product(t, ab);
  CHECK(pairing(pt.p1, pt.p2, pt).matrix() == Matrix::identity(Q, 4));

  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Coalgebra d = random_grouplike(rng, Q, 3);
    const Coalgebra x = random_grouplike(rng, Q, 3, "x"), y = random_constructed_coalgebra(rng, Q, 3);
    const Product p = product(x, y);
    const CoalgebraMorphism f = random_grouplike_morphism(rng, d, x);
    const CoalgebraMorphism g = y.is_grouplike() ? random_grouplike_morphism(rng, d, y)
                                                 : CoalgebraMorphism::to_trivial(d);
    if (!(g.target() == y)) continue;
    const CoalgebraMorphism h = pairing(f, g, p);
    CHECK(p.p1.after(h) == f);
    CHECK(p.p2.after(h) == g);
    CHECK(pairing_is_unique(f, g, p));
  }
  CHECK(pairing_is_unique(pt.p1, pt.p2, pt));
}

TEST_CASE("largest subcoalgebra") {
  const Coalgebra t = trigonometric_coalgebra(Q);
  const auto whole = largest_subcoalgebra_in(t, Subspace::whole(Q, 2));
  CHECK(whole.coalgebra == t);
  CHECK(whole.inclusion.matrix() == Matrix::identity(Q, 2));

  const Coalgebra ab = gl({"a", "b"});
  const auto a = largest_subcoalgebra_in(ab, Subspace(Matrix(Q, {{1}, {0}})));
  CHECK(a.coalgebra == gl({"a"}));
  CHECK(a.coalgebra.labels() == std::vector<std::string>{"a"});

  const auto killed = largest_subcoalgebra_in(dual_numbers_coalgebra(Q), Subspace(Matrix(Q, {{0}, {1}})));
  CHECK(killed.coalgebra.dim() == 0);
  CHECK(killed.chain == std::vector<std::size_t>{1, 0});

  // Neither c nor s spans a subcoalgebra.
  CHECK(largest_subcoalgebra_in(t, Subspace(Matrix(Q, {{1}, {0}}))).coalgebra.dim() == 0);

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Coalgebra c = random_constructed_coalgebra(rng, Q, 6);
    Matrix span(Q, c.dim(), 2);
    for (std::size_t i = 0; i < c.dim(); ++i)
      for (std::size_t j = 0; j < 2; ++j) span.set(i, j, rng.between(-1, 1));
    const Subspace w = image(span);
    const auto sub = largest_subcoalgebra_in(c, w);
    CHECK(w.contains(sub.inclusion.matrix()));
    for (std::size_t s = 1; s < sub.chain.size(); ++s) CHECK(sub.chain[s] < sub.chain[s - 1]);
    CHECK(sub.chain.size() <= c.dim() + 1);
  }
}

TEST_CASE("equalizers") {
  const Coalgebra xy = gl({"x", "y"}), ab = gl({"a", "b"});
  const auto f = grouplike_morphism(xy, ab, {0, 1}), g = grouplike_morphism(xy, ab, {0, 0});
  const auto same = equalizer(f, f);
  CHECK(same.coalgebra == xy);
  const auto eq = equalizer(f, g);
  CHECK(eq.coalgebra.labels() == std::vector<std::string>{"x"});
  CHECK(f.after(eq.inclusion) == g.after(eq.inclusion));
  CHECK_THROWS_AS(equalizer(f, CoalgebraMorphism::identity(xy)), BaseMismatch);

  // Coreflexive pairs <id,a>, <id,b> : X -> X x Z with common retraction p1:
  // the equalizer is all of ker(f - g), here the span of {x : a(x) = b(x)}.
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Coalgebra x = random_grouplike(rng, Q, 4, "x"), z = random_grouplike(rng, Q, 3, "z");
    const Product p = product(x, z);
    const auto a = random_grouplike_morphism(rng, x, z), b = random_grouplike_morphism(rng, x, z);
    const auto id = CoalgebraMorphism::identity(x);
    const auto fa = pairing(id, a, p), fb = pairing(id, b, p);
    REQUIRE(p.p1.after(fa) == id);
    REQUIRE(p.p1.after(fb) == id);
    const auto e = equalizer(fa, fb);
    CHECK(Subspace(e.inclusion.matrix()) == kernel(fa.matrix() - fb.matrix()));
    std::size_t agree = 0;
    for (std::size_t i = 0; i < x.dim(); ++i) agree += (*a.label_map())[i] == (*b.label_map())[i];
    CHECK(e.coalgebra.dim() == agree);
  }

  const Coalgebra t = trigonometric_coalgebra(Q);
  const auto flip = CoalgebraMorphism(t, t, Matrix(Q, {{1, 0}, {0, -1}}));
  const Product tt = product(t, t);
  const auto id = CoalgebraMorphism::identity(t);
  const auto e = equalizer(pairing(id, id, tt), pairing(id, flip, tt));
  CHECK(Subspace(e.inclusion.matrix()) ==
        kernel(pairing(id, id, tt).matrix() - pairing(id, flip, tt).matrix()));
}

TEST_CASE("pullbacks") {
  const Coalgebra k = trivial_coalgebra(Q);
  const Coalgebra d1 = trigonometric_coalgebra(Q), d2 = gl({"p", "q"});
  const Pullback overk = pullback(CoalgebraMorphism::to_trivial(d1), CoalgebraMorphism::to_trivial(d2));
  CHECK(overk.coalgebra.same_structure(product(d1, d2).coalgebra));

  const Coalgebra c = gl({"a", "b"});
  const auto phi = grouplike_morphism(d2, c, {1, 1});
  const Pullback along_id = pullback(CoalgebraMorphism::identity(c), phi);
  CHECK(along_id.coalgebra.dim() == d2.dim());
  CHECK(inverse(along_id.v.matrix()).has_value());

  // Against the set-level fiber product, computed here directly.
  Rng rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    const Coalgebra base = random_grouplike(rng, Q, 3, "c");
    const Coalgebra x = random_grouplike(rng, Q, 4, "x"), y = random_grouplike(rng, Q, 4, "y");
    const auto f = random_grouplike_morphism(rng, x, base), g = random_grouplike_morphism(rng, y, base);
    const Pullback pb = pullback(f, g);
    CHECK(f.after(pb.u) == g.after(pb.v));
    std::set<std::string> expected;
    for (std::size_t i = 0; i < x.dim(); ++i)
      for (std::size_t j = 0; j < y.dim(); ++j)
        if ((*f.label_map())[i] == (*g.label_map())[j])
          expected.insert("(" + x.labels()[i] + "," + y.labels()[j] + ")");
    CHECK(pb.coalgebra.is_grouplike());
    CHECK(std::set<std::string>(pb.coalgebra.labels().begin(), pb.coalgebra.labels().end()) == expected);
  }
  CHECK_THROWS_AS(pullback(phi, CoalgebraMorphism::identity(d2)), BaseMismatch);
}

TEST_CASE("cosemisimplicity decision") {
  CHECK_FALSE(is_cosemisimple(dual_numbers_coalgebra(Q)));
  CHECK_FALSE(is_cosemisimple(dual_numbers_coalgebra(Field::prime(5))));
  CHECK(is_cosemisimple(trigonometric_coalgebra(Q)));
  // The dual algebra k[t]/(t^2 + 1) is a field over F_3, split over F_5, and
  // k[t]/(t + 1)^2 over F_2.
  CHECK(is_cosemisimple(trigonometric_coalgebra(Field::prime(3))));
  CHECK(is_cosemisimple(trigonometric_coalgebra(Field::prime(5))));
  CHECK_FALSE(is_cosemisimple(trigonometric_coalgebra(Field::prime(2))));
  // Group algebra duals: the trace form of k^n is the identity, also over F_p.
  CHECK(is_cosemisimple(product(gl({"a", "b"}), gl({"x", "y"})).coalgebra));
  CHECK(is_cosemisimple(product(grouplike_coalgebra(Field::prime(2147483647), {"a", "b"}),
                                grouplike_coalgebra(Field::prime(2147483647), {"x"}))
                            .coalgebra));
}

TEST_CASE("axiom violations are named") {
  Rng rng(13);
  std::map<std::string, int> seen;
  for (const auto& bad : corrupted_structures(rng, Q, 40)) {
    try {
      Coalgebra c(bad.delta, bad.counit);
      FAIL("accepted a corrupted structure");
    } catch (const AxiomViolation& e) {
      CHECK(e.axiom() == bad.broken_axiom);
      ++seen[e.axiom()];
    }
  }
  CHECK(seen.size() == 3);

  const Coalgebra ab = gl({"a", "b"});
  CHECK_THROWS_AS(CoalgebraMorphism(ab, ab, Matrix(Q, {{1, 0}, {1, 0}})), AxiomViolation);
  try {
    CoalgebraMorphism(ab, ab, Matrix(Q, {{2, 0}, {0, 0}}));
  } catch (const AxiomViolation& e) {
    CHECK(e.axiom() == "comultiplication");
    CHECK(e.basis_index() == 0);
  }
}

TEST_CASE("constructed coalgebras satisfy the axioms over several fields") {
  Rng rng(17);
  for (const Field f : {Q, Field::prime(2), Field::prime(7)}) {
    for (int t = 0; t < 20; ++t) {
      const Coalgebra c = random_constructed_coalgebra(rng, f, 8);
      CHECK_FALSE(coalgebra_axiom_failure(c.delta(), c.counit()));
      CHECK(c.dim() <= 8);
      CHECK(is_cosemisimple(c));
    }
  }
}
