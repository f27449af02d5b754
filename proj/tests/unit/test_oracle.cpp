#include <algorithm>

#include "doctest.h"
#include "lhd/errors.hpp"
#include "lhd/indexed.hpp"
#include "lhd/instances.hpp"
#include "lhd/oracle.hpp"

using namespace lhd;
using oracle::GradedVectorSpace;
using oracle::SetMap;

namespace {

const Field Q = Field::rationals();

GradedVectorSpace gv(std::vector<std::string> ls, std::vector<std::size_t> ds) { return {std::move(ls), std::move(ds)}; }

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("to_graded on standard comodules") {
  const Coalgebra ab = grouplike_coalgebra(Q, {"a", "b"});
  CHECK(oracle::to_graded(regular_comodule(ab)).dims == std::vector<std::size_t>{1, 1});
  CHECK(oracle::to_graded(cofree_comodule(ab, 2)).dims == std::vector<std::size_t>{2, 2});
  CHECK(oracle::to_graded(zero_comodule(ab)).dims == std::vector<std::size_t>{0, 0});
  CHECK_THROWS_AS(oracle::to_graded(regular_comodule(trigonometric_coalgebra(Q))), UnsupportedBase);

  // A hand-conjugated coaction: basis e1 + e2 and e2 with e1 at a, e2 at b.
  // rho sends u = e1+e2 to e1(x)a + e2(x)b = u(x)a + w(x)(b - a), w -> w(x)b.
  Matrix rho(Q, 4, 2);
  rho.set(0, 0, 1);
  rho.set(2, 0, -1);
  rho.set(3, 0, 1);
  rho.set(3, 1, 1);
  CHECK(oracle::to_graded(Comodule(ab, rho)).dims == std::vector<std::size_t>{1, 1});
}

TEST_CASE("graded arithmetic") {
  const auto v = gv({"a", "b"}, {1, 2}), w = gv({"a", "b"}, {3, 1});
  const auto c = oracle::graded_cotensor(v, w);
  CHECK(c.dims == std::vector<std::size_t>{3, 2});
  CHECK(c.total() == 5);
  CHECK(oracle::graded_cotensor(v, gv({"a", "b"}, {1, 1})) == v);
  CHECK_THROWS_AS(oracle::graded_cotensor(v, gv({"a", "c"}, {1, 1})), BaseMismatch);

  const SetMap f{{"x", "y", "z"}, {"a", "b"}, {0, 0, 1}};
  CHECK(oracle::graded_sigma(f, gv({"x", "y", "z"}, {1, 1, 1})).dims == std::vector<std::size_t>{2, 1});
  CHECK(oracle::graded_forall(f, gv({"x", "y", "z"}, {1, 2, 3})).dims == std::vector<std::size_t>{3, 3});
  CHECK(oracle::graded_pullback(f, gv({"a", "b"}, {2, 1})).dims == std::vector<std::size_t>{2, 2, 1});
  CHECK_THROWS_AS(oracle::graded_pullback(f, gv({"x", "y", "z"}, {1, 1, 1})), BaseMismatch);

  const SetMap id{{"a", "b"}, {"a", "b"}, {0, 1}};
  CHECK(oracle::graded_sigma(id, v) == v);
  CHECK(oracle::graded_forall(id, v) == v);
  CHECK(oracle::graded_pullback(id, v) == v);

  CHECK_THROWS_AS((SetMap{{"x"}, {"a"}, {1}}.validate()), std::invalid_argument);
}

TEST_CASE("adjunction tables by counting") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + rng.below(4), m = 1 + rng.below(3);
    SetMap f{labels(n, "x"), labels(m, "y"), {}};
    for (std::size_t i = 0; i < n; ++i) f.assignment.push_back(rng.below(m));
    GradedVectorSpace v{f.source, {}}, w{f.target, {}};
    for (std::size_t i = 0; i < n; ++i) v.dims.push_back(rng.below(3));
    for (std::size_t i = 0; i < m; ++i) w.dims.push_back(rng.below(3));
    // Sum over x of v_x w_f(x), written out without the functors.
    std::size_t direct = 0;
    for (std::size_t i = 0; i < n; ++i) direct += v.dims[i] * w.dims[f.assignment[i]];
    CHECK(oracle::hom_dimension(oracle::graded_sigma(f, v), w) == direct);
    CHECK(oracle::hom_dimension(v, oracle::graded_pullback(f, w)) == direct);
    CHECK(oracle::hom_dimension(oracle::graded_pullback(f, w), v) == direct);
    CHECK(oracle::hom_dimension(w, oracle::graded_forall(f, v)) == direct);
  }
}

TEST_CASE("set fibre products") {
  const SetMap f{{"x", "y", "z"}, {"a", "b"}, {0, 0, 1}};
  const SetMap id{{"a", "b"}, {"a", "b"}, {0, 1}};
  const auto p = oracle::set_fiber_product(f, id);
  CHECK(p.labels == std::vector<std::string>{"(x,a)", "(y,a)", "(z,b)"});
  CHECK(p.p1.assignment == std::vector<std::size_t>{0, 1, 2});

  const SetMap c1{{"x", "y"}, {"*"}, {0, 0}}, c2{{"u", "v", "w"}, {"*"}, {0, 0, 0}};
  CHECK(oracle::set_fiber_product(c1, c2).labels.size() == 6);
  CHECK_THROWS_AS(oracle::set_fiber_product(f, c1), BaseMismatch);
}

TEST_CASE("agreement with the matrix implementation") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const Coalgebra c = random_grouplike(rng, Q, 3, "c");
    const Coalgebra d = random_grouplike(rng, Q, 3, "d");
    const CoalgebraMorphism phi = random_grouplike_morphism(rng, d, c);
    const SetMap f = oracle::to_set_map(phi);
    const Comodule v = random_comodule(rng, d, 4), w = random_comodule(rng, c, 4);
    const auto gv_ = oracle::to_graded(v), gw = oracle::to_graded(w);
    CHECK(gv_.total() == v.dim());

    CHECK(oracle::to_graded(sigma(phi, v)) == oracle::graded_sigma(f, gv_));
    CHECK(oracle::to_graded(pullback_functor(phi, w).comodule) == oracle::graded_pullback(f, gw));
    CHECK(oracle::to_graded(forall(phi, v)) == oracle::graded_forall(f, gv_));

    const Comodule w2 = random_comodule(rng, c, 3);
    const auto gw2 = oracle::to_graded(w2);
    CHECK(oracle::to_graded(cotensor(w, w2).comodule) == oracle::graded_cotensor(gw, gw2));
    CHECK(oracle::to_graded(internal_hom(w, w2).hom) == oracle::graded_hom(gw, gw2));
    CHECK(hom_space(w, w2).size() == oracle::hom_dimension(gw, gw2));

    // Round trip, witnessed by an isomorphism.
    const Comodule back = oracle::from_graded(c, gw);
    CHECK(oracle::to_graded(back) == gw);
    CHECK(find_isomorphism(w, back).has_value());
  }
}

TEST_CASE("fibre products against coalgebra pullbacks") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const Coalgebra c = random_grouplike(rng, Q, 3, "c");
    const Coalgebra a = random_grouplike(rng, Q, 3, "a");
    const Coalgebra b = random_grouplike(rng, Q, 3, "b");
    const CoalgebraMorphism f = random_grouplike_morphism(rng, a, c), g = random_grouplike_morphism(rng, b, c);
    const Pullback pb = pullback(f, g);
    const auto fp = oracle::set_fiber_product(oracle::to_set_map(f), oracle::to_set_map(g));
    REQUIRE(pb.coalgebra.dim() == fp.labels.size());
    CHECK(pb.coalgebra.is_grouplike());
    // Each pullback basis vector sits over one (a, b) pair; compare those pairs.
    const SetMap u = oracle::to_set_map(pb.u), v = oracle::to_set_map(pb.v);
    std::vector<std::string> pairs;
    for (std::size_t i = 0; i < u.source.size(); ++i)
      pairs.push_back("(" + a.labels()[u.assignment[i]] + "," + b.labels()[v.assignment[i]] + ")");
    CHECK(sorted(pairs) == sorted(fp.labels));
  }
}

TEST_CASE("Beck-Chevalley in the oracle and the matrix model") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Coalgebra c = random_grouplike(rng, Q, 3, "c");
    const Coalgebra d1 = random_grouplike(rng, Q, 3, "p");
    const Coalgebra d2 = random_grouplike(rng, Q, 3, "q");
    const CoalgebraMorphism beta = random_grouplike_morphism(rng, d1, c);
    const CoalgebraMorphism alpha = random_grouplike_morphism(rng, d2, c);
    const Comodule v = random_comodule(rng, d2, 4);
    const auto [lhs, rhs] =
        oracle::graded_beck_chevalley(oracle::to_set_map(beta), oracle::to_set_map(alpha), oracle::to_graded(v));
    CHECK(lhs == rhs);
    const PullbackSquare sq = pullback_square(beta, alpha);
    const bool matrix_pass = beck_chevalley_check(sq, v).passed();
    CHECK(matrix_pass == (lhs == rhs));
    CHECK(oracle::to_graded(pullback_functor(beta, sigma(alpha, v)).comodule).dims == lhs.dims);
  }
}
