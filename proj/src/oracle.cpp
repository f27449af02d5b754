#include "lhd/oracle.hpp"

#include <stdexcept>

#include "lhd/errors.hpp"
#include "lhd/linalg.hpp"

namespace lhd::oracle {

namespace {

void same_labels(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  if (v.labels != w.labels) throw BaseMismatch("graded spaces over different label sets");
}

void matches(const std::vector<std::string>& labels, const GradedVectorSpace& v) {
  if (labels != v.labels) throw BaseMismatch("set map does not match the grading");
}

}  // namespace

std::size_t GradedVectorSpace::total() const {
  std::size_t s = 0;
  for (auto d : dims) s += d;
  return s;
}

void SetMap::validate() const {
  if (assignment.size() != source.size()) throw std::invalid_argument("set map must assign every source label");
  for (auto a : assignment)
    if (a >= target.size()) throw std::invalid_argument("set map assigns outside its target");
}

SetMap to_set_map(const CoalgebraMorphism& f) {
  if (!f.source().is_grouplike() || !f.target().is_grouplike())
    throw UnsupportedBase("set maps exist only between group-like coalgebras");
  SetMap m{f.source().labels(), f.target().labels(), {}};
  const Matrix& a = f.matrix();
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (sgn(a(i, j)) != 0) m.assignment.push_back(i);
  m.validate();
  return m;
}

GradedVectorSpace to_graded(const Comodule& v) {
  const Coalgebra& c = v.base();
  if (!c.is_grouplike()) throw UnsupportedBase("only group-like bases are graded");
  const std::size_t n = c.dim(), m = v.dim();
  GradedVectorSpace g{c.labels(), std::vector<std::size_t>(n, 0)};
  for (std::size_t x = 0; x < n; ++x) {
    // rho(v) - v (x) x, written out entry by entry.
    Matrix eq(v.field(), m * n, m);
    for (std::size_t r = 0; r < m * n; ++r)
      for (std::size_t j = 0; j < m; ++j) {
        mpq_class e = v.coaction()(r, j);
        if (r % n == x && r / n == j) e -= 1;
        eq.set(r, j, e);
      }
    g.dims[x] = kernel(eq).dim();
  }
  if (g.total() != m) throw std::logic_error("coaction is not diagonal over the labels");
  return g;
}

Comodule from_graded(const Coalgebra& c, const GradedVectorSpace& g) {
  if (g.labels != c.labels()) throw BaseMismatch("grading does not match the coalgebra's labels");
  const std::size_t n = c.dim(), m = g.total();
  Matrix rho(c.field(), m * n, m);
  std::size_t j = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t k = 0; k < g.dims[x]; ++k, ++j) rho.set(j * n + x, j, 1);
  return Comodule(c, std::move(rho));
}

GradedVectorSpace graded_cotensor(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  same_labels(v, w);
  GradedVectorSpace out{v.labels, {}};
  for (std::size_t x = 0; x < v.dims.size(); ++x) out.dims.push_back(v.dims[x] * w.dims[x]);
  return out;
}

GradedVectorSpace graded_hom(const GradedVectorSpace& v, const GradedVectorSpace& w) { return graded_cotensor(v, w); }

std::size_t hom_dimension(const GradedVectorSpace& v, const GradedVectorSpace& w) {
  return graded_cotensor(v, w).total();
}

GradedVectorSpace graded_pullback(const SetMap& f, const GradedVectorSpace& w) {
  f.validate();
  matches(f.target, w);
  GradedVectorSpace out{f.source, {}};
  for (auto y : f.assignment) out.dims.push_back(w.dims[y]);
  return out;
}

GradedVectorSpace graded_sigma(const SetMap& f, const GradedVectorSpace& v) {
  f.validate();
  matches(f.source, v);
  GradedVectorSpace out{f.target, std::vector<std::size_t>(f.target.size(), 0)};
  for (std::size_t x = 0; x < f.source.size(); ++x) out.dims[f.assignment[x]] += v.dims[x];
  return out;
}

GradedVectorSpace graded_forall(const SetMap& f, const GradedVectorSpace& v) {
  // Finite products of vector spaces are direct sums, so only the name differs.
  return graded_sigma(f, v);
}

FibreProduct set_fiber_product(const SetMap& f, const SetMap& g) {
  f.validate();
  g.validate();
  if (f.target != g.target) throw BaseMismatch("fibre product of maps with different targets");
  FibreProduct out{{}, {{}, f.source, {}}, {{}, g.source, {}}};
  for (std::size_t a = 0; a < f.source.size(); ++a)
    for (std::size_t b = 0; b < g.source.size(); ++b)
      if (f.assignment[a] == g.assignment[b]) {
        out.labels.push_back("(" + f.source[a] + "," + g.source[b] + ")");
        out.p1.assignment.push_back(a);
        out.p2.assignment.push_back(b);
      }
  out.p1.source = out.labels;
  out.p2.source = out.labels;
  return out;
}

std::pair<GradedVectorSpace, GradedVectorSpace> graded_beck_chevalley(const SetMap& f, const SetMap& g,
                                                                      const GradedVectorSpace& v) {
  const FibreProduct p = set_fiber_product(f, g);
  return {graded_pullback(f, graded_sigma(g, v)), graded_sigma(p.p1, graded_pullback(p.p2, v))};
}

}  // namespace lhd::oracle
