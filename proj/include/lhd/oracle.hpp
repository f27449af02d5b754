#pragma once

// Comodules over group-like coalgebras are label-graded vector spaces, and
// every functor here has a counting formula. Nothing in this module calls the
// comodule or indexed code, so agreement with them is evidence.

#include <cstddef>
#include <string>
#include <vector>

#include "lhd/coalgebra.hpp"
#include "lhd/comodule.hpp"

namespace lhd::oracle {

struct GradedVectorSpace {
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;

  std::size_t total() const;
  bool operator==(const GradedVectorSpace&) const = default;
};

/// A total function between label sets.
struct SetMap {
  std::vector<std::string> source;
  std::vector<std::string> target;
  std::vector<std::size_t> assignment;

  /// Throws std::invalid_argument unless every assignment is in range.
  void validate() const;
};

/// The label map of a morphism between group-like coalgebras.
SetMap to_set_map(const CoalgebraMorphism& f);

/// V_x = {v : rho(v) = v (x) x}. UnsupportedBase off group-like bases; an
/// internal error if the components do not fill V.
GradedVectorSpace to_graded(const Comodule& v);
/// The comodule with dims[x] copies of e -> e (x) x, label by label.
Comodule from_graded(const Coalgebra& c, const GradedVectorSpace& g);

GradedVectorSpace graded_cotensor(const GradedVectorSpace& v, const GradedVectorSpace& w);
/// Internal hom: Hom(V_x, W_x) in each component.
GradedVectorSpace graded_hom(const GradedVectorSpace& v, const GradedVectorSpace& w);
/// dim Hom^C(V, W).
std::size_t hom_dimension(const GradedVectorSpace& v, const GradedVectorSpace& w);

GradedVectorSpace graded_pullback(const SetMap& f, const GradedVectorSpace& w);
GradedVectorSpace graded_sigma(const SetMap& f, const GradedVectorSpace& v);
GradedVectorSpace graded_forall(const SetMap& f, const GradedVectorSpace& v);

struct FibreProduct {
  std::vector<std::string> labels;
  SetMap p1;
  SetMap p2;
};
/// {(a, b) : f(a) = g(b)} in lexicographic order, labelled "(a,b)".
FibreProduct set_fiber_product(const SetMap& f, const SetMap& g);

/// Both sides of the Beck-Chevalley square for f : A -> C, g : B -> C and V
/// over B: f^* Sigma_g V and Sigma_p1 p2^* V, over A.
std::pair<GradedVectorSpace, GradedVectorSpace> graded_beck_chevalley(const SetMap& f, const SetMap& g,
                                                                      const GradedVectorSpace& v);

}  // namespace lhd::oracle
