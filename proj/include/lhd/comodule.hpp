#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lhd/coalgebra.hpp"
#include "lhd/report.hpp"

namespace lhd {

/// A finite-dimensional right comodule: coaction is (m n) x m with column i
/// the image of e_i in V (x) C.
class Comodule {
 public:
  /// Checks the counit and coassociativity laws; throws AxiomViolation.
  Comodule(Coalgebra base, Matrix coaction);

  const Coalgebra& base() const noexcept { return base_; }
  const Field& field() const noexcept { return base_.field(); }
  std::size_t dim() const noexcept { return coaction_.cols(); }
  const Matrix& coaction() const noexcept { return coaction_; }

  /// On-the-nose equality; isomorphism is find_isomorphism.
  bool operator==(const Comodule& o) const { return base_ == o.base_ && coaction_ == o.coaction_; }

 private:
  Coalgebra base_;
  Matrix coaction_;
};

std::optional<AxiomFailure> comodule_axiom_failure(const Coalgebra& base, const Matrix& coaction);

class ComoduleMorphism {
 public:
  /// Throws AxiomViolation ("colinearity") unless (f (x) id) rho_V = rho_W f.
  ComoduleMorphism(Comodule source, Comodule target, Matrix matrix);

  static ComoduleMorphism identity(const Comodule& v);

  const Comodule& source() const noexcept { return source_; }
  const Comodule& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// this after g.
  ComoduleMorphism after(const ComoduleMorphism& g) const;

  bool operator==(const ComoduleMorphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
  }

 private:
  Comodule source_;
  Comodule target_;
  Matrix matrix_;
};

std::optional<AxiomFailure> comodule_morphism_failure(const Comodule& source, const Comodule& target,
                                                      const Matrix& f);
bool is_comodule_morphism(const Comodule& source, const Comodule& target, const Matrix& f);

Comodule regular_comodule(const Coalgebra& c);
/// k^d (x) C with coaction id (x) delta.
Comodule cofree_comodule(const Coalgebra& c, std::size_t d);
Comodule zero_comodule(const Coalgebra& c);
/// Over a group-like base: label x carries dims[x] copies of the comodule
/// e -> e (x) x, in label order.
Comodule graded_comodule(const Coalgebra& c, const std::vector<std::size_t>& dims);
Comodule direct_sum(const Comodule& v, const Comodule& w);

/// Basis of Hom^C(V, W) as comodule morphisms.
std::vector<ComoduleMorphism> hom_space(const Comodule& v, const Comodule& w);

/// An invertible comodule morphism v -> w, searched for among seeded random
/// combinations of a basis of Hom^C(v, w). A result is always a verified
/// isomorphism; nullopt means none was found.
std::optional<ComoduleMorphism> find_isomorphism(const Comodule& v, const Comodule& w, std::uint64_t seed = 1);

struct Cotensor {
  Comodule comodule;
  /// Inclusion of V (x)^C W into V (x) W.
  Matrix embedding;
};
/// The kernel of rho_V (x) id_W - id_V (x) tau rho_W, with the coaction
/// obtained by restricting id_V (x) rho_W.
Cotensor cotensor(const Comodule& v, const Comodule& w);

/// f (x)^C g between cotensor products, as the restriction of f (x) g.
ComoduleMorphism cotensor_map(const ComoduleMorphism& f, const ComoduleMorphism& g);

/// U (x)^C (V (x)^C W) -> (U (x)^C V) (x)^C W.
ComoduleMorphism associator(const Comodule& u, const Comodule& v, const Comodule& w);
/// C (x)^C X -> X, induced by eps (x) id.
ComoduleMorphism left_unitor(const Comodule& x);
/// X (x)^C C -> X, induced by id (x) eps.
ComoduleMorphism right_unitor(const Comodule& x);
/// U (x)^C V -> V (x)^C U, induced by the flip.
ComoduleMorphism braiding(const Comodule& u, const Comodule& v);

struct StructuralIsos {
  ComoduleMorphism associator;
  ComoduleMorphism left_unitor;
  ComoduleMorphism right_unitor;
  ComoduleMorphism braiding;
};
/// associator(u,v,w), unitors of u, braiding(u,v).
StructuralIsos structural_isos(const Comodule& u, const Comodule& v, const Comodule& w);

/// Pentagon on (a,b,c,d); triangle, both symmetry laws and the hexagon on
/// (a,b,c); every equation is an exact matrix identity.
CheckReport pentagon_check(const Comodule& a, const Comodule& b, const Comodule& c, const Comodule& d);
CheckReport triangle_check(const Comodule& x, const Comodule& y);
CheckReport symmetry_check(const Comodule& x, const Comodule& y);
CheckReport hexagon_check(const Comodule& a, const Comodule& b, const Comodule& c);
/// All of the above on (u, v, w) with pentagon on (u, v, w, u), plus
/// invertibility of every structural map.
CheckReport coherence_check(const Comodule& u, const Comodule& v, const Comodule& w);

/// The right adjoint hom^C(V, -) over a group-like base, as graded pieces
/// Hom(V_x, W_x).
struct InternalHom {
  Comodule v, w;
  Comodule hom;
  /// hom (x)^C V with its embedding, the domain of evaluation.
  Cotensor with_v;
  ComoduleMorphism evaluation;
  /// Bookkeeping for currying: per label, bases of V_x and W_x and the
  /// offset of Hom(V_x, W_x) inside hom.
  std::vector<Matrix> v_basis, w_basis;
  std::vector<std::size_t> offset;
};
/// Throws UnsupportedBase unless the base is group-like.
InternalHom internal_hom(const Comodule& v, const Comodule& w);
/// Z -> hom(V, W) for f : Z (x)^C V -> W.
ComoduleMorphism curry(const InternalHom& h, const Comodule& z, const ComoduleMorphism& f);
/// ev o (g (x) id_V) : Z (x)^C V -> W.
ComoduleMorphism uncurry(const InternalHom& h, const ComoduleMorphism& g);

/// Whether rho_V : V -> cofree(dim V) splits as a comodule map; V embeds in
/// an injective comodule through rho_V, so this decides injectivity.
bool is_injective(const Comodule& v);
/// The splitting itself, when it exists.
std::optional<ComoduleMorphism> injective_splitting(const Comodule& v);
/// Injective and coflat coincide for comodules.
bool is_coflat(const Comodule& v);

/// The component projectors P_x = (id (x) e_x^*) rho over a group-like base.
std::vector<Matrix> grading_projectors(const Comodule& v);

}  // namespace lhd
