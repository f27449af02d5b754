#pragma once

#include <cstddef>
#include <vector>

#include "lhd/coalgebra.hpp"
#include "lhd/comodule.hpp"
#include "lhd/indexed.hpp"
#include "lhd/instances.hpp"
#include "lhd/report.hpp"

namespace lhd {

/// An object (phi) of Coalg C: a coalgebra morphism phi : D -> C.
class CoalgCObject {
 public:
  explicit CoalgCObject(CoalgebraMorphism phi) : phi_(std::move(phi)) {}

  const CoalgebraMorphism& structure() const noexcept { return phi_; }
  const Coalgebra& source() const noexcept { return phi_.source(); }
  const Coalgebra& base() const noexcept { return phi_.target(); }

 private:
  CoalgebraMorphism phi_;
};

/// (id_C), the terminal object.
CoalgCObject terminal_object(const Coalgebra& c);

/// U^C(phi) = (D, (id (x) phi) delta_D).
Comodule U_C(const CoalgCObject& obj);
/// A morphism f : (phi) -> (psi), i.e. psi f = phi, as a comodule morphism.
/// Throws BaseMismatch if the triangle does not commute.
ComoduleMorphism U_C(const CoalgCObject& from, const CoalgCObject& to, const CoalgebraMorphism& f);

struct CoalgCProduct {
  CoalgCObject object;
  CoalgebraMorphism pi1;
  CoalgebraMorphism pi2;
};
/// (phi1) x (phi2) from the pullback of phi1 and phi2.
CoalgCProduct coalgC_product(const CoalgCObject& o1, const CoalgCObject& o2);

/// (u (x) v) delta_D maps D onto U(o1) (x)^C U(o2), compatibly with the
/// coactions; also U(id_C) = C.
CheckReport strong_monoidality_check(const CoalgCObject& o1, const CoalgCObject& o2);

struct Reindexed {
  /// (x : X -> C')
  CoalgCObject object;
  /// x~ : X -> D
  CoalgebraMorphism to_source;
};
/// L_f(phi) for f : C' -> C: the pullback of phi along f.
Reindexed L_f(const CoalgebraMorphism& f, const CoalgCObject& obj);
/// L_f on a morphism g : (phi) -> (psi) of Coalg C, by the pullback property.
CoalgebraMorphism L_f(const CoalgebraMorphism& f, const CoalgCObject& from, const CoalgCObject& to,
                      const CoalgebraMorphism& g);

/// (L_f, K_f = f^*) as a morphism of LNL adjunctions on obj, for cosemisimple
/// C and C' (HypothesisViolated otherwise).
CheckReport lnl_morphism_check(const CoalgebraMorphism& f, const CoalgCObject& obj);

/// C^n with its coordinate projections, and I x C with pi_I.
struct BasePower {
  Coalgebra base;
  std::size_t n = 0;
  Coalgebra power;
  /// pi_i : C^n -> C, i < n.
  std::vector<CoalgebraMorphism> projections;
  /// I x C with p1 = pi_I and p2 the projection to the generator.
  Product with_generator;
};
/// C^0 = k, C^1 = C, C^n = C^(n-1) x C. Throws HypothesisViolated unless C is
/// cosemisimple.
BasePower base_power(const Coalgebra& c, std::size_t n);

/// Sigma along pi_I : I x C -> I.
Comodule exists_along_projection(const BasePower& i, const Comodule& v);
/// forall along pi_I; group-like C only.
Comodule forall_along_projection(const BasePower& i, const Comodule& v);

/// f x g : A x B -> A' x B'.
CoalgebraMorphism product_map(const CoalgebraMorphism& f, const CoalgebraMorphism& g);
/// delta_C : C -> C x C.
CoalgebraMorphism diagonal(const Coalgebra& c);
/// The flip A x B -> B x A.
CoalgebraMorphism symmetry(const Coalgebra& a, const Coalgebra& b);

/// exists -| pi_I^* -| forall on (v over I x C, w over I): the hom
/// bijections and triangle identities. Verdict unsupported when C is not
/// group-like and forall has no formula.
CheckReport hyperdoctrine_condition1_check(const BasePower& i, const Comodule& v, const Comodule& w);
/// For f : J -> I between powers of c and v over I x c: f^* forall_I v
/// against forall_J (f x id)^* v, and the exists square as a Beck-Chevalley
/// instance.
CheckReport hyperdoctrine_condition2_check(const Coalgebra& c, const CoalgebraMorphism& f, const Comodule& v);
/// Conditions (1) and (2) for the projections C x I -> I, on v moved to
/// C x I through the flip and w over I.
CheckReport hyperdoctrine_condition3_check(const Coalgebra& c, const CoalgebraMorphism& f, const Comodule& v,
                                           const Comodule& w);

/// A tuple of projections and (for group-like C) constants C^m -> C^n.
CoalgebraMorphism random_base_morphism(Rng& rng, const BasePower& from, const BasePower& to);
/// Condition (1) on every C^n with n <= max_n, conditions (2) and (3) on the
/// given number of random base morphisms between those powers.
CheckReport hyperdoctrine_check(const Coalgebra& c, std::size_t max_n, std::size_t morphisms, Rng& rng,
                                std::size_t max_dim);

}  // namespace lhd
