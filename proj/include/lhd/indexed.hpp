#pragma once

#include <cstddef>
#include <vector>

#include "lhd/coalgebra.hpp"
#include "lhd/comodule.hpp"
#include "lhd/report.hpp"

namespace lhd {

/// Sigma_phi: corestriction of the coaction along phi. Same space, same maps.
Comodule sigma(const CoalgebraMorphism& phi, const Comodule& v);
ComoduleMorphism sigma(const CoalgebraMorphism& phi, const ComoduleMorphism& f);

/// U^C(phi): the source D of phi : D -> C as a C-comodule, (id (x) phi) delta.
Comodule underlying_comodule(const CoalgebraMorphism& phi);

struct PulledBack {
  Comodule comodule;
  /// Inclusion of phi^*(W) into W (x) D.
  Matrix embedding;
};
/// phi^*(W) for phi : D -> C: the span of w (x) d with
/// rho(w) (x) d = w (x) phi(d_1) (x) d_2, with coaction id (x) delta_D.
PulledBack pullback_functor(const CoalgebraMorphism& phi, const Comodule& w);
/// phi^*(f), the restriction of f (x) id_D.
ComoduleMorphism pullback_functor(const CoalgebraMorphism& phi, const ComoduleMorphism& f);

/// f : Sigma_phi V -> W gives V -> phi^*W, v -> f(v_0) (x) v_1.
ComoduleMorphism transpose_hat(const CoalgebraMorphism& phi, const Comodule& v, const ComoduleMorphism& f);
/// g : V -> phi^*W gives Sigma_phi V -> W, (id (x) eps_D) g.
ComoduleMorphism transpose_tilde(const CoalgebraMorphism& phi, const Comodule& w, const ComoduleMorphism& g);

struct AdjunctionCertificate {
  /// The two hom dimensions; for Sigma -| phi^* these are Hom^C(Sigma V, W)
  /// and Hom^D(V, phi^*W), for phi^* -| forall Hom(phi^*W, V) and Hom(W, forall V).
  std::size_t sigma_side = 0;
  std::size_t pullback_side = 0;
  /// The transposes in coordinates of the two hom_space bases.
  Matrix forward;
  Matrix backward;
  CheckReport report;
};
AdjunctionCertificate adjunction_certificate(const CoalgebraMorphism& phi, const Comodule& v, const Comodule& w);

/// Right adjoint of phi^* for group-like D and D'. The coflatness of
/// U^{D'}(phi) is checked first for any input (HypothesisViolated), then the
/// bases must be group-like (UnsupportedBase). Component x' is the direct
/// sum of the V_x over the fibre of x', fibre in label order.
Comodule forall(const CoalgebraMorphism& phi, const Comodule& v);

/// The counit phi^* forall_phi V -> V: on the summand V_y of the component
/// over phi(x) it is the identity when y = x and zero otherwise.
ComoduleMorphism forall_counit(const CoalgebraMorphism& phi, const Comodule& v);
/// h : W -> forall_phi V goes to counit o phi^*(h); the certificate checks
/// this is a bijection Hom(W, forall V) -> Hom(phi^*W, V).
AdjunctionCertificate forall_certificate(const CoalgebraMorphism& phi, const Comodule& w, const Comodule& v);

/// The triangle identities of Sigma_phi -| phi^*, with unit hat(id) at V and
/// counit tilde(id) at W.
CheckReport sigma_triangle_check(const CoalgebraMorphism& phi, const Comodule& v, const Comodule& w);

/// The h : W -> forall V with counit o phi^*(h) = g, for g : phi^*W -> V.
ComoduleMorphism forall_transpose(const CoalgebraMorphism& phi, const Comodule& w, const ComoduleMorphism& g);
/// W -> forall phi^* W, the transpose of the identity.
ComoduleMorphism forall_unit(const CoalgebraMorphism& phi, const Comodule& w);
/// forall on a morphism f : V -> V', the transpose of f o counit.
ComoduleMorphism forall(const CoalgebraMorphism& phi, const ComoduleMorphism& f);
/// The triangle identities of phi^* -| forall_phi at W and V.
CheckReport forall_triangle_check(const CoalgebraMorphism& phi, const Comodule& w, const Comodule& v);

/// delta : D -> D1, gamma : D -> D2, beta : D1 -> C, alpha : D2 -> C.
struct PullbackSquare {
  CoalgebraMorphism delta;
  CoalgebraMorphism gamma;
  CoalgebraMorphism beta;
  CoalgebraMorphism alpha;
};
/// The square on the computed pullback of (beta, alpha).
PullbackSquare pullback_square(const CoalgebraMorphism& beta, const CoalgebraMorphism& alpha);
/// Throws HypothesisViolated unless the square commutes and <delta, gamma>
/// identifies D with the pullback.
void validate_square(const PullbackSquare& sq);
/// The coalgebra map t : D' -> D from the computed pullback D' of (beta, alpha),
/// with <delta, gamma> t the inclusion of D' into D1 (x) D2.
CoalgebraMorphism mediating_map(const PullbackSquare& sq);

/// phi_V : beta^* Sigma_alpha V -> Sigma_delta gamma^* V and its inverse
/// psi_V(v (x) d) = v (x) delta(d), for V over D2.
struct BeckChevalleyMaps {
  ComoduleMorphism phi;
  ComoduleMorphism psi;
};
BeckChevalleyMaps beck_chevalley_maps(const PullbackSquare& sq, const Comodule& v);
CheckReport beck_chevalley_check(const PullbackSquare& sq, const Comodule& v);

/// alpha^* forall_beta V against forall_gamma delta^* V for V over D1, by an
/// isomorphism search. Group-like squares only.
CheckReport beck_for_forall_check(const PullbackSquare& sq, const Comodule& v);

/// Sigma_phi(V (x)^C phi^*W) against Sigma_phi V (x)^D W via the explicit maps.
CheckReport frobenius_check(const CoalgebraMorphism& phi, const Comodule& v, const Comodule& w);

/// Strong symmetric monoidal closedness of phi^* on (v, w) over D, for
/// phi : C -> D between cosemisimple coalgebras (HypothesisViolated otherwise).
/// Closedness is compared only when both bases are group-like.
CheckReport ssmc_check(const CoalgebraMorphism& phi, const Comodule& v, const Comodule& w);

/// Sigma_psi Sigma_phi = Sigma_{psi phi} exactly, and (psi phi)^* against
/// phi^* psi^* by an isomorphism search.
CheckReport functoriality_check(const CoalgebraMorphism& phi, const CoalgebraMorphism& psi, const Comodule& v,
                                const Comodule& w);

}  // namespace lhd
