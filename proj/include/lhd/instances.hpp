#pragma once

// Seeded generators for test and benchmark instances.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lhd/coalgebra.hpp"
#include "lhd/comodule.hpp"

namespace lhd {

/// Deterministic across platforms: only raw mt19937_64 draws reduced modulo
/// the range, never std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  long between(long lo, long hi) { return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
  bool coin() { return engine_() & 1; }

 private:
  std::mt19937_64 engine_;
};

/// Basis {c, s} with delta c = c(x)c - s(x)s, delta s = s(x)c + c(x)s. Cosemisimple
/// over Q without being group-like.
Coalgebra trigonometric_coalgebra(Field field);
/// Basis {g, x} with g group-like and x primitive; its dual algebra is
/// k[t]/(t^2), so it is not cosemisimple.
Coalgebra dual_numbers_coalgebra(Field field);

/// Labels a0, a1, ... (or with another prefix).
std::vector<std::string> labels(std::size_t n, const std::string& prefix = "a");

Coalgebra random_grouplike(Rng& rng, Field field, std::size_t max_labels, const std::string& prefix = "a");
/// A random group-like, direct-sum or product coalgebra of dimension at most max_dim.
Coalgebra random_constructed_coalgebra(Rng& rng, Field field, std::size_t max_dim);
CoalgebraMorphism random_grouplike_morphism(Rng& rng, const Coalgebra& source, const Coalgebra& target);

/// The one-dimensional comodule e -> e (x) b for a group-like basis vector b.
Comodule point_comodule(const Coalgebra& c, std::size_t b);
/// A direct sum of regular comodules and point comodules at group-like basis
/// vectors, of dimension at most max_dim, with its basis randomly changed.
Comodule random_comodule(Rng& rng, const Coalgebra& c, std::size_t max_dim);
/// rho' = (S^-1 (x) id) rho S for a random invertible S.
Comodule random_conjugate(Rng& rng, const Comodule& v);

/// A comultiplication/counit pair that breaks exactly one named axiom.
struct CorruptedStructure {
  Matrix delta;
  Matrix counit;
  std::string broken_axiom;
};
std::vector<CorruptedStructure> corrupted_structures(Rng& rng, Field field, std::size_t count);

}  // namespace lhd
