#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lhd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes of matrices or subspaces do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// Two objects were expected to live over the same coalgebra.
class BaseMismatch : public Error {
 public:
  using Error::Error;
};

/// A structure failed one of its defining equations at construction.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::size_t basis_index, const std::string& what)
      : Error(what), axiom_(std::move(axiom)), basis_index_(basis_index) {}

  const std::string& axiom() const noexcept { return axiom_; }
  /// Column (basis vector) where the two sides of the axiom first differ.
  std::size_t basis_index() const noexcept { return basis_index_; }

 private:
  std::string axiom_;
  std::size_t basis_index_;
};

/// The operation only has a closed form for a restricted class of bases.
class UnsupportedBase : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace lhd
