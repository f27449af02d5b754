#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lhd/linalg.hpp"

namespace lhd {

/// A finite-dimensional cocommutative coalgebra given by structure constants.
/// delta is n^2 x n (column i is the coproduct of e_i in the tensor basis) and
/// the counit is 1 x n. Copies share the underlying data.
class Coalgebra {
 public:
  /// Checks coassociativity, counit and cocommutativity; throws
  /// AxiomViolation naming the first failing law.
  Coalgebra(Matrix delta, Matrix counit, std::vector<std::string> labels = {});

  const Field& field() const noexcept { return data_->delta.field(); }
  std::size_t dim() const noexcept { return data_->counit.cols(); }
  const Matrix& delta() const noexcept { return data_->delta; }
  const Matrix& counit() const noexcept { return data_->counit; }
  /// One name per basis vector; defaults to e0, e1, ...
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  std::optional<std::size_t> label_index(const std::string& label) const;

  /// True if every basis vector is group-like (delta e = e (x) e, eps e = 1).
  bool is_grouplike() const noexcept { return data_->grouplike; }

  /// Same structure constants and labels.
  bool operator==(const Coalgebra& o) const;
  /// Same structure constants, whatever the labels.
  bool same_structure(const Coalgebra& o) const;

 private:
  struct Data {
    Matrix delta;
    Matrix counit;
    std::vector<std::string> labels;
    bool grouplike;
  };
  std::shared_ptr<const Data> data_;
};

/// The raw axiom checks, for callers that want a verdict instead of an
/// exception. Returns the violated axiom and basis index, if any.
struct AxiomFailure {
  std::string axiom;
  std::size_t basis_index;
};
std::optional<AxiomFailure> coalgebra_axiom_failure(const Matrix& delta, const Matrix& counit);

class CoalgebraMorphism {
 public:
  /// Throws AxiomViolation unless f preserves comultiplication and counit.
  CoalgebraMorphism(Coalgebra source, Coalgebra target, Matrix matrix);

  static CoalgebraMorphism identity(const Coalgebra& c);
  /// The counit as the unique morphism to the trivial coalgebra.
  static CoalgebraMorphism to_trivial(const Coalgebra& c);

  const Coalgebra& source() const noexcept { return source_; }
  const Coalgebra& target() const noexcept { return target_; }
  const Matrix& matrix() const noexcept { return matrix_; }

  /// this after g.
  CoalgebraMorphism after(const CoalgebraMorphism& g) const;

  /// For morphisms between group-like coalgebras that send basis vectors to
  /// basis vectors: the underlying map on label indices.
  std::optional<std::vector<std::size_t>> label_map() const;

  bool operator==(const CoalgebraMorphism& o) const {
    return source_ == o.source_ && target_ == o.target_ && matrix_ == o.matrix_;
  }

 private:
  Coalgebra source_;
  Coalgebra target_;
  Matrix matrix_;
};

std::optional<AxiomFailure> coalgebra_morphism_failure(const Coalgebra& source, const Coalgebra& target,
                                                       const Matrix& f);

Coalgebra trivial_coalgebra(Field field);
/// Throws std::invalid_argument on an empty or repeated label list.
Coalgebra grouplike_coalgebra(Field field, const std::vector<std::string>& labels);
/// The morphism of group-like coalgebras induced by a map of labels.
CoalgebraMorphism grouplike_morphism(const Coalgebra& source, const Coalgebra& target,
                                     const std::vector<std::size_t>& label_map);

Coalgebra direct_sum(const Coalgebra& c1, const Coalgebra& c2);

struct Product {
  Coalgebra coalgebra;
  CoalgebraMorphism p1;
  CoalgebraMorphism p2;
};
/// Underlying space c1 (x) c2, labels "(x,y)".
Product product(const Coalgebra& c1, const Coalgebra& c2);

/// <f,g> = (f (x) g) o delta_D into the product of the targets.
CoalgebraMorphism pairing(const CoalgebraMorphism& f, const CoalgebraMorphism& g, const Product& into);
/// Whether <f,g> is the only coalgebra morphism h with p1 h = f and p2 h = g.
/// Every such h satisfies the linear system p1 X = f, p2 X = g,
/// (id (x) p2) delta X = (X (x) g) delta_D; the check solves it and asks for a
/// single solution equal to <f,g>.
bool pairing_is_unique(const CoalgebraMorphism& f, const CoalgebraMorphism& g, const Product& into);

struct Subcoalgebra {
  Coalgebra coalgebra;
  CoalgebraMorphism inclusion;
  /// Dimensions of the refinement chain W_0 = w, W_1, ..., ending at the fixpoint.
  std::vector<std::size_t> chain;
};
Subcoalgebra largest_subcoalgebra_in(const Coalgebra& c, const Subspace& w);

/// Largest subcoalgebra of the common source inside ker(f - g).
Subcoalgebra equalizer(const CoalgebraMorphism& f, const CoalgebraMorphism& g);

struct Pullback {
  Coalgebra coalgebra;
  CoalgebraMorphism u;  // to the source of phi1
  CoalgebraMorphism v;  // to the source of phi2
};
Pullback pullback(const CoalgebraMorphism& phi1, const CoalgebraMorphism& phi2);

/// Whether the dual algebra is semisimple. Over Q: the trace form of the dual
/// algebra is nondegenerate. Over F_p: the Frobenius endomorphism x -> x^p of
/// the (commutative) dual algebra is injective, i.e. there are no nilpotents.
bool is_cosemisimple(const Coalgebra& c);

/// The unique coalgebra morphism h with m o h = f for m injective, if f
/// factors through m.
std::optional<CoalgebraMorphism> factor_through(const CoalgebraMorphism& m, const CoalgebraMorphism& f);

}  // namespace lhd
