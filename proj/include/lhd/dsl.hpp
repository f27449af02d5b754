#pragma once

// The .lhd definition language. One statement per line; a statement may run
// over several lines while a bracket is open. '#' starts a comment.
//
//   field Q | field Fp <p>
//   coalg C = grouplike {a, b}
//   coalg S = sum(C, D)        coalg P = product(C, D)
//   coalg R = raw dim=2 delta=[[...], ...] eps=[[1, 0]] [labels={g, x}]
//   morph f : C -> D { a -> x, b -> y }      morph f : C -> D { [[...]] }
//   comod V over C { dim 2; rho = [[...]] }  comod V over C { graded {a: 1} }
//   check <kind> <args...>

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lhd/coalgebra.hpp"
#include "lhd/comodule.hpp"
#include "lhd/errors.hpp"

namespace lhd::dsl {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Syntax errors, unresolved names, dimension mismatches and failed
/// constructions, all located in the source.
class ParseError : public Error {
 public:
  ParseError(Position at, const std::string& message);
  const Position& at() const noexcept { return at_; }
  /// The message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Position at_;
  std::string message_;
};

/// Row-major rational literal.
using Literal = std::vector<std::vector<mpq_class>>;

struct FieldDecl {
  /// 0 for Q.
  std::uint32_t prime = 0;
  bool operator==(const FieldDecl&) const = default;
};

struct CoalgDef {
  enum class Kind { grouplike, sum, product, raw };
  std::string name;
  Kind kind = Kind::grouplike;
  /// grouplike labels, or the optional raw labels.
  std::vector<std::string> labels;
  std::string left, right;
  std::size_t dim = 0;
  Literal delta, eps;
  bool operator==(const CoalgDef&) const = default;
};

struct MorphDef {
  std::string name, source, target;
  bool by_labels = false;
  Literal matrix;
  std::vector<std::pair<std::string, std::string>> label_map;
  bool operator==(const MorphDef&) const = default;
};

struct ComodDef {
  std::string name, base;
  bool graded = false;
  std::size_t dim = 0;
  Literal rho;
  std::vector<std::pair<std::string, std::size_t>> grades;
  bool operator==(const ComodDef&) const = default;
};

struct CheckDirective {
  std::string kind;
  std::vector<std::string> args;
  bool operator==(const CheckDirective&) const = default;
};

using Statement = std::variant<FieldDecl, CoalgDef, MorphDef, ComodDef, CheckDirective>;

enum class ArgType { coalgebra, morphism, comodule, any_definition, count };

struct CheckSignature {
  std::string kind;
  std::vector<ArgType> params;
  /// The first `required` params are mandatory, the rest optional.
  std::size_t required = 0;
};
/// Every check kind the language accepts, in a fixed order.
const std::vector<CheckSignature>& check_signatures();

struct Document {
  Field field = Field::rationals();
  std::vector<Statement> statements;
  /// Where each statement starts.
  std::vector<Position> positions;

  std::map<std::string, Coalgebra> coalgebras;
  std::map<std::string, CoalgebraMorphism> morphisms;
  std::map<std::string, Comodule> comodules;

  std::vector<CheckDirective> checks() const;

  /// Same statements; positions and built objects follow from them.
  bool operator==(const Document& o) const { return statements == o.statements; }
};

Document parse(const std::string& text);
/// Canonical text; parse(print(d)) == d.
std::string print(const Document& doc);

}  // namespace lhd::dsl
