#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lhd/matrix.hpp"

namespace lhd {

enum class Verdict { pass, fail, unsupported };

std::string to_string(Verdict v);

/// Where a law check went wrong: the equation, the basis vector (column) at
/// which the two sides differ, and both sides evaluated on it.
struct Witness {
  std::string equation;
  std::size_t basis_index = 0;
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string name) : check(std::move(name)) {}

  std::string check;
  std::vector<std::string> args;
  Verdict verdict = Verdict::pass;
  /// Ordered table of named dimension vectors.
  std::vector<std::pair<std::string, std::vector<std::size_t>>> dims;
  std::optional<Witness> witness;
  /// Set by decision checks (cosemisimple, injective), which pass whenever
  /// they ran consistently, whatever the answer.
  std::optional<bool> value;
  std::vector<std::string> notes;
  double millis = 0;

  bool passed() const noexcept { return verdict == Verdict::pass; }

  void add_dims(std::string name, std::vector<std::size_t> d) { dims.emplace_back(std::move(name), std::move(d)); }
  void note(std::string n) { notes.push_back(std::move(n)); }

  /// Records the first failure only; later failures keep the first witness.
  void fail(Witness w);
  void fail(std::string equation, std::string detail = {});

  /// Compares two matrices column by column, failing with a witness on the
  /// first differing column. Returns whether they agree.
  bool expect_equal(const std::string& equation, const Matrix& lhs, const Matrix& rhs);
  bool expect(bool condition, const std::string& equation, std::string detail = {});

  /// Folds a sub-check into this one: dims and notes are prefixed, and a
  /// failing sub-check fails this report with its witness.
  void absorb(const CheckReport& sub);
};

}  // namespace lhd
