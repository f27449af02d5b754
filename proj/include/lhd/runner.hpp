#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lhd/dsl.hpp"
#include "lhd/report.hpp"

namespace lhd::dsl {

struct RunOptions {
  /// Seeds every randomly generated instance.
  std::uint64_t seed = 1;
  /// Cap on the dimension of generated comodules.
  std::size_t max_dim = 4;
};

/// One report per check directive, in document order. Errors inside a check
/// become its verdict: unmet hypotheses and unsupported bases give
/// "unsupported", anything else "fail" with a witness.
std::vector<CheckReport> run(const Document& doc, const RunOptions& options = {});

/// Which library operations each check kind exercises.
struct CheckCoverage {
  std::string kind;
  std::vector<std::string> operations;
};
const std::vector<CheckCoverage>& check_registry();

/// A stable JSON array: check, args, verdict, value, dims, witness, notes,
/// millis, in that key order.
std::string to_json(const std::vector<CheckReport>& reports, int indent = 2);
/// One line per report, plus dims and notes when verbose.
std::string to_text(const std::vector<CheckReport>& reports, bool verbose);

/// 1 if any report failed, else 0.
int exit_status(const std::vector<CheckReport>& reports);

}  // namespace lhd::dsl
