#include "lhd/report.hpp"

namespace lhd {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::unsupported:
      return "unsupported";
  }
  return "fail";
}

void CheckReport::fail(Witness w) {
  if (verdict == Verdict::fail) return;
  verdict = Verdict::fail;
  witness = std::move(w);
}

void CheckReport::fail(std::string equation, std::string detail) {
  fail(Witness{std::move(equation), 0, std::move(detail), {}});
}

bool CheckReport::expect_equal(const std::string& equation, const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() || !(lhs.field() == rhs.field())) {
    fail(Witness{equation, 0, std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()),
                 std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols())});
    return false;
  }
  const auto col = lhs.first_differing_column(rhs);
  if (!col) return true;
  fail(Witness{equation, *col, lhs.column(*col).transpose().to_string(), rhs.column(*col).transpose().to_string()});
  return false;
}

bool CheckReport::expect(bool condition, const std::string& equation, std::string detail) {
  if (!condition) fail(equation, std::move(detail));
  return condition;
}

void CheckReport::absorb(const CheckReport& sub) {
  for (const auto& [name, d] : sub.dims) add_dims(sub.check + "." + name, d);
  for (const auto& n : sub.notes) note(sub.check + ": " + n);
  if (sub.verdict == Verdict::fail && sub.witness) {
    Witness w = *sub.witness;
    w.equation = sub.check + ": " + w.equation;
    fail(std::move(w));
  } else if (sub.verdict == Verdict::fail) {
    fail(sub.check);
  } else if (sub.verdict == Verdict::unsupported && verdict == Verdict::pass) {
    verdict = Verdict::unsupported;
  }
}

}  // namespace lhd
