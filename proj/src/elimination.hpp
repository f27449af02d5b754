#pragma once

// Incremental sparse row reduction shared by every routine in linalg.cpp.

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "lhd/field.hpp"

namespace lhd::detail {

using SparseEntry = std::pair<std::uint32_t, mpq_class>;
using SparseVector = std::vector<SparseEntry>;

struct ReducedRow {
  std::uint32_t pivot;
  SparseVector entries;  // sorted by column, leading entry 1
};

/// Rows are inserted one at a time and reduced against the pivots found so
/// far, so dependent rows are dropped as soon as they arrive. Over Q the rows
/// are kept as primitive integer vectors (fraction-free elimination with
/// content removal); over F_p they are normalized to a leading 1.
class RowReducer {
 public:
  RowReducer(Field field, std::size_t cols);
  ~RowReducer();
  RowReducer(RowReducer&&) noexcept;
  RowReducer& operator=(RowReducer&&) noexcept;

  /// Entries must be field-canonical; columns need not be sorted or unique.
  void add_row(SparseVector row);
  std::size_t rank() const;
  /// Fully reduced rows, sorted by pivot column.
  std::vector<ReducedRow> reduced();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lhd::detail
