#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace segre {

using Integer = mpz_class;

/// Exact integer matrix stored as sorted sparse rows. Zero entries are
/// never stored.
class SparseIntMatrix {
public:
  using Entry = std::pair<std::uint32_t, Integer>;
  using Row = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  /// Accumulates `value` into entry (row, col).
  void add(std::size_t row, std::size_t col, const Integer& value);
  Integer at(std::size_t row, std::size_t col) const;
  const Row& row(std::size_t r) const { return rows_[r]; }
  /// Replaces a row. `entries` must be sorted by column and zero-free.
  void set_row(std::size_t r, Row entries);

  /// Appends a column given as (row, value) pairs.
  void append_column(std::span<const std::pair<std::size_t, Integer>> column);

  /// this * other. Throws std::invalid_argument on a shape mismatch.
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;

  /// this * x for a dense vector x of length cols().
  std::vector<Integer> apply(std::span<const Integer> x) const;

  bool operator==(const SparseIntMatrix&) const = default;

private:
  std::vector<Row> rows_;
  std::size_t cols_ = 0;
};

} // namespace segre
