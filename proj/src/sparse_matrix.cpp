#include "segre/sparse_matrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace segre {

SparseIntMatrix::SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const Row& r : rows_)
    n += r.size();
  return n;
}

void SparseIntMatrix::add(std::size_t row, std::size_t col, const Integer& value) {
  if (row >= rows_.size() || col >= cols_)
    throw std::out_of_range("matrix entry out of range");
  if (value == 0)
    return;
  Row& r = rows_[row];
  auto c = static_cast<std::uint32_t>(col);
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const Entry& e, std::uint32_t key) { return e.first < key; });
  if (it != r.end() && it->first == c) {
    it->second += value;
    if (it->second == 0)
      r.erase(it);
  } else {
    r.insert(it, Entry{c, value});
  }
}

void SparseIntMatrix::set_row(std::size_t r, Row entries) {
  if (r >= rows_.size() || (!entries.empty() && entries.back().first >= cols_))
    throw std::out_of_range("matrix row out of range");
  rows_[r] = std::move(entries);
}

Integer SparseIntMatrix::at(std::size_t row, std::size_t col) const {
  const Row& r = rows_.at(row);
  auto c = static_cast<std::uint32_t>(col);
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const Entry& e, std::uint32_t key) { return e.first < key; });
  return (it != r.end() && it->first == c) ? it->second : Integer(0);
}

void SparseIntMatrix::append_column(std::span<const std::pair<std::size_t, Integer>> column) {
  const std::size_t col = cols_++;
  for (const auto& [row, value] : column)
    add(row, col, value);
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols_ != other.rows())
    throw std::invalid_argument("matrix shapes do not compose");
  SparseIntMatrix out(rows(), other.cols());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::map<std::uint32_t, Integer> acc;
    for (const auto& [k, a] : rows_[i])
      for (const auto& [j, b] : other.rows_[k])
        acc[j] += a * b;
    for (auto& [j, v] : acc)
      if (v != 0)
        out.rows_[i].emplace_back(j, std::move(v));
  }
  return out;
}

std::vector<Integer> SparseIntMatrix::apply(std::span<const Integer> x) const {
  if (x.size() != cols_)
    throw std::invalid_argument("vector length does not match column count");
  std::vector<Integer> y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (const auto& [j, a] : rows_[i])
      y[i] += a * x[j];
  return y;
}

} // namespace segre
