#pragma once

#include "segre/lattice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace segre {

/// Graded Betti numbers dims(p, q) = dim K_{p,q} over a computed window.
class BettiTable {
public:
  BettiTable(DimVector dims, int pmax, int qmax);

  const DimVector& dims() const { return dims_; }
  int pmax() const { return pmax_; }
  int qmax() const { return qmax_; }

  void set(int p, int q, std::uint64_t value);
  /// 0 for cells that were not computed.
  std::uint64_t at(int p, int q) const;
  bool computed(int p, int q) const { return cells_.contains({p, q}); }
  /// Computed cells keyed by (p, q).
  const std::map<std::pair<int, int>, std::uint64_t>& cells() const { return cells_; }

  /// Macaulay2 layout: a header of column indices, a "total:" row, then
  /// one row per q. Columns run to the last nonzero p, rows to the last
  /// nonzero q; zeros print as ".".
  std::string to_m2() const;

  /// {"a": [...], "dims": [[p, q, dim], ...]} with every computed cell,
  /// sorted by (q, p).
  std::string to_json() const;

  /// Reads the nonzero cells back from to_m2() output. Rows may omit their
  /// "q:" labels. Throws std::invalid_argument on malformed text.
  static std::map<std::pair<int, int>, std::uint64_t> parse_m2(std::string_view text);

private:
  DimVector dims_;
  int pmax_;
  int qmax_;
  std::map<std::pair<int, int>, std::uint64_t> cells_;
};

} // namespace segre
