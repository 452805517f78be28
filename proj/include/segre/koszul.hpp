#pragma once

// Koszul homology of the Artinian reduction R over the polynomial ring on
// R_1:
//
//   wedge^{p+1} R_1 (x) R_{q-1} -> wedge^p R_1 (x) R_q -> wedge^{p-1} R_1 (x) R_{q+1}
//
// whose middle homology has dimension dim K_{p,q}. Every term is graded by
// rank (sum of factor weights) and the differential preserves it, so
// matrices are assembled and reduced one rank block at a time.

#include "segre/betti_table.hpp"
#include "segre/rank.hpp"
#include "segre/sparse_matrix.hpp"
#include "segre/straighten.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace segre {

/// Wedge of distinct degree-1 basis elements tensored with a standard
/// monomial. Bit i of `subset` selects basis_R1()[i]; `monomial` indexes
/// standard_basis(q).
struct KoszulBasisVector {
  std::uint64_t subset = 0;
  std::uint32_t monomial = 0;
  bool operator==(const KoszulBasisVector&) const = default;
};

/// By wedge degree, then lexicographic on the sorted index tuple of the
/// subset, then by monomial index.
bool koszul_order(const KoszulBasisVector& x, const KoszulBasisVector& y);

struct KoszulOrderLess {
  bool operator()(const KoszulBasisVector& x, const KoszulBasisVector& y) const {
    return koszul_order(x, y);
  }
};

using KoszulVector = std::map<KoszulBasisVector, Integer, KoszulOrderLess>;

/// Raised when a cell would need more matrix entries than allowed.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultEntryBudget = 50'000'000;

class KoszulComplex {
public:
  /// Precomputes z_i * m for every degree-1 basis element z_i and standard
  /// monomial m. Throws std::invalid_argument when |basis_R1| > 63.
  explicit KoszulComplex(const Straightener& ring);

  const Straightener& ring() const { return ring_; }
  /// N = |basis_R1|.
  int generators() const { return generators_; }
  int max_q() const { return ring_.max_degree(); }

  /// dim wedge^p R_1 (x) R_q.
  std::uint64_t dimension(int p, int q) const;

  /// Basis of wedge^p R_1 (x) R_q in koszul_order.
  std::vector<KoszulBasisVector> basis(int p, int q) const;

  /// Rank grade of a basis vector.
  int grade(int q, const KoszulBasisVector& v) const;

  /// Matrix of d: wedge^p (x) R_q -> wedge^{p-1} (x) R_{q+1} in the bases
  /// basis(p-1, q+1) (rows) and basis(p, q) (columns). Out-of-range p or q
  /// gives a matrix with zero rows or columns.
  SparseIntMatrix differential(int p, int q) const;

  /// d applied to a vector of wedge^p (x) R_q.
  KoszulVector apply(int p, int q, const KoszulVector& v) const;

  /// Grades carried by wedge^p (x) R_q.
  std::vector<int> grades(int p, int q) const;

  struct Block {
    std::vector<KoszulBasisVector> domain;   ///< columns
    std::vector<KoszulBasisVector> codomain; ///< rows
    SparseIntMatrix matrix;
  };
  /// The restriction of differential(p, q) to one grade.
  Block differential_block(int p, int q, int grade) const;

  /// Sum over grades of rows * cols for differential(p, q): the entry count
  /// a dense layout of its blocks would need.
  std::uint64_t potential_entries(int p, int q) const;
  /// Throws BudgetExceeded when potential_entries(p, q) > budget.
  void check_budget(int p, int q, std::uint64_t budget) const;
  /// Entry count per grade of wedge^p (x) R_q.
  std::vector<std::uint64_t> grade_counts(int p, int q) const;

  /// rank of differential(p, q), block by block. Throws BudgetExceeded when
  /// potential_entries(p, q) > budget.
  std::uint64_t differential_rank(int p, int q, const RankEngine& engine,
                                  std::uint64_t budget = kDefaultEntryBudget) const;

  /// dim K_{p,q}. Throws BudgetExceeded if either differential involved
  /// exceeds `budget` potential entries.
  std::uint64_t homology_dim(int p, int q, const RankEngine& engine,
                             std::uint64_t budget = kDefaultEntryBudget) const;

private:
  using Product = std::vector<std::pair<std::uint32_t, Integer>>;

  /// Subsets of size p with the given weight sum, in lexicographic order.
  std::vector<std::uint64_t> subsets_of_weight(int p, int weight) const;
  /// count[w] = number of p-subsets with weight sum w.
  std::vector<std::uint64_t> subset_weight_counts(int p) const;
  std::vector<KoszulBasisVector> block_basis(int p, int q, int grade) const;
  bool in_range(int p, int q) const;
  /// Column of the differential for one basis vector, as (target, value).
  template <class Emit> void expand(int q, const KoszulBasisVector& v, Emit&& emit) const;

  const Straightener& ring_;
  int generators_ = 0;
  std::vector<int> generator_weight_;
  /// monomial_rank_[q][j] = rank of standard_basis(q)[j]
  std::vector<std::vector<int>> monomial_rank_;
  /// monomials_of_rank_[q][r] = indices j with rank r, ascending
  std::vector<std::vector<std::vector<std::uint32_t>>> monomials_of_rank_;
  /// products_[q][j * N + i] = z_i * standard_basis(q)[j] in degree q+1
  std::vector<std::vector<Product>> products_;
};

struct BettiOptions {
  std::optional<int> pmax; ///< defaults to N = |basis_R1|
  std::optional<int> qmax; ///< defaults to the regularity
  RankBackend backend = RankBackend::modular;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultEntryBudget;
  std::uint64_t seed = 0x5e97e5e9ULL;
};

/// dim K_{p,q}(a) with exact ranks.
std::uint64_t kpq_dim(const DimVector& a, int p, int q,
                      RankBackend backend = RankBackend::exact,
                      std::uint64_t budget = kDefaultEntryBudget);

/// Matrix of the Koszul differential for Seg(a).
SparseIntMatrix differential(const DimVector& a, int p, int q);

/// Graded Betti table over 0 <= p <= pmax, 0 <= q <= qmax. Ranks are
/// computed once per differential and shared by the two cells using them.
/// Output does not depend on the thread count.
BettiTable betti_table(const DimVector& a, const BettiOptions& options = {});
BettiTable betti_table(const KoszulComplex& complex, const BettiOptions& options = {});

/// Euler characteristic identity of a finite free resolution over the
/// polynomial ring on R_1:
///   (sum_j dim R_j t^j) (1 - t)^N = sum_{p,q} (-1)^p dims(p, q) t^{p+q}.
bool hilbert_consistency(const DimVector& a, const BettiTable& table);

} // namespace segre
