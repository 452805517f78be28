#pragma once

// Monomials in the Artinian reduction of the Segre coordinate ring, their
// (degree, rank) bigrading, and the straightening algorithm that rewrites
// any monomial in the standard basis.

#include "segre/lattice.hpp"

#include <gmpxx.h>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

namespace segre {

using Integer = mpz_class;

/// Product z_{v^1} ... z_{v^r}, factors kept sorted in the MultiIndex total
/// order (weight ascending, ties lexicographic).
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<MultiIndex> factors);
  /// Parses whitespace-separated factors, e.g. "0,0,0,1 0,1,0,1".
  static Monomial parse(std::string_view text);

  int degree() const { return static_cast<int>(factors_.size()); }
  /// Sum of factor weights.
  int rank() const;
  /// Factor weights in sorted order.
  std::vector<int> lexrk() const;
  const std::vector<MultiIndex>& factors() const { return factors_; }

  Monomial times(const MultiIndex& v) const;

  /// "1" for the empty product, otherwise "z[0,0,1]·z[0,1,1]".
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;

private:
  std::vector<MultiIndex> factors_;
};

struct Bidegree {
  int degree = 0;
  int rank = 0;
  auto operator<=>(const Bidegree&) const = default;
};

/// Integer combination of monomials. Zero coefficients are never stored.
class LinComb {
public:
  LinComb() = default;
  static LinComb of(const Monomial& m) {
    LinComb c;
    c.add(m, 1);
    return c;
  }

  void add(const Monomial& m, const Integer& coefficient);
  void add_scaled(const LinComb& other, const Integer& factor);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Monomial& m) const;
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// "0" when empty; otherwise "+1 · z[..]·z[..] -2 · z[..]".
  std::string to_string() const;

  bool operator==(const LinComb&) const = default;

private:
  std::map<Monomial, Integer> terms_;
};

/// Rewrites monomials of the reduced ring R/(x_0, ..., x_|a|) in the
/// standard basis {m_gamma}.
///
/// Results are memoized per instance. The cache is guarded, so one
/// instance may be shared between threads.
class Straightener {
public:
  explicit Straightener(DimVector a);

  const DimVector& dims() const { return dims_; }

  /// Whether m = m_gamma for a lattice path gamma: the factors form a strict
  /// chain and f(u^i, u^{i+1}) < l(u^{i-1}, u^i) at every i, with u^0 = 0
  /// and u^{r+1} = a.
  bool is_standard(const Monomial& m) const;

  /// Normal form of m in the standard basis. Empty iff m = 0.
  /// Throws std::invalid_argument for factors outside P(a) and
  /// std::logic_error if the rewriting fails to make progress.
  LinComb straighten(const Monomial& m) const;

  /// straighten(z_v * m) for a standard m.
  LinComb multiply(const MultiIndex& v, const Monomial& m) const;

  /// Coordinates of z_v in the degree-1 standard basis.
  LinComb expand_in_B1(const MultiIndex& v) const;

  /// Whether z_u divides the standard monomial m: m occurs in
  /// multiply(u, m') for some standard m' of one degree less.
  bool divides(const MultiIndex& u, const Monomial& m) const;

  /// Standard basis of the given degree, ordered by factors. Empty outside
  /// 0..regularity.
  const std::vector<Monomial>& standard_basis(int degree) const;
  int max_degree() const { return static_cast<int>(standard_.size()) - 1; }
  /// Position of a standard monomial within its degree; -1 if not standard.
  long index_of(const Monomial& m) const;

  /// Degree-1 standard basis; equal to basis_R1(dims()).
  const std::vector<MultiIndex>& basis_R1() const { return basis_r1_; }

  std::size_t cache_size() const;

private:
  LinComb straighten_rec(const Monomial& m, std::vector<Monomial>& stack) const;
  /// Largest i in 1..r with f(u^i, u^{i+1}) >= l(u^{i-1}, u^i); 0 if none.
  /// Expects a weakly increasing chain.
  int max_violation(const std::vector<MultiIndex>& chain) const;
  void check_factor(const MultiIndex& v) const;

  DimVector dims_;
  MultiIndex zero_;
  MultiIndex top_;
  std::map<int, std::vector<MultiIndex>> weight_classes_;
  std::vector<std::vector<Monomial>> standard_;
  std::map<Monomial, long> standard_index_;
  std::vector<MultiIndex> basis_r1_;

  mutable std::shared_mutex cache_mutex_;
  mutable std::map<Monomial, LinComb> cache_;
};

} // namespace segre
