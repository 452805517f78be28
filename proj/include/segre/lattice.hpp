#pragma once

// The product-of-chains poset P(a), increasing lattice paths from 0 to a,
// their descents, and the index sets of the standard basis of the Artinian
// reduction of the Segre coordinate ring.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace segre {

/// Largest extent a_k accepted for a single factor. Coordinates of a
/// MultiIndex are stored in one byte.
inline constexpr int kMaxExtent = 255;

/// Dimension vector (a_1, ..., a_n) of a product of projective spaces.
///
/// Always held in normalized form: entries sorted descending with zeros
/// dropped. Syzygies only depend on the multiset of positive entries, so
/// equivalent inputs collapse to the same value.
class DimVector {
public:
  /// Normalizes `raw`. Throws std::invalid_argument on a negative entry, an
  /// entry above kMaxExtent, or when no entry is positive.
  explicit DimVector(std::vector<int> raw);

  /// Parses "2,2,1". Whitespace around entries is ignored.
  static DimVector parse(std::string_view text);

  /// True when `raw` is already descending and zero-free.
  static bool is_normalized(std::span<const int> raw);

  /// For each normalized coordinate, the position in `raw` it came from.
  /// Stable: equal extents keep their relative order.
  static std::vector<int> normalizing_permutation(std::span<const int> raw);

  int size() const { return static_cast<int>(extents_.size()); }
  int operator[](int k) const { return extents_[static_cast<std::size_t>(k)]; }
  std::span<const int> extents() const { return extents_; }

  /// |a| = a_1 + ... + a_n.
  int total() const;
  /// Number of points of P(a), i.e. prod (a_k + 1).
  std::uint64_t poset_size() const;
  /// Castelnuovo-Mumford regularity a_2 + ... + a_n.
  int regularity() const;

  std::string to_string() const;

  auto operator<=>(const DimVector&) const = default;

private:
  std::vector<int> extents_;
};

/// A point i = (i_1, ..., i_n) of the poset, 0 <= i_k <= a_k.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<std::uint8_t> coords) : coords_(std::move(coords)) {}
  /// Throws std::invalid_argument for entries outside [0, kMaxExtent].
  static MultiIndex from_ints(std::span<const int> coords);
  static MultiIndex zero(int n) { return MultiIndex(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)); }
  static MultiIndex top(const DimVector& a);
  /// Parses "0,1,0,1".
  static MultiIndex parse(std::string_view text);

  int size() const { return static_cast<int>(coords_.size()); }
  int operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }
  std::span<const std::uint8_t> coords() const { return coords_; }

  /// |i| = i_1 + ... + i_n.
  int weight() const;
  bool is_zero() const;
  /// Componentwise bounds against `a`.
  bool fits(const DimVector& a) const;

  std::string to_string() const;

  bool operator==(const MultiIndex&) const = default;
  /// The fixed total order: weight first, then lexicographic on coordinates.
  std::strong_ordering operator<=>(const MultiIndex& other) const;

private:
  std::vector<std::uint8_t> coords_;
};

/// Componentwise u <= v. Throws std::invalid_argument on length mismatch.
bool leq(const MultiIndex& u, const MultiIndex& v);
/// Strict poset order: u <= v and u != v.
bool less(const MultiIndex& u, const MultiIndex& v);

/// (componentwise min, componentwise max).
std::pair<MultiIndex, MultiIndex> meet_join(const MultiIndex& u, const MultiIndex& v);

/// First / last coordinate (1-based) where u_i < v_i. Requires u < v
/// strictly; throws std::domain_error otherwise.
int first_diff(const MultiIndex& u, const MultiIndex& v);
int last_diff(const MultiIndex& u, const MultiIndex& v);

/// Increasing lattice path, stored as its step sequence s_1..s_T with
/// 1-based coordinate indices.
class LatticePath {
public:
  LatticePath(int dimension, std::vector<std::uint8_t> steps);

  int dimension() const { return dimension_; }
  int length() const { return static_cast<int>(steps_.size()); }
  std::span<const std::uint8_t> steps() const { return steps_; }

  /// gamma(t) for 0 <= t <= length().
  MultiIndex point(int t) const;
  MultiIndex end() const { return point(length()); }

  /// Positions t in 1..T-1 with s_t > s_{t+1}.
  std::vector<int> descents() const;

  /// The points gamma(t), t in descents(): the factors of m_gamma.
  std::vector<MultiIndex> descent_support() const;

  std::string steps_string() const;

  auto operator<=>(const LatticePath&) const = default;

private:
  int dimension_;
  std::vector<std::uint8_t> steps_;
};

/// All increasing paths 0 -> a, lexicographic on step sequences.
std::vector<LatticePath> enumerate_paths(const DimVector& a);

/// multinomial(|a|; a_1, ..., a_n).
std::uint64_t multinomial(std::span<const int> parts);

/// The unique path 0 -> v without descents: coordinate 1 filled first, then
/// coordinate 2, and so on.
LatticePath no_descent_path(const MultiIndex& v);

/// Concatenates the no-descent paths between consecutive points of a chain
/// 0 = u^0 < u^1 < ... < u^{r+1}. Throws std::invalid_argument if the chain
/// does not start at 0 or is not strictly increasing.
LatticePath concat_paths(std::span<const MultiIndex> points);

struct StandardBasisEntry {
  LatticePath path;
  std::vector<MultiIndex> support; ///< ascending weights; empty for m = 1
};

/// Standard basis index set grouped by degree |Desc(gamma)|. Within a
/// degree, entries are ordered by their support in the MultiIndex total
/// order.
std::map<int, std::vector<StandardBasisEntry>> standard_basis_indices(const DimVector& a);

/// Every point of P(a), in the MultiIndex total order.
std::vector<MultiIndex> poset_elements(const DimVector& a);

/// The degree-1 standard basis of the reduced ring: all v with
/// l(0, v) > f(v, a). One element per weight class is missing.
std::vector<MultiIndex> basis_R1(const DimVector& a);

/// Whether {z_v : v in V} is linearly independent in the degree-1 part of
/// the reduced ring: every weight class 0..|a| must keep a point outside V.
/// Repeated entries make the set dependent.
bool independent_in_R1(const DimVector& a, std::span<const MultiIndex> vs);

} // namespace segre
