#pragma once

// The recursive vanishing bound P(a; q): rows of the Betti table vanish in
// columns p < P(a; q) - q.

#include "segre/lattice.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace segre {

/// Non-negative integer or infinity. Arithmetic saturates at infinity and
/// throws std::overflow_error rather than wrapping.
class ExtNat {
public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::uint64_t value) : value_(value) {}
  static constexpr ExtNat infinity() {
    ExtNat x;
    x.value_.reset();
    return x;
  }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  std::uint64_t value() const;

  friend ExtNat operator+(ExtNat x, ExtNat y);
  friend ExtNat operator*(ExtNat x, ExtNat y);

  /// "∞" or the decimal value.
  std::string to_string() const;

  constexpr bool operator==(const ExtNat&) const = default;
  constexpr std::strong_ordering operator<=>(const ExtNat& other) const {
    if (is_infinite() || other.is_infinite())
      return static_cast<int>(is_infinite()) <=> static_cast<int>(other.is_infinite());
    return *value_ <=> *other.value_;
  }

private:
  std::optional<std::uint64_t> value_{0};
};

/// h(x, j) = (x + j)(j + 1).
ExtNat h(ExtNat x, std::uint64_t j);

/// P(a; q) by the prefix recursion
///   P(a_1; 0) = 0, P(a_1; q > 0) = inf,
///   P(a_1..a_n; q) = min_{0 <= j <= min(q, a_n)} h(P(a_1..a_{n-1}; q - j), j).
ExtNat p_function(const DimVector& a, int q);

/// Closed form of P(a^n; q) for n equal extents a.
ExtNat p_closed_equal(std::uint64_t a, int n, int q);

/// P(a; q) - q: K_{p,q}(a) = 0 for 0 <= p below this value.
ExtNat vanishing_bound(const DimVector& a, int q);

/// True when the bound forces K_{p,q}(a) = 0. Negative p or q count as
/// vanishing (no such cells).
bool predicts_zero(const DimVector& a, long p, long q);

} // namespace segre
