#include "segre/pfunc.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace segre {

std::uint64_t ExtNat::value() const {
  if (!value_)
    throw std::logic_error("value() of infinite ExtNat");
  return *value_;
}

ExtNat operator+(ExtNat x, ExtNat y) {
  if (x.is_infinite() || y.is_infinite())
    return ExtNat::infinity();
  std::uint64_t s = 0;
  if (__builtin_add_overflow(*x.value_, *y.value_, &s))
    throw std::overflow_error("ExtNat addition overflow");
  return s;
}

ExtNat operator*(ExtNat x, ExtNat y) {
  if (x.is_infinite() || y.is_infinite())
    return ExtNat::infinity();
  std::uint64_t p = 0;
  if (__builtin_mul_overflow(*x.value_, *y.value_, &p))
    throw std::overflow_error("ExtNat multiplication overflow");
  return p;
}

std::string ExtNat::to_string() const { return value_ ? std::to_string(*value_) : "∞"; }

ExtNat h(ExtNat x, std::uint64_t j) { return (x + j) * (j + 1); }

ExtNat p_function(const DimVector& a, int q) {
  if (q < 0)
    throw std::invalid_argument("p_function needs q >= 0");
  // row[t] = P(a_1..a_k; t) for the current prefix length k
  const auto width = static_cast<std::size_t>(q) + 1;
  std::vector<ExtNat> row(width, ExtNat::infinity());
  row[0] = 0;
  for (int k = 1; k < a.size(); ++k) {
    std::vector<ExtNat> next(width, ExtNat::infinity());
    for (int t = 0; t <= q; ++t) {
      ExtNat best = ExtNat::infinity();
      for (int j = 0; j <= std::min(t, a[k]); ++j)
        best = std::min(best, h(row[static_cast<std::size_t>(t - j)], static_cast<std::uint64_t>(j)));
      next[static_cast<std::size_t>(t)] = best;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(q)];
}

ExtNat p_closed_equal(std::uint64_t a, int n, int q) {
  if (a == 0 || n < 1 || q < 0)
    throw std::invalid_argument("p_closed_equal needs a >= 1, n >= 1, q >= 0");
  if (q == 0)
    return 0;
  const auto uq = static_cast<std::uint64_t>(q);
  const std::uint64_t r = (uq + a - 1) / a; // minimal r with q <= r a
  if (static_cast<std::uint64_t>(n) <= r)
    return ExtNat::infinity();
  const std::uint64_t q0 = uq - (r - 1) * a;
  ExtNat power = 1; // (a+1)^{r-1}
  for (std::uint64_t i = 1; i < r; ++i)
    power = power * (a + 1);
  ExtNat value = ExtNat(q0 * q0 + q0) * power + power * (a + 1);
  return value.value() - (a + 1);
}

ExtNat vanishing_bound(const DimVector& a, int q) {
  ExtNat p = p_function(a, q);
  if (p.is_infinite())
    return p;
  if (p.value() < static_cast<std::uint64_t>(q))
    throw std::logic_error("P(a;q) < q");
  return p.value() - static_cast<std::uint64_t>(q);
}

bool predicts_zero(const DimVector& a, long p, long q) {
  if (q < 0 || p < 0)
    return true;
  ExtNat bound = vanishing_bound(a, static_cast<int>(q));
  return ExtNat(static_cast<std::uint64_t>(p)) < bound;
}

} // namespace segre
