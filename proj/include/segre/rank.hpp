#pragma once

// Matrix rank over Q: exact fraction-free integer elimination, and
// elimination modulo a random 62-bit prime as the fast path.

#include "segre/sparse_matrix.hpp"

#include <cstdint>
#include <string_view>

namespace segre {

enum class RankBackend { exact, modular };

RankBackend parse_rank_backend(std::string_view name);
std::string_view to_string(RankBackend backend);

/// Rank over Q by sparse fraction-free elimination with arbitrary-precision
/// integers.
std::size_t rank_exact(const SparseIntMatrix& m);

/// Rank over Z/p. Requires p < 2^63 prime. Never exceeds the rank over Q.
std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p);

/// A prime drawn uniformly-ish from [2^61, 2^62).
std::uint64_t random_prime62(std::uint64_t seed);

/// Rank with a backend policy.
///
/// The modular path uses one prime for matrices whose larger dimension is
/// at most `single_prime_limit`; bigger matrices are reduced modulo two
/// independent primes and fall back to exact elimination when the two
/// disagree.
class RankEngine {
public:
  explicit RankEngine(RankBackend backend, std::uint64_t seed = 0x5e97e5e9ULL);

  std::size_t rank(const SparseIntMatrix& m) const;

  RankBackend backend() const { return backend_; }
  std::uint64_t primary_prime() const { return primes_[0]; }
  std::uint64_t secondary_prime() const { return primes_[1]; }

  static constexpr std::size_t single_prime_limit = 2000;

private:
  RankBackend backend_;
  std::uint64_t primes_[2];
};

} // namespace segre
