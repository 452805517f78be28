#pragma once

// Borel-Weil-Bott on projective space through the dotted Weyl action
// sigma . v = sigma(v + rho) - rho, and Weyl's dimension formula.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace segre {

using Weight = std::vector<long long>;

/// The non-singular outcome: H^degree = S_dominant(V), all else zero.
struct BottCohomology {
  int degree = 0;  ///< length of the sorting permutation
  Weight dominant; ///< sigma . v, weakly decreasing
  bool operator==(const BottCohomology&) const = default;
};

/// Sorts v + rho (rho = (m-1, ..., 0)) into decreasing order. Returns
/// nullopt when v + rho has a repeated entry (the singular case).
std::optional<BottCohomology> dotted_sort(std::span<const long long> v);

/// Cohomology of Q^d (x) S_alpha(R) on P(V), dim V = m, alpha of length m-1.
/// Throws std::invalid_argument if alpha is not weakly decreasing or has the
/// wrong length.
std::optional<BottCohomology> bwb_cohomology(long long d, std::span<const long long> alpha, int m);

/// dim S_lambda(C^m) = prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
/// A partition shorter than m is padded with zeros; general integer weights
/// must have length m. Throws std::invalid_argument otherwise.
mpz_class schur_dim(std::span<const long long> lambda, int m);

std::string weight_to_string(std::span<const long long> w);

} // namespace segre
