#include "segre/bott.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace segre {

std::optional<BottCohomology> dotted_sort(std::span<const long long> v) {
  const auto m = static_cast<long long>(v.size());
  if (m == 0)
    throw std::invalid_argument("weight must have at least one entry");
  std::vector<long long> shifted(v.begin(), v.end());
  for (long long i = 0; i < m; ++i)
    shifted[static_cast<std::size_t>(i)] += m - 1 - i;

  // stable insertion sort into decreasing order, counting transpositions
  int inversions = 0;
  for (std::size_t i = 1; i < shifted.size(); ++i) {
    for (std::size_t j = i; j > 0 && shifted[j - 1] < shifted[j]; --j) {
      std::swap(shifted[j - 1], shifted[j]);
      ++inversions;
    }
  }
  if (std::adjacent_find(shifted.begin(), shifted.end()) != shifted.end())
    return std::nullopt;

  BottCohomology out;
  out.degree = inversions;
  out.dominant = std::move(shifted);
  for (long long i = 0; i < m; ++i)
    out.dominant[static_cast<std::size_t>(i)] -= m - 1 - i;
  return out;
}

std::optional<BottCohomology> bwb_cohomology(long long d, std::span<const long long> alpha, int m) {
  if (m < 1 || static_cast<int>(alpha.size()) != m - 1)
    throw std::invalid_argument("alpha must have length m - 1");
  if (!std::is_sorted(alpha.begin(), alpha.end(), std::greater<>()))
    throw std::invalid_argument("alpha must be weakly decreasing");
  Weight v;
  v.reserve(static_cast<std::size_t>(m));
  v.push_back(d);
  v.insert(v.end(), alpha.begin(), alpha.end());
  return dotted_sort(v);
}

mpz_class schur_dim(std::span<const long long> lambda, int m) {
  if (m < 1)
    throw std::invalid_argument("schur_dim needs m >= 1");
  if (static_cast<int>(lambda.size()) > m)
    throw std::invalid_argument("weight longer than the number of variables");
  if (!std::is_sorted(lambda.begin(), lambda.end(), std::greater<>()))
    throw std::invalid_argument("weight must be weakly decreasing");
  Weight full(lambda.begin(), lambda.end());
  if (static_cast<int>(full.size()) < m) {
    if (!full.empty() && full.back() < 0)
      throw std::invalid_argument("only partitions may be padded with zeros");
    full.resize(static_cast<std::size_t>(m), 0);
  }
  mpq_class product = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      mpq_class factor(mpz_class(static_cast<long>(full[static_cast<std::size_t>(i)] -
                                                   full[static_cast<std::size_t>(j)] + (j - i))),
                       mpz_class(j - i));
      factor.canonicalize();
      product *= factor;
    }
  if (product.get_den() != 1)
    throw std::logic_error("Weyl dimension formula produced a non-integer");
  return product.get_num();
}

std::string weight_to_string(std::span<const long long> w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(w[i]);
  }
  return s + ")";
}

} // namespace segre
