#include "segre/rank.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace segre {

namespace {

/// Row order and column relabelling shared by both eliminations: short rows
/// first, and columns renumbered so that sparse columns lead. Both keep
/// fill-in low on Koszul differentials.
struct Ordering {
  std::vector<std::size_t> rows;
  std::vector<std::uint32_t> column_label;
};

Ordering sparse_ordering(const SparseIntMatrix& m) {
  Ordering o;
  o.rows.resize(m.rows());
  std::iota(o.rows.begin(), o.rows.end(), std::size_t{0});
  std::stable_sort(o.rows.begin(), o.rows.end(), [&](std::size_t x, std::size_t y) {
    return m.row(x).size() < m.row(y).size();
  });
  std::vector<std::size_t> count(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r))
      ++count[e.first];
  std::vector<std::uint32_t> by_count(m.cols());
  std::iota(by_count.begin(), by_count.end(), std::uint32_t{0});
  std::stable_sort(by_count.begin(), by_count.end(),
                   [&](std::uint32_t x, std::uint32_t y) { return count[x] < count[y]; });
  o.column_label.resize(m.cols());
  for (std::uint32_t i = 0; i < by_count.size(); ++i)
    o.column_label[by_count[i]] = i;
  return o;
}

using ModRow = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (e) {
    if (e & 1)
      result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

/// row -= factor * pivot, entries mod p.
void axpy_mod(ModRow& row, std::uint64_t factor, const ModRow& pivot, std::uint64_t p, ModRow& scratch) {
  scratch.clear();
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      scratch.push_back(row[i++]);
    } else {
      std::uint64_t sub = mul_mod(factor, pivot[j].second, p);
      if (i < row.size() && row[i].first == pivot[j].first) {
        std::uint64_t v = row[i].second >= sub ? row[i].second - sub : row[i].second + (p - sub);
        if (v)
          scratch.emplace_back(row[i].first, v);
        ++i;
      } else if (sub) {
        scratch.emplace_back(pivot[j].first, p - sub);
      }
      ++j;
    }
  }
  row.swap(scratch);
}

using IntRow = SparseIntMatrix::Row;

void divide_content(IntRow& row) {
  if (row.empty())
    return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1)
      break;
  }
  if (row.front().second < 0)
    g = -g;
  if (g != 1)
    for (auto& e : row)
      mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

/// row = (lead(pivot)/g) * row - (lead(row)/g) * pivot, cancelling the lead.
void combine_exact(IntRow& row, const IntRow& pivot, IntRow& scratch) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), row.front().second.get_mpz_t(), pivot.front().second.get_mpz_t());
  Integer row_scale = pivot.front().second / g;
  Integer pivot_scale = row.front().second / g;
  const bool unit = row_scale == 1;
  scratch.clear();
  std::size_t i = 0, j = 0;
  Integer v;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      if (unit)
        scratch.push_back(std::move(row[i]));
      else
        scratch.emplace_back(row[i].first, row[i].second * row_scale);
      ++i;
    } else if (i < row.size() && row[i].first == pivot[j].first) {
      v = unit ? Integer(row[i].second) : Integer(row[i].second * row_scale);
      v -= pivot_scale * pivot[j].second;
      if (v != 0)
        scratch.emplace_back(row[i].first, v);
      ++i;
      ++j;
    } else {
      v = -pivot_scale * pivot[j].second;
      scratch.emplace_back(pivot[j].first, v);
      ++j;
    }
  }
  row.swap(scratch);
  if (!unit)
    divide_content(row);
}

bool is_probable_prime(std::uint64_t n) {
  Integer z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

} // namespace

RankBackend parse_rank_backend(std::string_view name) {
  if (name == "exact")
    return RankBackend::exact;
  if (name == "modular")
    return RankBackend::modular;
  throw std::invalid_argument("unknown rank backend '" + std::string(name) + "'");
}

std::string_view to_string(RankBackend backend) {
  return backend == RankBackend::exact ? "exact" : "modular";
}

std::size_t rank_mod_p(const SparseIntMatrix& m, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 63))
    throw std::invalid_argument("modulus out of range");
  const Ordering order = sparse_ordering(m);
  std::vector<std::int64_t> pivot_of(m.cols(), -1);
  std::vector<ModRow> pivots;
  ModRow row, scratch;
  for (std::size_t r : order.rows) {
    row.clear();
    for (const auto& [c, value] : m.row(r)) {
      std::uint64_t v = mpz_fdiv_ui(value.get_mpz_t(), p);
      if (v)
        row.emplace_back(order.column_label[c], v);
    }
    std::sort(row.begin(), row.end());
    while (!row.empty()) {
      std::int64_t piv = pivot_of[row.front().first];
      if (piv < 0) {
        std::uint64_t inv = pow_mod(row.front().second, p - 2, p);
        for (auto& e : row)
          e.second = mul_mod(e.second, inv, p);
        pivot_of[row.front().first] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(row));
        row = ModRow();
        break;
      }
      axpy_mod(row, row.front().second, pivots[static_cast<std::size_t>(piv)], p, scratch);
    }
  }
  return pivots.size();
}

std::size_t rank_exact(const SparseIntMatrix& m) {
  const Ordering order = sparse_ordering(m);
  std::vector<std::int64_t> pivot_of(m.cols(), -1);
  std::vector<IntRow> pivots;
  IntRow row, scratch;
  for (std::size_t r : order.rows) {
    row.clear();
    for (const auto& [c, value] : m.row(r))
      row.emplace_back(order.column_label[c], value);
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    divide_content(row);
    while (!row.empty()) {
      std::int64_t piv = pivot_of[row.front().first];
      if (piv < 0) {
        pivot_of[row.front().first] = static_cast<std::int64_t>(pivots.size());
        pivots.push_back(std::move(row));
        row = IntRow();
        break;
      }
      combine_exact(row, pivots[static_cast<std::size_t>(piv)], scratch);
    }
  }
  return pivots.size();
}

std::uint64_t random_prime62(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 61,
                                                    (std::uint64_t{1} << 62) - 1);
  while (true) {
    std::uint64_t candidate = dist(gen) | 1;
    if (is_probable_prime(candidate))
      return candidate;
  }
}

RankEngine::RankEngine(RankBackend backend, std::uint64_t seed) : backend_(backend) {
  primes_[0] = random_prime62(seed);
  std::uint64_t next = seed * 0x9e3779b97f4a7c15ULL + 1;
  do {
    primes_[1] = random_prime62(next++);
  } while (primes_[1] == primes_[0]);
}

std::size_t RankEngine::rank(const SparseIntMatrix& m) const {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  if (backend_ == RankBackend::exact)
    return rank_exact(m);
  const std::size_t first = rank_mod_p(m, primes_[0]);
  if (std::max(m.rows(), m.cols()) <= single_prime_limit)
    return first;
  const std::size_t second = rank_mod_p(m, primes_[1]);
  if (first == second)
    return first;
  return rank_exact(m);
}

} // namespace segre
