#include "segre/witness.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace segre {

namespace {

void check_row(int n, int q) {
  if (n < 2 || q < 1 || q > n - 1)
    throw std::invalid_argument("need 1 <= q <= n-1, got n=" + std::to_string(n) +
                                ", q=" + std::to_string(q));
}

MultiIndex from_bits(int n, std::uint32_t bits) {
  std::vector<std::uint8_t> coords(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    coords[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
  return MultiIndex(std::move(coords));
}

/// 0^{n-k} 1^k
MultiIndex trailing_ones(int n, int k) {
  std::vector<std::uint8_t> coords(static_cast<std::size_t>(n), 0);
  for (int i = n - k; i < n; ++i)
    coords[static_cast<std::size_t>(i)] = 1;
  return MultiIndex(std::move(coords));
}

bool lex_less(const MultiIndex& x, const MultiIndex& y) {
  return std::lexicographical_compare(x.coords().begin(), x.coords().end(), y.coords().begin(),
                                      y.coords().end());
}

DimVector ones(int n) { return DimVector(std::vector<int>(static_cast<std::size_t>(n), 1)); }

} // namespace

Monomial witness_core(int n, int q) {
  check_row(n, q);
  std::vector<MultiIndex> factors;
  for (int k = 1; k <= q; ++k)
    factors.push_back(trailing_ones(n, k));
  return Monomial(std::move(factors));
}

std::vector<MultiIndex> annihilator_set(int n, int q) {
  check_row(n, q);
  if (n > 20)
    throw std::invalid_argument("n too large");
  std::vector<MultiIndex> excluded;
  for (int i = 0; i <= q; ++i) {
    std::vector<std::uint8_t> coords(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= i; ++k)
      coords[static_cast<std::size_t>(k)] = 1;
    excluded.emplace_back(std::move(coords));
  }
  const MultiIndex extra = trailing_ones(n, q);
  std::vector<MultiIndex> out;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    MultiIndex v = from_bits(n, bits);
    bool zero_in_tail = false;
    for (int i = n - q; i < n; ++i)
      zero_in_tail = zero_in_tail || v[i] == 0;
    if (!zero_in_tail && v != extra)
      continue;
    if (std::find(excluded.begin(), excluded.end(), v) != excluded.end())
      continue;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> divisor_set(int n, int q) {
  check_row(n, q);
  std::vector<std::uint8_t> skipped(static_cast<std::size_t>(n), 0);
  skipped[0] = 1;
  for (int i = n - q; i < n; ++i)
    skipped[static_cast<std::size_t>(i)] = 1;
  const MultiIndex skip(std::move(skipped));
  std::vector<MultiIndex> out;
  for (std::uint32_t bits = 1; bits < (1u << (q + 1)); ++bits) {
    std::vector<std::uint8_t> coords(static_cast<std::size_t>(n), 0);
    coords[0] = bits & 1u;
    for (int k = 0; k < q; ++k)
      coords[static_cast<std::size_t>(n - q + k)] = (bits >> (k + 1)) & 1u;
    MultiIndex v(std::move(coords));
    if (v != skip)
      out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> kp1_annihilator_set(const DimVector& a) {
  const int n = a.size();
  if (n < 2)
    throw std::invalid_argument("row-1 witnesses need at least two factors");
  std::vector<MultiIndex> out;
  for (const MultiIndex& v : poset_elements(a)) {
    if (v.is_zero())
      continue;
    if (v[n - 1] == 0) {
      out.push_back(v);
      continue;
    }
    bool head_zero = true;
    for (int k = 0; k < n - 1; ++k)
      head_zero = head_zero && v[k] == 0;
    if (head_zero && v[n - 1] >= 2)
      out.push_back(v);
  }
  return out;
}

CycleSpec ones_cycle_spec(int n, int q, int p) {
  auto a_set = annihilator_set(n, q);
  auto d_set = divisor_set(n, q);
  const int low = (1 << (q + 1)) - 2;
  const int high = static_cast<int>(a_set.size());
  if (p < low || p > high)
    throw std::invalid_argument("p=" + std::to_string(p) + " outside [" + std::to_string(low) + ", " +
                                std::to_string(high) + "]");
  std::vector<MultiIndex> rest;
  for (const auto& v : a_set)
    if (!std::binary_search(d_set.begin(), d_set.end(), v))
      rest.push_back(v);
  std::sort(rest.begin(), rest.end(), lex_less);
  std::vector<MultiIndex> support = d_set;
  support.insert(support.end(), rest.begin(), rest.begin() + (p - low));
  std::sort(support.begin(), support.end());
  return CycleSpec{ones(n), p, q, std::move(support), witness_core(n, q)};
}

CycleSpec kp1_cycle_spec(const DimVector& a, int p) {
  auto v_set = kp1_annihilator_set(a);
  if (p < 1 || p > static_cast<int>(v_set.size()))
    throw std::invalid_argument("p=" + std::to_string(p) + " outside [1, " +
                                std::to_string(v_set.size()) + "]");
  std::vector<MultiIndex> support(v_set.begin(), v_set.begin() + p);
  std::sort(support.begin(), support.end());
  return CycleSpec{a, p, 1, std::move(support), Monomial({trailing_ones(a.size(), 1)})};
}

KoszulVector build_cycle(const KoszulComplex& complex, const CycleSpec& spec) {
  const Straightener& ring = complex.ring();
  if (spec.a != ring.dims())
    throw std::invalid_argument("cycle and complex are over different Segre products");
  if (static_cast<int>(spec.support.size()) != spec.p || spec.core.degree() != spec.q)
    throw std::invalid_argument("cycle shape does not match (p, q)");
  if (!independent_in_R1(spec.a, spec.support))
    throw std::invalid_argument("cycle support is linearly dependent in degree 1");

  const auto& b1 = ring.basis_R1();
  // wedge products in progress, keyed by subset bitmask
  std::map<std::uint64_t, Integer> wedge{{0, Integer(1)}};
  for (const MultiIndex& v : spec.support) {
    std::map<std::uint64_t, Integer> next;
    for (const auto& [m, c] : ring.expand_in_B1(v)) {
      const auto pos = std::lower_bound(b1.begin(), b1.end(), m.factors().front()) - b1.begin();
      const std::uint64_t bit = std::uint64_t{1} << pos;
      for (const auto& [mask, coefficient] : wedge) {
        if (mask & bit)
          continue;
        const int above = std::popcount(mask & ~(bit | (bit - 1)));
        Integer& slot = next[mask | bit];
        slot += above % 2 == 0 ? Integer(coefficient * c) : Integer(-coefficient * c);
      }
    }
    std::erase_if(next, [](const auto& e) { return e.second == 0; });
    wedge = std::move(next);
  }

  KoszulVector out;
  for (const auto& [m, c] : ring.straighten(spec.core)) {
    const long j = ring.index_of(m);
    for (const auto& [mask, coefficient] : wedge)
      out[KoszulBasisVector{mask, static_cast<std::uint32_t>(j)}] += coefficient * c;
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

WitnessReport verify_vector(const KoszulComplex& complex, int p, int q, const KoszulVector& c) {
  WitnessReport report;
  report.is_cycle = complex.apply(p, q, c).empty();
  if (c.empty()) {
    report.is_boundary = true;
    return report;
  }
  const int g = complex.grade(q, c.begin()->first);
  for (const auto& [b, value] : c)
    if (complex.grade(q, b) != g)
      throw std::invalid_argument("vector is not homogeneous in rank");
  if (q == 0) {
    report.is_boundary = false;
    return report;
  }
  auto block = complex.differential_block(p + 1, q - 1, g);
  const std::size_t before = rank_exact(block.matrix);
  std::vector<std::pair<std::size_t, Integer>> column;
  for (const auto& [b, value] : c) {
    auto it = std::lower_bound(block.codomain.begin(), block.codomain.end(), b, koszul_order);
    if (it == block.codomain.end() || !(*it == b))
      throw std::logic_error("vector term missing from the boundary block");
    column.emplace_back(static_cast<std::size_t>(it - block.codomain.begin()), value);
  }
  SparseIntMatrix augmented = block.matrix;
  augmented.append_column(column);
  report.is_boundary = rank_exact(augmented) == before;
  return report;
}

WitnessReport verify_witness(const KoszulComplex& complex, const CycleSpec& spec) {
  return verify_vector(complex, spec.p, spec.q, build_cycle(complex, spec));
}

WitnessReport verify_witness(const CycleSpec& spec) {
  Straightener ring(spec.a);
  KoszulComplex complex(ring);
  return verify_witness(complex, spec);
}

} // namespace segre
