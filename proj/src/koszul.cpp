#include "segre/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

namespace segre {

namespace {

struct BasisHash {
  std::size_t operator()(const KoszulBasisVector& v) const noexcept {
    std::uint64_t h = v.subset * 0x9e3779b97f4a7c15ULL;
    h ^= (h >> 29) + v.monomial * 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

using BasisIndex = std::unordered_map<KoszulBasisVector, std::uint32_t, BasisHash>;

BasisIndex index_basis(const std::vector<KoszulBasisVector>& basis) {
  BasisIndex index;
  index.reserve(basis.size());
  for (std::uint32_t i = 0; i < basis.size(); ++i)
    index.emplace(basis[i], i);
  return index;
}

std::uint64_t saturating_mul(std::uint64_t x, std::uint64_t y) {
  unsigned __int128 r = static_cast<unsigned __int128>(x) * y;
  return r > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                       : static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_add(std::uint64_t x, std::uint64_t y) {
  return x > std::numeric_limits<std::uint64_t>::max() - y ? std::numeric_limits<std::uint64_t>::max()
                                                           : x + y;
}

} // namespace

bool koszul_order(const KoszulBasisVector& x, const KoszulBasisVector& y) {
  if (x.subset != y.subset) {
    const int px = std::popcount(x.subset), py = std::popcount(y.subset);
    if (px != py)
      return px < py;
    const std::uint64_t diff = x.subset ^ y.subset;
    const std::uint64_t low = diff & (~diff + 1);
    return (x.subset & low) != 0;
  }
  return x.monomial < y.monomial;
}

KoszulComplex::KoszulComplex(const Straightener& ring) : ring_(ring) {
  const auto& b1 = ring_.basis_R1();
  if (b1.size() > 63)
    throw std::invalid_argument("more than 63 degree-1 generators");
  generators_ = static_cast<int>(b1.size());
  for (const auto& v : b1)
    generator_weight_.push_back(v.weight());

  const int top = max_q();
  monomial_rank_.resize(static_cast<std::size_t>(top + 1));
  monomials_of_rank_.resize(static_cast<std::size_t>(top + 1));
  products_.resize(static_cast<std::size_t>(top + 1));
  for (int q = 0; q <= top; ++q) {
    const auto& basis = ring_.standard_basis(q);
    auto& ranks = monomial_rank_[static_cast<std::size_t>(q)];
    auto& by_rank = monomials_of_rank_[static_cast<std::size_t>(q)];
    for (std::uint32_t j = 0; j < basis.size(); ++j) {
      const int r = basis[j].rank();
      ranks.push_back(r);
      if (by_rank.size() <= static_cast<std::size_t>(r))
        by_rank.resize(static_cast<std::size_t>(r) + 1);
      by_rank[static_cast<std::size_t>(r)].push_back(j);
    }
    auto& table = products_[static_cast<std::size_t>(q)];
    table.resize(basis.size() * b1.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      for (std::size_t i = 0; i < b1.size(); ++i) {
        Product& out = table[j * b1.size() + i];
        for (const auto& [m, c] : ring_.multiply(b1[i], basis[j])) {
          long idx = ring_.index_of(m);
          if (idx < 0)
            throw std::logic_error("straightening returned a non-standard monomial");
          out.emplace_back(static_cast<std::uint32_t>(idx), c);
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
      }
  }
}

bool KoszulComplex::in_range(int p, int q) const {
  return p >= 0 && p <= generators_ && q >= 0 && q <= max_q();
}

std::uint64_t KoszulComplex::dimension(int p, int q) const {
  if (!in_range(p, q))
    return 0;
  std::uint64_t binom = 1;
  for (int k = 1; k <= p; ++k)
    binom = binom * static_cast<std::uint64_t>(generators_ - p + k) / static_cast<std::uint64_t>(k);
  return saturating_mul(binom, ring_.standard_basis(q).size());
}

std::vector<std::uint64_t> KoszulComplex::subset_weight_counts(int p) const {
  // count[k][w]: k-subsets of the generators seen so far with weight sum w
  const int max_weight = std::accumulate(generator_weight_.begin(), generator_weight_.end(), 0);
  std::vector<std::vector<std::uint64_t>> count(
      static_cast<std::size_t>(p + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(max_weight + 1), 0));
  count[0][0] = 1;
  for (int w : generator_weight_)
    for (int k = p; k >= 1; --k)
      for (int s = max_weight; s >= w; --s)
        count[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)] =
            saturating_add(count[static_cast<std::size_t>(k)][static_cast<std::size_t>(s)],
                           count[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(s - w)]);
  return count[static_cast<std::size_t>(p)];
}

std::vector<std::uint64_t> KoszulComplex::grade_counts(int p, int q) const {
  if (!in_range(p, q))
    return {};
  const auto subsets = subset_weight_counts(p);
  const auto& by_rank = monomials_of_rank_[static_cast<std::size_t>(q)];
  std::vector<std::uint64_t> out(subsets.size() + by_rank.size(), 0);
  for (std::size_t w = 0; w < subsets.size(); ++w)
    for (std::size_t r = 0; r < by_rank.size(); ++r)
      out[w + r] = saturating_add(out[w + r], saturating_mul(subsets[w], by_rank[r].size()));
  while (!out.empty() && out.back() == 0)
    out.pop_back();
  return out;
}

std::vector<int> KoszulComplex::grades(int p, int q) const {
  std::vector<int> out;
  const auto counts = grade_counts(p, q);
  for (std::size_t g = 0; g < counts.size(); ++g)
    if (counts[g] != 0)
      out.push_back(static_cast<int>(g));
  return out;
}

int KoszulComplex::grade(int q, const KoszulBasisVector& v) const {
  int g = monomial_rank_.at(static_cast<std::size_t>(q)).at(v.monomial);
  for (std::uint64_t s = v.subset; s; s &= s - 1)
    g += generator_weight_[static_cast<std::size_t>(std::countr_zero(s))];
  return g;
}

std::vector<std::uint64_t> KoszulComplex::subsets_of_weight(int p, int weight) const {
  std::vector<std::uint64_t> out;
  auto rec = [&](auto&& self, int start, int remaining, int left, std::uint64_t mask) -> void {
    if (remaining == 0) {
      if (left == 0)
        out.push_back(mask);
      return;
    }
    if (left < remaining)
      return;
    for (int i = start; i <= generators_ - remaining; ++i) {
      const int w = generator_weight_[static_cast<std::size_t>(i)];
      if (w <= left)
        self(self, i + 1, remaining - 1, left - w, mask | (std::uint64_t{1} << i));
    }
  };
  rec(rec, 0, p, weight, 0);
  return out;
}

std::vector<KoszulBasisVector> KoszulComplex::block_basis(int p, int q, int g) const {
  std::vector<KoszulBasisVector> out;
  if (!in_range(p, q))
    return out;
  const auto& by_rank = monomials_of_rank_[static_cast<std::size_t>(q)];
  for (std::size_t r = 0; r < by_rank.size() && static_cast<int>(r) <= g; ++r) {
    if (by_rank[r].empty())
      continue;
    for (std::uint64_t mask : subsets_of_weight(p, g - static_cast<int>(r)))
      for (std::uint32_t j : by_rank[r])
        out.push_back({mask, j});
  }
  std::sort(out.begin(), out.end(), koszul_order);
  return out;
}

std::vector<KoszulBasisVector> KoszulComplex::basis(int p, int q) const {
  std::vector<KoszulBasisVector> out;
  if (!in_range(p, q))
    return out;
  const std::size_t monomials = ring_.standard_basis(q).size();
  std::vector<int> idx(static_cast<std::size_t>(p));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int i : idx)
      mask |= std::uint64_t{1} << i;
    for (std::uint32_t j = 0; j < monomials; ++j)
      out.push_back({mask, j});
    int k = p - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == generators_ - p + k)
      --k;
    if (k < 0)
      break;
    ++idx[static_cast<std::size_t>(k)];
    for (int m = k + 1; m < p; ++m)
      idx[static_cast<std::size_t>(m)] = idx[static_cast<std::size_t>(m - 1)] + 1;
  }
  return out;
}

template <class Emit>
void KoszulComplex::expand(int q, const KoszulBasisVector& v, Emit&& emit) const {
  if (q + 1 > max_q())
    return;
  const auto& table = products_[static_cast<std::size_t>(q)];
  const auto n = static_cast<std::size_t>(generators_);
  int position = 0;
  for (std::uint64_t s = v.subset; s; s &= s - 1, ++position) {
    const int i = std::countr_zero(s);
    const std::uint64_t rest = v.subset & ~(std::uint64_t{1} << i);
    const bool negative = position % 2 == 1;
    for (const auto& [target, c] : table[v.monomial * n + static_cast<std::size_t>(i)])
      emit(KoszulBasisVector{rest, target}, negative ? Integer(-c) : c);
  }
}

SparseIntMatrix KoszulComplex::differential(int p, int q) const {
  const auto domain = p >= 1 ? basis(p, q) : std::vector<KoszulBasisVector>{};
  const auto codomain = p >= 1 ? basis(p - 1, q + 1) : std::vector<KoszulBasisVector>{};
  const BasisIndex row_of = index_basis(codomain);
  std::vector<SparseIntMatrix::Row> rows(codomain.size());
  for (std::uint32_t col = 0; col < domain.size(); ++col)
    expand(q, domain[col], [&](const KoszulBasisVector& t, const Integer& c) {
      rows[row_of.at(t)].emplace_back(col, c);
    });
  SparseIntMatrix m(codomain.size(), domain.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    m.set_row(r, std::move(rows[r]));
  return m;
}

KoszulVector KoszulComplex::apply(int p, int q, const KoszulVector& v) const {
  KoszulVector out;
  for (const auto& [b, coefficient] : v) {
    if (std::popcount(b.subset) != p)
      throw std::invalid_argument("vector term has the wrong wedge degree");
    expand(q, b, [&](const KoszulBasisVector& t, const Integer& c) {
      Integer& slot = out[t];
      slot += coefficient * c;
      if (slot == 0)
        out.erase(t);
    });
  }
  return out;
}

KoszulComplex::Block KoszulComplex::differential_block(int p, int q, int g) const {
  Block block;
  if (p < 1)
    return block;
  block.domain = block_basis(p, q, g);
  block.codomain = block_basis(p - 1, q + 1, g);
  const BasisIndex row_of = index_basis(block.codomain);
  std::vector<SparseIntMatrix::Row> rows(block.codomain.size());
  for (std::uint32_t col = 0; col < block.domain.size(); ++col)
    expand(q, block.domain[col], [&](const KoszulBasisVector& t, const Integer& c) {
      rows[row_of.at(t)].emplace_back(col, c);
    });
  block.matrix = SparseIntMatrix(block.codomain.size(), block.domain.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    block.matrix.set_row(r, std::move(rows[r]));
  return block;
}

std::uint64_t KoszulComplex::potential_entries(int p, int q) const {
  if (p < 1)
    return 0;
  const auto cols = grade_counts(p, q);
  const auto rows = grade_counts(p - 1, q + 1);
  std::uint64_t total = 0;
  for (std::size_t g = 0; g < std::min(cols.size(), rows.size()); ++g)
    total = saturating_add(total, saturating_mul(cols[g], rows[g]));
  return total;
}

void KoszulComplex::check_budget(int p, int q, std::uint64_t budget) const {
  const std::uint64_t need = potential_entries(p, q);
  if (need > budget)
    throw BudgetExceeded("differential d(" + std::to_string(p) + "," + std::to_string(q) +
                         ") of Seg(" + ring_.dims().to_string() + ") needs " +
                         std::to_string(need) + " potential entries; budget is " +
                         std::to_string(budget));
}

std::uint64_t KoszulComplex::differential_rank(int p, int q, const RankEngine& engine,
                                               std::uint64_t budget) const {
  if (p < 1 || dimension(p, q) == 0 || dimension(p - 1, q + 1) == 0)
    return 0;
  check_budget(p, q, budget);
  std::uint64_t rank = 0;
  const auto rows = grade_counts(p - 1, q + 1);
  for (int g : grades(p, q)) {
    if (static_cast<std::size_t>(g) >= rows.size() || rows[static_cast<std::size_t>(g)] == 0)
      continue;
    rank += engine.rank(differential_block(p, q, g).matrix);
  }
  return rank;
}

std::uint64_t KoszulComplex::homology_dim(int p, int q, const RankEngine& engine,
                                          std::uint64_t budget) const {
  const std::uint64_t dim = dimension(p, q);
  if (dim == 0)
    return 0;
  const std::uint64_t out = differential_rank(p, q, engine, budget);
  const std::uint64_t in = differential_rank(p + 1, q - 1, engine, budget);
  return dim - out - in;
}

std::uint64_t kpq_dim(const DimVector& a, int p, int q, RankBackend backend, std::uint64_t budget) {
  Straightener ring(a);
  KoszulComplex complex(ring);
  return complex.homology_dim(p, q, RankEngine(backend), budget);
}

SparseIntMatrix differential(const DimVector& a, int p, int q) {
  Straightener ring(a);
  return KoszulComplex(ring).differential(p, q);
}

BettiTable betti_table(const DimVector& a, const BettiOptions& options) {
  Straightener ring(a);
  KoszulComplex complex(ring);
  return betti_table(complex, options);
}

BettiTable betti_table(const KoszulComplex& complex, const BettiOptions& options) {
  const int pmax = options.pmax.value_or(complex.generators());
  const int qmax = options.qmax.value_or(complex.max_q());
  if (pmax < 0 || qmax < 0)
    throw std::invalid_argument("pmax and qmax must be non-negative");

  // Differentials d(p, q) needed by the window, each with a nonzero shape.
  std::set<std::pair<int, int>> needed;
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q) {
      if (complex.dimension(p, q) == 0)
        continue;
      for (auto [dp, dq] : {std::pair{p, q}, std::pair{p + 1, q - 1}})
        if (dp >= 1 && complex.dimension(dp, dq) != 0 && complex.dimension(dp - 1, dq + 1) != 0)
          needed.insert({dp, dq});
    }
  for (const auto& [p, q] : needed)
    complex.check_budget(p, q, options.budget);

  struct Job {
    std::pair<int, int> key;
    int grade;
    std::uint64_t size;
  };
  std::vector<Job> jobs;
  for (const auto& key : needed) {
    const auto& [p, q] = key;
    const auto cols = complex.grade_counts(p, q);
    const auto rows = complex.grade_counts(p - 1, q + 1);
    for (std::size_t g = 0; g < std::min(cols.size(), rows.size()); ++g)
      if (cols[g] != 0 && rows[g] != 0)
        jobs.push_back({key, static_cast<int>(g), cols[g] * rows[g]});
  }
  // largest blocks first so that threads finish together
  std::stable_sort(jobs.begin(), jobs.end(), [](const Job& x, const Job& y) { return x.size > y.size; });
  const RankEngine engine(options.backend, options.seed);
  std::vector<std::uint64_t> result(jobs.size(), 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= jobs.size())
        return;
      try {
        const auto block = complex.differential_block(jobs[j].key.first, jobs[j].key.second, jobs[j].grade);
        result[j] = engine.rank(block.matrix);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure)
          failure = std::current_exception();
        next = jobs.size();
      }
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto& t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);

  std::map<std::pair<int, int>, std::uint64_t> rank;
  for (std::size_t j = 0; j < jobs.size(); ++j)
    rank[jobs[j].key] += result[j];
  auto rank_of = [&](int p, int q) {
    auto it = rank.find({p, q});
    return it == rank.end() ? std::uint64_t{0} : it->second;
  };

  BettiTable table(complex.ring().dims(), pmax, qmax);
  for (int p = 0; p <= pmax; ++p)
    for (int q = 0; q <= qmax; ++q) {
      const std::uint64_t dim = complex.dimension(p, q);
      table.set(p, q, dim == 0 ? 0 : dim - rank_of(p, q) - rank_of(p + 1, q - 1));
    }
  return table;
}

bool hilbert_consistency(const DimVector& a, const BettiTable& table) {
  const int n_gens = static_cast<int>(basis_R1(a).size());
  if (table.pmax() < n_gens || table.qmax() < a.regularity())
    return false;
  std::vector<Integer> lhs{Integer(0)};
  for (const auto& [degree, entries] : standard_basis_indices(a)) {
    if (lhs.size() <= static_cast<std::size_t>(degree))
      lhs.resize(static_cast<std::size_t>(degree) + 1, Integer(0));
    lhs[static_cast<std::size_t>(degree)] += static_cast<unsigned long>(entries.size());
  }
  for (int k = 0; k < n_gens; ++k) {
    std::vector<Integer> next(lhs.size() + 1, Integer(0));
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      next[i] += lhs[i];
      next[i + 1] -= lhs[i];
    }
    lhs = std::move(next);
  }
  std::vector<Integer> rhs(lhs.size(), Integer(0));
  for (const auto& [key, value] : table.cells()) {
    const auto t = static_cast<std::size_t>(key.first + key.second);
    if (t >= rhs.size())
      rhs.resize(t + 1, Integer(0));
    Integer v(std::to_string(value));
    rhs[t] += key.first % 2 == 0 ? v : Integer(-v);
  }
  rhs.resize(std::max(rhs.size(), lhs.size()), Integer(0));
  lhs.resize(rhs.size(), Integer(0));
  return lhs == rhs;
}

} // namespace segre
