#include "segre/straighten.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace segre {

// ----------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<MultiIndex> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

Monomial Monomial::parse(std::string_view text) {
  std::vector<MultiIndex> factors;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token)
    factors.push_back(MultiIndex::parse(token));
  if (factors.size() > 1)
    for (const MultiIndex& v : factors)
      if (v.size() != factors.front().size())
        throw std::invalid_argument("monomial factors have different lengths");
  return Monomial(std::move(factors));
}

int Monomial::rank() const {
  int r = 0;
  for (const MultiIndex& v : factors_)
    r += v.weight();
  return r;
}

std::vector<int> Monomial::lexrk() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const MultiIndex& v : factors_)
    out.push_back(v.weight());
  return out;
}

Monomial Monomial::times(const MultiIndex& v) const {
  std::vector<MultiIndex> f = factors_;
  f.insert(std::upper_bound(f.begin(), f.end(), v), v);
  Monomial out;
  out.factors_ = std::move(f);
  return out;
}

std::string Monomial::to_string() const {
  if (factors_.empty())
    return "1";
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i)
      s += "·";
    s += "z[" + factors_[i].to_string() + "]";
  }
  return s;
}

// ------------------------------------------------------------------ LinComb

void LinComb::add(const Monomial& m, const Integer& coefficient) {
  if (coefficient == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(m, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0)
      terms_.erase(it);
  }
}

void LinComb::add_scaled(const LinComb& other, const Integer& factor) {
  if (factor == 0)
    return;
  for (const auto& [m, c] : other.terms_)
    add(m, c * factor);
}

Integer LinComb::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::string LinComb::to_string() const {
  if (terms_.empty())
    return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty())
      s += ' ';
    s += c > 0 ? "+" : "-";
    Integer magnitude = abs(c);
    s += magnitude.get_str() + " · " + m.to_string();
  }
  return s;
}

// ------------------------------------------------------------- Straightener

Straightener::Straightener(DimVector a)
    : dims_(std::move(a)), zero_(MultiIndex::zero(dims_.size())), top_(MultiIndex::top(dims_)) {
  for (MultiIndex& v : poset_elements(dims_))
    weight_classes_[v.weight()].push_back(std::move(v));
  for (auto& [degree, entries] : standard_basis_indices(dims_)) {
    if (static_cast<int>(standard_.size()) <= degree)
      standard_.resize(static_cast<std::size_t>(degree) + 1);
    for (StandardBasisEntry& e : entries) {
      Monomial m(std::move(e.support));
      standard_index_.emplace(m, static_cast<long>(standard_[static_cast<std::size_t>(degree)].size()));
      standard_[static_cast<std::size_t>(degree)].push_back(std::move(m));
    }
  }
  basis_r1_ = segre::basis_R1(dims_);
}

void Straightener::check_factor(const MultiIndex& v) const {
  if (!v.fits(dims_))
    throw std::invalid_argument("factor z[" + v.to_string() + "] is not a point of P(" +
                                dims_.to_string() + ")");
}

int Straightener::max_violation(const std::vector<MultiIndex>& chain) const {
  const int r = static_cast<int>(chain.size());
  auto at = [&](int i) -> const MultiIndex& {
    if (i == 0)
      return zero_;
    if (i == r + 1)
      return top_;
    return chain[static_cast<std::size_t>(i) - 1];
  };
  for (int i = r; i >= 1; --i) {
    const MultiIndex& below = at(i - 1);
    const MultiIndex& here = at(i);
    const MultiIndex& above = at(i + 1);
    // A repeated factor leaves f or l undefined; such an index is rewritten.
    if (below == here || here == above)
      return i;
    if (first_diff(here, above) >= last_diff(below, here))
      return i;
  }
  return 0;
}

bool Straightener::is_standard(const Monomial& m) const {
  const auto& f = m.factors();
  for (const MultiIndex& v : f) {
    check_factor(v);
    if (v == zero_ || v == top_)
      return false;
  }
  for (std::size_t i = 0; i + 1 < f.size(); ++i)
    if (!less(f[i], f[i + 1]))
      return false;
  return max_violation(f) == 0;
}

LinComb Straightener::straighten(const Monomial& m) const {
  for (const MultiIndex& v : m.factors())
    check_factor(v);
  std::vector<Monomial> stack;
  return straighten_rec(m, stack);
}

LinComb Straightener::straighten_rec(const Monomial& m, std::vector<Monomial>& stack) const {
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(m); it != cache_.end())
      return it->second;
  }
  const auto& f = m.factors();
  if (!f.empty() && (f.front() == zero_ || f.back() == top_))
    return {};
  if (std::find(stack.begin(), stack.end(), m) != stack.end())
    throw std::logic_error("straightening revisited " + m.to_string() + " over P(" +
                           dims_.to_string() + ")");
  stack.push_back(m);

  LinComb result;
  const std::vector<int> rank_before = m.lexrk();

  // Step 1: replace the first incomparable adjacent pair by (min, max).
  std::size_t incomparable = f.size();
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (!leq(f[i], f[i + 1])) {
      incomparable = i;
      break;
    }
  }
  if (incomparable < f.size()) {
    auto [lo, hi] = meet_join(f[incomparable], f[incomparable + 1]);
    std::vector<MultiIndex> next = f;
    next[incomparable] = std::move(lo);
    next[incomparable + 1] = std::move(hi);
    Monomial child(std::move(next));
    if (!(child.lexrk() < rank_before))
      throw std::logic_error("straightening step failed to lower the lexicographic rank of " +
                             m.to_string());
    result = straighten_rec(child, stack);
  } else if (int i = max_violation(f); i > 0) {
    // Step 2: rewrite the factor at the largest offending index with the
    // linear relation of its weight class.
    const MultiIndex& old = f[static_cast<std::size_t>(i) - 1];
    for (const MultiIndex& v : weight_classes_.at(old.weight())) {
      if (v == old)
        continue;
      std::vector<MultiIndex> next = f;
      next[static_cast<std::size_t>(i) - 1] = v;
      Monomial child(std::move(next));
      result.add_scaled(straighten_rec(child, stack), -1);
    }
  } else {
    // Step 3: the chain is the descent set of a lattice path.
    result = LinComb::of(m);
  }

  stack.pop_back();
  {
    std::unique_lock lock(cache_mutex_);
    cache_.emplace(m, result);
  }
  return result;
}

LinComb Straightener::multiply(const MultiIndex& v, const Monomial& m) const {
  check_factor(v);
  return straighten(m.times(v));
}

LinComb Straightener::expand_in_B1(const MultiIndex& v) const {
  check_factor(v);
  if (v == zero_ || v == top_)
    return {};
  if (std::binary_search(basis_r1_.begin(), basis_r1_.end(), v))
    return LinComb::of(Monomial({v}));
  LinComb out;
  for (const MultiIndex& w : weight_classes_.at(v.weight())) {
    if (w == v)
      continue;
    if (!std::binary_search(basis_r1_.begin(), basis_r1_.end(), w))
      throw std::logic_error("weight class of " + v.to_string() + " misses two basis points");
    out.add(Monomial({w}), -1);
  }
  return out;
}

bool Straightener::divides(const MultiIndex& u, const Monomial& m) const {
  check_factor(u);
  if (m.degree() == 0)
    return false;
  const int target_rank = m.rank() - u.weight();
  for (const Monomial& smaller : standard_basis(m.degree() - 1)) {
    if (smaller.rank() != target_rank)
      continue;
    if (multiply(u, smaller).coefficient(m) != 0)
      return true;
  }
  return false;
}

const std::vector<Monomial>& Straightener::standard_basis(int degree) const {
  static const std::vector<Monomial> kEmpty;
  if (degree < 0 || degree >= static_cast<int>(standard_.size()))
    return kEmpty;
  return standard_[static_cast<std::size_t>(degree)];
}

long Straightener::index_of(const Monomial& m) const {
  auto it = standard_index_.find(m);
  return it == standard_index_.end() ? -1 : it->second;
}

std::size_t Straightener::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

} // namespace segre
