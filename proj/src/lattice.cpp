#include "segre/lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace segre {

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string item;
  auto flush = [&] {
    std::size_t lo = item.find_first_not_of(" \t");
    std::size_t hi = item.find_last_not_of(" \t");
    if (lo == std::string::npos)
      throw std::invalid_argument("empty entry in integer list");
    std::string trimmed = item.substr(lo, hi - lo + 1);
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(trimmed, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("not an integer: '" + trimmed + "'");
    }
    if (used != trimmed.size())
      throw std::invalid_argument("not an integer: '" + trimmed + "'");
    out.push_back(value);
    item.clear();
  };
  for (char c : text) {
    if (c == ',')
      flush();
    else
      item.push_back(c);
  }
  flush();
  return out;
}

void require_same_length(const MultiIndex& u, const MultiIndex& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("multi-index length mismatch: " + u.to_string() + " vs " +
                                v.to_string());
}

} // namespace

// ---------------------------------------------------------------- DimVector

DimVector::DimVector(std::vector<int> raw) {
  for (int x : raw) {
    if (x < 0)
      throw std::invalid_argument("dimension vector entries must be non-negative");
    if (x > kMaxExtent)
      throw std::invalid_argument("dimension vector entry exceeds " +
                                  std::to_string(kMaxExtent));
  }
  std::erase(raw, 0);
  if (raw.empty())
    throw std::invalid_argument("dimension vector needs a positive entry");
  std::stable_sort(raw.begin(), raw.end(), std::greater<>());
  extents_ = std::move(raw);
}

DimVector DimVector::parse(std::string_view text) { return DimVector(parse_int_list(text)); }

bool DimVector::is_normalized(std::span<const int> raw) {
  if (std::find(raw.begin(), raw.end(), 0) != raw.end())
    return false;
  return std::is_sorted(raw.begin(), raw.end(), std::greater<>());
}

std::vector<int> DimVector::normalizing_permutation(std::span<const int> raw) {
  std::vector<int> order;
  for (int k = 0; k < static_cast<int>(raw.size()); ++k)
    if (raw[static_cast<std::size_t>(k)] != 0)
      order.push_back(k);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return raw[static_cast<std::size_t>(x)] > raw[static_cast<std::size_t>(y)];
  });
  return order;
}

int DimVector::total() const { return std::accumulate(extents_.begin(), extents_.end(), 0); }

std::uint64_t DimVector::poset_size() const {
  std::uint64_t n = 1;
  for (int x : extents_)
    n *= static_cast<std::uint64_t>(x + 1);
  return n;
}

int DimVector::regularity() const { return total() - extents_.front(); }

std::string DimVector::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < extents_.size(); ++k) {
    if (k)
      s += ',';
    s += std::to_string(extents_[k]);
  }
  return s;
}

// --------------------------------------------------------------- MultiIndex

MultiIndex MultiIndex::from_ints(std::span<const int> coords) {
  std::vector<std::uint8_t> c;
  c.reserve(coords.size());
  for (int x : coords) {
    if (x < 0 || x > kMaxExtent)
      throw std::invalid_argument("multi-index coordinate out of range: " + std::to_string(x));
    c.push_back(static_cast<std::uint8_t>(x));
  }
  return MultiIndex(std::move(c));
}

MultiIndex MultiIndex::top(const DimVector& a) { return from_ints(a.extents()); }

MultiIndex MultiIndex::parse(std::string_view text) { return from_ints(parse_int_list(text)); }

int MultiIndex::weight() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }

bool MultiIndex::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::uint8_t x) { return x == 0; });
}

bool MultiIndex::fits(const DimVector& a) const {
  if (size() != a.size())
    return false;
  for (int k = 0; k < size(); ++k)
    if ((*this)[k] > a[k])
      return false;
  return true;
}

std::string MultiIndex::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k)
      s += ',';
    s += std::to_string(coords_[k]);
  }
  return s;
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
  if (auto c = weight() <=> other.weight(); c != 0)
    return c;
  return coords_ <=> other.coords_;
}

// ------------------------------------------------------------ poset algebra

bool leq(const MultiIndex& u, const MultiIndex& v) {
  require_same_length(u, v);
  for (int k = 0; k < u.size(); ++k)
    if (u[k] > v[k])
      return false;
  return true;
}

bool less(const MultiIndex& u, const MultiIndex& v) { return leq(u, v) && u != v; }

std::pair<MultiIndex, MultiIndex> meet_join(const MultiIndex& u, const MultiIndex& v) {
  require_same_length(u, v);
  std::vector<std::uint8_t> lo(static_cast<std::size_t>(u.size()));
  std::vector<std::uint8_t> hi(lo.size());
  for (int k = 0; k < u.size(); ++k) {
    lo[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(std::min(u[k], v[k]));
    hi[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(std::max(u[k], v[k]));
  }
  return {MultiIndex(std::move(lo)), MultiIndex(std::move(hi))};
}

int first_diff(const MultiIndex& u, const MultiIndex& v) {
  if (!less(u, v))
    throw std::domain_error("first_diff needs u < v: " + u.to_string() + " vs " + v.to_string());
  for (int k = 0; k < u.size(); ++k)
    if (u[k] < v[k])
      return k + 1;
  throw std::logic_error("unreachable");
}

int last_diff(const MultiIndex& u, const MultiIndex& v) {
  if (!less(u, v))
    throw std::domain_error("last_diff needs u < v: " + u.to_string() + " vs " + v.to_string());
  for (int k = u.size() - 1; k >= 0; --k)
    if (u[k] < v[k])
      return k + 1;
  throw std::logic_error("unreachable");
}

// ------------------------------------------------------------- LatticePath

LatticePath::LatticePath(int dimension, std::vector<std::uint8_t> steps)
    : dimension_(dimension), steps_(std::move(steps)) {
  if (dimension_ < 1)
    throw std::invalid_argument("lattice path needs dimension >= 1");
  for (std::uint8_t s : steps_)
    if (s < 1 || s > dimension_)
      throw std::invalid_argument("lattice path step out of range");
}

MultiIndex LatticePath::point(int t) const {
  if (t < 0 || t > length())
    throw std::out_of_range("lattice path position out of range");
  std::vector<std::uint8_t> p(static_cast<std::size_t>(dimension_), 0);
  for (int i = 0; i < t; ++i)
    ++p[steps_[static_cast<std::size_t>(i)] - 1u];
  return MultiIndex(std::move(p));
}

std::vector<int> LatticePath::descents() const {
  std::vector<int> out;
  for (std::size_t t = 0; t + 1 < steps_.size(); ++t)
    if (steps_[t] > steps_[t + 1])
      out.push_back(static_cast<int>(t) + 1);
  return out;
}

std::vector<MultiIndex> LatticePath::descent_support() const {
  std::vector<MultiIndex> out;
  std::vector<std::uint8_t> p(static_cast<std::size_t>(dimension_), 0);
  for (std::size_t t = 0; t < steps_.size(); ++t) {
    ++p[steps_[t] - 1u];
    if (t + 1 < steps_.size() && steps_[t] > steps_[t + 1])
      out.emplace_back(p);
  }
  return out;
}

std::string LatticePath::steps_string() const {
  std::string s;
  for (std::size_t t = 0; t < steps_.size(); ++t) {
    if (t && dimension_ > 9)
      s += ' ';
    s += std::to_string(steps_[t]);
  }
  return s;
}

std::vector<LatticePath> enumerate_paths(const DimVector& a) {
  std::vector<std::uint8_t> steps;
  for (int k = 0; k < a.size(); ++k)
    steps.insert(steps.end(), static_cast<std::size_t>(a[k]), static_cast<std::uint8_t>(k + 1));
  std::vector<LatticePath> out;
  do {
    out.emplace_back(a.size(), steps);
  } while (std::next_permutation(steps.begin(), steps.end()));
  return out;
}

std::uint64_t multinomial(std::span<const int> parts) {
  std::uint64_t result = 1;
  std::uint64_t seen = 0;
  for (int part : parts) {
    for (int i = 1; i <= part; ++i) {
      ++seen;
      // result * seen / i stays integral at every step (binomial prefix)
      unsigned __int128 next = static_cast<unsigned __int128>(result) * seen / static_cast<unsigned>(i);
      if (next > std::numeric_limits<std::uint64_t>::max())
        throw std::overflow_error("multinomial coefficient overflows 64 bits");
      result = static_cast<std::uint64_t>(next);
    }
  }
  return result;
}

LatticePath no_descent_path(const MultiIndex& v) {
  std::vector<std::uint8_t> steps;
  for (int k = 0; k < v.size(); ++k)
    steps.insert(steps.end(), static_cast<std::size_t>(v[k]), static_cast<std::uint8_t>(k + 1));
  return LatticePath(v.size(), std::move(steps));
}

LatticePath concat_paths(std::span<const MultiIndex> points) {
  if (points.empty())
    throw std::invalid_argument("concat_paths needs at least one point");
  if (!points.front().is_zero())
    throw std::invalid_argument("chain must start at 0");
  const int n = points.front().size();
  std::vector<std::uint8_t> steps;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const MultiIndex& u = points[i];
    const MultiIndex& w = points[i + 1];
    if (!less(u, w))
      throw std::invalid_argument("chain is not strictly increasing at " + w.to_string());
    for (int k = 0; k < n; ++k)
      steps.insert(steps.end(), static_cast<std::size_t>(w[k] - u[k]),
                   static_cast<std::uint8_t>(k + 1));
  }
  return LatticePath(n, std::move(steps));
}

std::map<int, std::vector<StandardBasisEntry>> standard_basis_indices(const DimVector& a) {
  std::map<int, std::vector<StandardBasisEntry>> out;
  for (LatticePath& path : enumerate_paths(a)) {
    std::vector<MultiIndex> support = path.descent_support();
    out[static_cast<int>(support.size())].push_back({std::move(path), std::move(support)});
  }
  for (auto& [degree, entries] : out)
    std::sort(entries.begin(), entries.end(),
              [](const StandardBasisEntry& x, const StandardBasisEntry& y) {
                return x.support < y.support;
              });
  return out;
}

std::vector<MultiIndex> poset_elements(const DimVector& a) {
  std::vector<MultiIndex> out;
  out.reserve(a.poset_size());
  std::vector<std::uint8_t> c(static_cast<std::size_t>(a.size()), 0);
  while (true) {
    out.emplace_back(c);
    int k = a.size() - 1;
    while (k >= 0 && c[static_cast<std::size_t>(k)] == a[k])
      c[static_cast<std::size_t>(k--)] = 0;
    if (k < 0)
      break;
    ++c[static_cast<std::size_t>(k)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiIndex> basis_R1(const DimVector& a) {
  const MultiIndex zero = MultiIndex::zero(a.size());
  const MultiIndex top = MultiIndex::top(a);
  std::vector<MultiIndex> out;
  for (MultiIndex& v : poset_elements(a)) {
    if (v == zero || v == top)
      continue;
    if (last_diff(zero, v) > first_diff(v, top))
      out.push_back(std::move(v));
  }
  return out;
}

bool independent_in_R1(const DimVector& a, std::span<const MultiIndex> vs) {
  std::set<MultiIndex> chosen;
  for (const MultiIndex& v : vs) {
    if (!v.fits(a))
      throw std::invalid_argument("multi-index " + v.to_string() + " outside P(" +
                                  a.to_string() + ")");
    if (!chosen.insert(v).second)
      return false;
  }
  std::vector<std::uint64_t> remaining(static_cast<std::size_t>(a.total()) + 1, 0);
  for (const MultiIndex& v : poset_elements(a))
    if (!chosen.contains(v))
      ++remaining[static_cast<std::size_t>(v.weight())];
  return std::all_of(remaining.begin(), remaining.end(), [](std::uint64_t c) { return c > 0; });
}

} // namespace segre
