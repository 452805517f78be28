#include "segre/cli.hpp"

#include "segre/bott.hpp"
#include "segre/koszul.hpp"
#include "segre/pfunc.hpp"
#include "segre/selftest.hpp"
#include "segre/witness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace segre::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (part.find_first_not_of(" \t", used) != std::string::npos)
        throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("not a comma-separated list of integers: '" + text + "'");
    }
  }
  if (out.empty())
    throw UsageError("empty dimension vector");
  return out;
}

struct ParsedDims {
  std::vector<int> raw;
  DimVector dims;
};

ParsedDims parse_dims(const std::string& text, std::ostream& err) {
  std::vector<int> raw = parse_ints(text);
  try {
    DimVector dims(raw);
    if (!DimVector::is_normalized(raw))
      err << "note: using normalized dimension vector " << dims.to_string() << '\n';
    return {std::move(raw), std::move(dims)};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// Rewrites a factor given in the user's coordinate order into normalized
/// order.
MultiIndex to_normalized(const MultiIndex& v, const std::vector<int>& raw, const DimVector& a) {
  if (v.size() != static_cast<int>(raw.size()))
    throw UsageError("factor " + v.to_string() + " has the wrong length");
  const auto perm = DimVector::normalizing_permutation(raw);
  std::vector<int> coords;
  for (int k : perm)
    coords.push_back(v[k]);
  for (std::size_t k = 0; k < raw.size(); ++k)
    if (raw[k] == 0 && v[static_cast<int>(k)] != 0)
      throw UsageError("factor " + v.to_string() + " exceeds the dimension vector");
  MultiIndex out = MultiIndex::from_ints(coords);
  if (!out.fits(a))
    throw UsageError("factor " + v.to_string() + " exceeds the dimension vector");
  return out;
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string join_row(const std::string& label, const std::vector<std::string>& cells,
                     const std::vector<std::size_t>& width, std::size_t label_width) {
  std::string line(label_width - label.size(), ' ');
  line += label;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    // "∞" occupies one column but three bytes
    const std::size_t shown = cells[i] == "∞" ? 1 : cells[i].size();
    line += ' ';
    line.append(width[i] - shown, ' ');
    line += cells[i];
  }
  return line + '\n';
}

void print_pfunc(const DimVector& a, int qmax, const std::string& format, std::ostream& out) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["a"] = std::vector<int>(a.extents().begin(), a.extents().end());
    j["rows"] = nlohmann::ordered_json::array();
    for (int q = 0; q <= qmax; ++q) {
      const ExtNat p = p_function(a, q);
      const ExtNat bound = vanishing_bound(a, q);
      nlohmann::ordered_json row;
      row["q"] = q;
      row["P"] = p.is_infinite() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(p.value());
      row["P-q"] = bound.is_infinite() ? nlohmann::ordered_json(nullptr)
                                       : nlohmann::ordered_json(bound.value());
      j["rows"].push_back(row);
    }
    out << j.dump() << '\n';
    return;
  }
  std::vector<std::string> qs, ps, bounds;
  std::vector<std::size_t> width;
  for (int q = 0; q <= qmax; ++q) {
    qs.push_back(std::to_string(q));
    ps.push_back(p_function(a, q).to_string());
    bounds.push_back(vanishing_bound(a, q).to_string());
    const auto shown = [](const std::string& s) { return s == "∞" ? std::size_t{1} : s.size(); };
    width.push_back(std::max({shown(qs.back()), shown(ps.back()), shown(bounds.back())}));
  }
  out << join_row("q:", qs, width, 4) << join_row("P:", ps, width, 4)
      << join_row("P-q:", bounds, width, 4);
}

struct CommonFlags {
  std::string backend = "modular";
  unsigned threads = default_threads();
  std::uint64_t budget = kDefaultEntryBudget;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--rank-backend", flags.backend, "exact or modular")
      ->check(CLI::IsMember({"exact", "modular"}))
      ->capture_default_str();
  cmd->add_option("--threads", flags.threads, "worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", flags.budget, "largest allowed potential entry count per differential")
      ->capture_default_str();
}

int cmd_betti(const std::string& dims_text, int pmax, int qmax, const std::string& format,
              const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const ParsedDims parsed = parse_dims(dims_text, err);
  BettiOptions options;
  if (pmax >= 0)
    options.pmax = pmax;
  if (qmax >= 0)
    options.qmax = qmax;
  options.backend = parse_rank_backend(flags.backend);
  options.threads = flags.threads;
  options.budget = flags.budget;
  const BettiTable table = betti_table(parsed.dims, options);
  out << (format == "json" ? table.to_json() : table.to_m2());
  return kExitOk;
}

int cmd_basis(const std::string& dims_text, int degree, std::ostream& out, std::ostream& err) {
  const ParsedDims parsed = parse_dims(dims_text, err);
  for (const auto& [d, entries] : standard_basis_indices(parsed.dims)) {
    if (degree >= 0 && d != degree)
      continue;
    out << "degree " << d << ": " << entries.size() << '\n';
    for (const auto& e : entries)
      out << "  " << Monomial(e.support).to_string() << "  path " << e.path.steps_string() << '\n';
  }
  return kExitOk;
}

int cmd_straighten(const std::string& dims_text, const std::string& monomial_text, std::ostream& out,
                   std::ostream& err) {
  const ParsedDims parsed = parse_dims(dims_text, err);
  std::vector<MultiIndex> factors;
  try {
    const Monomial given = Monomial::parse(monomial_text);
    for (const MultiIndex& v : given.factors())
      factors.push_back(to_normalized(v, parsed.raw, parsed.dims));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Straightener s(parsed.dims);
  out << s.straighten(Monomial(std::move(factors))).to_string() << '\n';
  return kExitOk;
}

int cmd_witness(const std::string& dims_text, int p, int q, const std::string& family_flag,
                const CommonFlags& flags, std::ostream& out, std::ostream& err) {
  const ParsedDims parsed = parse_dims(dims_text, err);
  const DimVector& a = parsed.dims;
  const bool all_ones = std::all_of(a.extents().begin(), a.extents().end(), [](int x) { return x == 1; });
  std::string family = family_flag;
  if (family.empty())
    family = q == 1 ? "row1" : "ones";
  const CycleSpec spec = [&] {
    try {
      if (family == "row1") {
        if (q != 1)
          throw std::invalid_argument("row-1 witnesses need q = 1");
        return kp1_cycle_spec(a, p);
      }
      if (!all_ones)
        throw std::invalid_argument("witnesses in row q >= 2 need a = (1,...,1)");
      return ones_cycle_spec(a.size(), q, p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  Straightener ring(a);
  KoszulComplex complex(ring);
  const WitnessReport report = verify_witness(complex, spec);
  out << "a: " << a.to_string() << '\n';
  out << "p: " << spec.p << '\n';
  out << "q: " << spec.q << '\n';
  out << "core: " << spec.core.to_string() << '\n';
  out << "support:";
  for (const auto& v : spec.support)
    out << " z[" << v.to_string() << ']';
  out << '\n';
  out << "is_cycle: " << (report.is_cycle ? "true" : "false") << '\n';
  out << "is_boundary: " << (report.is_boundary ? "true" : "false") << '\n';
  try {
    const std::uint64_t dim =
        complex.homology_dim(p, q, RankEngine(parse_rank_backend(flags.backend)), flags.budget);
    out << "kpq_dim: " << dim << '\n';
  } catch (const BudgetExceeded& e) {
    out << "kpq_dim: skipped (" << e.what() << ")\n";
  }
  return kExitOk;
}

int cmd_bott(int m, long long d, const std::string& alpha_text, std::ostream& out) {
  std::vector<long long> alpha(static_cast<std::size_t>(m - 1), 0);
  if (!alpha_text.empty())
    alpha.clear();
  if (!alpha_text.empty())
    for (int x : parse_ints(alpha_text))
      alpha.push_back(x);
  std::optional<BottCohomology> r;
  try {
    r = bwb_cohomology(d, alpha, m);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!r) {
    out << "SINGULAR\n";
    return kExitOk;
  }
  out << "H^" << r->degree << " = S_" << weight_to_string(r->dominant)
      << ", dim = " << schur_dim(r->dominant, m).get_str() << '\n';
  return kExitOk;
}

int cmd_selftest(const CommonFlags& flags, std::ostream& out) {
  SelftestOptions options;
  options.backend = parse_rank_backend(flags.backend);
  options.threads = flags.threads;
  const auto results = run_selftest(options, &out);
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
  return failed == 0 ? kExitOk : kExitRefused;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded Betti tables of Segre embeddings", "segre"};
  app.require_subcommand(1);
  app.fallthrough(false);

  CommonFlags betti_flags, witness_flags, selftest_flags;
  std::string dims, format = "m2", monomial, alpha, family;
  int pmax = -1, qmax = -1, degree = -1, p = 0, q = 0, m = 2;
  long long d = 0;

  auto* betti = app.add_subcommand("betti", "graded Betti table");
  betti->add_option("dims", dims, "dimension vector, e.g. 2,2,1")->required();
  betti->add_option("--format", format, "m2 or json")->check(CLI::IsMember({"m2", "json"}))->capture_default_str();
  betti->add_option("--pmax", pmax, "last column (default: number of degree-1 generators)")
      ->check(CLI::NonNegativeNumber);
  betti->add_option("--qmax", qmax, "last row (default: regularity)")->check(CLI::NonNegativeNumber);
  add_common(betti, betti_flags);

  std::string pfunc_format = "text";
  int pfunc_qmax = -1;
  auto* pfunc = app.add_subcommand("pfunc", "vanishing bound P(a; q) and P(a; q) - q");
  pfunc->add_option("dims", dims, "dimension vector")->required();
  pfunc->add_option("--qmax", pfunc_qmax, "last q (default: regularity + 1)")->check(CLI::NonNegativeNumber);
  pfunc->add_option("--format", pfunc_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* basis = app.add_subcommand("basis", "standard monomial basis by degree");
  basis->add_option("dims", dims, "dimension vector")->required();
  basis->add_option("--degree", degree, "only this degree")->check(CLI::NonNegativeNumber);

  auto* straighten = app.add_subcommand("straighten", "rewrite a monomial in the standard basis");
  straighten->add_option("--dims", dims, "dimension vector")->required();
  straighten->add_option("monomial", monomial, "factors separated by spaces, e.g. \"0,1 1,1\"")->required();

  auto* witness = app.add_subcommand("witness", "build and verify a non-boundary Koszul cycle");
  witness->add_option("dims", dims, "dimension vector")->required();
  witness->add_option("--p", p, "wedge degree")->required();
  witness->add_option("--q", q, "row")->required();
  witness->add_option("--family", family, "row1 or ones (default: row1 when q = 1)")
      ->check(CLI::IsMember({"row1", "ones"}));
  add_common(witness, witness_flags);

  auto* bott = app.add_subcommand("bott", "Borel-Weil-Bott on P^{m-1}");
  bott->add_option("--m", m, "dimension of V")->required()->check(CLI::PositiveNumber);
  bott->add_option("--d", d, "degree of the Q factor")->required();
  bott->add_option("--alpha", alpha, "weakly decreasing weight of length m-1 (default: zeros)")->allow_extra_args(false);

  auto* selftest = app.add_subcommand("selftest", "golden tables and property checks");
  add_common(selftest, selftest_flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (betti->parsed())
      return cmd_betti(dims, pmax, qmax, format, betti_flags, out, err);
    if (pfunc->parsed()) {
      const ParsedDims parsed = parse_dims(dims, err);
      print_pfunc(parsed.dims, pfunc_qmax >= 0 ? pfunc_qmax : parsed.dims.regularity() + 1, pfunc_format,
                  out);
      return kExitOk;
    }
    if (basis->parsed())
      return cmd_basis(dims, degree, out, err);
    if (straighten->parsed())
      return cmd_straighten(dims, monomial, out, err);
    if (witness->parsed())
      return cmd_witness(dims, p, q, family, witness_flags, out, err);
    if (bott->parsed())
      return cmd_bott(m, d, alpha, out);
    if (selftest->parsed())
      return cmd_selftest(selftest_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "refused: " << e.what() << '\n';
    return kExitRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRefused;
  }
  err << app.help();
  return kExitUsage;
}

} // namespace segre::cli
