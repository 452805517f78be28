#include "segre/selftest.hpp"

#include "segre/bott.hpp"
#include "segre/koszul.hpp"
#include "segre/pfunc.hpp"
#include "segre/witness.hpp"

#include <functional>

namespace segre {

const std::vector<GoldenTable>& golden_tables() {
  static const std::vector<GoldenTable> tables = {
      {{1, 1},
       "       0 1\n"
       "total: 1 1\n"
       "    0: 1 .\n"
       "    1: . 1\n"},
      {{1, 1, 1},
       "       0 1  2 3 4\n"
       "total: 1 9 16 9 1\n"
       "    0: 1 .  . . .\n"
       "    1: . 9 16 9 .\n"
       "    2: . .  . . 1\n"},
      {{2, 1, 1},
       "       0  1  2   3  4  5  6 7\n"
       "total: 1 24 84 126 94 46 21 4\n"
       "    0: 1  .  .   .  .  .  . .\n"
       "    1: . 24 84 126 84 10  . .\n"
       "    2: .  .  .   . 10 36 21 4\n"},
      {{1, 1, 1, 1},
       "       0  1   2   3    4    5    6    7   8   9 10 11\n"
       "total: 1 55 320 891 1436 1375 1375 1436 891 320 55  1\n"
       "    0: 1  .   .   .    .    .    .    .   .   .  .  .\n"
       "    1: . 55 320 891 1408 1183  192   28   .   .  .  .\n"
       "    2: .  .   .   .   28  192 1183 1408 891 320 55  .\n"
       "    3: .  .   .   .    .    .    .    .   .   .  .  1\n"},
      {{2, 2, 1},
       "       0  1   2    3    4    5    6    7    8    9  10 11 12\n"
       "total: 1 63 394 1179 2087 2692 3726 4383 3275 1530 407 45  2\n"
       "    0: 1  .   .    .    .    .    .    .    .    .   .  .  .\n"
       "    1: . 63 394 1179 1980 1702  396   63    8    .   .  .  .\n"
       "    2: .  .   .    .  107  990 3330 4320 3267 1530 407 36  .\n"
       "    3: .  .   .    .    .    .    .    .    .    .   .  9  2\n"},
  };
  return tables;
}

namespace {

class Runner {
public:
  Runner(std::ostream* progress) : progress_(progress) {}

  void check(const std::string& name, const std::function<std::string()>& body) {
    SelftestResult r{name, false, {}};
    try {
      r.detail = body();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    if (progress_) {
      *progress_ << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed)
        *progress_ << ": " << r.detail;
      *progress_ << '\n' << std::flush;
    }
    results_.push_back(std::move(r));
  }

  std::vector<SelftestResult> take() { return std::move(results_); }

private:
  std::ostream* progress_;
  std::vector<SelftestResult> results_;
};

std::string vanishing_violations(const BettiTable& t) {
  std::string bad;
  for (const auto& [key, value] : t.cells())
    if (value != 0 && predicts_zero(t.dims(), key.first, key.second))
      bad += " (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
  return bad.empty() ? "" : "nonzero below the bound at" + bad;
}

} // namespace

std::vector<SelftestResult> run_selftest(const SelftestOptions& options, std::ostream* progress) {
  Runner run(progress);

  for (const GoldenTable& golden : golden_tables()) {
    const DimVector a(golden.a);
    std::optional<BettiTable> table;
    run.check("betti table Seg(" + a.to_string() + ")", [&]() -> std::string {
      BettiOptions bo;
      bo.backend = options.backend;
      bo.threads = options.threads;
      table = betti_table(a, bo);
      const std::string got = table->to_m2();
      return got == golden.m2 ? "" : "got\n" + got;
    });
    if (!table)
      continue;
    run.check("euler identity Seg(" + a.to_string() + ")", [&]() -> std::string {
      return hilbert_consistency(a, *table) ? "" : "identity fails";
    });
    run.check("vanishing bound Seg(" + a.to_string() + ")",
              [&]() { return vanishing_violations(*table); });
  }

  run.check("P(2,2,1; 0..4)", []() -> std::string {
    const DimVector a({2, 2, 1});
    std::string got;
    for (int q = 0; q <= 4; ++q)
      got += p_function(a, q).to_string() + " ";
    return got == "0 2 6 14 ∞ " ? "" : "got " + got;
  });
  run.check("P(2,2,2; 3)", []() -> std::string {
    const ExtNat v = p_function(DimVector({2, 2, 2}), 3);
    return v == ExtNat(12) ? "" : "got " + v.to_string();
  });

  run.check("straighten Seg(1,1,1,1) degree 3 example", []() -> std::string {
    Straightener s(DimVector({1, 1, 1, 1}));
    const std::string got = s.straighten(Monomial::parse("0,0,0,1 0,1,0,1 1,1,0,1")).to_string();
    return got == "+1 · z[0,0,0,1]·z[0,0,1,1]·z[0,1,1,1]" ? "" : "got " + got;
  });

  run.check("d^2 = 0 on Seg(2,1,1)", []() -> std::string {
    Straightener ring(DimVector({2, 1, 1}));
    KoszulComplex cx(ring);
    for (int p = 2; p <= cx.generators(); ++p)
      for (int q = 0; q + 1 <= cx.max_q(); ++q)
        if (!cx.differential(p - 1, q + 1).multiply(cx.differential(p, q)).is_zero())
          return "fails at p=" + std::to_string(p) + " q=" + std::to_string(q);
    return "";
  });

  run.check("row-1 witnesses Seg(1,1,1)", []() -> std::string {
    Straightener ring(DimVector({1, 1, 1}));
    KoszulComplex cx(ring);
    for (int p = 1; p <= 3; ++p) {
      auto report = verify_witness(cx, kp1_cycle_spec(ring.dims(), p));
      if (!report.is_cycle || report.is_boundary)
        return "p=" + std::to_string(p) + " not a nonzero class";
    }
    return "";
  });

  run.check("Schur dimensions 8 and 63", []() -> std::string {
    const std::vector<long long> a{8, 1}, b{3, 3, 2}, c{7, 1};
    if (schur_dim(a, 2) != 8)
      return "S_(8,1) C^2 has dimension " + schur_dim(a, 2).get_str();
    const mpz_class total = schur_dim(b, 3) * schur_dim(b, 3) * schur_dim(c, 2);
    return total == 63 ? "" : "product has dimension " + total.get_str();
  });

  run.check("Bott on P^1: O(-2) has H^1 of dimension 1", []() -> std::string {
    const std::vector<long long> v{-2, 0};
    auto r = dotted_sort(v);
    if (!r || r->degree != 1 || r->dominant != Weight{-1, -1})
      return "unexpected result";
    return "";
  });

  return run.take();
}

} // namespace segre
