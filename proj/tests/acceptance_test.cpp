// End-to-end acceptance gates. Each test prints exactly one summary line so a
// log scrape sees nine verdicts; the gtest assertions carry the details.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "minorcolor/claims.hpp"
#include "minorcolor/coloring.hpp"
#include "minorcolor/encoding.hpp"
#include "minorcolor/enumerate.hpp"
#include "minorcolor/graph6.hpp"
#include "minorcolor/minor.hpp"
#include "oracles.hpp"

using namespace minorcolor;

namespace {

class Timer {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void criterion_line(int n, bool ok, const std::string& desc) {
  std::cout << "[criterion " << n << "] " << (ok ? "PASS" : "FAIL") << " " << desc
            << std::endl;
}

int run_shell(const std::string& cmd) {
  int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Acceptance, Criterion1ColorabilityEquivalence) {
  Timer timer;
  long classes = 0, pairs = 0, agree = 0;
  for (const SimpleGraph& g : enumerate_connected_graphs(6)) {
    ++classes;
    std::int64_t p = strict_prime(g);
    for (int t = 1; t <= g.order(); ++t) {
      EncodingContext ctx = EncodingContext::standard(g, t, p, PrimeMode::Strict);
      auto algebraic = exists_nonzero_on(build_P(ctx), ctx.colorset);
      auto search = find_coloring(g, ctx.colorset);
      ++pairs;
      if (algebraic.has_value() == search.has_value() &&
          (!algebraic || algebraic->values == search->values))
        ++agree;
      else
        ADD_FAILURE() << describe(g) << " t=" << t << " p=" << p;
    }
  }
  long long ms = timer.ms();
  bool ok = classes == 143 && agree == pairs && ms < 600'000;
  criterion_line(1, ok,
                 "product and search colorability agree on " +
                     std::to_string(agree) + "/" + std::to_string(pairs) +
                     " pairs over " + std::to_string(classes) + " classes in " +
                     std::to_string(ms) + " ms");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion2ChromaticBoundedByMinorOrder) {
  Timer timer;
  RunConfig cfg;
  cfg.mode = PrimeMode::SmallPrime;
  long total = 0, passed = 0;
  for (const SimpleGraph& g : enumerate_connected_graphs(7)) {
    ClaimReport r = verify_chi_le_h(g, cfg, ClaimId::C2);
    ++total;
    if (r.verdict == Verdict::Pass) {
      ++passed;
    } else {
      // triage against the from-scratch branch-set search before believing it
      int n = g.order();
      int brute_h = 0;
      for (int t = n; t >= 1; --t)
        if (testoracles::has_clique_minor_brute(g, t)) {
          brute_h = t;
          break;
        }
      ADD_FAILURE() << describe(g) << " verdict " << to_string(r.verdict)
                    << " witness '" << r.witness << "' brute order " << brute_h
                    << " chromatic " << chromatic_number(g);
    }
  }
  long long ms = timer.ms();
  bool ok = total == 996 && passed == total && ms < 1'800'000;
  criterion_line(2, ok,
                 "chromatic number within the largest clique-minor order on " +
                     std::to_string(passed) + "/" + std::to_string(total) +
                     " graphs in " + std::to_string(ms) + " ms");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion3FourColorableWhenMinorOrderSmall) {
  long checked = 0, good = 0;
  for (const SimpleGraph& g : enumerate_connected_graphs(7)) {
    if (hadwiger_number(g) > 4) continue;
    ++checked;
    if (chromatic_number(g) <= 4)
      ++good;
    else
      ADD_FAILURE() << describe(g);
  }
  bool ok = checked > 0 && good == checked;
  criterion_line(3, ok,
                 "clique-minor order <= 4 forces a 4-coloring on " +
                     std::to_string(good) + "/" + std::to_string(checked) +
                     " graphs");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion4ExponentFoldingOracle) {
  std::mt19937_64 rng(424242);
  const std::int64_t primes[] = {3, 5, 7};
  int zero_agree = 0, point_agree = 0;
  const int total = 1000;
  for (int i = 0; i < total; ++i) {
    std::int64_t p = primes[i % 3];
    int nvars = 1 + static_cast<int>(rng() % 3);
    int nterms = 1 + static_cast<int>(rng() % 6);
    std::vector<std::pair<Monomial, std::int64_t>> terms;
    for (int k = 0; k < nterms; ++k) {
      Monomial m = Monomial::one();
      for (VertexId v = 1; v <= nvars; ++v) {
        int e = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * p));
        if (e > 0) m = m.times(Monomial::var(v, e));
      }
      terms.emplace_back(m, 1 + static_cast<std::int64_t>(rng() % (p - 1)));
    }
    FieldPoly f = FieldPoly::from_terms(p, terms);
    FieldPoly red = f.fermat_reduce();

    bool vanishes = true, pointwise = true;
    std::vector<std::int64_t> point(static_cast<std::size_t>(nvars), 0);
    while (true) {
      std::map<VertexId, std::int64_t> x;
      for (int v = 1; v <= nvars; ++v)
        x[v] = point[static_cast<std::size_t>(v - 1)];
      std::int64_t val = f.evaluate(x);
      if (val != 0) vanishes = false;
      if (val != red.evaluate(x)) pointwise = false;
      std::size_t j = 0;
      for (; j < point.size(); ++j) {
        if (++point[j] < p) break;
        point[j] = 0;
      }
      if (j == point.size()) break;
    }
    if (red.is_zero() == vanishes) ++zero_agree;
    if (pointwise) ++point_agree;
  }
  bool ok = zero_agree == total && point_agree == total;
  criterion_line(4, ok,
                 "exponent folding keeps values and the zero test on " +
                     std::to_string(std::min(zero_agree, point_agree)) + "/" +
                     std::to_string(total) + " random polynomials");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion5MultiplicityOracle) {
  std::mt19937_64 rng(515151);
  const int total = 500;
  int agree = 0;
  for (int i = 0; i < total; ++i) {
    std::int64_t p = (i % 2) ? 5 : 7;
    FieldPoly base(p);
    while (base.is_zero()) {
      std::vector<std::pair<Monomial, std::int64_t>> terms;
      int nterms = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < nterms; ++k) {
        Monomial m = Monomial::one();
        for (VertexId v = 1; v <= 2; ++v) {
          int e = static_cast<int>(rng() % static_cast<std::uint64_t>(p));
          if (e > 0) m = m.times(Monomial::var(v, e));
        }
        terms.emplace_back(m, 1 + static_cast<std::int64_t>(rng() % (p - 1)));
      }
      base = FieldPoly::from_terms(p, terms);
    }
    std::int64_t beta = static_cast<std::int64_t>(rng() % p);
    int planted = static_cast<int>(rng() % 3);
    FieldPoly f = base;
    for (int k = 0; k < planted; ++k)
      f = FieldPoly::mul(f, FieldPoly::linear(p, 1, beta));

    int division = testoracles::division_multiplicity(f, 1, beta);
    FactorMultiplicity expected = division == 0   ? FactorMultiplicity::None
                                  : division == 1 ? FactorMultiplicity::Simple
                                                  : FactorMultiplicity::Multiple;
    if (linear_factor_multiplicity(f, 1, beta) == expected)
      ++agree;
    else
      ADD_FAILURE() << f.to_text() << " at v1=" << beta << " division count "
                    << division;
  }
  bool ok = agree == total;
  criterion_line(5, ok,
                 "derivative and division multiplicities agree on " +
                     std::to_string(agree) + "/" + std::to_string(total) +
                     " planted factors");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion6LemmaSuitesAllPass) {
  Timer timer;
  RunConfig cfg;
  cfg.n_max = 6;
  cfg.mode = PrimeMode::SmallPrime;
  cfg.claims = {ClaimId::L1, ClaimId::L2, ClaimId::L3,
                ClaimId::L4, ClaimId::L5, ClaimId::L6};
  SuiteResult res = run_suite(cfg);
  bool full_seen = false, sampled_seen = false;
  for (const ClaimReport& r : res.reports) {
    if (r.verdict != Verdict::Pass)
      ADD_FAILURE() << to_string(r.claim) << " " << r.graph << " "
                    << to_string(r.verdict) << " " << r.witness << r.skip_reason;
    if (r.claim == ClaimId::L6) {
      int n = parse_graph6(r.graph).order();
      const std::string& cov = r.params.extra.at("coverage");
      if (n <= 5 && cov == "all subsets") full_seen = true;
      if (n == 6 && cov == "sampled") sampled_seen = true;
      if ((n <= 5) != (cov == "all subsets"))
        ADD_FAILURE() << "coverage " << cov << " on order " << n;
    }
  }
  long long ms = timer.ms();
  bool ok = res.summary.total > 0 && res.summary.pass == res.summary.total &&
            res.summary.fail == 0 && res.summary.skip == 0 && full_seen &&
            sampled_seen;
  criterion_line(6, ok,
                 "transfer, deletion, pendant, split, clique and family suites "
                 "pass " +
                     std::to_string(res.summary.pass) + "/" +
                     std::to_string(res.summary.total) + " instances in " +
                     std::to_string(ms) + " ms");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion7NoBackwardColorabilityFlips) {
  Timer timer;
  RunConfig cfg;
  cfg.n_max = 6;
  cfg.mode = PrimeMode::SmallPrime;
  cfg.sequence_count = 3;
  cfg.claims = {ClaimId::H1};
  SuiteResult res = run_suite(cfg);
  for (const ClaimReport& r : res.reports)
    if (r.verdict == Verdict::Fail)
      ADD_FAILURE() << "flip on " << r.graph << ": " << r.witness;
  long long ms = timer.ms();
  bool ok = res.summary.total >= 143 && res.summary.fail == 0 &&
            res.summary.skip == 0;
  criterion_line(7, ok,
                 "zero colorability flips across " +
                     std::to_string(res.summary.total) + " scanned sequences in " +
                     std::to_string(ms) + " ms");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion8PipelineDefinitiveAndOracleChecked) {
  Timer timer;
  Budgets budgets;
  long definitive = 0, exercised = 0, skips = 0, split_match = 0, split_total = 0;
  long beta_match = 0, beta_total = 0;
  for (const SimpleGraph& g : enumerate_connected_graphs(4)) {
    if (g.order() < 2) continue;
    int t = hadwiger_number(g);
    std::int64_t p = least_prime_greater(t + 1);
    EncodingContext ctx = EncodingContext::standard(g, t, p, PrimeMode::SmallPrime);
    for (Edge e : g.edges()) {
      for (Edge oe : {Edge{e.first, e.second}, Edge{e.second, e.first}}) {
        std::vector<ClaimReport> stages =
            verify_step_pipeline(g, oe, t, p, budgets, false);
        ASSERT_EQ(stages.size(), 5u);
        bool any_vacuous = false;
        for (const ClaimReport& r : stages) {
          if (r.verdict == Verdict::Skip) {
            ++skips;
            ADD_FAILURE() << "skip at " << to_string(r.claim) << " on "
                          << describe(g) << ": " << r.skip_reason;
          }
          if (r.vacuous) any_vacuous = true;
        }
        if (skips > 0) continue;
        // with t = h the contracted graph is a minor and stays t-colorable,
        // so the whole-pipeline hypothesis never fails here; stages that mark
        // themselves vacuous (empty m2) still emit definitive PASS verdicts
        auto hyp = stages.front().params.extra.find("hypothesis");
        ASSERT_TRUE(hyp == stages.front().params.extra.end());
        ++definitive;
        if (!any_vacuous) ++exercised;

        ++split_total;
        SplitSets lib = select_M1(ctx, oe);
        SplitSets oracle = testoracles::split_oracle(g, oe, t, p);
        if (lib.m1 == oracle.m1 && lib.m2 == oracle.m2 && lib.vs == oracle.vs)
          ++split_match;
        else
          ADD_FAILURE() << "split mismatch on " << describe(g);

        FactoredPoly gf = build_G_poly(ctx, oe, lib);
        FieldPoly gprime = gf.expand_reduced();
        std::map<VertexId, JPoly> jmap;
        for (VertexId vc : lib.m2) jmap.emplace(vc, build_J(ctx, gf, vc, true));
        jmap.emplace(lib.vs, build_J(ctx, gf, lib.vs, false));
        ++beta_total;
        if (find_beta(ctx, lib, gprime, jmap) ==
            testoracles::beta_scan(lib, gprime, jmap, t, p))
          ++beta_match;
        else
          ADD_FAILURE() << "shift mismatch on " << describe(g);
      }
    }
  }
  long long ms = timer.ms();
  bool ok = definitive >= 20 && exercised > 0 && skips == 0 &&
            split_match == split_total && beta_match == beta_total;
  criterion_line(8, ok,
                 std::to_string(definitive) +
                     " pipelines definitive with no skip (" +
                     std::to_string(exercised) +
                     " exercising every stage), split and shift choices match "
                     "the exhaustive oracles (" +
                     std::to_string(ms) + " ms)");
  EXPECT_TRUE(ok);
}

TEST(Acceptance, Criterion9ByteIdenticalAcrossJobs) {
  std::string one = ::testing::TempDir() + "accept_j1.jsonl";
  std::string eight = ::testing::TempDir() + "accept_j8.jsonl";
  std::string base = std::string(CLI_BIN) + " verify --n-max 4 --small-prime";
  int c1 = run_shell(base + " --jobs 1 --out " + one);
  int c8 = run_shell(base + " --jobs 8 --out " + eight);
  std::string a = slurp(one), b = slurp(eight);
  // the known honest pipeline FAILs drive the exit code to 2 in both runs
  bool ok = c1 == 2 && c8 == 2 && !a.empty() && a == b;
  criterion_line(9, ok,
                 "serialized reports byte-identical across 1 and 8 worker "
                 "threads (" +
                     std::to_string(a.size()) + " bytes)");
  EXPECT_TRUE(ok);
}
