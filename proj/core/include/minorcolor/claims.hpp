#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "minorcolor/encoding.hpp"
#include "minorcolor/minor.hpp"

namespace minorcolor {

// Tags for the checkable statements the harness knows how to exercise.
//  L1  coloring of a contraction transfers to the edge-removed graph
//  L2  edge deletion keeping all vertices preserves t-colorability
//  L3  a coloring extends over a pendant vertex when t >= 2
//  L4  nonzero edge-removed split product forces nonzero full product
//  L5  clique number never exceeds the largest clique-minor order
//  L6  degree-bounded maximal members of an induced family are (l+1)-colorable
//  C1  the terminal complete graph of a reduction is t-colorable
//  C2  chromatic number bounded by the largest clique-minor order
//  C3  one reduction step lifts t-colorability backward
//  C4  the annihilator-stripped split product is not identically zero
//  H1  no reduction step flips colorability backward (hunted, expected absent)
//  T31 the reduced step product factors through the pinned vertices
//  T32 a shift value beta exists with the required factor multiplicities
//  T33 the divided and re-dressed step product equals the shifted product
//  COR_HADWIGER  chi <= largest clique-minor order (corollary alias of C2)
//  COR_4COLOR    largest clique-minor order <= 4 forces chi <= 4
enum class ClaimId {
  L1,
  L2,
  L3,
  L4,
  L5,
  L6,
  C1,
  C2,
  C3,
  C4,
  H1,
  T31,
  T32,
  T33,
  CorHadwiger,
  Cor4Color,
};

const char* to_string(ClaimId c);
std::optional<ClaimId> claim_from_string(const std::string& s);
std::vector<ClaimId> all_claims();

enum class Verdict { Pass, Fail, Skip };
const char* to_string(Verdict v);

struct ClaimParams {
  int t = 0;                // 0 when not applicable
  std::int64_t p = 0;       // 0 when no field is involved
  PrimeMode mode = PrimeMode::Strict;
  int sequence_index = -1;  // -1 when not tied to a reduction sequence
  std::map<std::string, std::string> extra;  // sorted, deterministic
};

// One verdict for one (claim, graph, parameters) instance. FAIL carries a
// witness, SKIP carries the resource reason. `vacuous` marks a PASS whose
// hypothesis never fired.
struct ClaimReport {
  ClaimId claim = ClaimId::L1;
  std::string graph;  // graph6
  Verdict verdict = Verdict::Pass;
  bool vacuous = false;
  ClaimParams params;
  std::string witness;
  std::string skip_reason;
  long long wall_ms = 0;  // emitted only when timings are requested

  std::string to_jsonl(bool timings = false) const;
  static ClaimReport from_jsonl(const std::string& line);
};

struct Budgets {
  long term_budget = kDefaultTermBudget;
  long eval_budget = kDefaultEvalBudget;
  long minor_node_budget = kDefaultMinorNodeBudget;
  long class_budget = 40'000'000;
};

struct RunConfig {
  int n_max = 5;
  std::set<ClaimId> claims;  // empty = all
  PrimeMode mode = PrimeMode::Strict;
  std::optional<std::int64_t> pinned_prime;  // small-prime mode only
  int sequence_count = 3;  // reduction sequences sampled per graph
  Budgets budgets;
  int jobs = 1;
  std::uint64_t seed = 12345;
  bool timings = false;
  bool sweep_monomials = false;
};

// Field size for the combinatorial and split-product checks on g: the
// worst-case bound in strict mode, else the pinned prime or the least prime
// >= t + 2.
std::int64_t claim_prime(const SimpleGraph& g, int t, const RunConfig& cfg);

// t-colorability through the vertex product: a nonzero point over the color
// set exists. Agrees with the backtracking search (checked by the harness).
bool poly_colorable(const SimpleGraph& g, int t, std::int64_t p, long eval_budget);

// Per-graph verifiers. Each returns one report per instance it examined;
// resource exhaustion inside an instance turns into a SKIP report.
std::vector<ClaimReport> verify_L1(const SimpleGraph& g, const RunConfig& cfg);
std::vector<ClaimReport> verify_L2_L3(const SimpleGraph& g, const RunConfig& cfg);
std::vector<ClaimReport> verify_L4(const SimpleGraph& g, const RunConfig& cfg);
ClaimReport verify_L5(const SimpleGraph& g, const RunConfig& cfg);
std::vector<ClaimReport> verify_L6(const SimpleGraph& g, const RunConfig& cfg);
std::vector<ClaimReport> verify_H1(const SimpleGraph& g, const RunConfig& cfg);
std::vector<ClaimReport> verify_C1(const SimpleGraph& g, const RunConfig& cfg);
ClaimReport verify_chi_le_h(const SimpleGraph& g, const RunConfig& cfg, ClaimId id);
ClaimReport verify_four_color_bound(const SimpleGraph& g, const RunConfig& cfg);

// The five stage reports of one reduction step on edge e = (v_s, v_b), in
// order C4, T31, T32, T33, C3. All five gate on the contracted graph being
// t-colorable; C3 additionally gates on g having no clique minor of order
// t + 1 (outside that hypothesis its verdict would not be the claim's).
std::vector<ClaimReport> verify_step_pipeline(const SimpleGraph& g, Edge e, int t,
                                              std::int64_t p, const Budgets& budgets,
                                              bool sweep_monomials);

// Pipeline instances for a whole graph: every contraction step of up to
// cfg.sequence_count reduction sequences targeting the largest clique-minor
// order, always over a small prime.
std::vector<ClaimReport> verify_pipeline(const SimpleGraph& g, const RunConfig& cfg);

struct SuiteSummary {
  long total = 0, pass = 0, fail = 0, skip = 0, vacuous = 0;
};
SuiteSummary summarize(const std::vector<ClaimReport>& reports);

struct SuiteResult {
  std::vector<ClaimReport> reports;
  SuiteSummary summary;
};

// Runs the selected verifiers over every connected graph class up to
// cfg.n_max. Instance order is fixed by (graph enumeration order, claim
// order), independent of cfg.jobs, so serialized output is reproducible
// byte for byte.
SuiteResult run_suite(const RunConfig& cfg);

// Header record followed by one report line each, '\n' terminated.
void write_jsonl(std::ostream& os, const RunConfig& cfg,
                 const std::vector<ClaimReport>& reports);

}  // namespace minorcolor
