#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorcolor/claims.hpp"
#include "minorcolor/coloring.hpp"
#include "minorcolor/encoding.hpp"
#include "minorcolor/enumerate.hpp"
#include "minorcolor/graph6.hpp"
#include "minorcolor/minor.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;
constexpr int kExitFail = 2;          // at least one FAIL verdict
constexpr int kExitSkipOnly = 3;      // SKIPs but no FAILs
constexpr int kExitBadConfig = 64;
constexpr int kExitParseError = 65;

using namespace minorcolor;

std::optional<std::set<ClaimId>> parse_claims(const std::string& csv) {
  std::set<ClaimId> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty()) continue;
    if (item == "all") return std::set<ClaimId>{};
    auto c = claim_from_string(item);
    if (!c) {
      std::cerr << "unknown claim tag: " << item << '\n';
      return std::nullopt;
    }
    out.insert(*c);
  }
  return out;
}

std::optional<Edge> parse_edge(const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= s.size())
    return std::nullopt;
  try {
    int a = std::stoi(s.substr(0, dash));
    int b = std::stoi(s.substr(dash + 1));
    return Edge{a, b};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_verify(const RunConfig& cfg, const std::string& out_path) {
  SuiteResult res = run_suite(cfg);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (out_path != "-") {
    file.open(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return kExitBadConfig;
    }
    os = &file;
  }
  write_jsonl(*os, cfg, res.reports);
  const SuiteSummary& s = res.summary;
  std::cerr << "total=" << s.total << " pass=" << s.pass << " fail=" << s.fail
            << " skip=" << s.skip << " vacuous=" << s.vacuous << '\n';
  if (s.fail > 0) return kExitFail;
  if (s.skip > 0) return kExitSkipOnly;
  return kExitOk;
}

int cmd_stats(const std::string& in_path) {
  std::ifstream f(in_path);
  if (!f) {
    std::cerr << "cannot open " << in_path << '\n';
    return kExitBadConfig;
  }
  std::map<std::string, SuiteSummary> per_claim;
  SuiteSummary total;
  std::string line;
  long line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      if (j.contains("schema")) continue;  // header record
      ClaimReport r = ClaimReport::from_jsonl(line);
      SuiteSummary& s = per_claim[to_string(r.claim)];
      for (SuiteSummary* acc : {&s, &total}) {
        ++acc->total;
        if (r.verdict == Verdict::Pass) ++acc->pass;
        if (r.verdict == Verdict::Fail) ++acc->fail;
        if (r.verdict == Verdict::Skip) ++acc->skip;
        if (r.vacuous) ++acc->vacuous;
      }
    } catch (const std::exception& ex) {
      std::cerr << "parse error at line " << line_no << ": " << ex.what() << '\n';
      return kExitParseError;
    }
  }
  std::cout << "claim          pass    fail    skip vacuous   total\n";
  for (const auto& [name, s] : per_claim) {
    std::printf("%-12s %7ld %7ld %7ld %7ld %7ld\n", name.c_str(), s.pass, s.fail,
                s.skip, s.vacuous, s.total);
  }
  std::printf("%-12s %7ld %7ld %7ld %7ld %7ld\n", "all", total.pass, total.fail,
              total.skip, total.vacuous, total.total);
  return kExitOk;
}

int cmd_replay(const std::string& g6, int t) {
  SimpleGraph g;
  try {
    g = parse_graph6(g6);
  } catch (const DomainError& ex) {
    std::cerr << "graph6 parse error: " << ex.what() << '\n';
    return kExitParseError;
  }
  try {
    if (t == 0) t = hadwiger_number(g);
    MinorSequence seq = find_minor_sequence(g, t);
    std::cout << "source: " << describe(g) << '\n';
    for (std::size_t i = 0; i < seq.length(); ++i) {
      const ElementaryOp& op = seq.steps[i];
      if (op.kind == ElementaryOp::Kind::Contract)
        std::cout << "step " << i << ": contract " << op.vs << "->" << op.vb;
      else
        std::cout << "step " << i << ": delete " << op.vs << "-" << op.vb;
      std::cout << "  =>  " << describe(seq.graph_after(i)) << '\n';
    }
    seq.validate();
    std::cout << "reaches the complete graph on " << t << " vertices in "
              << seq.length() << " steps\n";
    return kExitOk;
  } catch (const DomainError& ex) {
    std::cerr << ex.what() << '\n';
    return kExitNotFound;
  }
}

int cmd_encode_dump(const std::string& g6, int t, std::int64_t p,
                    const std::string& what, const std::string& edge_s,
                    std::int64_t beta, bool expand, bool reduce) {
  SimpleGraph g;
  try {
    g = parse_graph6(g6);
  } catch (const DomainError& ex) {
    std::cerr << "graph6 parse error: " << ex.what() << '\n';
    return kExitParseError;
  }
  try {
    EncodingContext ctx =
        what == "P_hat"
            ? EncodingContext::shifted(g, t, beta, p)
            : EncodingContext::standard(g, t, p,
                                        p >= t + 2 ? PrimeMode::SmallPrime
                                                   : PrimeMode::Strict);
    std::optional<FactoredPoly> f;
    Edge e{0, 0};
    if (what == "H" || what == "S" || what == "Q" || what == "G") {
      auto pe = parse_edge(edge_s);
      if (!pe) {
        std::cerr << "--edge must look like 1-2\n";
        return kExitBadConfig;
      }
      e = *pe;
    }
    if (what == "P" || what == "P_hat") {
      f = build_P(ctx);
    } else if (what == "H") {
      f = build_H(ctx, e);
    } else if (what == "S") {
      f = build_S(ctx, e);
    } else if (what == "Q") {
      f = build_Q(ctx, e);
    } else if (what == "G") {
      SplitSets split = select_M1(ctx, e);
      std::cout << "# m1=" << split.m1.size() << " m2=" << split.m2.size()
                << " vs=" << split.vs << '\n';
      f = build_G_poly(ctx, e, split);
    } else {
      std::cerr << "unknown product " << what << '\n';
      return kExitBadConfig;
    }
    std::cout << f->dump();
    if (expand)
      std::cout << "expanded: "
                << (reduce ? f->expand_reduced() : f->expand()).to_text() << '\n';
    return kExitOk;
  } catch (const DomainError& ex) {
    std::cerr << ex.what() << '\n';
    return kExitBadConfig;
  } catch (const ResourceError& ex) {
    std::cerr << ex.what() << '\n';
    return kExitNotFound;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"algebraic coloring encodings and clique-minor reductions"};
  app.set_config("--config", "", "read options from an INI file");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string out_path = "-";
  std::string claims_csv;
  bool small_prime = false;
  std::int64_t pinned = 0;

  CLI::App* v = app.add_subcommand("verify", "check claims over enumerated graphs");
  v->add_option("--n-max", cfg.n_max, "largest graph order (default 5)")
      ->check(CLI::Range(1, 10))
      ->envname("MINORCOLOR_N_MAX");
  v->add_option("--claims", claims_csv, "comma-separated claim tags, or all")
      ->envname("MINORCOLOR_CLAIMS");
  v->add_flag("--small-prime", small_prime,
              "use the least prime >= t+2 instead of the worst-case bound");
  v->add_option("--prime", pinned, "pin the field size (small-prime mode only)")
      ->envname("MINORCOLOR_PRIME");
  v->add_option("--sequences", cfg.sequence_count,
                "reduction sequences sampled per graph (default 3)")
      ->check(CLI::Range(1, 16));
  v->add_option("--out", out_path, "JSONL output path, - for stdout")
      ->envname("MINORCOLOR_OUT");
  v->add_option("--jobs", cfg.jobs, "worker threads (default 1)")
      ->check(CLI::Range(1, 64))
      ->envname("MINORCOLOR_JOBS");
  v->add_option("--seed", cfg.seed, "seed for sampled coverage")
      ->envname("MINORCOLOR_SEED");
  v->add_flag("--timings", cfg.timings, "include wall_ms in every record");
  v->add_flag("--sweep-monomials", cfg.sweep_monomials,
              "cross-check every grouped coefficient, not just the first");

  CLI::App* st = app.add_subcommand("stats", "summarize a JSONL report file");
  std::string stats_path;
  st->add_option("file", stats_path, "report file")->required();

  CLI::App* rp = app.add_subcommand("replay", "find and print a reduction sequence");
  std::string replay_g6;
  int replay_t = 0;
  rp->add_option("graph", replay_g6, "graph6 code")->required();
  rp->add_option("--t", replay_t, "target order (default: largest clique minor)");

  CLI::App* ed = app.add_subcommand("encode-dump", "print a product encoding");
  std::string dump_g6, dump_what = "P", dump_edge;
  int dump_t = 2;
  std::int64_t dump_p = 5, dump_beta = 0;
  bool dump_expand = false, dump_reduce = false;
  ed->add_option("graph", dump_g6, "graph6 code")->required();
  ed->add_option("--t", dump_t, "color count")->check(CLI::Range(1, 62));
  ed->add_option("--prime", dump_p, "field size");
  ed->add_option("--what", dump_what, "P, P_hat, H, S, Q or G (default P)");
  ed->add_option("--edge", dump_edge, "edge as u-v (H, S, Q, G)");
  ed->add_option("--beta", dump_beta, "shift color (P_hat)");
  ed->add_flag("--expand", dump_expand, "also print the expanded form");
  ed->add_flag("--reduce", dump_reduce, "reduce exponents while expanding");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  if (v->parsed()) {
    cfg.mode = small_prime ? PrimeMode::SmallPrime : PrimeMode::Strict;
    if (pinned != 0) {
      if (!small_prime) {
        std::cerr << "--prime needs --small-prime\n";
        return kExitBadConfig;
      }
      if (!is_prime(pinned)) {
        std::cerr << pinned << " is not prime\n";
        return kExitBadConfig;
      }
      cfg.pinned_prime = pinned;
    }
    if (!claims_csv.empty()) {
      auto parsed = parse_claims(claims_csv);
      if (!parsed) return kExitBadConfig;
      cfg.claims = *parsed;
    }
    return cmd_verify(cfg, out_path);
  }
  if (st->parsed()) return cmd_stats(stats_path);
  if (rp->parsed()) return cmd_replay(replay_g6, replay_t);
  if (ed->parsed())
    return cmd_encode_dump(dump_g6, dump_t, dump_p, dump_what, dump_edge,
                           dump_beta, dump_expand, dump_reduce);
  return kExitBadConfig;
}
