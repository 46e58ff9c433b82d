#include "minorcolor/minor.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "minorcolor/enumerate.hpp"

namespace minorcolor {

namespace {

bool mask_connected(const SimpleGraph& g, std::uint64_t mask) {
  if (mask == 0) return false;
  std::uint64_t seen = mask & -mask;
  for (;;) {
    std::uint64_t grow = seen;
    std::uint64_t rest = seen;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      grow |= g.neighbor_mask(v);
    }
    grow &= mask;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == mask;
}

bool masks_adjacent(const SimpleGraph& g, std::uint64_t a, std::uint64_t b) {
  while (a) {
    int v = std::countr_zero(a);
    a &= a - 1;
    if (g.neighbor_mask(v) & b) return true;
  }
  return false;
}

struct MinorSearch {
  const SimpleGraph* g = nullptr;
  int t = 0;
  long budget = 0;
  long nodes = 0;
  std::vector<VertexId> vs;
  std::vector<std::uint64_t> sets;

  bool feasible_leaf() {
    for (int i = 0; i < t; ++i) {
      if (sets[i] == 0 || !mask_connected(*g, sets[i])) return false;
      for (int j = i + 1; j < t; ++j)
        if (!masks_adjacent(*g, sets[i], sets[j])) return false;
    }
    return true;
  }

  // Assign vertices (ascending) to one of the open branch sets, a new set, or
  // none. Sets open in order, so branch-set relabelings are never revisited.
  bool assign(std::size_t i, int open) {
    if (++nodes > budget) throw ResourceError("has_clique_minor: node budget exceeded");
    int remaining = static_cast<int>(vs.size() - i);
    if (open + remaining < t) return false;
    if (i == vs.size()) return open == t && feasible_leaf();
    std::uint64_t bit = 1ull << vs[i];
    int tryable = std::min(open + 1, t);
    for (int s = 0; s < tryable; ++s) {
      sets[s] |= bit;
      if (assign(i + 1, std::max(open, s + 1))) return true;
      sets[s] &= ~bit;
    }
    return assign(i + 1, open);
  }
};

}  // namespace

bool has_clique_minor(const SimpleGraph& g, int t, long node_budget) {
  if (t < 1) throw DomainError("has_clique_minor: need t >= 1");
  if (t > g.order()) return false;
  // A K_t minor needs t(t-1)/2 edges, and minors never gain edges.
  if (static_cast<long>(t) * (t - 1) / 2 > g.edge_count()) return false;
  if (t == 1) return g.order() >= 1;
  MinorSearch search;
  search.g = &g;
  search.t = t;
  search.budget = node_budget;
  search.vs = g.vertices();
  search.sets.assign(t, 0);
  return search.assign(0, 0);
}

int hadwiger_number(const SimpleGraph& g, long node_budget) {
  if (g.empty()) return 0;
  int best = 1;
  for (int t = 2; t <= g.order(); ++t) {
    if (static_cast<long>(t) * (t - 1) / 2 > g.edge_count()) break;
    if (has_clique_minor(g, t, node_budget))
      best = t;
    else
      break;  // having a K_t minor is monotone decreasing in t
  }
  return best;
}

const SimpleGraph& MinorSequence::graph_before(std::size_t i) const {
  if (i >= steps.size()) throw DomainError("MinorSequence: step index out of range");
  return i == 0 ? source : graphs[i - 1];
}

const SimpleGraph& MinorSequence::graph_after(std::size_t i) const {
  if (i >= steps.size()) throw DomainError("MinorSequence: step index out of range");
  return graphs[i];
}

void MinorSequence::validate() const {
  if (graphs.size() != steps.size())
    throw DomainError("MinorSequence: step/graph count mismatch");
  SimpleGraph cur = source;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    cur = apply_op(cur, steps[i]);
    if (!(cur == graphs[i])) {
      std::ostringstream os;
      os << "MinorSequence: stored graph at step " << i << " does not replay";
      throw DomainError(os.str());
    }
  }
  const SimpleGraph& last = steps.empty() ? source : graphs.back();
  if (!last.is_complete_of_order(target_t))
    throw DomainError("MinorSequence: final graph is not the target complete graph");
}

MinorSequence replay_sequence(const SimpleGraph& source, int target_t,
                              const std::vector<ElementaryOp>& steps) {
  MinorSequence seq;
  seq.source = source;
  seq.target_t = target_t;
  SimpleGraph cur = source;
  for (const ElementaryOp& op : steps) {
    cur = apply_op(cur, op);
    seq.steps.push_back(op);
    seq.graphs.push_back(cur);
  }
  seq.validate();
  return seq;
}

namespace {

struct SequenceSearch {
  int t = 0;
  int max_count = 0;
  long budget = 0;
  long nodes = 0;
  std::set<std::string> dead;  // canonical codes with no route to K_t
  std::vector<ElementaryOp> ops;
  std::vector<SimpleGraph> trail;
  std::vector<MinorSequence>* out = nullptr;
  const SimpleGraph* source = nullptr;

  // Returns true once max_count sequences were collected.
  bool dfs(const SimpleGraph& cur) {
    if (++nodes > budget)
      throw ResourceError("find_minor_sequences: node budget exceeded");
    if (cur.is_complete_of_order(t)) {
      MinorSequence seq;
      seq.source = *source;
      seq.target_t = t;
      seq.steps = ops;
      seq.graphs = trail;
      out->push_back(std::move(seq));
      return static_cast<int>(out->size()) >= max_count;
    }
    std::string code = canonical_code(cur);
    if (dead.count(code)) return false;
    auto try_op = [&](const ElementaryOp& op) {
      SimpleGraph next = apply_op(cur, op);
      if (!next.is_connected()) return false;
      if (next.order() < t) return false;
      ops.push_back(op);
      trail.push_back(next);
      bool done = dfs(next);
      ops.pop_back();
      trail.pop_back();
      return done;
    };
    std::size_t before = out->size();
    for (auto [u, v] : cur.edges()) {
      ElementaryOp contract_u{ElementaryOp::Kind::Contract, u, v, u};
      if (try_op(contract_u)) return true;
      ElementaryOp contract_v{ElementaryOp::Kind::Contract, v, u, v};
      if (try_op(contract_v)) return true;
    }
    for (auto [u, v] : cur.edges()) {
      ElementaryOp del{ElementaryOp::Kind::Delete, u, v, 0};
      if (try_op(del)) return true;
    }
    if (out->size() == before) dead.insert(code);  // fully explored, no route
    return false;
  }
};

}  // namespace

std::vector<MinorSequence> find_minor_sequences(const SimpleGraph& g, int t,
                                                int max_count, long node_budget) {
  if (t < 1) throw DomainError("find_minor_sequences: need t >= 1");
  if (max_count < 1) throw DomainError("find_minor_sequences: need max_count >= 1");
  if (!g.is_connected()) throw DomainError("find_minor_sequences: graph not connected");
  std::vector<MinorSequence> out;
  SequenceSearch search;
  search.t = t;
  search.max_count = max_count;
  search.budget = node_budget;
  search.out = &out;
  search.source = &g;
  search.dfs(g);
  for (const MinorSequence& seq : out) seq.validate();
  return out;
}

MinorSequence find_minor_sequence(const SimpleGraph& g, int t, long node_budget) {
  std::vector<MinorSequence> seqs = find_minor_sequences(g, t, 1, node_budget);
  if (seqs.empty()) throw DomainError("find_minor_sequence: no route to the target");
  return seqs.front();
}

}  // namespace minorcolor
