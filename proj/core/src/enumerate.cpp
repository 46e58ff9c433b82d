#include "minorcolor/enumerate.hpp"

#include <algorithm>
#include <set>

namespace minorcolor {

namespace {

// Branch-and-bound over vertex orderings. Bit positions are column-major
// ((0,1),(0,2),(1,2),(0,3),...), so placing the k-th vertex appends exactly k
// bits and prefix comparisons against the best-known code prune hard.
struct Canonicalizer {
  std::vector<VertexId> vs;
  const SimpleGraph* g = nullptr;
  std::vector<std::uint8_t> best;  // 2 = sentinel "worse than any bit"
  std::vector<std::uint8_t> cur;
  std::vector<VertexId> perm;
  std::vector<bool> used;
  long version = 0;  // bumped when best improves

  void run(const SimpleGraph& graph) {
    g = &graph;
    vs = graph.vertices();
    std::size_t n = vs.size();
    best.assign(n * (n - 1) / 2, 2);
    cur.clear();
    perm.clear();
    used.assign(n, false);
    descend(/*tight=*/true);
  }

  void descend(bool tight) {
    std::size_t k = perm.size();
    if (k == vs.size()) {
      if (!tight) {
        best = cur;
        ++version;
      }
      return;
    }
    // Candidate bits for each unused vertex, tried in ascending bit order so
    // the first leaf is already near-minimal.
    struct Cand {
      std::vector<std::uint8_t> bits;
      std::size_t idx;
    };
    std::vector<Cand> cands;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (used[i]) continue;
      Cand c;
      c.idx = i;
      c.bits.reserve(k);
      for (std::size_t j = 0; j < k; ++j)
        c.bits.push_back(g->has_edge(perm[j], vs[i]) ? 1 : 0);
      cands.push_back(std::move(c));
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Cand& a, const Cand& b) { return a.bits < b.bits; });
    std::size_t off = cur.size();
    for (auto& c : cands) {
      bool child_tight = tight;
      if (tight) {
        int cmp = 0;
        for (std::size_t j = 0; j < k && cmp == 0; ++j) {
          if (c.bits[j] != best[off + j]) cmp = c.bits[j] < best[off + j] ? -1 : 1;
        }
        if (cmp > 0) continue;  // prefix already worse
        if (cmp < 0) child_tight = false;
      }
      long seen = version;
      cur.insert(cur.end(), c.bits.begin(), c.bits.end());
      perm.push_back(vs[c.idx]);
      used[c.idx] = true;
      descend(child_tight);
      used[c.idx] = false;
      perm.pop_back();
      cur.resize(off);
      // A best update below this node starts with our current prefix, so the
      // path is tight again for the remaining siblings.
      if (version != seen) tight = true;
    }
  }
};

}  // namespace

std::string canonical_code(const SimpleGraph& g) {
  Canonicalizer c;
  c.run(g);
  std::string out;
  out.push_back(static_cast<char>(g.order()));
  int acc = 0, nbits = 0;
  for (std::uint8_t b : c.best) {
    acc = acc << 1 | b;
    if (++nbits == 8) {
      out.push_back(static_cast<char>(acc));
      acc = 0;
      nbits = 0;
    }
  }
  if (nbits) out.push_back(static_cast<char>(acc << (8 - nbits)));
  return out;
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto degs = [](const SimpleGraph& g) {
    std::vector<int> d;
    for (VertexId v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degs(a) != degs(b)) return false;
  return canonical_code(a) == canonical_code(b);
}

void for_each_connected_graph(int n_max,
                              const std::function<void(const SimpleGraph&)>& fn,
                              long class_budget) {
  if (n_max < 1 || n_max > 10)
    throw DomainError("for_each_connected_graph: n_max must be in [1, 10]");
  long spent = 0;
  std::vector<SimpleGraph> level = {SimpleGraph(1, {})};
  fn(level.front());
  for (int n = 2; n <= n_max; ++n) {
    // Every connected graph on n vertices arises from a connected graph on
    // n-1 vertices by adding one vertex with a nonempty neighborhood (remove
    // any non-cut vertex to see this). Dedup by canonical code.
    std::set<std::string> seen;
    std::vector<std::pair<std::string, SimpleGraph>> next;
    for (const SimpleGraph& base : level) {
      std::vector<VertexId> vs = base.vertices();
      for (std::uint64_t mask = 1; mask < (1ull << (n - 1)); ++mask) {
        SimpleGraph cand = base;
        cand.add_vertex(n);
        for (int i = 0; i < n - 1; ++i)
          if (mask >> i & 1) cand.add_edge(vs[i], n);
        if (++spent > class_budget)
          throw ResourceError("for_each_connected_graph: class budget exceeded");
        std::string code = canonical_code(cand);
        if (seen.insert(code).second) next.emplace_back(std::move(code), cand);
      }
    }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, graph] : next) {
      level.push_back(graph);
      fn(graph);
    }
  }
}

std::vector<SimpleGraph> enumerate_connected_graphs(int n_max, long class_budget) {
  std::vector<SimpleGraph> out;
  for_each_connected_graph(
      n_max, [&](const SimpleGraph& g) { out.push_back(g); }, class_budget);
  return out;
}

}  // namespace minorcolor
