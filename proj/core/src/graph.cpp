#include "minorcolor/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace minorcolor {

namespace {

// Iterate set bits ascending.
template <typename Fn>
void for_bits(std::uint64_t m, Fn fn) {
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    fn(v);
  }
}

}  // namespace

int SimpleGraph::popcount(std::uint64_t m) { return std::popcount(m); }

void SimpleGraph::check_vertex(VertexId v, const char* who) const {
  if (!has_vertex(v)) {
    std::ostringstream os;
    os << who << ": vertex v" << v << " not in graph";
    throw DomainError(os.str());
  }
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) {
  if (n < 0 || n > kMaxLabel) throw DomainError("SimpleGraph: order out of range");
  for (VertexId v = 1; v <= n; ++v) add_vertex(v);
  for (auto [u, v] : edges) add_edge(u, v);
}

SimpleGraph SimpleGraph::complete(int n) {
  SimpleGraph g(n, {});
  for (VertexId u = 1; u <= n; ++u)
    for (VertexId v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::path(int n) {
  SimpleGraph g(n, {});
  for (VertexId v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
  if (n < 3) throw DomainError("cycle: need at least 3 vertices");
  SimpleGraph g = path(n);
  g.add_edge(n, 1);
  return g;
}

void SimpleGraph::add_vertex(VertexId v) {
  if (v < 1 || v > kMaxLabel) throw DomainError("add_vertex: label out of range");
  vmask_ |= 1ull << v;
}

void SimpleGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v) throw DomainError("add_edge: loop");
  adj_[u] |= 1ull << v;
  adj_[v] |= 1ull << u;
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for_bits(vmask_, [&](int v) { twice += popcount(adj_[v]); });
  return twice / 2;
}

std::vector<VertexId> SimpleGraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(order());
  for_bits(vmask_, [&](int v) { out.push_back(v); });
  return out;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for_bits(vmask_, [&](int u) {
    for_bits(adj_[u] & ~((2ull << u) - 1), [&](int v) { out.emplace_back(u, v); });
  });
  return out;
}

std::uint64_t SimpleGraph::neighbor_mask(VertexId v) const {
  check_vertex(v, "neighbor_mask");
  return adj_[v];
}

int SimpleGraph::max_degree() const {
  int d = 0;
  for_bits(vmask_, [&](int v) { d = std::max(d, popcount(adj_[v])); });
  return d;
}

bool SimpleGraph::is_connected() const {
  if (vmask_ == 0) return false;
  std::uint64_t seen = vmask_ & -vmask_;  // lowest vertex
  for (;;) {
    std::uint64_t grow = seen;
    for_bits(seen, [&](int v) { grow |= adj_[v]; });
    grow &= vmask_;
    if (grow == seen) break;
    seen = grow;
  }
  return seen == vmask_;
}

bool SimpleGraph::is_complete() const {
  int n = order();
  bool ok = true;
  for_bits(vmask_, [&](int v) { ok = ok && popcount(adj_[v]) == n - 1; });
  return ok;
}

bool SimpleGraph::is_odd_cycle() const {
  int n = order();
  if (n < 3 || n % 2 == 0 || !is_connected()) return false;
  bool two_regular = true;
  for_bits(vmask_, [&](int v) { two_regular = two_regular && popcount(adj_[v]) == 2; });
  return two_regular;
}

std::vector<VertexId> neighborhood(const SimpleGraph& g, VertexId v) {
  std::uint64_t m = g.neighbor_mask(v);
  std::vector<VertexId> out;
  for_bits(m, [&](int u) { out.push_back(u); });
  return out;
}

SimpleGraph contract_edge(const SimpleGraph& g, Edge e) {
  auto [vs, vb] = e;
  if (!g.has_edge(vs, vb)) throw DomainError("contract_edge: not an edge");
  SimpleGraph out = g;
  // v_b inherits v_s's neighbors except itself and shared ones.
  std::uint64_t gained = g.adj_[vs] & ~g.adj_[vb] & ~(1ull << vb);
  out.vmask_ &= ~(1ull << vs);
  out.adj_[vs] = 0;
  for_bits(out.vmask_, [&](int v) { out.adj_[v] &= ~(1ull << vs); });
  out.adj_[vb] |= gained;
  for_bits(gained, [&](int v) { out.adj_[v] |= 1ull << vb; });
  return out;
}

SimpleGraph without_edge(const SimpleGraph& g, Edge e) {
  auto [u, v] = e;
  if (!g.has_edge(u, v)) throw DomainError("without_edge: not an edge");
  SimpleGraph out = g;
  out.adj_[u] &= ~(1ull << v);
  out.adj_[v] &= ~(1ull << u);
  return out;
}

SimpleGraph delete_edge(const SimpleGraph& g, Edge e) {
  SimpleGraph out = without_edge(g, e);
  for (VertexId v : {e.first, e.second}) {
    if (out.adj_[v] == 0) out.vmask_ &= ~(1ull << v);
  }
  return out;
}

SimpleGraph induced(const SimpleGraph& g, const std::vector<VertexId>& a) {
  std::uint64_t keep = 0;
  for (VertexId v : a) {
    if (!g.has_vertex(v)) throw DomainError("induced: vertex not in graph");
    keep |= 1ull << v;
  }
  SimpleGraph out;
  out.vmask_ = keep;
  for_bits(keep, [&](int v) { out.adj_[v] = g.adj_[v] & keep; });
  return out;
}

SimpleGraph apply_op(const SimpleGraph& g, const ElementaryOp& op) {
  if (op.kind == ElementaryOp::Kind::Contract) {
    if (op.removed != op.vs && op.removed != op.vb)
      throw DomainError("apply_op: removed vertex must be an endpoint");
    if (op.removed == op.vs) return contract_edge(g, {op.vs, op.vb});
    return contract_edge(g, {op.vb, op.vs});
  }
  return delete_edge(g, {op.vs, op.vb});
}

namespace {

void maximal_subgraphs(const SimpleGraph& base, const std::vector<Edge>& all,
                       std::size_t i, std::vector<int>& deg, int l,
                       std::vector<Edge>& picked, std::vector<SimpleGraph>& out) {
  if (i == all.size()) {
    // Edge-maximal: every excluded edge must have a saturated endpoint.
    SimpleGraph cand = base;
    for (auto [u, v] : picked) cand.add_edge(u, v);
    for (auto [u, v] : all) {
      if (!cand.has_edge(u, v) && cand.degree(u) < l && cand.degree(v) < l) return;
    }
    out.push_back(cand);
    return;
  }
  auto [u, v] = all[i];
  if (deg[u] < l && deg[v] < l) {
    ++deg[u], ++deg[v];
    picked.push_back(all[i]);
    maximal_subgraphs(base, all, i + 1, deg, l, picked, out);
    picked.pop_back();
    --deg[u], --deg[v];
  }
  maximal_subgraphs(base, all, i + 1, deg, l, picked, out);
}

}  // namespace

std::vector<SimpleGraph> bounded_induced_family(const SimpleGraph& g,
                                                const std::vector<VertexId>& a,
                                                int l, int edge_budget) {
  if (l < 0) throw DomainError("bounded_induced_family: negative degree bound");
  SimpleGraph sub = induced(g, a);
  std::vector<Edge> all = sub.edges();
  if (static_cast<int>(all.size()) > edge_budget)
    throw ResourceError("bounded_induced_family: edge budget exceeded");
  SimpleGraph base;
  for (VertexId v : sub.vertices()) base.add_vertex(v);
  std::vector<int> deg(kMaxLabel + 1, 0);
  std::vector<Edge> picked;
  std::vector<SimpleGraph> out;
  maximal_subgraphs(base, all, 0, deg, l, picked, out);
  return out;
}

namespace {

void extend_clique(const SimpleGraph& g, std::uint64_t cand, int size, int& best) {
  best = std::max(best, size);
  while (cand) {
    if (size + SimpleGraph::popcount(cand) <= best) return;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    extend_clique(g, cand & g.neighbor_mask(v), size + 1, best);
  }
}

}  // namespace

int clique_number(const SimpleGraph& g) {
  if (g.empty()) return 0;
  int best = 0;
  extend_clique(g, g.vertex_mask(), 0, best);
  return best;
}

std::string describe(const SimpleGraph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges=[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) os << ",";
    first = false;
    os << u << "-" << v;
  }
  os << "]";
  return os.str();
}

}  // namespace minorcolor
