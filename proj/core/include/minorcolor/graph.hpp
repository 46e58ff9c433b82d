#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minorcolor/errors.hpp"

namespace minorcolor {

// Vertices carry global 1-based labels assigned by the original graph. Labels
// survive minor operations unchanged and are never reused, so a vertex of an
// intermediate graph can always be traced back to the input graph.
using VertexId = int;

// Labels live in [1, 62]: a neighbor set fits one 64-bit word and graph6
// round-trips without the multi-byte size header.
inline constexpr VertexId kMaxLabel = 62;

using Edge = std::pair<VertexId, VertexId>;

struct ElementaryOp {
  enum class Kind { Contract, Delete };
  Kind kind = Kind::Delete;
  VertexId vs = 0;       // endpoint named v_s; for Contract this is removed
  VertexId vb = 0;       // kept endpoint
  VertexId removed = 0;  // == vs for Contract, 0 for Delete

  bool operator==(const ElementaryOp&) const = default;
};

// Simple undirected graph on labeled vertices, no loops, no multi-edges.
// Value type: mutating operations return new graphs.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Vertices labeled 1..n, edges given as label pairs.
  SimpleGraph(int n, const std::vector<Edge>& edges);

  static SimpleGraph complete(int n);
  static SimpleGraph path(int n);
  static SimpleGraph cycle(int n);

  int order() const { return popcount(vmask_); }
  int edge_count() const;
  bool empty() const { return vmask_ == 0; }

  bool has_vertex(VertexId v) const {
    return v >= 1 && v <= kMaxLabel && (vmask_ >> v & 1);
  }
  bool has_edge(VertexId u, VertexId v) const {
    return has_vertex(u) && has_vertex(v) && (adj_[u] >> v & 1);
  }

  std::vector<VertexId> vertices() const;  // ascending
  std::vector<Edge> edges() const;         // ascending (u, v), u < v
  std::uint64_t vertex_mask() const { return vmask_; }
  std::uint64_t neighbor_mask(VertexId v) const;

  int degree(VertexId v) const { return popcount(neighbor_mask(v)); }
  int max_degree() const;

  bool is_connected() const;  // single vertex: true; empty graph: false
  bool is_complete() const;
  bool is_odd_cycle() const;

  // Returns the complete graph check against a specific order: exactly t
  // vertices and all pairs adjacent.
  bool is_complete_of_order(int t) const { return order() == t && is_complete(); }

  void add_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v);

  bool operator==(const SimpleGraph&) const = default;

  static int popcount(std::uint64_t m);

 private:
  std::uint64_t vmask_ = 0;
  std::array<std::uint64_t, kMaxLabel + 1> adj_{};  // adj_[0] unused

  void check_vertex(VertexId v, const char* who) const;
  friend SimpleGraph contract_edge(const SimpleGraph&, Edge);
  friend SimpleGraph delete_edge(const SimpleGraph&, Edge);
  friend SimpleGraph without_edge(const SimpleGraph&, Edge);
  friend SimpleGraph induced(const SimpleGraph&, const std::vector<VertexId>&);
};

// Open neighborhood N(v), ascending.
std::vector<VertexId> neighborhood(const SimpleGraph& g, VertexId v);

// Contract edge (v_s, v_b): remove v_s, attach v_s's other neighbors to v_b
// (no loops, no multi-edges). The first component of the edge is removed.
SimpleGraph contract_edge(const SimpleGraph& g, Edge e);

// Delete the edge; an endpoint left with degree 0 leaves the vertex set too.
SimpleGraph delete_edge(const SimpleGraph& g, Edge e);

// Delete the edge but keep both endpoints even if isolated. The algebraic
// edge-removed products are built over this view, so a newly isolated
// endpoint still contributes its annihilator factor.
SimpleGraph without_edge(const SimpleGraph& g, Edge e);

// Subgraph induced by the given labels (must all be present).
SimpleGraph induced(const SimpleGraph& g, const std::vector<VertexId>& a);

SimpleGraph apply_op(const SimpleGraph& g, const ElementaryOp& op);

// All edge-maximal spanning subgraphs of induced(g, a) with max degree <= l,
// in a deterministic order. Edge count of the induced subgraph is capped by
// `edge_budget` (the enumeration is exponential in it).
std::vector<SimpleGraph> bounded_induced_family(const SimpleGraph& g,
                                                const std::vector<VertexId>& a,
                                                int l, int edge_budget = 24);

// Exact clique number (branch and bound; fine for order <= ~20).
int clique_number(const SimpleGraph& g);

std::string describe(const SimpleGraph& g);  // small debug string "n=3 edges=[1-2,2-3]"

}  // namespace minorcolor
