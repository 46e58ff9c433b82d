#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

// Color values are elements of Z_p, never 0. Standard uses {1..t}; Shifted
// swaps color t for a field element beta outside {0..t}, giving {1..t-1, beta}.
struct ColorSet {
  enum class Kind { Standard, Shifted };
  Kind kind = Kind::Standard;
  int t = 1;
  std::int64_t beta = 0;  // Shifted only
  std::int64_t p = 2;

  static ColorSet standard(int t, std::int64_t p);
  static ColorSet shifted(int t, std::int64_t beta, std::int64_t p);

  std::vector<std::int64_t> colors() const;             // ascending
  std::vector<std::int64_t> annihilator_roots() const;  // Z_p minus colors, ascending
  bool contains(std::int64_t x) const;
  std::size_t size() const { return static_cast<std::size_t>(t); }
};

struct ColorAssignment {
  std::map<VertexId, std::int64_t> values;
  ColorSet colorset;

  std::int64_t at(VertexId v) const;
  bool operator==(const ColorAssignment&) const = default;
};

// Every edge bichromatic; every vertex assigned a color from the set.
bool is_proper(const SimpleGraph& g, const ColorAssignment& c);

// Deterministic backtracking: vertices ascending, colors ascending. Returns
// the lexicographically least proper coloring, or nullopt.
std::optional<ColorAssignment> find_coloring(const SimpleGraph& g, const ColorSet& cs);

int chromatic_number(const SimpleGraph& g);

// Given a proper coloring of contract_edge(h, e) with e = (v_s, v_b), color
// v_s with v_b's color. The result is proper on without_edge(h, e) (and on
// delete_edge(h, e)); properness is checked and a violation throws.
ColorAssignment transfer_contraction_coloring(const SimpleGraph& h, Edge e,
                                              const ColorAssignment& contracted);

// Given a proper coloring of h minus the pendant vertex v_s, extend it by
// giving v_s any color different from its unique neighbor's.
ColorAssignment extend_pendant_coloring(const SimpleGraph& h, VertexId vs,
                                        const ColorAssignment& partial);

// Replace beta with t in a Shifted coloring; stays proper because the color
// class of t is empty in any Shifted coloring.
ColorAssignment recolor_shifted_to_standard(const ColorAssignment& c);

// True iff chromatic_number(g) <= max_degree(g), or g is complete or an odd
// cycle (the two stated exceptions). Connected input required.
bool brooks_bound_check(const SimpleGraph& g);

}  // namespace minorcolor
