#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

// Lexicographically minimal adjacency bit string over all vertex orderings.
// Bits are ordered column-major, (0,1), (0,2), (1,2), (0,3), ..., so the
// branch-and-bound can prune on a growing prefix. Exact; meant for order <= 10.
std::string canonical_code(const SimpleGraph& g);

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// One representative per isomorphism class of connected graphs, for every
// order 1..n_max, labels 1..n. Deterministic: ascending order, then ascending
// canonical code. `class_budget` caps the number of candidate canonicalizations
// (ResourceError beyond it).
void for_each_connected_graph(int n_max,
                              const std::function<void(const SimpleGraph&)>& fn,
                              long class_budget = 40'000'000);

std::vector<SimpleGraph> enumerate_connected_graphs(int n_max,
                                                    long class_budget = 40'000'000);

}  // namespace minorcolor
