#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minorcolor/graph.hpp"

namespace minorcolor {

inline constexpr long kDefaultMinorNodeBudget = 50'000'000;

// Exact test for a K_t minor: search for t disjoint, nonempty, connected,
// pairwise-adjacent branch sets. Node-budget overrun raises ResourceError.
bool has_clique_minor(const SimpleGraph& g, int t,
                      long node_budget = kDefaultMinorNodeBudget);

// Largest t with a K_t minor (the Hadwiger number). 0 for the empty graph.
int hadwiger_number(const SimpleGraph& g, long node_budget = kDefaultMinorNodeBudget);

// A run of elementary operations from `source` down to the complete graph on
// target_t vertices. steps[i] holds the op taking graph(i) to graph(i+1),
// where graph(0) == source; `graphs` excludes the source, so graphs.back() is
// the final complete graph. Every intermediate graph is simple and connected,
// and no intermediate gains a clique minor the source lacked.
struct MinorSequence {
  SimpleGraph source;
  int target_t = 0;
  std::vector<ElementaryOp> steps;
  std::vector<SimpleGraph> graphs;

  std::size_t length() const { return steps.size(); }
  const SimpleGraph& graph_before(std::size_t i) const;  // graph the i-th op acts on
  const SimpleGraph& graph_after(std::size_t i) const;

  // Re-applies every op from the source and checks each stored graph matches.
  void validate() const;
};

// Replays ops against `source` (used by witness replay; throws on mismatch).
MinorSequence replay_sequence(const SimpleGraph& source, int target_t,
                              const std::vector<ElementaryOp>& steps);

// Up to max_count distinct op sequences from g to K_t, found by depth-first
// search that tries contractions before deletions and lower-labeled edges
// first; dead states are memoized by canonical code. Connected input with a
// K_t minor yields at least one sequence (contractions alone suffice).
std::vector<MinorSequence> find_minor_sequences(
    const SimpleGraph& g, int t, int max_count,
    long node_budget = kDefaultMinorNodeBudget);

MinorSequence find_minor_sequence(const SimpleGraph& g, int t,
                                  long node_budget = kDefaultMinorNodeBudget);

}  // namespace minorcolor
