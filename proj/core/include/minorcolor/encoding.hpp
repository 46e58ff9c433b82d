#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minorcolor/coloring.hpp"
#include "minorcolor/fieldpoly.hpp"
#include "minorcolor/graph.hpp"

namespace minorcolor {

// Strict follows the worst-case prime bound p > 2*maxdeg^2*order and never
// expands products (evaluation only). SmallPrime accepts any prime p >= t+2
// and allows symbolic work (expansion, reduction, division).
enum class PrimeMode { Strict, SmallPrime };
const char* to_string(PrimeMode m);

// Least prime exceeding 2 * maxdeg(g)^2 * order(g).
std::int64_t strict_prime(const SimpleGraph& g);

struct EncodingContext {
  SimpleGraph graph;
  int t = 1;
  std::int64_t p = 2;
  ColorSet colorset;
  PrimeMode mode = PrimeMode::Strict;

  static EncodingContext standard(const SimpleGraph& g, int t, std::int64_t p,
                                  PrimeMode mode);
  static EncodingContext shifted(const SimpleGraph& g, int t, std::int64_t beta,
                                 std::int64_t p);

  EncodingContext with_graph(const SimpleGraph& g) const;
};

// Product of simple factors, kept unexpanded. Edge factors (v_a - v_b) come in
// both orientations (one per ordered neighbor pair); annihilator factors are
// the dense products over the non-colors of the context's color set, so they
// vanish exactly off the color set.
class FactoredPoly {
 public:
  struct EdgeFactor {
    VertexId a, b;
    bool operator==(const EdgeFactor&) const = default;
  };
  struct AnnihilatorFactor {
    VertexId v;
    bool operator==(const AnnihilatorFactor&) const = default;
  };
  struct LinearFactor {
    VertexId v;
    std::int64_t c;
    bool operator==(const LinearFactor&) const = default;
  };
  using Factor = std::variant<EdgeFactor, AnnihilatorFactor, LinearFactor>;

  FactoredPoly(std::int64_t p, const ColorSet& cs);

  std::int64_t modulus() const { return p_; }
  const ColorSet& colorset() const { return cs_; }
  const std::vector<Factor>& factors() const { return factors_; }

  void push_edge(VertexId a, VertexId b);
  void push_annihilator(VertexId v);
  void push_linear(VertexId v, std::int64_t c);
  bool remove_annihilator(VertexId v);  // false if no such factor
  bool remove_linear(VertexId v, std::int64_t c);

  std::vector<VertexId> variables() const;  // ascending union over factors

  // Factor-by-factor evaluation with early abort on a zero factor.
  std::int64_t evaluate(const std::map<VertexId, std::int64_t>& point) const;

  // Exhaustive vanishing test over Z_p^variables (no expansion involved).
  bool is_zero_semantic(long eval_budget = kDefaultEvalBudget) const;
  std::optional<std::map<VertexId, std::int64_t>> find_nonzero_point(
      long eval_budget = kDefaultEvalBudget) const;

  FieldPoly expand(long term_budget = kDefaultTermBudget) const;
  // Fermat-reduces between multiplications, keeping the term count bounded by
  // the number of reduced monomials. The _except variant leaves one variable's
  // exponents untouched.
  FieldPoly expand_reduced(long term_budget = kDefaultTermBudget) const;
  FieldPoly expand_reduced_except(VertexId keep,
                                  long term_budget = kDefaultTermBudget) const;

  // Multiset-comparable factor keys ("edge:3-5", "ann:4", "lin:2-7"), sorted.
  std::vector<std::string> factor_keys() const;
  // "p=<prime>" header, then one factor per line in canonical text.
  std::string dump() const;

 private:
  std::int64_t p_;
  ColorSet cs_;
  std::vector<Factor> factors_;

  FieldPoly factor_poly(const Factor& f) const;
  const std::vector<std::int64_t>& ann_table() const;
  mutable std::vector<std::int64_t> ann_cache_;
};

// The colorability product over ctx.graph: per vertex, one factor per
// neighbor (both orientations across the graph) and one annihilator. Nonzero
// points over the color set are exactly the proper colorings.
FactoredPoly build_P(const EncodingContext& ctx);

// build_P against a Shifted color set (annihilators over Z_p minus the
// shifted colors). ctx must be shifted.
FactoredPoly build_P_hat(const EncodingContext& ctx);

// Edge-removed product: build_P with e's two factors omitted and every vertex
// kept (a newly isolated endpoint keeps its annihilator).
FactoredPoly build_H(const EncodingContext& ctx, Edge e);

// S = H * (v_s - v_b), with e = (v_s, v_b).
FactoredPoly build_S(const EncodingContext& ctx, Edge e);

// Q = S with v_s's annihilator removed: v_s ranges over all of Z_p at a
// nonzero point while every other vertex is still pinned to the color set.
FactoredPoly build_Q(const EncodingContext& ctx, Edge e);

// Partition of the step graph's vertices: m1 (vertices whose (v - t) factor
// joined the product), m2 (the rest), and the distinguished v_s.
struct SplitSets {
  std::vector<VertexId> m1, m2;  // ascending
  VertexId vs = 0;
};

// Greedy ascending scan over V \ {v_s}: tentatively multiply (v - t) onto Q
// and keep it iff the product still has a nonzero point. Vertices whose
// factor would kill the product form m2; for those, G * (v_c - t) vanishes
// identically no matter what joins later. SmallPrime mode only.
SplitSets select_M1(const EncodingContext& ctx, Edge e,
                    long eval_budget = kDefaultEvalBudget);

// G = Q * prod_{v in m1} (v - t).
FactoredPoly build_G_poly(const EncodingContext& ctx, Edge e, const SplitSets& split);

// Coefficient of the first canonical-order monomial (in the other variables)
// of G with every variable except vc Fermat-reduced. For vc != v_s the
// coefficient carries vc's annihilator; for v_s it is bare. Degree in vc is
// checked against 2*maxdeg + (p - t) (annihilator present) or 2*maxdeg.
struct JPoly {
  FieldPoly coeff;    // univariate in the grouped variable
  Monomial monomial;  // which residual monomial was used
};
JPoly build_J(const EncodingContext& ctx, const FactoredPoly& g_factored,
              VertexId vc, bool has_annihilator,
              long term_budget = kDefaultTermBudget);
// Every candidate (residual monomial, coefficient) pair, canonical order.
std::vector<JPoly> build_J_candidates(const EncodingContext& ctx,
                                      const FactoredPoly& g_factored, VertexId vc,
                                      long term_budget = kDefaultTermBudget);

// Least beta in Z_p \ {0..t} such that (v_c - beta) divides J(v_c) and the
// reduced G exactly once for every v_c in m2, and (v_s - beta) divides
// neither J(v_s) nor the reduced G. Empty m2 qualifies every beta vacuously
// (least returned). nullopt when no beta qualifies.
std::optional<std::int64_t> find_beta(const EncodingContext& ctx,
                                      const SplitSets& split, const FieldPoly& gprime,
                                      const std::map<VertexId, JPoly>& j);

// K = (G' / prod_{m2}(v_c - beta)) * prod_{m2}(v_c - t) * ann'(v_s), where
// ann'(v_s) runs over Z_p \ ({1..t-1} u {beta}). Division goes one variable
// at a time; a nonzero remainder aborts with the witness kept.
struct KBuild {
  std::optional<FieldPoly> k;  // reduced; nullopt if division failed
  VertexId failed_var = 0;
  FieldPoly remainder;

  KBuild() : remainder(2) {}
};
KBuild build_K_poly(const EncodingContext& ctx, const SplitSets& split,
                    const FieldPoly& gprime, std::int64_t beta,
                    long term_budget = kDefaultTermBudget);

// Least (lexicographic, vertices ascending, colors ascending) assignment over
// domain^variables(f) with a nonzero evaluation.
std::optional<ColorAssignment> exists_nonzero_on(const FactoredPoly& f,
                                                 const ColorSet& domain,
                                                 long eval_budget = kDefaultEvalBudget);

}  // namespace minorcolor
