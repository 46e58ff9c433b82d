#include "minorcolor/encoding.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

#include "minorcolor/errors.hpp"

namespace minorcolor {

const char* to_string(PrimeMode m) {
  return m == PrimeMode::Strict ? "strict" : "small-prime";
}

std::int64_t strict_prime(const SimpleGraph& g) {
  std::int64_t d = g.max_degree();
  return least_prime_greater(2 * d * d * g.order());
}

EncodingContext EncodingContext::standard(const SimpleGraph& g, int t,
                                          std::int64_t p, PrimeMode mode) {
  if (g.empty()) throw DomainError("encoding context needs a nonempty graph");
  if (mode == PrimeMode::Strict) {
    std::int64_t d = g.max_degree();
    if (p <= 2 * d * d * g.order())
      throw DomainError("strict mode needs p > 2*maxdeg^2*order, got p=" +
                        std::to_string(p));
  } else {
    if (p < t + 2)
      throw DomainError("small-prime mode needs p >= t+2, got p=" +
                        std::to_string(p));
  }
  EncodingContext ctx;
  ctx.graph = g;
  ctx.t = t;
  ctx.p = p;
  ctx.colorset = ColorSet::standard(t, p);  // validates t >= 1, p prime, p > t
  ctx.mode = mode;
  return ctx;
}

EncodingContext EncodingContext::shifted(const SimpleGraph& g, int t,
                                         std::int64_t beta, std::int64_t p) {
  if (g.empty()) throw DomainError("encoding context needs a nonempty graph");
  if (p < t + 2)
    throw DomainError("small-prime mode needs p >= t+2, got p=" + std::to_string(p));
  EncodingContext ctx;
  ctx.graph = g;
  ctx.t = t;
  ctx.p = p;
  ctx.colorset = ColorSet::shifted(t, beta, p);
  ctx.mode = PrimeMode::SmallPrime;
  return ctx;
}

EncodingContext EncodingContext::with_graph(const SimpleGraph& g) const {
  EncodingContext ctx = *this;
  ctx.graph = g;
  return ctx;
}

FactoredPoly::FactoredPoly(std::int64_t p, const ColorSet& cs) : p_(p), cs_(cs) {
  if (!is_prime(p)) throw DomainError("modulus must be prime");
  if (cs.p != p) throw DomainError("color set modulus mismatch");
}

void FactoredPoly::push_edge(VertexId a, VertexId b) {
  if (a == b) throw DomainError("edge factor needs distinct endpoints");
  factors_.push_back(EdgeFactor{a, b});
}

void FactoredPoly::push_annihilator(VertexId v) {
  factors_.push_back(AnnihilatorFactor{v});
}

void FactoredPoly::push_linear(VertexId v, std::int64_t c) {
  factors_.push_back(LinearFactor{v, ((c % p_) + p_) % p_});
}

bool FactoredPoly::remove_annihilator(VertexId v) {
  for (auto it = factors_.begin(); it != factors_.end(); ++it) {
    if (auto* a = std::get_if<AnnihilatorFactor>(&*it); a && a->v == v) {
      factors_.erase(it);
      return true;
    }
  }
  return false;
}

bool FactoredPoly::remove_linear(VertexId v, std::int64_t c) {
  std::int64_t cc = ((c % p_) + p_) % p_;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    if (auto* l = std::get_if<LinearFactor>(&*it); l && l->v == v && l->c == cc) {
      factors_.erase(std::next(it).base());
      return true;
    }
  }
  return false;
}

std::vector<VertexId> FactoredPoly::variables() const {
  std::set<VertexId> vars;
  for (const auto& f : factors_) {
    if (auto* e = std::get_if<EdgeFactor>(&f)) {
      vars.insert(e->a);
      vars.insert(e->b);
    } else if (auto* a = std::get_if<AnnihilatorFactor>(&f)) {
      vars.insert(a->v);
    } else {
      vars.insert(std::get<LinearFactor>(f).v);
    }
  }
  return {vars.begin(), vars.end()};
}

const std::vector<std::int64_t>& FactoredPoly::ann_table() const {
  if (ann_cache_.empty()) {
    ann_cache_.assign(static_cast<std::size_t>(p_), 1);
    for (std::int64_t x = 0; x < p_; ++x) {
      std::int64_t acc = 1;
      for (std::int64_t r : cs_.annihilator_roots())
        acc = acc * (((x - r) % p_ + p_) % p_) % p_;
      ann_cache_[static_cast<std::size_t>(x)] = acc;
    }
  }
  return ann_cache_;
}

std::int64_t FactoredPoly::evaluate(const std::map<VertexId, std::int64_t>& point) const {
  auto value_of = [&](VertexId v) {
    auto it = point.find(v);
    if (it == point.end())
      throw DomainError("evaluation point missing v" + std::to_string(v));
    return ((it->second % p_) + p_) % p_;
  };
  std::int64_t acc = 1;
  for (const auto& f : factors_) {
    std::int64_t val;
    if (auto* e = std::get_if<EdgeFactor>(&f)) {
      val = ((value_of(e->a) - value_of(e->b)) % p_ + p_) % p_;
    } else if (auto* a = std::get_if<AnnihilatorFactor>(&f)) {
      val = ann_table()[static_cast<std::size_t>(value_of(a->v))];
    } else {
      const auto& l = std::get<LinearFactor>(f);
      val = ((value_of(l.v) - l.c) % p_ + p_) % p_;
    }
    if (val == 0) return 0;
    acc = acc * val % p_;
  }
  return acc;
}

std::optional<std::map<VertexId, std::int64_t>> FactoredPoly::find_nonzero_point(
    long eval_budget) const {
  std::vector<VertexId> vars = variables();
  std::map<VertexId, std::int64_t> point;
  for (VertexId v : vars) point[v] = 0;
  long used = 0;
  while (true) {
    if (++used > eval_budget)
      throw ResourceError("nonzero-point scan exceeded evaluation budget");
    if (evaluate(point) != 0) return point;
    // odometer, last variable fastest, so the first hit is lex-least
    int i = static_cast<int>(vars.size()) - 1;
    for (; i >= 0; --i) {
      auto& slot = point[vars[static_cast<std::size_t>(i)]];
      if (++slot < p_) break;
      slot = 0;
    }
    if (i < 0) return std::nullopt;
  }
}

bool FactoredPoly::is_zero_semantic(long eval_budget) const {
  return !find_nonzero_point(eval_budget).has_value();
}

FieldPoly FactoredPoly::factor_poly(const Factor& f) const {
  if (auto* e = std::get_if<EdgeFactor>(&f)) {
    return FieldPoly::from_terms(
        p_, {{Monomial::var(e->a), 1}, {Monomial::var(e->b), p_ - 1}});
  }
  if (auto* a = std::get_if<AnnihilatorFactor>(&f)) {
    FieldPoly acc = FieldPoly::constant(p_, 1);
    for (std::int64_t r : cs_.annihilator_roots())
      acc = acc * FieldPoly::linear(p_, a->v, r);
    return acc;
  }
  const auto& l = std::get<LinearFactor>(f);
  return FieldPoly::linear(p_, l.v, l.c);
}

FieldPoly FactoredPoly::expand(long term_budget) const {
  FieldPoly acc = FieldPoly::constant(p_, 1);
  for (const auto& f : factors_)
    acc = FieldPoly::mul(acc, factor_poly(f), term_budget);
  return acc;
}

FieldPoly FactoredPoly::expand_reduced(long term_budget) const {
  FieldPoly acc = FieldPoly::constant(p_, 1);
  for (const auto& f : factors_)
    acc = FieldPoly::mul(acc, factor_poly(f), term_budget).fermat_reduce();
  return acc;
}

FieldPoly FactoredPoly::expand_reduced_except(VertexId keep, long term_budget) const {
  FieldPoly acc = FieldPoly::constant(p_, 1);
  for (const auto& f : factors_)
    acc = FieldPoly::mul(acc, factor_poly(f), term_budget).fermat_reduce_except(keep);
  return acc;
}

std::vector<std::string> FactoredPoly::factor_keys() const {
  std::vector<std::string> keys;
  keys.reserve(factors_.size());
  for (const auto& f : factors_) {
    std::ostringstream os;
    if (auto* e = std::get_if<EdgeFactor>(&f)) {
      os << "edge:" << e->a << '-' << e->b;
    } else if (auto* a = std::get_if<AnnihilatorFactor>(&f)) {
      os << "ann:" << a->v;
    } else {
      const auto& l = std::get<LinearFactor>(f);
      os << "lin:" << l.v << '-' << l.c;
    }
    keys.push_back(os.str());
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::string FactoredPoly::dump() const {
  std::ostringstream os;
  os << "p=" << p_ << '\n';
  for (const auto& f : factors_) {
    if (auto* e = std::get_if<EdgeFactor>(&f)) {
      os << "(v" << e->a << " - v" << e->b << ")\n";
    } else if (auto* a = std::get_if<AnnihilatorFactor>(&f)) {
      os << "ann(v" << a->v << ")\n";
    } else {
      const auto& l = std::get<LinearFactor>(f);
      os << "(v" << l.v << " - " << l.c << ")\n";
    }
  }
  return os.str();
}

FactoredPoly build_P(const EncodingContext& ctx) {
  FactoredPoly out(ctx.p, ctx.colorset);
  for (VertexId c : ctx.graph.vertices()) {
    for (VertexId d : neighborhood(ctx.graph, c)) out.push_edge(c, d);
    out.push_annihilator(c);
  }
  return out;
}

FactoredPoly build_P_hat(const EncodingContext& ctx) {
  if (ctx.colorset.kind != ColorSet::Kind::Shifted)
    throw DomainError("build_P_hat needs a shifted color set");
  return build_P(ctx);
}

FactoredPoly build_H(const EncodingContext& ctx, Edge e) {
  if (!ctx.graph.has_edge(e.first, e.second))
    throw DomainError("build_H needs an edge of the graph");
  return build_P(ctx.with_graph(without_edge(ctx.graph, e)));
}

FactoredPoly build_S(const EncodingContext& ctx, Edge e) {
  FactoredPoly s = build_H(ctx, e);
  s.push_edge(e.first, e.second);
  return s;
}

FactoredPoly build_Q(const EncodingContext& ctx, Edge e) {
  FactoredPoly q = build_S(ctx, e);
  bool removed = q.remove_annihilator(e.first);
  assert(removed);
  (void)removed;
  return q;
}

SplitSets select_M1(const EncodingContext& ctx, Edge e, long eval_budget) {
  if (ctx.mode != PrimeMode::SmallPrime)
    throw DomainError("select_M1 needs small-prime mode");
  FactoredPoly g = build_Q(ctx, e);
  SplitSets split;
  split.vs = e.first;
  for (VertexId v : ctx.graph.vertices()) {
    if (v == split.vs) continue;
    g.push_linear(v, ctx.t);
    if (g.is_zero_semantic(eval_budget)) {
      g.remove_linear(v, ctx.t);
      split.m2.push_back(v);
    } else {
      split.m1.push_back(v);
    }
  }
  return split;
}

FactoredPoly build_G_poly(const EncodingContext& ctx, Edge e, const SplitSets& split) {
  FactoredPoly g = build_Q(ctx, e);
  for (VertexId v : split.m1) g.push_linear(v, ctx.t);
  return g;
}

std::vector<JPoly> build_J_candidates(const EncodingContext& ctx,
                                      const FactoredPoly& g_factored, VertexId vc,
                                      long term_budget) {
  if (ctx.mode != PrimeMode::SmallPrime)
    throw DomainError("build_J needs small-prime mode");
  FieldPoly partial = g_factored.expand_reduced_except(vc, term_budget);
  if (partial.is_zero())
    throw DomainError("grouped expansion vanished; no coefficient to take");
  std::vector<JPoly> out;
  for (auto& [mono, coeff] : partial.coefficient_profile(vc))
    out.push_back(JPoly{coeff, mono});
  return out;
}

JPoly build_J(const EncodingContext& ctx, const FactoredPoly& g_factored,
              VertexId vc, bool has_annihilator, long term_budget) {
  JPoly j = build_J_candidates(ctx, g_factored, vc, term_budget).front();
  std::int64_t d = ctx.graph.max_degree();
  std::int64_t bound = 2 * d + (has_annihilator ? ctx.p - ctx.t : 0);
  std::int64_t deg = j.coeff.degree_in(vc);
  if (deg > bound)
    throw DomainError("coefficient degree " + std::to_string(deg) +
                      " exceeds bound " + std::to_string(bound));
  return j;
}

std::optional<std::int64_t> find_beta(const EncodingContext& ctx,
                                      const SplitSets& split, const FieldPoly& gprime,
                                      const std::map<VertexId, JPoly>& j) {
  if (split.m2.empty()) return ctx.t + 1;  // every candidate works vacuously
  auto j_of = [&](VertexId v) -> const FieldPoly& {
    auto it = j.find(v);
    if (it == j.end())
      throw DomainError("missing grouped coefficient for v" + std::to_string(v));
    return it->second.coeff;
  };
  for (std::int64_t beta = ctx.t + 1; beta < ctx.p; ++beta) {
    bool ok = true;
    for (VertexId vc : split.m2) {
      if (linear_factor_multiplicity(j_of(vc), vc, beta) != FactorMultiplicity::Simple ||
          linear_factor_multiplicity(gprime, vc, beta) != FactorMultiplicity::Simple) {
        ok = false;
        break;
      }
    }
    if (ok &&
        (linear_factor_multiplicity(j_of(split.vs), split.vs, beta) !=
             FactorMultiplicity::None ||
         linear_factor_multiplicity(gprime, split.vs, beta) != FactorMultiplicity::None))
      ok = false;
    if (ok) return beta;
  }
  return std::nullopt;
}

KBuild build_K_poly(const EncodingContext& ctx, const SplitSets& split,
                    const FieldPoly& gprime, std::int64_t beta, long term_budget) {
  KBuild out;
  FieldPoly cur = gprime;
  for (VertexId vc : split.m2) {
    LinearDivision d = divide_linear(cur, vc, beta);
    if (!d.remainder.is_zero()) {
      out.failed_var = vc;
      out.remainder = d.remainder;
      return out;
    }
    cur = d.quotient;
  }
  for (VertexId vc : split.m2)
    cur = FieldPoly::mul(cur, FieldPoly::linear(ctx.p, vc, ctx.t), term_budget)
              .fermat_reduce();
  ColorSet shifted = ColorSet::shifted(ctx.t, beta, ctx.p);
  for (std::int64_t r : shifted.annihilator_roots())
    cur = FieldPoly::mul(cur, FieldPoly::linear(ctx.p, split.vs, r), term_budget)
              .fermat_reduce();
  out.k = cur.fermat_reduce();
  return out;
}

std::optional<ColorAssignment> exists_nonzero_on(const FactoredPoly& f,
                                                 const ColorSet& domain,
                                                 long eval_budget) {
  if (domain.p != f.modulus()) throw DomainError("domain modulus mismatch");
  std::vector<VertexId> vars = f.variables();
  std::vector<std::int64_t> colors = domain.colors();
  std::vector<std::size_t> idx(vars.size(), 0);
  long used = 0;
  while (true) {
    if (++used > eval_budget)
      throw ResourceError("domain scan exceeded evaluation budget");
    std::map<VertexId, std::int64_t> point;
    for (std::size_t i = 0; i < vars.size(); ++i) point[vars[i]] = colors[idx[i]];
    if (f.evaluate(point) != 0) {
      ColorAssignment a;
      a.values = std::move(point);
      a.colorset = domain;
      return a;
    }
    int i = static_cast<int>(vars.size()) - 1;
    for (; i >= 0; --i) {
      if (++idx[static_cast<std::size_t>(i)] < colors.size()) break;
      idx[static_cast<std::size_t>(i)] = 0;
    }
    if (i < 0) return std::nullopt;
  }
}

}  // namespace minorcolor
