#include "minorcolor/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "minorcolor/fieldpoly.hpp"

namespace minorcolor {

ColorSet ColorSet::standard(int t, std::int64_t p) {
  if (t < 1) throw DomainError("ColorSet: need t >= 1");
  if (!is_prime(p)) throw DomainError("ColorSet: p must be prime");
  if (p <= t) throw DomainError("ColorSet: standard colors need p > t");
  ColorSet cs;
  cs.kind = Kind::Standard;
  cs.t = t;
  cs.p = p;
  return cs;
}

ColorSet ColorSet::shifted(int t, std::int64_t beta, std::int64_t p) {
  if (t < 1) throw DomainError("ColorSet: need t >= 1");
  if (!is_prime(p)) throw DomainError("ColorSet: p must be prime");
  if (beta <= t || beta >= p)
    throw DomainError("ColorSet: shifted beta must lie in Z_p outside {0..t}");
  ColorSet cs;
  cs.kind = Kind::Shifted;
  cs.t = t;
  cs.beta = beta;
  cs.p = p;
  return cs;
}

std::vector<std::int64_t> ColorSet::colors() const {
  std::vector<std::int64_t> out;
  if (kind == Kind::Standard) {
    for (int c = 1; c <= t; ++c) out.push_back(c);
  } else {
    for (int c = 1; c < t; ++c) out.push_back(c);
    out.push_back(beta);
  }
  return out;
}

std::vector<std::int64_t> ColorSet::annihilator_roots() const {
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < p; ++x)
    if (!contains(x)) out.push_back(x);
  return out;
}

bool ColorSet::contains(std::int64_t x) const {
  if (kind == Kind::Standard) return x >= 1 && x <= t;
  return (x >= 1 && x < t) || x == beta;
}

std::int64_t ColorAssignment::at(VertexId v) const {
  auto it = values.find(v);
  if (it == values.end()) {
    std::ostringstream os;
    os << "ColorAssignment: vertex v" << v << " unassigned";
    throw DomainError(os.str());
  }
  return it->second;
}

bool is_proper(const SimpleGraph& g, const ColorAssignment& c) {
  for (VertexId v : g.vertices()) {
    auto it = c.values.find(v);
    if (it == c.values.end() || !c.colorset.contains(it->second)) return false;
  }
  for (auto [u, v] : g.edges())
    if (c.values.at(u) == c.values.at(v)) return false;
  return true;
}

std::optional<ColorAssignment> find_coloring(const SimpleGraph& g, const ColorSet& cs) {
  std::vector<VertexId> vs = g.vertices();
  std::vector<std::int64_t> palette = cs.colors();
  ColorAssignment out;
  out.colorset = cs;

  // Plain deterministic backtracking, vertices and colors ascending: the
  // result is the lexicographically least proper coloring.
  std::vector<std::int64_t> chosen(vs.size(), 0);
  std::size_t i = 0;
  std::vector<std::size_t> next(vs.size(), 0);
  while (true) {
    if (i == vs.size()) {
      for (std::size_t k = 0; k < vs.size(); ++k) out.values[vs[k]] = chosen[k];
      return out;
    }
    bool advanced = false;
    for (std::size_t ci = next[i]; ci < palette.size(); ++ci) {
      std::int64_t col = palette[ci];
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k)
        if (g.has_edge(vs[k], vs[i]) && chosen[k] == col) ok = false;
      if (ok) {
        chosen[i] = col;
        next[i] = ci + 1;
        ++i;
        if (i < vs.size()) next[i] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (i == 0) return std::nullopt;
      next[i] = 0;
      --i;
    }
  }
}

int chromatic_number(const SimpleGraph& g) {
  if (g.empty()) return 0;
  for (int t = 1;; ++t) {
    if (find_coloring(g, ColorSet::standard(t, least_prime_greater(t))))
      return t;
  }
}

ColorAssignment transfer_contraction_coloring(const SimpleGraph& h, Edge e,
                                              const ColorAssignment& contracted) {
  auto [vs, vb] = e;
  if (!h.has_edge(vs, vb)) throw DomainError("transfer_contraction_coloring: not an edge");
  SimpleGraph hc = contract_edge(h, e);
  if (!is_proper(hc, contracted))
    throw DomainError("transfer_contraction_coloring: input coloring not proper");
  ColorAssignment out = contracted;
  out.values[vs] = contracted.at(vb);
  if (!is_proper(without_edge(h, e), out))
    throw DomainError("transfer_contraction_coloring: transfer produced a conflict");
  return out;
}

ColorAssignment extend_pendant_coloring(const SimpleGraph& h, VertexId vs,
                                        const ColorAssignment& partial) {
  if (h.degree(vs) != 1) throw DomainError("extend_pendant_coloring: vertex not pendant");
  VertexId vb = neighborhood(h, vs).front();
  if (partial.colorset.size() < 2)
    throw DomainError("extend_pendant_coloring: color set too small");
  std::int64_t avoid = partial.at(vb);
  ColorAssignment out = partial;
  for (std::int64_t c : partial.colorset.colors()) {
    if (c != avoid) {
      out.values[vs] = c;
      return out;
    }
  }
  throw DomainError("extend_pendant_coloring: no color available");
}

ColorAssignment recolor_shifted_to_standard(const ColorAssignment& c) {
  if (c.colorset.kind != ColorSet::Kind::Shifted)
    throw DomainError("recolor_shifted_to_standard: coloring not Shifted");
  ColorAssignment out;
  out.colorset = ColorSet::standard(c.colorset.t, c.colorset.p);
  for (auto [v, col] : c.values)
    out.values[v] = col == c.colorset.beta ? c.colorset.t : col;
  return out;
}

bool brooks_bound_check(const SimpleGraph& g) {
  if (!g.is_connected()) throw DomainError("brooks_bound_check: graph not connected");
  if (g.is_complete() || g.is_odd_cycle()) return true;
  return chromatic_number(g) <= g.max_degree();
}

}  // namespace minorcolor
