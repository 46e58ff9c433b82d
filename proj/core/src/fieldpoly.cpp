#include "minorcolor/fieldpoly.hpp"

#include <algorithm>
#include <sstream>

namespace minorcolor {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t least_prime_greater(std::int64_t n) {
  std::int64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  base %= p;
  if (base < 0) base += p;
  std::int64_t r = 1 % p;
  while (exp > 0) {
    if (exp & 1) r = r * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return r;
}

FieldElement::FieldElement(std::int64_t value, std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("FieldElement: modulus must be prime");
  value_ = value % p;
  if (value_ < 0) value_ += p;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  if (p_ != o.p_) throw DomainError("FieldElement: modulus mismatch");
  return {value_ + o.value_, p_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  if (p_ != o.p_) throw DomainError("FieldElement: modulus mismatch");
  return {value_ - o.value_, p_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  if (p_ != o.p_) throw DomainError("FieldElement: modulus mismatch");
  return {value_ * o.value_, p_};
}

Monomial Monomial::var(VertexId v, int e) {
  if (e < 1) throw DomainError("Monomial: exponent must be positive");
  Monomial m;
  m.exps.emplace_back(v, e);
  return m;
}

int Monomial::exponent_of(VertexId v) const {
  for (auto [var, e] : exps)
    if (var == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto [var, e] : exps) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < exps.size() || j < o.exps.size()) {
    if (j == o.exps.size() || (i < exps.size() && exps[i].first < o.exps[j].first)) {
      out.exps.push_back(exps[i++]);
    } else if (i == exps.size() || o.exps[j].first < exps[i].first) {
      out.exps.push_back(o.exps[j++]);
    } else {
      out.exps.emplace_back(exps[i].first, exps[i].second + o.exps[j].second);
      ++i, ++j;
    }
  }
  return out;
}

Monomial Monomial::without(VertexId v) const {
  Monomial out;
  for (auto& pr : exps)
    if (pr.first != v) out.exps.push_back(pr);
  return out;
}

int Monomial::compare(const Monomial& a, const Monomial& b) {
  std::size_t i = 0, j = 0;
  while (i < a.exps.size() || j < b.exps.size()) {
    VertexId va = i < a.exps.size() ? a.exps[i].first : kMaxLabel + 1;
    VertexId vb = j < b.exps.size() ? b.exps[j].first : kMaxLabel + 1;
    VertexId v = std::min(va, vb);
    int ea = va == v ? a.exps[i].second : 0;
    int eb = vb == v ? b.exps[j].second : 0;
    if (ea != eb) return ea > eb ? -1 : 1;  // higher exponent sorts first
    if (va == v) ++i;
    if (vb == v) ++j;
  }
  return 0;
}

std::string Monomial::to_text() const {
  if (exps.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto [v, e] : exps) {
    if (!first) os << "*";
    first = false;
    os << "v" << v;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

FieldPoly::FieldPoly(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw DomainError("FieldPoly: modulus must be prime");
}

FieldPoly FieldPoly::constant(std::int64_t p, std::int64_t c) {
  FieldPoly f(p);
  f.add_term(Monomial::one(), c);
  return f;
}

FieldPoly FieldPoly::variable(std::int64_t p, VertexId v) {
  FieldPoly f(p);
  f.add_term(Monomial::var(v), 1);
  return f;
}

FieldPoly FieldPoly::linear(std::int64_t p, VertexId v, std::int64_t c) {
  FieldPoly f(p);
  f.add_term(Monomial::var(v), 1);
  f.add_term(Monomial::one(), -c);
  return f;
}

FieldPoly FieldPoly::from_terms(
    std::int64_t p, const std::vector<std::pair<Monomial, std::int64_t>>& ts) {
  FieldPoly f(p);
  for (const auto& [m, c] : ts) f.add_term(m, c);
  return f;
}

void FieldPoly::add_term(const Monomial& m, std::int64_t c) {
  c %= p_;
  if (c < 0) c += p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

void FieldPoly::check_same_field(const FieldPoly& o, const char* who) const {
  if (p_ != o.p_) {
    std::ostringstream os;
    os << who << ": modulus mismatch (" << p_ << " vs " << o.p_ << ")";
    throw DomainError(os.str());
  }
}

std::int64_t FieldPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<VertexId> FieldPoly::variables() const {
  std::vector<VertexId> out;
  for (const auto& [m, c] : terms_)
    for (auto [v, e] : m.exps) out.push_back(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int FieldPoly::degree_in(VertexId v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(v));
  return d;
}

int FieldPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

FieldPoly FieldPoly::operator+(const FieldPoly& o) const {
  check_same_field(o, "add");
  FieldPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

FieldPoly FieldPoly::operator-(const FieldPoly& o) const {
  check_same_field(o, "sub");
  FieldPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

FieldPoly FieldPoly::operator-() const {
  FieldPoly out(p_);
  for (const auto& [m, c] : terms_) out.add_term(m, -c);
  return out;
}

FieldPoly FieldPoly::scaled(std::int64_t c) const {
  FieldPoly out(p_);
  for (const auto& [m, coef] : terms_) out.add_term(m, coef * (c % p_));
  return out;
}

FieldPoly FieldPoly::mul(const FieldPoly& a, const FieldPoly& b, long term_budget) {
  a.check_same_field(b, "mul");
  FieldPoly out(a.p_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma.times(mb), ca * cb);
      if (static_cast<long>(out.terms_.size()) > term_budget)
        throw ResourceError("mul: term budget exceeded");
    }
  }
  return out;
}

FieldPoly FieldPoly::operator*(const FieldPoly& o) const { return mul(*this, o); }

FieldPoly FieldPoly::fermat_reduce() const {
  return fermat_reduce_except(0);  // 0 is never a vertex label
}

FieldPoly FieldPoly::fermat_reduce_except(VertexId keep) const {
  FieldPoly out(p_);
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (auto [v, e] : m.exps) {
      int reduced = v == keep ? e : static_cast<int>((e - 1) % (p_ - 1) + 1);
      r.exps.emplace_back(v, reduced);
    }
    out.add_term(r, c);
  }
  return out;
}

std::int64_t FieldPoly::evaluate(const std::map<VertexId, std::int64_t>& point) const {
  std::int64_t acc = 0;
  for (const auto& [m, c] : terms_) {
    std::int64_t t = c;
    for (auto [v, e] : m.exps) {
      auto it = point.find(v);
      if (it == point.end()) {
        std::ostringstream os;
        os << "evaluate: no value for v" << v;
        throw DomainError(os.str());
      }
      t = t * mod_pow(it->second, e, p_) % p_;
    }
    acc = (acc + t) % p_;
  }
  return acc;
}

FieldPoly FieldPoly::substitute(VertexId v, std::int64_t c) const {
  FieldPoly out(p_);
  for (const auto& [m, coef] : terms_) {
    int e = m.exponent_of(v);
    if (e == 0) {
      out.add_term(m, coef);
    } else {
      out.add_term(m.without(v), coef * mod_pow(c, e, p_));
    }
  }
  return out;
}

FieldPoly FieldPoly::formal_derivative(VertexId v) const {
  FieldPoly out(p_);
  for (const auto& [m, coef] : terms_) {
    int e = m.exponent_of(v);
    if (e == 0) continue;
    std::int64_t factor = e % p_;  // characteristic p: v^p differentiates to 0
    if (factor == 0) continue;
    Monomial r = m.without(v);
    if (e > 1) r = r.times(Monomial::var(v, e - 1));
    out.add_term(r, coef * factor);
  }
  return out;
}

std::map<Monomial, FieldPoly> FieldPoly::coefficient_profile(VertexId v) const {
  std::map<Monomial, FieldPoly> out;
  for (const auto& [m, coef] : terms_) {
    Monomial rest = m.without(v);
    auto [it, inserted] = out.emplace(rest, FieldPoly(p_));
    int e = m.exponent_of(v);
    it->second.add_term(e == 0 ? Monomial::one() : Monomial::var(v, e), coef);
  }
  return out;
}

bool FieldPoly::is_zero_semantic(long eval_budget) const {
  std::vector<VertexId> vars = variables();
  double points = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) points *= static_cast<double>(p_);
  if (points > static_cast<double>(eval_budget))
    throw ResourceError("is_zero_semantic: evaluation budget exceeded");
  std::map<VertexId, std::int64_t> point;
  for (VertexId v : vars) point[v] = 0;
  for (;;) {
    if (evaluate(point) != 0) return false;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++point[vars[i]] < p_) break;
      point[vars[i]] = 0;
    }
    if (i == vars.size()) return true;
  }
}

std::string FieldPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << c;
    } else {
      os << c << "*" << m.to_text();
    }
  }
  return os.str();
}

std::string FieldPoly::serialize() const {
  std::ostringstream os;
  os << "p=" << p_ << "\n" << to_text();
  return os.str();
}

FactorMultiplicity linear_factor_multiplicity(const FieldPoly& f, VertexId v,
                                              std::int64_t beta) {
  if (!f.substitute(v, beta).is_zero()) return FactorMultiplicity::None;
  if (!f.formal_derivative(v).substitute(v, beta).is_zero())
    return FactorMultiplicity::Simple;
  return FactorMultiplicity::Multiple;
}

LinearDivision divide_linear(const FieldPoly& f, VertexId v, std::int64_t beta) {
  std::int64_t p = f.modulus();
  beta %= p;
  if (beta < 0) beta += p;
  int deg = f.degree_in(v);
  // a[e]: coefficient polynomial (in the other variables) of v^e.
  std::vector<FieldPoly> a(static_cast<std::size_t>(deg) + 1, FieldPoly(p));
  for (const auto& [m, c] : f.terms()) {
    int e = m.exponent_of(v);
    a[static_cast<std::size_t>(e)] =
        a[static_cast<std::size_t>(e)] + FieldPoly::from_terms(p, {{m.without(v), c}});
  }
  // Synthetic division by the monic (v - beta): b_{e-1} = a_e + beta*b_e.
  LinearDivision out{FieldPoly(p), FieldPoly(p)};
  FieldPoly carry(p);
  for (int e = deg; e >= 1; --e) {
    carry = a[static_cast<std::size_t>(e)] + carry.scaled(beta);
    for (const auto& [m, c] : carry.terms()) {
      Monomial shifted = e - 1 > 0 ? m.times(Monomial::var(v, e - 1)) : m;
      out.quotient = out.quotient + FieldPoly::from_terms(p, {{shifted, c}});
    }
  }
  out.remainder = a[0] + carry.scaled(beta);
  return out;
}

const char* to_string(FactorMultiplicity m) {
  switch (m) {
    case FactorMultiplicity::None: return "None";
    case FactorMultiplicity::Simple: return "Simple";
    case FactorMultiplicity::Multiple: return "Multiple";
  }
  return "?";
}

}  // namespace minorcolor
