#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorcolor/errors.hpp"
#include "minorcolor/graph.hpp"

namespace minorcolor {

bool is_prime(std::int64_t n);
std::int64_t least_prime_greater(std::int64_t n);

// Default caps. Expansion work beyond them raises ResourceError, which the
// verifier layer reports as SKIP.
inline constexpr long kDefaultTermBudget = 1'000'000;
inline constexpr long kDefaultEvalBudget = 2'000'000;

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p);

// Element of Z_p. Mixed-modulus arithmetic throws.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::int64_t p);

  std::int64_t value() const { return value_; }
  std::int64_t modulus() const { return p_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  bool operator==(const FieldElement&) const = default;

 private:
  std::int64_t value_;
  std::int64_t p_;
};

// Product of variables with positive exponents, kept sorted by variable id.
// The canonical term order scans variables ascending and puts the higher
// exponent first, so v1^2 < v1*v2 < v1 < v2 < 1.
struct Monomial {
  std::vector<std::pair<VertexId, int>> exps;

  static Monomial one() { return {}; }
  static Monomial var(VertexId v, int e = 1);

  bool is_one() const { return exps.empty(); }
  int exponent_of(VertexId v) const;
  int total_degree() const;
  Monomial times(const Monomial& o) const;
  Monomial without(VertexId v) const;

  // -1, 0, 1 in canonical term order
  static int compare(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator<(const Monomial& o) const { return compare(*this, o) < 0; }

  std::string to_text() const;  // "v3^2*v7", "1" for the empty product
};

// Sparse multivariate polynomial over Z_p. Stored coefficients are nonzero
// and reduced mod p; the term map iterates in canonical order.
class FieldPoly {
 public:
  explicit FieldPoly(std::int64_t p);
  static FieldPoly constant(std::int64_t p, std::int64_t c);
  static FieldPoly variable(std::int64_t p, VertexId v);
  static FieldPoly linear(std::int64_t p, VertexId v, std::int64_t c);  // v - c
  static FieldPoly from_terms(std::int64_t p,
                              const std::vector<std::pair<Monomial, std::int64_t>>& ts);

  std::int64_t modulus() const { return p_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  std::int64_t coefficient(const Monomial& m) const;
  std::vector<VertexId> variables() const;  // ascending
  int degree_in(VertexId v) const;
  int total_degree() const;

  FieldPoly operator+(const FieldPoly& o) const;
  FieldPoly operator-(const FieldPoly& o) const;
  FieldPoly operator-() const;
  FieldPoly operator*(const FieldPoly& o) const;  // default term budget
  static FieldPoly mul(const FieldPoly& a, const FieldPoly& b,
                       long term_budget = kDefaultTermBudget);
  FieldPoly scaled(std::int64_t c) const;

  // Exponent e >= 1 maps to the unique e' in [1, p-1] with e' ≡ e (mod p-1);
  // an exponent never reduces to 0, so x^p -> x and roots at 0 survive.
  // Preserves the polynomial pointwise on Z_p^k.
  FieldPoly fermat_reduce() const;

  // Like fermat_reduce but leaves the exponents of `keep` untouched.
  FieldPoly fermat_reduce_except(VertexId keep) const;

  std::int64_t evaluate(const std::map<VertexId, std::int64_t>& point) const;
  FieldPoly substitute(VertexId v, std::int64_t c) const;
  FieldPoly formal_derivative(VertexId v) const;

  // Group terms by the monomial in the other variables: residual monomial ->
  // univariate polynomial in v. Reassembling the profile gives back *this.
  std::map<Monomial, FieldPoly> coefficient_profile(VertexId v) const;

  // True iff the polynomial vanishes at every point of Z_p^vars. Exhaustive;
  // the point count is capped by eval_budget. Agrees with is_zero() after
  // fermat_reduce(), the two zero criteria coincide over Z_p.
  bool is_zero_semantic(long eval_budget = kDefaultEvalBudget) const;

  // Canonical text: terms in canonical order, "coeff*v3^2*v7" joined by " + ";
  // "0" when zero. serialize() prepends the "p=<prime>" header line.
  std::string to_text() const;
  std::string serialize() const;

  bool operator==(const FieldPoly&) const = default;

 private:
  std::int64_t p_;
  std::map<Monomial, std::int64_t> terms_;

  void add_term(const Monomial& m, std::int64_t c);
  void check_same_field(const FieldPoly& o, const char* who) const;
};

enum class FactorMultiplicity { None, Simple, Multiple };

// Multiplicity of the linear factor (v - beta) in f: None if f(v=beta) is not
// the zero polynomial, Simple if it is but the v-derivative's is not,
// Multiple otherwise.
FactorMultiplicity linear_factor_multiplicity(const FieldPoly& f, VertexId v,
                                              std::int64_t beta);

// f = (v - beta) * quotient + remainder with the remainder free of v.
struct LinearDivision {
  FieldPoly quotient;
  FieldPoly remainder;
};
LinearDivision divide_linear(const FieldPoly& f, VertexId v, std::int64_t beta);

const char* to_string(FactorMultiplicity m);

}  // namespace minorcolor
