#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "polybound/hfloat.hpp"
#include "polybound/rational.hpp"

namespace polybound {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order: total degree first, then lex. Gives a canonical
// term order so iteration and serialized output are deterministic, and the
// monomials of degree <= r form a prefix of those of degree <= r'.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

unsigned total_degree(const Exponents& e);

// Cap on the term count any single product may produce; exceeded -> throw.
std::size_t term_budget();
void set_term_budget(std::size_t cap);

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are never stored; all exponent vectors have length nvars.
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GradedLexLess>;

  explicit MPoly(unsigned nvars = 0) : nvars_(nvars) {}
  static MPoly constant(unsigned nvars, const Rat& c);
  static MPoly variable(unsigned nvars, unsigned index, unsigned power = 1);

  unsigned nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // 0 for the zero polynomial
  bool is_constant() const;
  Rat constant_value() const;  // coefficient of the empty monomial

  // Accumulates c * x^e, dropping the term if the sum is zero.
  void add_term(const Exponents& e, const Rat& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  MPoly& operator*=(const Rat& c);
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }

  friend bool operator==(const MPoly& a, const MPoly& b) = default;

  Rat eval(std::span<const Rat> point) const;
  HFloat eval(std::span<const HFloat> point) const;
  double eval(std::span<const double> point) const;

 private:
  unsigned nvars_;
  TermMap terms_;
};

// p^k by repeated squaring; p^0 = 1.
MPoly pow(const MPoly& p, unsigned k);

// Text format, one term per line: "num/den e1 e2 ... en". '#' starts a
// comment, blank lines are ignored. Round-trips exactly.
std::string to_text(const MPoly& p);
MPoly mpoly_from_text(std::istream& in);
MPoly mpoly_from_text(const std::string& text);

}  // namespace polybound
