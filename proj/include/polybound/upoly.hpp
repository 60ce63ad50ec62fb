#pragma once

#include <span>
#include <vector>

#include "polybound/hfloat.hpp"
#include "polybound/mpoly.hpp"
#include "polybound/rational.hpp"

namespace polybound {

// Dense univariate polynomial over exact rationals, coefficient index = degree.
// Trailing zero coefficients are trimmed; the zero polynomial has no
// coefficients at all.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  static UPoly constant(const Rat& c);
  static UPoly identity();  // t

  bool is_zero() const { return c_.empty(); }
  unsigned degree() const { return c_.empty() ? 0 : static_cast<unsigned>(c_.size() - 1); }
  Rat coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly& operator*=(const Rat& s);
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  Rat eval(const Rat& t) const;
  HFloat eval(const HFloat& t) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// s(a*t + b).
UPoly affine_substitute(const UPoly& s, const Rat& a, const Rat& b);

// s(f(x)) as an exact multivariate polynomial (Horner over the MPoly ring).
MPoly compose(const UPoly& s, const MPoly& f);

// Chebyshev polynomials of the first kind T_0..T_n on [-1,1].
std::vector<UPoly> chebyshev_family(unsigned n);

// T_0(l(t))..T_n(l(t)) for the affine map l; cheaper than substituting into
// chebyshev_family because the recurrence multiplies by a linear factor.
std::vector<UPoly> chebyshev_family_mapped(unsigned n, const Rat& a, const Rat& b);

}  // namespace polybound
