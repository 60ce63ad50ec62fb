#pragma once

#include <mpfr.h>

#include <string>

#include "polybound/rational.hpp"

namespace polybound {

// Arbitrary-precision binary float with value semantics. Precision (in bits,
// >= 64) is carried per value; arithmetic results take the larger operand
// precision, and values built from exact inputs take the process-wide default.
// Rounding is MPFR round-to-nearest throughout.
class HFloat {
 public:
  static void set_default_precision(mpfr_prec_t bits);
  static mpfr_prec_t default_precision();

  HFloat();
  explicit HFloat(double v, mpfr_prec_t prec = 0);
  explicit HFloat(long v, mpfr_prec_t prec = 0);
  explicit HFloat(int v, mpfr_prec_t prec = 0);
  explicit HFloat(const Rat& q, mpfr_prec_t prec = 0);  // single correctly rounded step
  explicit HFloat(const Int& z, mpfr_prec_t prec = 0);

  HFloat(const HFloat& o);
  HFloat(HFloat&& o) noexcept;
  HFloat& operator=(const HFloat& o);
  HFloat& operator=(HFloat&& o) noexcept;
  ~HFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  HFloat at_precision(mpfr_prec_t bits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend HFloat operator+(const HFloat& a, const HFloat& b);
  friend HFloat operator-(const HFloat& a, const HFloat& b);
  friend HFloat operator*(const HFloat& a, const HFloat& b);
  friend HFloat operator/(const HFloat& a, const HFloat& b);
  HFloat operator-() const;

  HFloat& operator+=(const HFloat& b);
  HFloat& operator-=(const HFloat& b);
  HFloat& operator*=(const HFloat& b);
  HFloat& operator/=(const HFloat& b);

  friend bool operator==(const HFloat& a, const HFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const HFloat& a, const HFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const HFloat& a, const HFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const HFloat& a, const HFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const HFloat& a, const HFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const HFloat& a, const HFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_negative() const { return mpfr_sgn(v_) < 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  Rat to_rat_exact() const;  // every finite float is a dyadic rational

  // 2^e at the given (or default) precision.
  static HFloat two_pow(long e, mpfr_prec_t prec = 0);
  static HFloat pi(mpfr_prec_t prec = 0);

  std::string str(int significant_digits = 12) const;

 private:
  mpfr_t v_;
};

HFloat abs(const HFloat& x);
HFloat sqrt(const HFloat& x);
HFloat exp(const HFloat& x);
HFloat log(const HFloat& x);
HFloat cos(const HFloat& x);
HFloat pow_int(const HFloat& x, long k);
HFloat max(const HFloat& a, const HFloat& b);
HFloat min(const HFloat& a, const HFloat& b);

// Best rational approximation with denominator <= max_den, by walking the
// continued-fraction convergents of the (exact dyadic) value.
Rat round_to_rational(const HFloat& x, const Int& max_den);

// x rounded to a dyadic rational with `bits` significant bits.
Rat dyadic_round(const HFloat& x, mpfr_prec_t bits);

}  // namespace polybound
