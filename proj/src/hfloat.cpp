#include "polybound/hfloat.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <vector>

namespace polybound {

namespace {
std::atomic<mpfr_prec_t> g_default_prec{256};

mpfr_prec_t pick(mpfr_prec_t requested) {
  return requested > 0 ? std::max<mpfr_prec_t>(requested, 64) : g_default_prec.load();
}
}  // namespace

void HFloat::set_default_precision(mpfr_prec_t bits) {
  g_default_prec.store(std::max<mpfr_prec_t>(bits, 64));
}

mpfr_prec_t HFloat::default_precision() { return g_default_prec.load(); }

HFloat::HFloat() {
  mpfr_init2(v_, pick(0));
  mpfr_set_zero(v_, 1);
}

HFloat::HFloat(double v, mpfr_prec_t prec) {
  mpfr_init2(v_, pick(prec));
  mpfr_set_d(v_, v, MPFR_RNDN);
}

HFloat::HFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, pick(prec));
  mpfr_set_si(v_, v, MPFR_RNDN);
}

HFloat::HFloat(int v, mpfr_prec_t prec) : HFloat(static_cast<long>(v), prec) {}

HFloat::HFloat(const Rat& q, mpfr_prec_t prec) {
  mpfr_init2(v_, pick(prec));
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

HFloat::HFloat(const Int& z, mpfr_prec_t prec) {
  mpfr_init2(v_, pick(prec));
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

HFloat::HFloat(const HFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

HFloat::HFloat(HFloat&& o) noexcept {
  mpfr_init2(v_, 64);
  mpfr_swap(v_, o.v_);
}

HFloat& HFloat::operator=(const HFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

HFloat& HFloat::operator=(HFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

HFloat::~HFloat() { mpfr_clear(v_); }

HFloat HFloat::at_precision(mpfr_prec_t bits) const {
  HFloat out(0.0, bits);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

namespace {
mpfr_prec_t join(const HFloat& a, const HFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

HFloat operator+(const HFloat& a, const HFloat& b) {
  HFloat out(0.0, join(a, b));
  mpfr_add(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

HFloat operator-(const HFloat& a, const HFloat& b) {
  HFloat out(0.0, join(a, b));
  mpfr_sub(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

HFloat operator*(const HFloat& a, const HFloat& b) {
  HFloat out(0.0, join(a, b));
  mpfr_mul(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

HFloat operator/(const HFloat& a, const HFloat& b) {
  HFloat out(0.0, join(a, b));
  mpfr_div(out.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return out;
}

HFloat HFloat::operator-() const {
  HFloat out(0.0, precision());
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

HFloat& HFloat::operator+=(const HFloat& b) {
  if (precision() < b.precision()) return *this = *this + b;
  mpfr_add(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

HFloat& HFloat::operator-=(const HFloat& b) {
  if (precision() < b.precision()) return *this = *this - b;
  mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

HFloat& HFloat::operator*=(const HFloat& b) {
  if (precision() < b.precision()) return *this = *this * b;
  mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

HFloat& HFloat::operator/=(const HFloat& b) {
  if (precision() < b.precision()) return *this = *this / b;
  mpfr_div(v_, v_, b.v_, MPFR_RNDN);
  return *this;
}

Rat HFloat::to_rat_exact() const {
  Rat q;
  mpfr_get_q(q.get_mpq_t(), v_);
  q.canonicalize();
  return q;
}

HFloat HFloat::two_pow(long e, mpfr_prec_t prec) {
  HFloat out(0.0, pick(prec));
  mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
  return out;
}

HFloat HFloat::pi(mpfr_prec_t prec) {
  HFloat out(0.0, pick(prec));
  mpfr_const_pi(out.v_, MPFR_RNDN);
  return out;
}

std::string HFloat::str(int significant_digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", significant_digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

HFloat abs(const HFloat& x) {
  HFloat out(0.0, x.precision());
  mpfr_abs(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HFloat sqrt(const HFloat& x) {
  HFloat out(0.0, x.precision());
  mpfr_sqrt(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HFloat exp(const HFloat& x) {
  HFloat out(0.0, x.precision());
  mpfr_exp(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HFloat log(const HFloat& x) {
  HFloat out(0.0, x.precision());
  mpfr_log(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HFloat cos(const HFloat& x) {
  HFloat out(0.0, x.precision());
  mpfr_cos(out.raw(), x.raw(), MPFR_RNDN);
  return out;
}

HFloat pow_int(const HFloat& x, long k) {
  HFloat out(0.0, x.precision());
  mpfr_pow_si(out.raw(), x.raw(), k, MPFR_RNDN);
  return out;
}

HFloat max(const HFloat& a, const HFloat& b) { return a >= b ? a : b; }
HFloat min(const HFloat& a, const HFloat& b) { return a <= b ? a : b; }

Rat round_to_rational(const HFloat& x, const Int& max_den) {
  Rat target = x.to_rat_exact();
  if (target.get_den() <= max_den) return target;

  // Continued-fraction convergents p_k/q_k of target; stop before q exceeds
  // the cap. Convergents are best approximations, so the last admissible one
  // is the answer.
  Rat frac = target;
  Int p0(1), q0(0);
  Int a = frac.get_num() / frac.get_den();  // floor for positive; fix below
  if (frac < 0 && Rat(a) != frac) a -= 1;
  Int p1 = a, q1 = 1;
  frac -= Rat(a);
  while (frac != 0) {
    frac = 1 / frac;
    a = frac.get_num() / frac.get_den();
    if (frac < 0 && Rat(a) != frac) a -= 1;
    Int p2 = a * p1 + p0;
    Int q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    frac -= Rat(a);
  }
  Rat out(p1, q1);
  out.canonicalize();
  return out;
}

Rat dyadic_round(const HFloat& x, mpfr_prec_t bits) {
  return x.at_precision(bits).to_rat_exact();
}

}  // namespace polybound
