#include "polybound/needle.hpp"

#include <vector>

#include "polybound/errors.hpp"
#include "polybound/orthopoly.hpp"

namespace polybound {

namespace {

void check_params(const NeedleParams& p) {
  if (p.r < 1) throw InvalidOrder("needle needs r >= 1");
  if (!(p.h > 0 && p.h < 1)) throw InvalidOrder("needle needs h in (0,1)");
}

}  // namespace

UPoly build_needle_sqrt(const NeedleParams& params) {
  check_params(params);
  // u maps [h,1] onto [-1,1] with u(0) = (1+h)/(1-h) > 1:
  //   u(t) = (1 + h - 2t) / (1 - h)
  const Rat one(1);
  Rat a = Rat(-2) / (one - params.h);
  Rat b = (one + params.h) / (one - params.h);
  auto fam = chebyshev_family_mapped(params.r, a, b);
  UPoly top = fam[params.r];
  Rat at_zero = top.eval(Rat(0));
  return top * (one / at_zero);
}

UPoly build_needle(const NeedleParams& params) {
  UPoly w = build_needle_sqrt(params);
  return w * w;
}

NeedleReport verify_needle(const UPoly& v, const NeedleParams& params, unsigned grid_size) {
  check_params(params);
  const mpfr_prec_t p = HFloat::default_precision();
  NeedleReport rep;
  rep.grid_size = grid_size;

  rep.value_at_zero_ok = (v.eval(Rat(0)) == 1);

  // Grid sweep in floating point with a roundoff allowance; the exact checks
  // below guard the near-peak claim.
  std::vector<HFloat> coeffs;
  coeffs.reserve(v.coeffs().size());
  for (const auto& c : v.coeffs()) coeffs.emplace_back(c, p);
  auto eval_hf = [&](const HFloat& t) {
    HFloat acc(0L, p);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  };

  HFloat slack = HFloat::two_pow(-p / 2, p);
  HFloat one(1L, p);
  HFloat hf{params.h};
  HFloat max_tail(0L, p);
  bool range_ok = true;
  for (unsigned i = 0; i <= grid_size; ++i) {
    HFloat t = HFloat(long(i), p) / HFloat(long(grid_size), p);
    HFloat val = eval_hf(t);
    if (val < -slack || val > one + slack) range_ok = false;
    if (t >= hf && val > max_tail) max_tail = val;
  }
  rep.range_ok = range_ok;
  rep.max_on_tail = max_tail;
  rep.decay_bound =
      HFloat(4L, p) * exp(-HFloat(long(params.r), p) * sqrt(hf) / HFloat(2L, p));
  rep.decay_ok = max_tail <= rep.decay_bound + slack;

  // Largest dyadic radius <= 1/(64 r^2) with v >= 1/2 there, checked in exact
  // arithmetic. The needle is decreasing on [0,h], so the endpoint value
  // witnesses the whole interval; a short exact sweep confirms it anyway.
  Rat cap = Rat(1, 64 * long(params.r) * long(params.r));
  Rat radius(1);
  while (radius > cap) radius /= 2;
  const Rat half(1, 2);
  for (int tries = 0; tries < 80; ++tries) {
    bool ok = true;
    for (int s = 1; s <= 4; ++s) {
      if (v.eval(radius * Rat(s, 4)) < half) {
        ok = false;
        break;
      }
    }
    if (ok) {
      rep.near_peak_ok = true;
      break;
    }
    radius /= 2;
  }
  rep.near_peak_radius = radius;
  return rep;
}

Rat certificate_h(unsigned r, unsigned nvars) {
  if (r < 1) throw InvalidOrder("certificate needs r >= 1");
  const mpfr_prec_t p = HFloat::default_precision();
  // (4 (N+1) log r / r)^2 with N = nvars, clamped into [1/(64 r^2), 1/4]:
  // the formula exceeds 1 for every desk-scale r, and the needle density is
  // feasible for any h in (0,1), so the clamp only affects the constant.
  HFloat formula = HFloat(4L * (long(nvars) + 1), p) * log(HFloat(long(r), p)) /
                   HFloat(long(r), p);
  formula = formula * formula;
  Rat h = dyadic_round(formula, 48);
  Rat hi_clamp(1, 4);
  Rat lo_clamp(1, 64 * long(r) * long(r));
  if (h > hi_clamp) h = hi_clamp;
  if (h < lo_clamp) h = lo_clamp;
  return h;
}

CertificateReport certificate_bound(const MPoly& f, const Domain& domain, unsigned r,
                                    std::optional<std::pair<Rat, Rat>> range) {
  if (domain.kind != DomainKind::Box) throw InvalidInterval("certificate supports box domains");
  if (f.nvars() != domain.nvars) throw DimensionMismatch("polynomial nvars != domain nvars");
  if (r < 1) throw InvalidOrder("certificate needs r >= 1");
  const unsigned n = domain.nvars;
  if (n > 3 && !range) throw InvalidInterval("supply a range for dimension > 3");
  const mpfr_prec_t p = HFloat::default_precision();

  Rat flo, fhi;
  if (range) {
    flo = range->first;
    fhi = range->second;
  } else {
    // Dense grid search plus a rigorous Lipschitz widening; the certificate
    // only needs flo <= min f and fhi >= max f.
    unsigned steps = n <= 2 ? 1001 : 101;
    std::vector<double> pt(n, -1.0);
    std::vector<unsigned> idx(n, 0);
    double gmin = 0, gmax = 0;
    bool first = true;
    while (true) {
      for (unsigned i = 0; i < n; ++i) pt[i] = -1.0 + 2.0 * idx[i] / (steps - 1);
      double val = f.eval(std::span<const double>(pt));
      if (first || val < gmin) gmin = val;
      if (first || val > gmax) gmax = val;
      first = false;
      unsigned pos = 0;
      while (pos < n && ++idx[pos] == steps) idx[pos++] = 0;
      if (pos == n) break;
    }
    Rat lip(0);
    for (const auto& [e, c] : f.terms()) lip += rat_abs(c) * long(total_degree(e));
    Rat spacing = rat(2, steps - 1);
    Rat margin = lip * spacing / 2 * long(n) + Rat(1, Int(1) << 40);
    Rat glo, ghi;
    mpq_set_d(glo.get_mpq_t(), gmin);
    mpq_set_d(ghi.get_mpq_t(), gmax);
    flo = glo - margin;
    fhi = ghi + margin;
  }

  CertificateReport rep;
  rep.r = r;
  rep.f_lo = flo;
  rep.f_hi = fhi;

  if (!(flo < fhi) || f.is_constant()) {
    rep.degenerate_range = true;
    rep.h_used = Rat(1, 4);
    rep.numerator = HFloat(0L, p);
    rep.denominator = HFloat(1L, p);
    rep.ratio = HFloat(0L, p);
    rep.bound = HFloat(f.is_constant() ? f.constant_value() : flo, p);
    return rep;
  }

  rep.h_used = certificate_h(r, n);
  UPoly w = build_needle_sqrt({r, rep.h_used});
  std::vector<HFloat> wc;
  wc.reserve(w.coeffs().size());
  for (const auto& c : w.coeffs()) wc.emplace_back(c, p);
  auto eval_w = [&](const HFloat& t) {
    HFloat acc(0L, p);
    for (auto it = wc.rbegin(); it != wc.rend(); ++it) acc = acc * t + *it;
    return acc;
  };

  HFloat lof{flo}, span = HFloat(fhi) - HFloat(flo);

  // Integrands have degree deg(f)*(2r+1); a rule with m nodes per axis is
  // exact through degree 2m-1.
  unsigned deg = f.degree() * (2 * r + 1);
  unsigned m = deg / 2 + 1;

  auto integrate = [&](unsigned nodes_per_axis) -> std::pair<HFloat, HFloat> {
    Quadrature q = gauss_legendre(nodes_per_axis);
    std::vector<unsigned> idx(n, 0);
    std::vector<HFloat> pt(n, HFloat(0L, p));
    HFloat num(0L, p), den(0L, p);
    while (true) {
      HFloat wt(1L, p);
      for (unsigned i = 0; i < n; ++i) {
        pt[i] = q.nodes[idx[i]];
        wt *= q.weights[idx[i]];
      }
      HFloat fx = f.eval(std::span<const HFloat>(pt));
      HFloat F = (fx - lof) / span;
      HFloat wv = eval_w(F);
      HFloat v = wv * wv;
      den += wt * v;
      num += wt * F * v;
      unsigned pos = 0;
      while (pos < n && ++idx[pos] == nodes_per_axis) idx[pos++] = 0;
      if (pos == n) break;
    }
    return {num, den};
  };

  auto [num, den] = integrate(m);
  auto [num2, den2] = integrate(m + 4);
  rep.numerator = num;
  rep.denominator = den;
  rep.ratio = num / den;
  rep.quad_points_per_axis = m;
  rep.quad_error = abs(rep.ratio - num2 / den2);
  rep.bound = HFloat(flo, p) + span * rep.ratio;
  return rep;
}

}  // namespace polybound
