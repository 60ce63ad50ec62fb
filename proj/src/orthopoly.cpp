#include "polybound/orthopoly.hpp"

#include <ostream>

#include "polybound/errors.hpp"

namespace polybound {

Recurrence3 jacobi_recurrence(const JacobiParams& params, unsigned n) {
  const Rat& a = params.a;
  const Rat& b = params.b;
  if (!(a > -1) || !(b > -1)) throw InvalidInterval("Jacobi parameters must exceed -1");

  std::vector<Rat> alpha, beta_sq;
  alpha.reserve(n);
  beta_sq.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    if (k == 0) {
      alpha.push_back((b - a) / (a + b + 2));
    } else {
      Rat s = a + b + 2 * long(k);
      alpha.push_back((b * b - a * a) / (s * (s + 2)));
    }
  }
  beta_sq.push_back(Rat(1));  // mass slot; roots never consult it
  for (unsigned k = 1; k < n; ++k) {
    if (k == 1) {
      // The general formula has a removable 0/0 at k=1 when a+b = -1.
      beta_sq.push_back(Rat(4) * (a + 1) * (b + 1) / ((a + b + 2) * (a + b + 2) * (a + b + 3)));
    } else {
      Rat s = a + b + 2 * long(k);
      beta_sq.push_back(Rat(4) * long(k) * (a + long(k)) * (b + long(k)) * (a + b + long(k)) /
                        (s * s * (s + 1) * (s - 1)));
    }
  }

  Recurrence3 rec;
  rec.alpha.reserve(n);
  rec.beta.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    rec.alpha.emplace_back(alpha[k]);
    rec.beta.emplace_back(k == 0 ? HFloat(1L) : sqrt(HFloat(beta_sq[k])));
  }
  rec.exact_alpha = std::move(alpha);
  rec.exact_beta_sq = std::move(beta_sq);
  return rec;
}

Recurrence3 legendre_recurrence(unsigned n) { return jacobi_recurrence({Rat(0), Rat(0)}, n); }

Recurrence3 map_to_interval(const Recurrence3& rec, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw InvalidInterval("map_to_interval needs lo < hi");
  Rat mid = (lo + hi) / 2;
  Rat hw = (hi - lo) / 2;
  HFloat midf{mid}, hwf{hw};
  Recurrence3 out;
  out.alpha.reserve(rec.alpha.size());
  out.beta.reserve(rec.beta.size());
  for (const auto& a : rec.alpha) out.alpha.push_back(midf + hwf * a);
  for (std::size_t j = 0; j < rec.beta.size(); ++j)
    out.beta.push_back(j == 0 ? rec.beta[0] : hwf * rec.beta[j]);
  if (rec.exact_alpha) {
    std::vector<Rat> ea, eb;
    for (const auto& a : *rec.exact_alpha) ea.push_back(mid + hw * a);
    if (rec.exact_beta_sq) {
      for (std::size_t j = 0; j < rec.exact_beta_sq->size(); ++j)
        eb.push_back(j == 0 ? (*rec.exact_beta_sq)[0] : hw * hw * (*rec.exact_beta_sq)[j]);
      out.exact_beta_sq = std::move(eb);
    }
    out.exact_alpha = std::move(ea);
  }
  return out;
}

namespace {

// Sturm count: number of eigenvalues of the degree x degree Jacobi matrix
// strictly below mu.
unsigned sturm_count(const Recurrence3& rec, unsigned degree, const HFloat& mu,
                     const HFloat& tiny) {
  const mpfr_prec_t p = mu.precision();
  unsigned count = 0;
  HFloat d(0L, p), t(0L, p);
  mpfr_sub(d.raw(), rec.alpha[0].raw(), mu.raw(), MPFR_RNDN);
  if (abs(d) < tiny) d = -tiny;
  if (d.is_negative()) ++count;
  for (unsigned j = 1; j < degree; ++j) {
    mpfr_mul(t.raw(), rec.beta[j].raw(), rec.beta[j].raw(), MPFR_RNDN);
    mpfr_div(t.raw(), t.raw(), d.raw(), MPFR_RNDN);
    mpfr_sub(d.raw(), rec.alpha[j].raw(), mu.raw(), MPFR_RNDN);
    mpfr_sub(d.raw(), d.raw(), t.raw(), MPFR_RNDN);
    if (abs(d) < tiny) d = -tiny;
    if (d.is_negative()) ++count;
  }
  return count;
}

std::pair<HFloat, HFloat> gershgorin(const Recurrence3& rec, unsigned degree) {
  const mpfr_prec_t p = HFloat::default_precision();
  HFloat lo(0L, p), hi(0L, p);
  for (unsigned j = 0; j < degree; ++j) {
    HFloat radius(0L, p);
    if (j >= 1) radius += abs(rec.beta[j]);
    if (j + 1 < degree) radius += abs(rec.beta[j + 1]);
    HFloat l = rec.alpha[j] - radius;
    HFloat h = rec.alpha[j] + radius;
    if (j == 0 || l < lo) lo = l;
    if (j == 0 || h > hi) hi = h;
  }
  return {lo, hi};
}

void check_degree(const Recurrence3& rec, unsigned degree) {
  if (degree == 0) throw InvalidOrder("degree must be positive");
  if (degree > rec.length()) throw InvalidOrder("recurrence too short for requested degree");
}

}  // namespace

HFloat tridiag_root(const Recurrence3& rec, unsigned degree, unsigned index) {
  check_degree(rec, degree);
  if (index >= degree) throw InvalidOrder("root index out of range");
  const mpfr_prec_t p = HFloat::default_precision();
  auto [lo, hi] = gershgorin(rec, degree);
  HFloat scale = max(abs(lo), abs(hi));
  if (scale.is_zero()) return HFloat(0L, p);
  HFloat tiny = scale * HFloat::two_pow(-p + 8, p);
  HFloat width_target = scale * HFloat::two_pow(-p + p / 4, p);

  while (hi - lo > width_target) {
    HFloat mid = (lo + hi) * HFloat(Rat(1, 2), p);
    if (mid <= lo || mid >= hi) break;  // interval exhausted at this precision
    if (sturm_count(rec, degree, mid, tiny) >= index + 1)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) * HFloat(Rat(1, 2), p);
}

HFloat smallest_root(const Recurrence3& rec, unsigned degree) {
  return tridiag_root(rec, degree, 0);
}

EigResult tridiag_eig_min(const Recurrence3& rec, unsigned degree) {
  check_degree(rec, degree);
  const mpfr_prec_t p = HFloat::default_precision();
  HFloat lambda = smallest_root(rec, degree);
  auto [glo, ghi] = gershgorin(rec, degree);
  HFloat scale = max(abs(glo), abs(ghi));
  if (scale.is_zero()) scale = HFloat(1L, p);

  // Inverse iteration with a positive definite shift just below the root;
  // Thomas solves are stable there.
  HFloat mu = lambda - scale * HFloat::two_pow(-p / 3, p);
  std::vector<HFloat> v(degree, HFloat(1L, p));
  std::vector<HFloat> diag(degree), sub(degree);
  for (unsigned j = 0; j < degree; ++j) diag[j] = rec.alpha[j] - mu;
  for (unsigned j = 1; j < degree; ++j) sub[j] = rec.beta[j];

  for (int iter = 0; iter < 4; ++iter) {
    // Solve (T - mu I) w = v by LU without pivoting.
    std::vector<HFloat> c(degree), w(v);
    HFloat d = diag[0];
    c[0] = d;
    for (unsigned j = 1; j < degree; ++j) {
      HFloat m = sub[j] / c[j - 1];
      c[j] = diag[j] - m * sub[j];
      w[j] = w[j] - m * w[j - 1];
    }
    w[degree - 1] = w[degree - 1] / c[degree - 1];
    for (unsigned j = degree - 1; j-- > 0;) w[j] = (w[j] - sub[j + 1] * w[j + 1]) / c[j];
    HFloat nrm(0L, p);
    for (const auto& x : w) nrm += x * x;
    nrm = sqrt(nrm);
    if (nrm.is_zero()) break;
    for (auto& x : w) x /= nrm;
    v = std::move(w);
  }
  std::size_t imax = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (abs(v[i]) > abs(v[imax])) imax = i;
  if (v[imax].is_negative())
    for (auto& x : v) x = -x;
  return {lambda, v};
}

Recurrence3 modified_chebyshev(std::span<const Rat> cheb_moments, const Rat& lo, const Rat& hi,
                               unsigned n) {
  if (!(lo < hi)) throw InvalidInterval("modified_chebyshev needs lo < hi");
  if (n == 0) throw InvalidOrder("need at least one coefficient");
  if (cheb_moments.size() < 2 * n) throw InvalidOrder("need 2n modified moments");

  const Rat mid = (lo + hi) / 2;
  const Rat hw = (hi - lo) / 2;
  const Rat hw2_quarter = hw * hw / 4;
  const Rat hw2_half = hw * hw / 2;

  // Monic auxiliary Chebyshev family on [lo,hi]: c_l = mid, d_1 = hw^2/2,
  // d_l = hw^2/4 for l >= 2. Convert the T_j-normalized moments to monic.
  std::vector<Rat> nu(2 * n);
  nu[0] = cheb_moments[0];
  if (nu[0] <= 0) throw BreakdownNonPositiveBeta(0);
  Rat scale(1);
  for (unsigned j = 1; j < 2 * n; ++j) {
    scale = j == 1 ? hw : scale * hw / 2;
    nu[j] = cheb_moments[j] * scale;
  }

  auto d_aux = [&](unsigned l) -> const Rat& { return l == 1 ? hw2_half : hw2_quarter; };

  std::vector<Rat> alphaG(n), betaG(n);
  alphaG[0] = mid + nu[1] / nu[0];
  betaG[0] = nu[0];

  std::vector<Rat> prev2(2 * n, Rat(0));  // sigma_{k-2}
  std::vector<Rat> prev = nu;             // sigma_{k-1}
  std::vector<Rat> cur(2 * n, Rat(0));

  for (unsigned k = 1; k < n; ++k) {
    for (unsigned l = k; l <= 2 * n - k - 1; ++l) {
      // c_l = mid cancels against alphaG's mid offset only partially; keep
      // the general form sigma_k[l] = sigma_{k-1}[l+1] - (alpha_{k-1} - c_l)
      // sigma_{k-1}[l] - beta_{k-1} sigma_{k-2}[l] + d_l sigma_{k-1}[l-1].
      Rat v = prev[l + 1] - (alphaG[k - 1] - mid) * prev[l] - betaG[k - 1] * prev2[l];
      if (l >= 1) v += d_aux(l) * prev[l - 1];
      cur[l] = v;
    }
    if (cur[k] <= 0) throw BreakdownNonPositiveBeta(k);
    alphaG[k] = mid + cur[k + 1] / cur[k] - prev[k] / prev[k - 1];
    betaG[k] = cur[k] / prev[k - 1];
    prev2 = prev;
    prev = cur;
    std::fill(cur.begin(), cur.end(), Rat(0));
  }

  Recurrence3 rec;
  rec.alpha.reserve(n);
  rec.beta.reserve(n);
  for (unsigned k = 0; k < n; ++k) {
    rec.alpha.emplace_back(alphaG[k]);
    rec.beta.emplace_back(k == 0 ? sqrt(HFloat(betaG[0])) : sqrt(HFloat(betaG[k])));
  }
  rec.exact_alpha = std::move(alphaG);
  rec.exact_beta_sq = std::move(betaG);
  return rec;
}

HFloat even_power_pushforward_root(unsigned k, unsigned r) {
  if (k == 0) throw InvalidOrder("power must be positive");
  Rat b = Rat(-1) + Rat(1, 2 * long(k));
  Recurrence3 rec = jacobi_recurrence({Rat(0), b}, r + 1);
  HFloat xi = smallest_root(rec, r + 1);
  return (HFloat(1L) + xi) * HFloat(Rat(1, 2));
}

std::vector<HFloat> orthonormal_values(const Recurrence3& rec, unsigned m, const HFloat& x) {
  check_degree(rec, m);
  const mpfr_prec_t p = x.precision();
  std::vector<HFloat> vals;
  vals.reserve(m);
  HFloat p0 = HFloat(1L, p) / rec.beta[0];
  vals.push_back(p0);
  if (m == 1) return vals;
  vals.push_back((x - rec.alpha[0]) * p0 / rec.beta[1]);
  for (unsigned j = 1; j + 1 < m; ++j)
    vals.push_back(((x - rec.alpha[j]) * vals[j] - rec.beta[j] * vals[j - 1]) / rec.beta[j + 1]);
  return vals;
}

std::vector<std::vector<HFloat>> orthonormal_coeffs(const Recurrence3& rec, unsigned m) {
  check_degree(rec, m);
  const mpfr_prec_t p = HFloat::default_precision();
  std::vector<std::vector<HFloat>> rows;
  rows.reserve(m);
  rows.push_back({HFloat(1L, p) / rec.beta[0]});
  if (m == 1) return rows;
  for (unsigned j = 0; j + 1 < m; ++j) {
    const auto& pj = rows[j];
    std::vector<HFloat> next(j + 2, HFloat(0L, p));
    for (unsigned i = 0; i <= j; ++i) {
      next[i + 1] += pj[i];
      next[i] -= rec.alpha[j] * pj[i];
    }
    if (j >= 1) {
      const auto& pjm1 = rows[j - 1];
      for (unsigned i = 0; i < pjm1.size(); ++i) next[i] -= rec.beta[j] * pjm1[i];
    }
    for (auto& c : next) c /= rec.beta[j + 1];
    rows.push_back(std::move(next));
  }
  return rows;
}

Quadrature gauss_legendre(unsigned m) {
  if (m == 0) throw InvalidOrder("quadrature needs at least one node");
  Recurrence3 rec = legendre_recurrence(m);
  Quadrature q;
  q.nodes.reserve(m);
  q.weights.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    HFloat x = tridiag_root(rec, m, i);
    auto vals = orthonormal_values(rec, m, x);
    HFloat denom(0L, x.precision());
    for (const auto& v : vals) denom += v * v;
    q.nodes.push_back(x);
    q.weights.push_back(HFloat(1L, x.precision()) / denom);
  }
  return q;
}

void write_recurrence_csv(std::ostream& os, const Recurrence3& rec) {
  os << "j,alpha,beta\n";
  for (unsigned j = 0; j < rec.length(); ++j)
    os << j << ',' << rec.alpha[j].str() << ',' << rec.beta[j].str() << '\n';
}

}  // namespace polybound
