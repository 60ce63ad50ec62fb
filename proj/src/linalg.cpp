#include "polybound/linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <optional>

#include "polybound/errors.hpp"

namespace polybound {

SymMat::SymMat(unsigned order, mpfr_prec_t prec)
    : n(order), tri(std::size_t(order) * (order + 1) / 2, HFloat(0L, prec)) {}

SymMat SymMat::from_exact(const SymMatQ& q, mpfr_prec_t prec) {
  SymMat out(q.n, prec);
  for (std::size_t i = 0; i < q.tri.size(); ++i) out.tri[i] = HFloat(q.tri[i], prec);
  return out;
}

mpfr_prec_t SymMat::precision() const {
  return tri.empty() ? HFloat::default_precision() : tri.front().precision();
}

HFloat SymMat::frobenius_norm() const {
  const mpfr_prec_t p = precision();
  HFloat acc(0L, p);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j <= i; ++j) {
      HFloat sq = at(i, j) * at(i, j);
      acc += sq;
      if (j < i) acc += sq;
    }
  return sqrt(acc);
}

void LowerTri::solve_lower(std::vector<HFloat>& b) const {
  HFloat t;
  for (unsigned i = 0; i < n; ++i) {
    mpfr_ptr bi = b[i].raw();
    for (unsigned j = 0; j < i; ++j) {
      mpfr_mul(t.raw(), at(i, j).raw(), b[j].raw(), MPFR_RNDN);
      mpfr_sub(bi, bi, t.raw(), MPFR_RNDN);
    }
    mpfr_div(bi, bi, at(i, i).raw(), MPFR_RNDN);
  }
}

void LowerTri::solve_transposed(std::vector<HFloat>& b) const {
  HFloat t;
  for (unsigned ii = n; ii-- > 0;) {
    mpfr_ptr bi = b[ii].raw();
    for (unsigned j = ii + 1; j < n; ++j) {
      mpfr_mul(t.raw(), at(j, ii).raw(), b[j].raw(), MPFR_RNDN);
      mpfr_sub(bi, bi, t.raw(), MPFR_RNDN);
    }
    mpfr_div(bi, bi, at(ii, ii).raw(), MPFR_RNDN);
  }
}

LowerTri cholesky(const SymMat& B) {
  const unsigned n = B.n;
  const mpfr_prec_t p = B.precision();
  LowerTri L;
  L.n = n;
  L.tri.assign(B.tri.size(), HFloat(0L, p));

  // Pivot floor: relative to the largest diagonal entry, at 3/4 of the
  // working precision. Pivots underneath are indistinguishable from roundoff.
  HFloat maxdiag(0L, p);
  for (unsigned i = 0; i < n; ++i) maxdiag = max(maxdiag, abs(B.at(i, i)));
  HFloat floor = maxdiag * HFloat::two_pow(-(3 * p / 4), p);

  HFloat t(0L, p), acc(0L, p);
  for (unsigned j = 0; j < n; ++j) {
    mpfr_set(acc.raw(), B.at(j, j).raw(), MPFR_RNDN);
    for (unsigned k = 0; k < j; ++k) {
      mpfr_mul(t.raw(), L.at(j, k).raw(), L.at(j, k).raw(), MPFR_RNDN);
      mpfr_sub(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    if (!(acc > floor)) throw NotPositiveDefinite(j);
    HFloat piv = sqrt(acc);
    L.at(j, j) = piv;
    for (unsigned i = j + 1; i < n; ++i) {
      mpfr_set(acc.raw(), B.at(i, j).raw(), MPFR_RNDN);
      for (unsigned k = 0; k < j; ++k) {
        mpfr_mul(t.raw(), L.at(i, k).raw(), L.at(j, k).raw(), MPFR_RNDN);
        mpfr_sub(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
      }
      mpfr_div(L.at(i, j).raw(), acc.raw(), piv.raw(), MPFR_RNDN);
    }
  }
  return L;
}

namespace {

// Dense full-storage square matrix at one precision.
struct Dense {
  unsigned n = 0;
  std::vector<HFloat> a;

  Dense(unsigned order, mpfr_prec_t prec)
      : n(order), a(std::size_t(order) * order, HFloat(0L, prec)) {}
  HFloat& at(unsigned i, unsigned j) { return a[std::size_t(i) * n + j]; }
  const HFloat& at(unsigned i, unsigned j) const { return a[std::size_t(i) * n + j]; }
};

Dense dense_from_sym(const SymMat& s, mpfr_prec_t p) {
  Dense d(s.n, p);
  for (unsigned i = 0; i < s.n; ++i)
    for (unsigned j = 0; j <= i; ++j) {
      d.at(i, j) = s.at(i, j);
      d.at(j, i) = s.at(i, j);
    }
  return d;
}

HFloat offdiag_norm(const Dense& d, mpfr_prec_t p) {
  HFloat acc(0L, p), t(0L, p);
  for (unsigned i = 0; i < d.n; ++i)
    for (unsigned j = i + 1; j < d.n; ++j) {
      mpfr_mul(t.raw(), d.at(i, j).raw(), d.at(i, j).raw(), MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
      mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
  return sqrt(acc);
}

void canonicalize_sign(std::vector<HFloat>& v) {
  std::size_t imax = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (abs(v[i]) > abs(v[imax])) imax = i;
  if (v[imax].is_negative())
    for (auto& x : v) x = -x;
}

}  // namespace

EigResult sym_eig_min(const SymMat& S, int max_sweeps) {
  const unsigned n = S.n;
  const mpfr_prec_t p = S.precision();
  if (n == 0) throw InvalidOrder("empty matrix");

  Dense a = dense_from_sym(S, p);
  Dense V(n, p);
  for (unsigned i = 0; i < n; ++i) V.at(i, i) = HFloat(1L, p);

  HFloat norm = S.frobenius_norm();
  if (norm.is_zero()) {
    std::vector<HFloat> e(n, HFloat(0L, p));
    e[0] = HFloat(1L, p);
    return {HFloat(0L, p), e};
  }
  HFloat target = norm * HFloat::two_pow(-p / 2, p);
  // Rotations on entries below this are pure noise.
  HFloat rot_floor = norm * HFloat::two_pow(-p - 8, p);

  HFloat theta(0L, p), t(0L, p), c(0L, p), s(0L, p), tau(0L, p);
  HFloat g(0L, p), h(0L, p), w1(0L, p), w2(0L, p), one(1L, p);

  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    if (offdiag_norm(a, p) <= target) {
      unsigned imin = 0;
      for (unsigned i = 1; i < n; ++i)
        if (a.at(i, i) < a.at(imin, imin)) imin = i;
      std::vector<HFloat> v(n, HFloat(0L, p));
      HFloat vnorm(0L, p);
      for (unsigned k = 0; k < n; ++k) {
        v[k] = V.at(k, imin);
        vnorm += v[k] * v[k];
      }
      vnorm = sqrt(vnorm);
      for (auto& x : v) x /= vnorm;
      canonicalize_sign(v);
      return {a.at(imin, imin), v};
    }
    if (sweep == max_sweeps) break;

    for (unsigned pi = 0; pi + 1 < n; ++pi) {
      for (unsigned q = pi + 1; q < n; ++q) {
        HFloat& apq = a.at(pi, q);
        if (abs(apq) <= rot_floor) continue;

        // theta = (a_qq - a_pp) / (2 a_pq); t = sgn(theta)/(|theta| + sqrt(theta^2+1))
        mpfr_sub(theta.raw(), a.at(q, q).raw(), a.at(pi, pi).raw(), MPFR_RNDN);
        mpfr_div(theta.raw(), theta.raw(), apq.raw(), MPFR_RNDN);
        mpfr_div_ui(theta.raw(), theta.raw(), 2, MPFR_RNDN);
        mpfr_fma(t.raw(), theta.raw(), theta.raw(), one.raw(), MPFR_RNDN);
        mpfr_sqrt(t.raw(), t.raw(), MPFR_RNDN);
        mpfr_abs(w1.raw(), theta.raw(), MPFR_RNDN);
        mpfr_add(t.raw(), t.raw(), w1.raw(), MPFR_RNDN);
        mpfr_ui_div(t.raw(), 1, t.raw(), MPFR_RNDN);
        if (theta.is_negative()) mpfr_neg(t.raw(), t.raw(), MPFR_RNDN);

        mpfr_fma(c.raw(), t.raw(), t.raw(), one.raw(), MPFR_RNDN);
        mpfr_sqrt(c.raw(), c.raw(), MPFR_RNDN);
        mpfr_ui_div(c.raw(), 1, c.raw(), MPFR_RNDN);
        mpfr_mul(s.raw(), t.raw(), c.raw(), MPFR_RNDN);
        mpfr_add(tau.raw(), one.raw(), c.raw(), MPFR_RNDN);
        mpfr_div(tau.raw(), s.raw(), tau.raw(), MPFR_RNDN);

        mpfr_mul(w1.raw(), t.raw(), apq.raw(), MPFR_RNDN);
        mpfr_sub(a.at(pi, pi).raw(), a.at(pi, pi).raw(), w1.raw(), MPFR_RNDN);
        mpfr_add(a.at(q, q).raw(), a.at(q, q).raw(), w1.raw(), MPFR_RNDN);
        mpfr_set_zero(apq.raw(), 1);
        mpfr_set_zero(a.at(q, pi).raw(), 1);

        for (unsigned k = 0; k < n; ++k) {
          if (k == pi || k == q) continue;
          mpfr_set(g.raw(), a.at(k, pi).raw(), MPFR_RNDN);
          mpfr_set(h.raw(), a.at(k, q).raw(), MPFR_RNDN);
          // a_kp <- g - s(h + tau g);  a_kq <- h + s(g - tau h)
          mpfr_fma(w1.raw(), tau.raw(), g.raw(), h.raw(), MPFR_RNDN);
          mpfr_fms(w2.raw(), tau.raw(), h.raw(), g.raw(), MPFR_RNDN);
          mpfr_mul(w1.raw(), w1.raw(), s.raw(), MPFR_RNDN);
          mpfr_mul(w2.raw(), w2.raw(), s.raw(), MPFR_RNDN);
          mpfr_sub(a.at(k, pi).raw(), g.raw(), w1.raw(), MPFR_RNDN);
          mpfr_sub(a.at(k, q).raw(), h.raw(), w2.raw(), MPFR_RNDN);
          mpfr_set(a.at(pi, k).raw(), a.at(k, pi).raw(), MPFR_RNDN);
          mpfr_set(a.at(q, k).raw(), a.at(k, q).raw(), MPFR_RNDN);
        }
        for (unsigned k = 0; k < n; ++k) {
          mpfr_set(g.raw(), V.at(k, pi).raw(), MPFR_RNDN);
          mpfr_set(h.raw(), V.at(k, q).raw(), MPFR_RNDN);
          mpfr_fma(w1.raw(), tau.raw(), g.raw(), h.raw(), MPFR_RNDN);
          mpfr_fms(w2.raw(), tau.raw(), h.raw(), g.raw(), MPFR_RNDN);
          mpfr_mul(w1.raw(), w1.raw(), s.raw(), MPFR_RNDN);
          mpfr_mul(w2.raw(), w2.raw(), s.raw(), MPFR_RNDN);
          mpfr_sub(V.at(k, pi).raw(), g.raw(), w1.raw(), MPFR_RNDN);
          mpfr_sub(V.at(k, q).raw(), h.raw(), w2.raw(), MPFR_RNDN);
        }
      }
    }
  }
  throw NoConvergence("Jacobi sweeps exhausted");
}

namespace {

std::vector<HFloat> sym_apply(const SymMat& M, const std::vector<HFloat>& x, mpfr_prec_t p) {
  std::vector<HFloat> y(M.n, HFloat(0L, p));
  HFloat t(0L, p);
  for (unsigned i = 0; i < M.n; ++i)
    for (unsigned j = 0; j < M.n; ++j) {
      mpfr_mul(t.raw(), M.at(i, j).raw(), x[j].raw(), MPFR_RNDN);
      mpfr_add(y[i].raw(), y[i].raw(), t.raw(), MPFR_RNDN);
    }
  return y;
}

HFloat dot(const std::vector<HFloat>& a, const std::vector<HFloat>& b, mpfr_prec_t p) {
  HFloat acc(0L, p), t(0L, p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpfr_mul(t.raw(), a[i].raw(), b[i].raw(), MPFR_RNDN);
    mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
  }
  return acc;
}

// A - shift*B.
SymMat shifted(const SymMat& A, const SymMat& B, const HFloat& shift, mpfr_prec_t p) {
  SymMat M(A.n, p);
  HFloat t(0L, p);
  for (std::size_t i = 0; i < A.tri.size(); ++i) {
    mpfr_mul(t.raw(), shift.raw(), B.tri[i].raw(), MPFR_RNDN);
    mpfr_sub(M.tri[i].raw(), A.tri[i].raw(), t.raw(), MPFR_RNDN);
  }
  return M;
}

// Number of pencil eigenvalues strictly below `shift`, via the inertia of
// A - shift*B (LDL^T without pivoting). nullopt on a near-zero pivot; the
// caller nudges the shift.
std::optional<int> inertia_below(const SymMat& A, const SymMat& B, const HFloat& shift) {
  const mpfr_prec_t p = std::max(A.precision(), B.precision());
  const unsigned n = A.n;
  SymMat M = shifted(A, B, shift, p);
  HFloat scale = M.frobenius_norm();
  if (scale.is_zero()) return 0;
  HFloat tiny = scale * HFloat::two_pow(-p + 16, p);

  std::vector<std::vector<HFloat>> L(n);
  std::vector<HFloat> d;
  d.reserve(n);
  HFloat t(0L, p), acc(0L, p);
  int negatives = 0;
  for (unsigned j = 0; j < n; ++j) {
    mpfr_set(acc.raw(), M.at(j, j).raw(), MPFR_RNDN);
    for (unsigned k = 0; k < j; ++k) {
      mpfr_mul(t.raw(), L[j][k].raw(), L[j][k].raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), t.raw(), d[k].raw(), MPFR_RNDN);
      mpfr_sub(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
    }
    if (abs(acc) <= tiny) return std::nullopt;
    d.push_back(acc);
    if (acc.is_negative()) ++negatives;
    for (unsigned i = j + 1; i < n; ++i) {
      mpfr_set(acc.raw(), M.at(i, j).raw(), MPFR_RNDN);
      for (unsigned k = 0; k < j; ++k) {
        mpfr_mul(t.raw(), L[i][k].raw(), L[j][k].raw(), MPFR_RNDN);
        mpfr_mul(t.raw(), t.raw(), d[k].raw(), MPFR_RNDN);
        mpfr_sub(acc.raw(), acc.raw(), t.raw(), MPFR_RNDN);
      }
      HFloat& lij = L[i].emplace_back(HFloat(0L, p));
      mpfr_div(lij.raw(), acc.raw(), d[j].raw(), MPFR_RNDN);
    }
  }
  return negatives;
}

EigResult gen_eig_small(const SymMat& A, const SymMat& B, const EigOptions& opts) {
  const unsigned n = A.n;
  const mpfr_prec_t p = std::max(A.precision(), B.precision());
  LowerTri L = cholesky(B);

  // S = L^{-1} A L^{-T}: first W = L^{-1} A column-wise, then each row of S
  // is another lower solve against the matching row of W.
  Dense W(n, p);
  {
    std::vector<HFloat> col(n, HFloat(0L, p));
    for (unsigned j = 0; j < n; ++j) {
      for (unsigned i = 0; i < n; ++i) col[i] = A.at(i, j);
      L.solve_lower(col);
      for (unsigned i = 0; i < n; ++i) W.at(i, j) = col[i];
    }
  }
  SymMat S(n, p);
  {
    std::vector<HFloat> row(n, HFloat(0L, p));
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) row[j] = W.at(i, j);
      L.solve_lower(row);
      for (unsigned j = 0; j <= i; ++j) S.at(i, j) = row[j];
    }
  }

  auto [lambda, w] = sym_eig_min(S, opts.max_sweeps);
  L.solve_transposed(w);  // back to original coordinates; v^T B v = 1 kept
  canonicalize_sign(w);
  return {lambda, w};
}

struct Seed {
  double value;
  std::vector<double> vec;
};

std::optional<Seed> double_seed(const SymMat& A, const SymMat& B) {
  const unsigned n = A.n;
  Eigen::MatrixXd Ad(n, n), Bd(n, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j <= i; ++j) {
      double a = A.at(i, j).to_double();
      double b = B.at(i, j).to_double();
      if (!std::isfinite(a) || !std::isfinite(b)) return std::nullopt;
      Ad(i, j) = Ad(j, i) = a;
      Bd(i, j) = Bd(j, i) = b;
    }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(Ad, Bd);
  if (ges.info() != Eigen::Success) return std::nullopt;
  double v = ges.eigenvalues()(0);
  if (!std::isfinite(v)) return std::nullopt;
  Seed s;
  s.value = v;
  s.vec.resize(n);
  for (unsigned i = 0; i < n; ++i) s.vec[i] = ges.eigenvectors().col(0)(i);
  return s;
}

// Large-order path: bracket the smallest pencil eigenvalue around a double
// seed, run inverse iteration with a certified positive definite shift, and
// certify the final value with one more inertia count. Same residual contract
// as the Jacobi path; nullopt defers to the Jacobi fallback.
std::optional<EigResult> gen_eig_seeded(const SymMat& A, const SymMat& B) {
  const unsigned n = A.n;
  const mpfr_prec_t p = std::max(A.precision(), B.precision());

  auto seed = double_seed(A, B);
  if (!seed) return std::nullopt;

  HFloat lam(seed->value, p);
  HFloat normA = A.frobenius_norm();
  HFloat normB = B.frobenius_norm();
  if (normB.is_zero()) return std::nullopt;
  HFloat scale = max(abs(lam), normA / normB);
  if (scale.is_zero()) scale = HFloat(1L, p);
  HFloat delta = scale * HFloat(1e-9, p);

  auto count_at = [&](HFloat shift) -> std::optional<int> {
    for (int nudge = 0; nudge < 5; ++nudge) {
      auto c = inertia_below(A, B, shift);
      if (c) return c;
      shift += delta * HFloat::two_pow(-24 - nudge, p);
    }
    return std::nullopt;
  };

  // Lower edge: a successful Cholesky of A - lo*B certifies lambda_min > lo,
  // and the factor is reused for the inverse iteration.
  HFloat lo = lam - delta;
  std::optional<LowerTri> factor;
  for (int tries = 0; tries < 24 && !factor; ++tries) {
    try {
      factor = cholesky(shifted(A, B, lo, p));
    } catch (const NotPositiveDefinite&) {
      lo -= delta * HFloat(long(1) << std::min(tries + 1, 30), p);
    }
  }
  if (!factor) return std::nullopt;

  std::vector<HFloat> v(n, HFloat(0L, p));
  for (unsigned i = 0; i < n; ++i) v[i] = HFloat(seed->vec[i], p);
  {
    auto Bv = sym_apply(B, v, p);
    HFloat bn = sqrt(abs(dot(v, Bv, p)));
    if (bn.is_zero()) return std::nullopt;
    for (auto& x : v) x /= bn;
  }

  HFloat res_target =
      HFloat(long(n), p) * HFloat::two_pow(-p / 2, p) * (normA + abs(lam) * normB);
  HFloat rho = lam;
  bool converged = false;
  for (int it = 0; it < 80; ++it) {
    auto y = sym_apply(B, v, p);
    factor->solve_lower(y);
    factor->solve_transposed(y);
    auto By = sym_apply(B, y, p);
    HFloat bn = sqrt(abs(dot(y, By, p)));
    if (bn.is_zero()) return std::nullopt;
    for (auto& x : y) x /= bn;
    for (auto& x : By) x /= bn;
    auto Ay = sym_apply(A, y, p);
    rho = dot(y, Ay, p);

    HFloat rn(0L, p), t(0L, p);
    for (unsigned i = 0; i < n; ++i) {
      mpfr_mul(t.raw(), rho.raw(), By[i].raw(), MPFR_RNDN);
      mpfr_sub(t.raw(), Ay[i].raw(), t.raw(), MPFR_RNDN);
      mpfr_mul(t.raw(), t.raw(), t.raw(), MPFR_RNDN);
      mpfr_add(rn.raw(), rn.raw(), t.raw(), MPFR_RNDN);
    }
    rn = sqrt(rn);
    v = std::move(y);
    if (rn <= res_target) {
      converged = true;
      break;
    }
  }
  if (!converged) return std::nullopt;

  // rho is a Rayleigh quotient, so rho >= lambda_min always. One inertia
  // count below rho certifies the gap between them even if the iteration
  // locked onto a clustered neighbor.
  HFloat margin = scale * HFloat::two_pow(-(p / 2 - 10), p);
  auto below = count_at(rho - margin);
  if (!below || *below != 0) return std::nullopt;

  canonicalize_sign(v);
  return EigResult{rho, std::move(v)};
}

}  // namespace

EigResult gen_eig_min(const SymMat& A, const SymMat& B, const EigOptions& opts) {
  if (A.n != B.n) throw DimensionMismatch("pencil order mismatch");
  if (A.n == 0) throw InvalidOrder("empty pencil");
  if (A.n <= opts.jacobi_size_limit) return gen_eig_small(A, B, opts);
  if (auto r = gen_eig_seeded(A, B)) return *r;
  return gen_eig_small(A, B, opts);
}

std::vector<Rat> ldlt_pivots_exact(const SymMatQ& m) {
  const unsigned n = m.n;
  std::vector<std::vector<Rat>> L(n);
  std::vector<Rat> d;
  d.reserve(n);
  for (unsigned j = 0; j < n; ++j) {
    Rat dj = m.at(j, j);
    for (unsigned k = 0; k < j; ++k) dj -= L[j][k] * L[j][k] * d[k];
    d.push_back(dj);
    if (dj <= 0) break;
    for (unsigned i = j + 1; i < n; ++i) {
      Rat v = m.at(i, j);
      for (unsigned k = 0; k < j; ++k) v -= L[i][k] * L[j][k] * d[k];
      L[i].push_back(v / dj);
    }
  }
  return d;
}

bool positive_definite_exact(const SymMatQ& m) {
  auto d = ldlt_pivots_exact(m);
  return d.size() == m.n && (m.n == 0 || d.back() > 0);
}

EigResult gen_eig_min(const SymMatQ& A, const SymMatQ& B, const EigOptions& opts) {
  if (A.n != B.n) throw DimensionMismatch("pencil order mismatch");
  mpfr_prec_t prec = HFloat::default_precision();
  bool known_pd = false;

  // For small orders the exact pivots of B are cheap and size the precision
  // needed to survive the Cholesky of a badly conditioned Gram matrix.
  if (A.n <= 64 && A.n > 0) {
    auto piv = ldlt_pivots_exact(B);
    if (piv.size() < A.n || piv.back() <= 0)
      throw NotPositiveDefinite(piv.empty() ? 0 : piv.size() - 1);
    known_pd = true;
    Rat maxdiag(0);
    for (unsigned i = 0; i < B.n; ++i) maxdiag = std::max(maxdiag, rat_abs(B.at(i, i)));
    Rat dmin = piv[0];
    for (const Rat& x : piv) dmin = std::min(dmin, x);
    if (dmin > 0 && maxdiag > 0) {
      Rat ratio = maxdiag / dmin;
      long bits = static_cast<long>(mpz_sizeinbase(ratio.get_num().get_mpz_t(), 2)) -
                  static_cast<long>(mpz_sizeinbase(ratio.get_den().get_mpz_t(), 2));
      if (bits > 0) prec = std::max<mpfr_prec_t>(prec, bits + 96);
    }
  }

  for (int attempt = 0;; ++attempt) {
    try {
      SymMat Af = SymMat::from_exact(A, prec);
      SymMat Bf = SymMat::from_exact(B, prec);
      return gen_eig_min(Af, Bf, opts);
    } catch (const NotPositiveDefinite&) {
      if (attempt >= 3) throw;
      if (!known_pd && A.n <= 64) {
        if (!positive_definite_exact(B)) throw;
        known_pd = true;
      }
      prec *= 2;
    }
  }
}

}  // namespace polybound
