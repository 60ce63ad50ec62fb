#include "polybound/hierarchy.hpp"

#include <cstdint>
#include <unordered_map>

#include "polybound/errors.hpp"

namespace polybound {

const char* method_name(Method m) {
  switch (m) {
    case Method::Full:
      return "full";
    case Method::PfmHankel:
      return "pfm-hankel";
    case Method::PfmChebyshev:
      return "pfm-cheb";
  }
  return "?";
}

namespace {

void enumerate(unsigned nvars, unsigned maxdeg, unsigned pos, unsigned used, Exponents& cur,
               std::vector<Exponents>& out) {
  if (pos == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned d = 0; d + used <= maxdeg; ++d) {
    cur[pos] = d;
    enumerate(nvars, maxdeg, pos + 1, used + d, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(unsigned nvars, unsigned maxdeg) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  enumerate(nvars, maxdeg, 0, 0, cur, out);
  std::sort(out.begin(), out.end(), GradedLexLess{});
  return out;
}

namespace {

// Memoized monomial moments keyed by packed exponents (small cases) or the
// vector itself.
class MomentCache {
 public:
  explicit MomentCache(const Domain& d) : domain_(d) {}

  const Rat& get(const Exponents& e) {
    std::uint64_t key = 0;
    bool packed = e.size() <= 8;
    if (packed) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] > 255) {
          packed = false;
          break;
        }
        key |= static_cast<std::uint64_t>(e[i]) << (8 * i);
      }
    }
    if (packed) {
      auto it = packed_.find(key);
      if (it != packed_.end()) return it->second;
      return packed_.emplace(key, monomial_moment(domain_, e)).first->second;
    }
    auto it = generic_.find(e);
    if (it != generic_.end()) return it->second;
    return generic_.emplace(e, monomial_moment(domain_, e)).first->second;
  }

 private:
  Domain domain_;
  std::unordered_map<std::uint64_t, Rat> packed_;
  std::map<Exponents, Rat, GradedLexLess> generic_;
};

}  // namespace

std::pair<SymMatQ, SymMatQ> full_bound_pair(const MPoly& f, const Domain& domain, unsigned r) {
  if (f.nvars() != domain.nvars) throw DimensionMismatch("polynomial nvars != domain nvars");
  const unsigned n = domain.nvars;
  auto basis = monomial_basis(n, r);
  const unsigned m = static_cast<unsigned>(basis.size());
  SymMatQ A(m), B(m);
  MomentCache cache(domain);

  Exponents gamma(n), delta(n);
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      for (unsigned v = 0; v < n; ++v) gamma[v] = basis[i][v] + basis[j][v];
      B.at(i, j) = cache.get(gamma);
      Rat acc(0);
      for (const auto& [e, c] : f.terms()) {
        bool odd = false;
        for (unsigned v = 0; v < n; ++v) {
          delta[v] = gamma[v] + e[v];
          if (delta[v] % 2 == 1) odd = true;
        }
        if (!odd) acc += c * cache.get(delta);
      }
      A.at(i, j) = acc;
    }
  }
  return {std::move(A), std::move(B)};
}

BoundResult upper_bound_full(const MPoly& f, const Domain& domain, unsigned r,
                             const EigOptions& opts) {
  auto [A, B] = full_bound_pair(f, domain, r);
  EigResult eig = gen_eig_min(A, B, opts);
  BoundResult out;
  out.value = eig.value;
  out.r = r;
  out.method = Method::Full;
  out.eigvec = std::move(eig.vector);
  out.monomials = monomial_basis(domain.nvars, r);
  out.domain = domain;
  out.f = f;
  return out;
}

BoundResult pfm_from_moments(const MomentSeq& seq, unsigned r, Method method,
                             const EigOptions& opts) {
  if (method == Method::Full) throw InvalidOrder("pfm_from_moments expects a pfm method");
  if (seq.order() < 2 * r + 1) throw InvalidOrder("moment sequence too short for order r");

  BoundResult out;
  out.r = r;
  out.method = method;
  out.moments.assign(seq.values.begin(), seq.values.begin() + 2 * r + 2);
  out.domain = seq.domain;
  out.f = seq.f;

  if (method == Method::PfmHankel) {
    SymMatQ A(r + 1), B(r + 1);
    for (unsigned i = 0; i <= r; ++i)
      for (unsigned j = 0; j <= i; ++j) {
        A.at(i, j) = seq.values[i + j + 1];
        B.at(i, j) = seq.values[i + j];
      }
    EigResult eig = gen_eig_min(A, B, opts);
    out.value = eig.value;
    out.eigvec = std::move(eig.vector);
    return out;
  }

  auto [lo, hi] = range_enclosure(seq.domain, seq.f);
  if (!(lo < hi)) {
    // Constant f: widen artificially; the transcription then reports the
    // finite-support breakdown the caller expects.
    lo -= 1;
    hi += 1;
  }
  auto mod = modified_moments_from_powers(
      std::span<const Rat>(out.moments), lo, hi, 2 * r + 1);
  Recurrence3 rec = modified_chebyshev(mod, lo, hi, r + 1);
  EigResult eig = tridiag_eig_min(rec, r + 1);
  out.value = eig.value;
  out.eigvec = std::move(eig.vector);
  out.rec = std::move(rec);
  out.lo = lo;
  out.hi = hi;
  return out;
}

BoundResult upper_bound_pfm(const MPoly& f, const Domain& domain, unsigned r, Method method,
                            const EigOptions& opts) {
  return pfm_from_moments(pushforward_moments(domain, f, 2 * r + 1), r, method, opts);
}

SymMatQ leading_submatrix(const SymMatQ& M, unsigned m) {
  if (m > M.n) throw InvalidOrder("submatrix order exceeds matrix order");
  SymMatQ out(m);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j <= i; ++j) out.at(i, j) = M.at(i, j);
  return out;
}

namespace {

const Int kDenomCap = (Int(1) << 64);

std::vector<Rat> round_coeffs(const std::vector<HFloat>& v) {
  std::vector<Rat> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(round_to_rational(x, kDenomCap));
  return out;
}

}  // namespace

DensityPoly optimal_density(const BoundResult& result) {
  if (result.eigvec.empty()) throw InvalidOrder("bound result carries no eigenvector");
  DensityPoly out;
  out.domain = result.domain;

  if (result.method == Method::Full) {
    auto coeffs = round_coeffs(result.eigvec);
    MPoly q(result.f.nvars());
    for (std::size_t i = 0; i < coeffs.size(); ++i) q.add_term(result.monomials[i], coeffs[i]);
    Rat integral = poly_moment(result.domain, q * q);
    if (integral <= 0) throw DenominatorZero("degenerate density normalization");
    out.q = std::move(q);
    out.normalization = Rat(1) / integral;
    return out;
  }

  // Pfm methods: express s's square root in the power basis first.
  std::vector<HFloat> power_coeffs;
  if (result.method == Method::PfmHankel) {
    power_coeffs = result.eigvec;
  } else {
    auto rows = orthonormal_coeffs(result.rec, result.r + 1);
    power_coeffs.assign(result.r + 1, HFloat(0L));
    for (unsigned i = 0; i <= result.r; ++i)
      for (unsigned c = 0; c < rows[i].size(); ++c)
        power_coeffs[c] += result.eigvec[i] * rows[i][c];
  }
  UPoly q(round_coeffs(power_coeffs));
  UPoly q2 = q * q;
  Rat integral(0);
  for (unsigned k = 0; k <= q2.degree(); ++k) {
    if (k >= result.moments.size()) throw InvalidOrder("not enough moments for density audit");
    integral += q2.coeff(k) * result.moments[k];
  }
  if (integral <= 0) throw DenominatorZero("degenerate density normalization");
  out.composed_q = compose(q, result.f);
  out.q = std::move(q);
  out.normalization = Rat(1) / integral;
  return out;
}

std::vector<std::pair<std::vector<Rat>, Rat>> sample_density(
    const DensityPoly& density, std::span<const std::vector<Rat>> grid) {
  std::vector<std::pair<std::vector<Rat>, Rat>> out;
  out.reserve(grid.size());
  for (const auto& pt : grid) {
    Rat qv;
    if (density.composed_q) {
      qv = density.composed_q->eval(pt);
    } else if (std::holds_alternative<MPoly>(density.q)) {
      qv = std::get<MPoly>(density.q).eval(pt);
    } else {
      if (pt.size() != 1) throw DimensionMismatch("univariate density needs 1-d points");
      qv = std::get<UPoly>(density.q).eval(pt[0]);
    }
    out.emplace_back(pt, density.normalization * qv * qv);
  }
  return out;
}

}  // namespace polybound
