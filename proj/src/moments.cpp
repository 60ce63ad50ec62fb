#include "polybound/moments.hpp"

#include <ostream>

#include "polybound/errors.hpp"
#include "polybound/upoly.hpp"

namespace polybound {

namespace {

// E[x^(2b)] on the unit ball under the uniform probability measure:
//   prod_i (2b_i)! / (4^(b_i) b_i!)  *  2^B / prod_{j=1..B} (n + 2j),  B = sum b_i.
// This is the classical Dirichlet integral at half-integer Gamma arguments,
// reduced so no transcendental factor survives.
Rat ball_even_moment(unsigned n, const Exponents& half_exps) {
  Rat out(1);
  unsigned total_half = 0;
  for (unsigned b : half_exps) {
    if (b == 0) continue;
    total_half += b;
    Int denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 4, b);
    denom *= factorial(b);
    Rat factor(factorial(2 * b), denom);
    factor.canonicalize();
    out *= factor;
  }
  for (unsigned j = 1; j <= total_half; ++j) out *= rat(2, n + 2 * j);
  return out;
}

}  // namespace

Rat monomial_moment(const Domain& domain, const Exponents& alpha) {
  if (alpha.size() != domain.nvars) throw DimensionMismatch("alpha length != nvars");
  for (unsigned a : alpha)
    if (a % 2 == 1) return Rat(0);

  if (domain.kind == DomainKind::Box) {
    Rat out(1);
    for (unsigned a : alpha)
      if (a > 0) out *= Rat(1, a + 1);
    return out;
  }

  Exponents half(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) half[i] = alpha[i] / 2;
  return ball_even_moment(domain.nvars, half);
}

Rat poly_moment(const Domain& domain, const MPoly& p) {
  if (p.nvars() != domain.nvars) throw DimensionMismatch("polynomial nvars != domain nvars");
  Rat acc(0);
  for (const auto& [e, c] : p.terms()) {
    bool odd = false;
    for (unsigned a : e)
      if (a % 2 == 1) {
        odd = true;
        break;
      }
    if (!odd) acc += c * monomial_moment(domain, e);
  }
  return acc;
}

MomentSeq pushforward_moments(const Domain& domain, const MPoly& f, unsigned order) {
  if (f.nvars() != domain.nvars) throw DimensionMismatch("polynomial nvars != domain nvars");
  MomentSeq seq{{}, f, domain};
  seq.values.reserve(order + 1);
  seq.values.push_back(Rat(1));
  MPoly fk = MPoly::constant(f.nvars(), Rat(1));
  for (unsigned k = 1; k <= order; ++k) {
    fk = fk * f;
    seq.values.push_back(poly_moment(domain, fk));
  }
  return seq;
}

std::vector<Rat> modified_moments_from_powers(std::span<const Rat> power_moments, const Rat& lo,
                                              const Rat& hi, unsigned order) {
  if (!(lo < hi)) throw InvalidInterval("modified moments need lo < hi");
  if (power_moments.size() < order + 1)
    throw InvalidOrder("not enough power moments for requested order");
  // l(t) = (2t - lo - hi)/(hi - lo)
  Rat a = Rat(2) / (hi - lo);
  Rat b = -(lo + hi) / (hi - lo);
  auto fam = chebyshev_family_mapped(order, a, b);
  std::vector<Rat> out;
  out.reserve(order + 1);
  for (unsigned j = 0; j <= order; ++j) {
    Rat acc(0);
    for (unsigned k = 0; k <= fam[j].degree(); ++k) {
      Rat c = fam[j].coeff(k);
      if (c != 0) acc += c * power_moments[k];
    }
    out.push_back(acc);
  }
  return out;
}

std::vector<Rat> modified_moments(const Domain& domain, const MPoly& f, const Rat& lo,
                                  const Rat& hi, unsigned order) {
  auto seq = pushforward_moments(domain, f, order);
  return modified_moments_from_powers(seq.values, lo, hi, order);
}

std::pair<Rat, Rat> range_enclosure(const Domain& domain, const MPoly& f) {
  if (f.nvars() != domain.nvars) throw DimensionMismatch("polynomial nvars != domain nvars");
  // Per-monomial range over the domain (Ball is contained in Box, so box
  // monomial ranges are valid for both): [1,1] for the constant, [0,1] when
  // all exponents are even, [-1,1] otherwise.
  Rat lo(0), hi(0);
  for (const auto& [e, c] : f.terms()) {
    unsigned deg = total_degree(e);
    bool all_even = true;
    for (unsigned a : e)
      if (a % 2 == 1) all_even = false;
    Rat mlo, mhi;
    if (deg == 0) {
      mlo = mhi = Rat(1);
    } else if (all_even) {
      mlo = Rat(0);
      mhi = Rat(1);
    } else {
      mlo = Rat(-1);
      mhi = Rat(1);
    }
    Rat v1 = c * mlo, v2 = c * mhi;
    lo += v1 < v2 ? v1 : v2;
    hi += v1 < v2 ? v2 : v1;
  }
  return {lo, hi};
}

bool hankel_positive_definite(std::span<const Rat> moments, unsigned r) {
  const unsigned m = r + 1;
  if (moments.size() < 2 * r + 1) throw InvalidOrder("need moments up to 2r");
  // Exact rational LDL^T; positive definite iff all pivots positive.
  std::vector<std::vector<Rat>> L(m, std::vector<Rat>(m, Rat(0)));
  std::vector<Rat> d(m, Rat(0));
  for (unsigned j = 0; j < m; ++j) {
    Rat dj = moments[2 * j];
    for (unsigned k = 0; k < j; ++k) dj -= L[j][k] * L[j][k] * d[k];
    if (dj <= 0) return false;
    d[j] = dj;
    L[j][j] = Rat(1);
    for (unsigned i = j + 1; i < m; ++i) {
      Rat v = moments[i + j];
      for (unsigned k = 0; k < j; ++k) v -= L[i][k] * L[j][k] * d[k];
      L[i][j] = v / dj;
    }
  }
  return true;
}

void write_moments_csv(std::ostream& os, const MomentSeq& seq) {
  os << "k,num,den\n";
  for (std::size_t k = 0; k < seq.values.size(); ++k) {
    os << k << ',' << seq.values[k].get_num().get_str() << ','
       << seq.values[k].get_den().get_str() << '\n';
  }
}

}  // namespace polybound
