#include <doctest.h>

#include "polybound/errors.hpp"
#include "polybound/moments.hpp"
#include "polybound/orthopoly.hpp"
#include "polybound/upoly.hpp"

using namespace polybound;

namespace {

HFloat tol_bits(int bits) { return HFloat::two_pow(bits); }

MPoly xpow(unsigned k) { return MPoly::variable(1, 0, k); }

}  // namespace

TEST_SUITE_BEGIN("orthopoly");

TEST_CASE("even weight symmetry: Legendre alphas vanish") {
  Recurrence3 rec = legendre_recurrence(12);
  for (const auto& a : rec.alpha) CHECK(a.is_zero());
  REQUIRE(rec.exact_beta_sq.has_value());
  for (unsigned k = 1; k < 12; ++k)
    CHECK((*rec.exact_beta_sq)[k] == Rat(long(k) * k, 4 * long(k) * k - 1));
}

TEST_CASE("Chebyshev smallest roots match the cosine closed form") {
  Recurrence3 rec = jacobi_recurrence({Rat(-1, 2), Rat(-1, 2)}, 10);
  for (unsigned n : {2u, 4u, 7u, 10u}) {
    HFloat expect = -cos(HFloat::pi() / HFloat(long(2 * n)));
    CHECK(abs(smallest_root(rec, n) - expect) < tol_bits(-120));
  }
}

TEST_CASE("Legendre degree-2 smallest root is -1/sqrt(3)") {
  HFloat expect = -HFloat(1L) / sqrt(HFloat(3L));
  CHECK(abs(smallest_root(legendre_recurrence(2), 2) - expect) < tol_bits(-120));
}

TEST_CASE("Legendre smallest roots approach -1 at the 1/r^2 rate") {
  Recurrence3 rec = legendre_recurrence(64);
  HFloat v30 = HFloat(30L * 30L) * (HFloat(1L) + smallest_root(rec, 31));
  HFloat v50 = HFloat(50L * 50L) * (HFloat(1L) + smallest_root(rec, 51));
  CHECK(abs(v50 - v30) / v30 < HFloat(0.1));
}

TEST_CASE("Jacobi root trend: i^2 (1 + xi_i) varies slowly between i=30 and i=50") {
  for (auto params : {JacobiParams{Rat(0), Rat(-1, 2)}, JacobiParams{Rat(1, 2), Rat(1, 3)}}) {
    Recurrence3 rec = jacobi_recurrence(params, 52);
    HFloat v30 = HFloat(30L * 30L) * (HFloat(1L) + smallest_root(rec, 30));
    HFloat v50 = HFloat(50L * 50L) * (HFloat(1L) + smallest_root(rec, 50));
    CHECK(abs(v50 - v30) / v30 < HFloat(0.1));
  }
}

TEST_CASE("all tridiagonal roots stay inside the support interval") {
  Recurrence3 rec = legendre_recurrence(16);
  for (unsigned i = 0; i < 16; ++i) {
    HFloat root = tridiag_root(rec, 16, i);
    CHECK(root > HFloat(-1L));
    CHECK(root < HFloat(1L));
  }
}

TEST_CASE("transcription self-consistency: Chebyshev moments recover the auxiliary family") {
  std::vector<Rat> mm(12, Rat(0));
  mm[0] = Rat(1);
  Recurrence3 rec = modified_chebyshev(mm, Rat(-1), Rat(1), 6);
  REQUIRE(rec.exact_alpha.has_value());
  for (const auto& a : *rec.exact_alpha) CHECK(a == 0);
  CHECK((*rec.exact_beta_sq)[1] == Rat(1, 2));
  for (unsigned k = 2; k < 6; ++k) CHECK((*rec.exact_beta_sq)[k] == Rat(1, 4));
}

TEST_CASE("transcription of Lebesgue moments returns the Legendre recurrence exactly") {
  auto seq = pushforward_moments(box_domain(1), xpow(1), 23);
  auto mm = modified_moments_from_powers(seq.values, Rat(-1), Rat(1), 23);
  Recurrence3 rec = modified_chebyshev(mm, Rat(-1), Rat(1), 12);
  Recurrence3 leg = legendre_recurrence(12);
  REQUIRE(rec.exact_alpha.has_value());
  for (unsigned k = 0; k < 12; ++k) {
    CHECK((*rec.exact_alpha)[k] == (*leg.exact_alpha)[k]);
    if (k >= 1) CHECK((*rec.exact_beta_sq)[k] == (*leg.exact_beta_sq)[k]);
  }
}

TEST_CASE("pushforward of x^2 transcribes to the mapped Jacobi(0,-1/2) family") {
  auto seq = pushforward_moments(box_domain(1), xpow(2), 19);
  auto mm = modified_moments_from_powers(seq.values, Rat(0), Rat(1), 19);
  Recurrence3 rec = modified_chebyshev(mm, Rat(0), Rat(1), 10);
  Recurrence3 jac = map_to_interval(jacobi_recurrence({Rat(0), Rat(-1, 2)}, 10), Rat(0), Rat(1));
  REQUIRE(jac.exact_alpha.has_value());
  for (unsigned k = 0; k < 10; ++k) {
    CHECK((*rec.exact_alpha)[k] == (*jac.exact_alpha)[k]);
    if (k >= 1) CHECK((*rec.exact_beta_sq)[k] == (*jac.exact_beta_sq)[k]);
  }
}

TEST_CASE("transcription breaks down on a finite-support measure") {
  Rat c(1, 3);
  std::vector<Rat> powers;
  for (unsigned k = 0; k < 10; ++k) powers.push_back(rat_pow(c, k));
  auto mm = modified_moments_from_powers(powers, Rat(-1), Rat(1), 9);
  CHECK_THROWS_AS(modified_chebyshev(mm, Rat(-1), Rat(1), 5), BreakdownNonPositiveBeta);
}

TEST_CASE("orthonormality audit against exact moments") {
  auto seq = pushforward_moments(box_domain(1), xpow(2), 23);
  auto mm = modified_moments_from_powers(seq.values, Rat(0), Rat(1), 23);
  Recurrence3 rec = modified_chebyshev(mm, Rat(0), Rat(1), 12);
  auto rows = orthonormal_coeffs(rec, 11);
  const mpfr_prec_t p = HFloat::default_precision();
  HFloat worst(0L, p);
  for (unsigned i = 0; i <= 10; ++i)
    for (unsigned j = 0; j <= i; ++j) {
      HFloat acc(0L, p);
      for (unsigned a = 0; a < rows[i].size(); ++a)
        for (unsigned b = 0; b < rows[j].size(); ++b)
          acc += rows[i][a] * rows[j][b] * HFloat(seq.values[a + b], p);
      HFloat err = abs(acc - HFloat(i == j ? 1L : 0L));
      if (err > worst) worst = err;
    }
  CHECK(worst < HFloat::two_pow(-long(p) / 4));
}

TEST_CASE("even-power pushforward root: r = 0 gives the first moment ratio") {
  CHECK(abs(even_power_pushforward_root(1, 0) - HFloat(Rat(1, 3))) < tol_bits(-200));
  for (unsigned k = 2; k <= 5; ++k)
    CHECK(abs(even_power_pushforward_root(k, 0) - HFloat(Rat(1, 2 * k + 1))) < tol_bits(-200));
}

TEST_CASE("even-power pushforward root scales as 1/r^2") {
  for (unsigned k : {1u, 3u}) {
    std::vector<HFloat> scaled;
    for (unsigned r = 10; r <= 20; r += 5)
      scaled.push_back(HFloat(long(r * r)) * even_power_pushforward_root(k, r));
    for (const auto& s : scaled) {
      CHECK(s > HFloat(0L));
      CHECK(s < scaled.front() * HFloat(2L));
      CHECK(s > scaled.front() / HFloat(2L));
    }
  }
}

TEST_CASE("Gauss-Legendre: weights sum to one and low moments are exact") {
  Quadrature q = gauss_legendre(9);
  const mpfr_prec_t p = HFloat::default_precision();
  HFloat wsum(0L, p);
  for (const auto& w : q.weights) wsum += w;
  CHECK(abs(wsum - HFloat(1L)) < tol_bits(-120));
  for (unsigned deg = 0; deg <= 17; ++deg) {
    HFloat acc(0L, p);
    for (unsigned i = 0; i < 9; ++i) acc += q.weights[i] * pow_int(q.nodes[i], long(deg));
    Rat exact = deg % 2 == 1 ? Rat(0) : Rat(1, deg + 1);
    CHECK(abs(acc - HFloat(exact)) < tol_bits(-120));
  }
}

TEST_CASE("tridiag_eig_min returns a genuine eigenpair") {
  Recurrence3 rec = legendre_recurrence(8);
  auto [val, vec] = tridiag_eig_min(rec, 8);
  CHECK(abs(val - smallest_root(rec, 8)) < tol_bits(-120));
  const mpfr_prec_t p = HFloat::default_precision();
  HFloat worst(0L, p);
  for (unsigned i = 0; i < 8; ++i) {
    HFloat acc = rec.alpha[i] * vec[i];
    if (i >= 1) acc += rec.beta[i] * vec[i - 1];
    if (i + 1 < 8) acc += rec.beta[i + 1] * vec[i + 1];
    worst = max(worst, abs(acc - val * vec[i]));
  }
  CHECK(worst < tol_bits(-100));
}

TEST_SUITE_END();
