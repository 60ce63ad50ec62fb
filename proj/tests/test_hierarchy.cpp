#include <doctest.h>

#include "polybound/errors.hpp"
#include "polybound/hierarchy.hpp"
#include "polybound/orthopoly.hpp"
#include "polybound/testfunctions.hpp"

using namespace polybound;

namespace {

HFloat tol_bits(int bits) { return HFloat::two_pow(bits); }

MPoly xpow(unsigned k) { return MPoly::variable(1, 0, k); }

HFloat rel_diff(const HFloat& a, const HFloat& b) {
  HFloat scale = max(abs(a), max(abs(b), HFloat(1e-30)));
  return abs(a - b) / scale;
}

}  // namespace

TEST_SUITE_BEGIN("hierarchy");

TEST_CASE("order zero means a constant density: bound equals E[f]") {
  CHECK(abs(upper_bound_full(xpow(2), box_domain(1), 0).value - HFloat(Rat(1, 3))) <
        tol_bits(-200));
  for (unsigned k = 1; k <= 4; ++k)
    CHECK(abs(upper_bound_pfm(xpow(2 * k), box_domain(1), 0).value - HFloat(Rat(1, 2 * k + 1))) <
          tol_bits(-200));
}

TEST_CASE("full bound for f(x)=x at r=1 is the smallest degree-2 orthogonal root") {
  HFloat expect = -HFloat(1L) / sqrt(HFloat(3L));
  CHECK(abs(upper_bound_full(xpow(1), box_domain(1), 1).value - expect) < tol_bits(-150));
}

TEST_CASE("full bound for f(x)=x approaches -1 at the 1/r^2 rate") {
  HFloat v10 = HFloat(100L) * (HFloat(1L) + upper_bound_full(xpow(1), box_domain(1), 10).value);
  HFloat v20 = HFloat(400L) * (HFloat(1L) + upper_bound_full(xpow(1), box_domain(1), 20).value);
  CHECK(v10 > HFloat(0L));
  CHECK(rel_diff(v10, v20) < HFloat(0.25));
}

TEST_CASE("identity push-forward: pfm equals full for f(x)=x at every order") {
  for (unsigned r : {1u, 3u, 6u}) {
    HFloat full = upper_bound_full(xpow(1), box_domain(1), r).value;
    HFloat pfm = upper_bound_pfm(xpow(1), box_domain(1), r).value;
    CHECK(rel_diff(full, pfm) < tol_bits(-100));
  }
}

TEST_CASE("pfm of x^(2k) matches the closed Jacobi-root reference") {
  for (unsigned k = 1; k <= 5; ++k)
    for (unsigned r : {1u, 4u, 8u}) {
      HFloat ref = even_power_pushforward_root(k, r);
      for (Method method : {Method::PfmHankel, Method::PfmChebyshev}) {
        HFloat val = upper_bound_pfm(xpow(2 * k), box_domain(1), r, method).value;
        CHECK(rel_diff(val, ref) < HFloat(1e-10));
      }
    }
}

TEST_CASE("pfm of x^2 equals the full bound at twice the order") {
  for (unsigned r : {1u, 2u, 4u, 6u}) {
    HFloat pfm = upper_bound_pfm(xpow(2), box_domain(1), r).value;
    HFloat full = upper_bound_full(xpow(2), box_domain(1), 2 * r).value;
    CHECK(rel_diff(pfm, full) < HFloat(1e-10));
  }
}

TEST_CASE("pfm methods agree on the catalog at matched orders") {
  for (const auto& name : test_function_names()) {
    TestFunction fn = test_function(name);
    for (unsigned r : {2u, 6u}) {
      HFloat hankel = upper_bound_pfm(fn.poly, box_domain(2), r, Method::PfmHankel).value;
      HFloat cheb = upper_bound_pfm(fn.poly, box_domain(2), r, Method::PfmChebyshev).value;
      CHECK(rel_diff(hankel, cheb) < HFloat(1e-8));
    }
  }
}

TEST_CASE("bounds never undershoot the known minimum and shrink with r") {
  for (const auto& name : test_function_names()) {
    TestFunction fn = test_function(name);
    for (DomainKind kind : {DomainKind::Box, DomainKind::Ball}) {
      Domain domain{kind, 2};
      HFloat prev_full, prev_pfm;
      for (unsigned r = 0; r <= 4; ++r) {
        HFloat full = upper_bound_full(fn.poly, domain, r).value;
        HFloat pfm = upper_bound_pfm(fn.poly, domain, r).value;
        CHECK(full >= HFloat(fn.f_min) - tol_bits(-60));
        CHECK(pfm >= HFloat(fn.f_min) - tol_bits(-60));
        if (r > 0) {
          CHECK(full <= prev_full + tol_bits(-60));
          CHECK(pfm <= prev_pfm + tol_bits(-60));
        }
        prev_full = full;
        prev_pfm = pfm;
      }
    }
  }
}

TEST_CASE("chain inequality: full bound at r*deg(f) never exceeds pfm at r") {
  for (const auto& name : {"booth", "matyas"}) {
    TestFunction fn = test_function(name);
    unsigned d = fn.poly.degree();
    for (unsigned r : {1u, 2u, 3u}) {
      HFloat full_rd = upper_bound_full(fn.poly, box_domain(2), r * d).value;
      HFloat pfm_r = upper_bound_pfm(fn.poly, box_domain(2), r).value;
      CHECK(full_rd <= pfm_r + abs(pfm_r) * HFloat(1e-10) + tol_bits(-60));
    }
  }
}

TEST_CASE("bounds are affinely equivariant at matched order") {
  TestFunction ma = test_function("matyas");
  Rat a(3, 2), b(-2);
  MPoly scaled = ma.poly * a + MPoly::constant(2, b);
  for (unsigned r : {1u, 3u}) {
    HFloat full0 = upper_bound_full(ma.poly, box_domain(2), r).value;
    HFloat full1 = upper_bound_full(scaled, box_domain(2), r).value;
    CHECK(abs(full1 - (HFloat(a) * full0 + HFloat(b))) < tol_bits(-100));
    HFloat pfm0 = upper_bound_pfm(ma.poly, box_domain(2), r).value;
    HFloat pfm1 = upper_bound_pfm(scaled, box_domain(2), r).value;
    CHECK(abs(pfm1 - (HFloat(a) * pfm0 + HFloat(b))) < tol_bits(-100));
  }
}

TEST_CASE("constant f makes the push-forward degenerate") {
  MPoly c = MPoly::constant(1, Rat(2));
  CHECK_THROWS_AS(upper_bound_pfm(c, box_domain(1), 2, Method::PfmHankel), NotPositiveDefinite);
  CHECK_THROWS_AS(upper_bound_pfm(c, box_domain(1), 2, Method::PfmChebyshev),
                  BreakdownNonPositiveBeta);
}

TEST_CASE("order-zero density is the constant 1") {
  auto result = upper_bound_full(xpow(2), box_domain(1), 0);
  DensityPoly d = optimal_density(result);
  std::vector<std::vector<Rat>> grid{{Rat(0)}, {Rat(1, 2)}, {Rat(-3, 4)}};
  for (const auto& [pt, val] : sample_density(d, grid)) CHECK(val == Rat(1));
}

TEST_CASE("density audit: exact normalization and objective value at the bound") {
  auto result = upper_bound_full(xpow(1), box_domain(1), 1);
  DensityPoly d = optimal_density(result);
  const MPoly& q = std::get<MPoly>(d.q);
  Rat norm_integral = poly_moment(box_domain(1), q * q) * d.normalization;
  CHECK(norm_integral == Rat(1));  // exact feasibility
  Rat objective = poly_moment(box_domain(1), xpow(1) * q * q) * d.normalization;
  CHECK(abs(HFloat(objective) - result.value) < tol_bits(-100));
}

TEST_CASE("pfm density audit for x^2 with both univariate methods") {
  for (Method method : {Method::PfmHankel, Method::PfmChebyshev}) {
    auto result = upper_bound_pfm(xpow(2), box_domain(1), 3, method);
    DensityPoly d = optimal_density(result);
    REQUIRE(d.composed_q.has_value());
    MPoly sigma = *d.composed_q * *d.composed_q;
    CHECK(poly_moment(box_domain(1), sigma) * d.normalization == Rat(1));
    Rat objective = poly_moment(box_domain(1), xpow(2) * sigma) * d.normalization;
    CHECK(abs(HFloat(objective) - result.value) < tol_bits(-90));
  }
}

TEST_CASE("density values are nonnegative everywhere sampled") {
  TestFunction mo = test_function("motzkin");
  auto result = upper_bound_full(mo.poly, box_domain(2), 2);
  DensityPoly d = optimal_density(result);
  std::vector<std::vector<Rat>> grid;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) grid.push_back({rat(i, 2), rat(j, 2)});
  for (const auto& [pt, val] : sample_density(d, grid)) CHECK(val >= 0);
}

TEST_CASE("midpoint Riemann sum of the sampled density is close to 1") {
  // univariate: x^2 at r = 2 over 400 cells
  {
    auto result = upper_bound_pfm(xpow(2), box_domain(1), 2);
    DensityPoly d = optimal_density(result);
    std::vector<std::vector<Rat>> grid;
    for (int i = 0; i < 400; ++i) grid.push_back({Rat(-1) + Rat(2 * i + 1, 400)});
    Rat sum(0);
    for (const auto& [pt, val] : sample_density(d, grid)) sum += val;
    sum /= 400;
    CHECK(rat_abs(sum - 1) < Rat(1, 100));
  }
  // bivariate: motzkin full bound at r = 2 over a 400^2 midpoint grid
  {
    TestFunction mo = test_function("motzkin");
    auto result = upper_bound_full(mo.poly, box_domain(2), 2);
    DensityPoly d = optimal_density(result);
    std::vector<std::vector<Rat>> grid;
    for (int i = 0; i < 400; ++i)
      for (int j = 0; j < 400; ++j)
        grid.push_back({Rat(-1) + Rat(2 * i + 1, 400), Rat(-1) + Rat(2 * j + 1, 400)});
    Rat sum(0);
    for (const auto& [pt, val] : sample_density(d, grid)) sum += val;
    sum /= 160000;
    CHECK(rat_abs(sum - 1) < Rat(1, 100));
  }
}

TEST_CASE("camel densities: full peaks at the origin, pfm mirrors the function") {
  TestFunction ca = test_function("camel");
  auto full = optimal_density(upper_bound_full(ca.poly, box_domain(2), 6));
  auto pfm = optimal_density(upper_bound_pfm(ca.poly, box_domain(2), 6));

  std::vector<std::vector<Rat>> grid;
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) grid.push_back({rat(i, 10), rat(j, 10)});
  auto full_samples = sample_density(full, grid);
  Rat full_max(0);
  std::vector<Rat> full_argmax;
  for (const auto& [pt, val] : full_samples)
    if (val > full_max) {
      full_max = val;
      full_argmax = pt;
    }
  CHECK(full_argmax == std::vector<Rat>{Rat(0), Rat(0)});

  // At the secondary local minimum of the function, the pfm density stays
  // comparatively high: it only sees function values, not locations.
  std::vector<std::vector<Rat>> probe{{Rat(0), Rat(0)}, {Rat(7, 20), Rat(-7, 40)}};
  auto fs = sample_density(full, probe);
  auto ps = sample_density(pfm, probe);
  Rat full_rel = fs[1].second / fs[0].second;
  Rat pfm_rel = ps[1].second / ps[0].second;
  CHECK(pfm_rel > full_rel);
}

TEST_CASE("monomial basis enumerates C(n+r, r) monomials in graded order") {
  auto basis = monomial_basis(2, 3);
  CHECK(basis.size() == 10);
  for (std::size_t i = 1; i < basis.size(); ++i)
    CHECK(GradedLexLess{}(basis[i - 1], basis[i]));
  CHECK(monomial_basis(8, 4).size() == 495);
}

TEST_SUITE_END();
