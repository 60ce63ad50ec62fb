#include <doctest.h>

#include <cmath>
#include <sstream>

#include "polybound/errors.hpp"
#include "polybound/experiments.hpp"
#include "polybound/rng.hpp"

using namespace polybound;

TEST_SUITE_BEGIN("experiments");

TEST_CASE("catalog carries the exact published coefficients") {
  TestFunction ca = test_function("camel");
  CHECK(ca.poly.terms().at({6, 0}) == Rat(15625, 6));
  TestFunction bo = test_function("booth");
  CHECK(bo.f_min == Rat(0));
  std::vector<Rat> m{Rat(1, 10), Rat(3, 10)};
  CHECK(bo.poly.eval(std::span<const Rat>(m)) == Rat(0));
  CHECK_THROWS_AS(test_function("nope"), UnknownName);
}

TEST_CASE("rho is 1 when pfm and full coincide (identity push-forward)") {
  TestFunction fake{"x", MPoly::variable(1, 0), Rat(-1), {{Rat(-1)}}};
  HFloat rho = rho_ratio(fake, box_domain(1), 3);
  CHECK(abs(rho - HFloat(1L)) < HFloat(1e-10));
}

TEST_CASE("rho of x^2 at even r stays at or below 1") {
  TestFunction fake{"x^2", MPoly::variable(1, 0, 2), Rat(0), {{Rat(0)}}};
  for (unsigned r : {2u, 4u, 6u}) {
    HFloat rho = rho_ratio(fake, box_domain(1), r);
    CHECK(rho <= HFloat(1L) + HFloat(1e-10));
  }
}

TEST_CASE("rho denominators at the minimum are rejected") {
  // full bound of a constant equals f_min, so the gap ratio is undefined
  CHECK_THROWS_AS(rho_gap_ratio(HFloat(Rat(1, 3)), HFloat(Rat(1, 3)), Rat(1, 3)),
                  DenominatorZero);
}

TEST_CASE("even-power table: k=1 never exceeds 1 and the even-r plateau shows") {
  auto rows = even_power_ratios(8, 2);
  for (const auto& row : rows) {
    if (row.k == 1) CHECK(row.rho <= HFloat(1L) + HFloat(1e-10));
  }
  // f^(r) = f^(r+1) for even r: find (k=1, r=2) and (k=1, r=3)
  HFloat full2, full3;
  for (const auto& row : rows) {
    if (row.k == 1 && row.r == 2) full2 = row.full;
    if (row.k == 1 && row.r == 3) full3 = row.full;
  }
  CHECK(abs(full2 - full3) < HFloat(1e-12));
}

TEST_CASE("maxcut generator: degenerate p values") {
  MaxCutInstance zero = maxcut_gen(6, Rat(1), 5);
  CHECK(zero.edge_count() == 0);
  CHECK(maxcut_opt(zero) == Rat(0));
  MPoly f = maxcut_objective(zero);
  CHECK(f.is_zero());

  MaxCutInstance full = maxcut_gen(6, Rat(0), 5);
  CHECK(full.edge_count() == 15);
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = i + 1; j < 6; ++j) {
      CHECK(full.weight(i, j) > 0);
      CHECK(full.weight(i, j) <= 1);
    }
}

TEST_CASE("maxcut edge count concentrates at the binomial expectation") {
  // n = 8, p = 1/2: 28 pairs, expectation 14, sd = sqrt(28)/2 ~ 2.65.
  double total = 0;
  const int reps = 50;
  for (int s = 0; s < reps; ++s) total += maxcut_gen(8, Rat(1, 2), 1000 + s).edge_count();
  double mean = total / reps;
  CHECK(std::abs(mean - 14.0) < 3 * 2.65 / std::sqrt(double(reps)));
}

TEST_CASE("single edge instance has optimum 1, attained as a box maximum") {
  MaxCutInstance inst;
  inst.n = 2;
  inst.p = Rat(0);
  inst.upper = {Rat(1)};
  CHECK(maxcut_opt(inst) == Rat(1));
  // convexity: the box maximum over random points never exceeds the vertex max
  MPoly f = maxcut_objective(inst);
  SplitMix64 g(9);
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<double> pt{2 * u01(g) - 1, 2 * u01(g) - 1};
    CHECK(f.eval(std::span<const double>(pt)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("random instance: vertex enumeration dominates sampled box values") {
  MaxCutInstance inst = maxcut_gen(8, Rat(1, 2), 77);
  Rat opt = maxcut_opt(inst);
  MPoly f = maxcut_objective(inst);
  SplitMix64 g(78);
  double opt_d = opt.get_d();
  for (int rep = 0; rep < 10000; ++rep) {
    std::vector<double> pt(8);
    for (auto& c : pt) c = 2 * u01(g) - 1;
    CHECK(f.eval(std::span<const double>(pt)) <= opt_d + 1e-9);
  }
}

TEST_CASE("maxcut bounds at r=0 equal the box average and never exceed OPT") {
  MaxCutInstance inst = maxcut_gen(8, Rat(1, 2), 99);
  auto rows = maxcut_bounds(inst, 2, 2);
  MPoly f = maxcut_objective(inst);
  Rat mean = poly_moment(box_domain(8), f);
  CHECK(abs(rows[0].pfm - HFloat(mean)) < HFloat(1e-40));
  REQUIRE(rows[0].full.has_value());
  CHECK(abs(*rows[0].full - HFloat(mean)) < HFloat(1e-40));

  Rat opt = maxcut_opt(inst);
  HFloat prev_full, prev_pfm;
  bool first = true;
  for (const auto& row : rows) {
    CHECK(row.pfm <= HFloat(opt) + HFloat(1e-10));
    CHECK(*row.full <= HFloat(opt) + HFloat(1e-10));
    if (!first) {
      CHECK(row.pfm >= prev_pfm - HFloat(1e-12));
      CHECK(*row.full >= prev_full - HFloat(1e-12));
    }
    prev_full = *row.full;
    prev_pfm = row.pfm;
    first = false;
  }
}

TEST_CASE("csv output is deterministic for a fixed seed and precision") {
  MaxCutInstance inst = maxcut_gen(8, Rat(1, 2), 123);
  auto rows = maxcut_bounds(inst, 1, 1);
  std::ostringstream a, b;
  write_maxcut_bounds_csv(a, inst, rows, maxcut_opt(inst));
  write_maxcut_bounds_csv(b, inst, rows, maxcut_opt(inst));
  CHECK(a.str() == b.str());
  CHECK(a.str().find("generator=splitmix64") != std::string::npos);
  CHECK(a.str().find("precision=") != std::string::npos);
}

TEST_CASE("comparison rows satisfy the chain inequality data invariants") {
  auto rows = comparison_ratios(2);
  for (const auto& row : rows) {
    CHECK(row.rho > HFloat(0L));
    CHECK(row.pfm >= HFloat(0L) - HFloat(1e-12));  // all catalog minima are 0
    CHECK(row.full >= HFloat(0L) - HFloat(1e-12));
  }
  CHECK(rows.size() == 4 * 2 * 2);
}

TEST_CASE("selftest passes") {
  std::ostringstream sink;
  CHECK(run_selftest(sink) == 0);
}

TEST_SUITE_END();
