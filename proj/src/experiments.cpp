#include "polybound/experiments.hpp"

#include <ostream>

#include "polybound/errors.hpp"
#include "polybound/needle.hpp"
#include "polybound/orthopoly.hpp"

namespace polybound {

HFloat rho_gap_ratio(const HFloat& full_value, const HFloat& pfm_value, const Rat& f_min) {
  const mpfr_prec_t p = HFloat::default_precision();
  HFloat fm(f_min, p);
  HFloat den = full_value - fm;
  HFloat scale = max(abs(full_value), max(abs(fm), HFloat(1L, p)));
  if (abs(den) <= scale * HFloat::two_pow(-p / 2, p))
    throw DenominatorZero("full bound equals f_min to tolerance");
  return (pfm_value - fm) / den;
}

HFloat rho_ratio(const TestFunction& fn, const Domain& domain, unsigned r,
                 const EigOptions& opts) {
  HFloat full = upper_bound_full(fn.poly, domain, r, opts).value;
  HFloat pfm = upper_bound_pfm(fn.poly, domain, r, Method::PfmHankel, opts).value;
  return rho_gap_ratio(full, pfm, fn.f_min);
}

std::vector<RhoRow> comparison_ratios(unsigned r_max, const EigOptions& opts) {
  std::vector<RhoRow> rows;
  for (const auto& name : test_function_names()) {
    TestFunction fn = test_function(name);
    for (DomainKind kind : {DomainKind::Box, DomainKind::Ball}) {
      Domain domain{kind, 2};
      MomentSeq seq = pushforward_moments(domain, fn.poly, 2 * r_max + 1);
      auto [A, B] = full_bound_pair(fn.poly, domain, r_max);
      for (unsigned r = 1; r <= r_max; ++r) {
        unsigned m = static_cast<unsigned>(monomial_basis(2, r).size());
        EigResult full = gen_eig_min(leading_submatrix(A, m), leading_submatrix(B, m), opts);
        BoundResult pfm = pfm_from_moments(seq, r, Method::PfmHankel, opts);
        RhoRow row;
        row.fn = name;
        row.domain = kind == DomainKind::Box ? "box" : "ball";
        row.r = r;
        row.full = full.value;
        row.pfm = pfm.value;
        row.rho = rho_gap_ratio(full.value, pfm.value, fn.f_min);
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<EvenPowerRow> even_power_ratios(unsigned r_max, unsigned k_max,
                                            const EigOptions& opts) {
  std::vector<EvenPowerRow> rows;
  Domain domain = box_domain(1);
  for (unsigned k = 1; k <= k_max; ++k) {
    MPoly f = MPoly::variable(1, 0, 2 * k);
    MomentSeq seq = pushforward_moments(domain, f, 2 * r_max + 1);
    auto [A, B] = full_bound_pair(f, domain, r_max);
    for (unsigned r = 1; r <= r_max; ++r) {
      EigResult full = gen_eig_min(leading_submatrix(A, r + 1), leading_submatrix(B, r + 1), opts);
      BoundResult pfm = pfm_from_moments(seq, r, Method::PfmHankel, opts);
      EvenPowerRow row;
      row.k = k;
      row.r = r;
      row.full = full.value;
      row.pfm = pfm.value;
      row.rho = rho_gap_ratio(full.value, pfm.value, Rat(0));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

void csv_header(std::ostream& os, const char* schema) {
  os << "# polybound " << schema << " precision=" << HFloat::default_precision() << "\n";
}

}  // namespace

void write_comparison_csv(std::ostream& os, const std::vector<RhoRow>& rows) {
  csv_header(os, "schema=compare-v1");
  os << "fn,domain,r,full,pfm,rho\n";
  for (const auto& row : rows)
    os << row.fn << ',' << row.domain << ',' << row.r << ',' << row.full.str() << ','
       << row.pfm.str() << ',' << row.rho.str() << '\n';
}

void write_even_power_csv(std::ostream& os, const std::vector<EvenPowerRow>& rows) {
  csv_header(os, "schema=even-power-v1");
  os << "k,r,full,pfm,rho\n";
  for (const auto& row : rows)
    os << row.k << ',' << row.r << ',' << row.full.str() << ',' << row.pfm.str() << ','
       << row.rho.str() << '\n';
}

void write_maxcut_bounds_csv(std::ostream& os, const MaxCutInstance& inst,
                             const std::vector<MaxCutBoundsRow>& rows, const Rat& opt) {
  os << "# polybound schema=maxcut-bounds-v1 generator=splitmix64 seed=" << inst.seed
     << " n=" << inst.n << " p=" << rat_str(inst.p)
     << " precision=" << HFloat::default_precision() << " sense=max(-min(-f))\n";
  os << "r,full,pfm,opt\n";
  for (const auto& row : rows) {
    os << row.r << ',';
    if (row.full) os << row.full->str();
    os << ',' << row.pfm.str() << ',' << Rat(opt).get_d() << '\n';
  }
}

void write_ratio_table_csv(std::ostream& os, const Rat& p, unsigned count, std::uint64_t seed,
                           const std::vector<RatioRow>& rows) {
  os << "# polybound schema=maxcut-ratios-v1 generator=splitmix64 seed=" << seed
     << " p=" << rat_str(p) << " count=" << count
     << " precision=" << HFloat::default_precision() << " sense=max(-min(-f))\n";
  os << "r,ratio,ratio_pfm,instances,skipped\n";
  char buf[64];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g", row.ratio, row.ratio_pfm);
    os << row.r << ',' << buf << ',' << row.instances << ',' << row.skipped << '\n';
  }
}

int run_selftest(std::ostream& os) {
  int failures = 0;
  auto check = [&](bool ok, const char* what) {
    os << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  };

  try {
    // exact moments
    MPoly x2 = MPoly::variable(1, 0, 2);
    check(poly_moment(box_domain(1), x2) == Rat(1, 3), "box moment of x^2 is 1/3");
    check(monomial_moment(ball_domain(2), {2, 0}) == Rat(1, 4), "ball moment of x1^2 is 1/4");

    // full bound for f(x) = x at r = 1 equals the smallest degree-2 root
    MPoly xx = MPoly::variable(1, 0);
    HFloat full = upper_bound_full(xx, box_domain(1), 1).value;
    HFloat root = smallest_root(legendre_recurrence(2), 2);
    check(abs(full - root) < HFloat(1e-20), "full bound matches orthogonal-root oracle");

    // both pfm routes agree with the closed Jacobi form for x^2
    HFloat pfm = upper_bound_pfm(x2, box_domain(1), 4, Method::PfmHankel).value;
    HFloat cheb = upper_bound_pfm(x2, box_domain(1), 4, Method::PfmChebyshev).value;
    HFloat ref = even_power_pushforward_root(1, 4);
    check(abs(pfm - ref) < HFloat(1e-12) && abs(cheb - ref) < HFloat(1e-12),
          "pfm routes agree with the Jacobi-root reference");

    // needle basics
    NeedleParams np{5, Rat(1, 4)};
    auto report = verify_needle(build_needle(np), np, 2000);
    check(report.passed(), "needle certificate properties hold");

    // single-edge maxcut
    MaxCutInstance inst;
    inst.n = 2;
    inst.p = Rat(0);
    inst.upper = {Rat(1)};
    check(maxcut_opt(inst) == Rat(1), "single-edge maxcut optimum is 1");
  } catch (const std::exception& e) {
    os << "[FAIL] exception: " << e.what() << "\n";
    ++failures;
  }
  return failures;
}

}  // namespace polybound
