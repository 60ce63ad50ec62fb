#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polybound/hfloat.hpp"
#include "polybound/hierarchy.hpp"
#include "polybound/maxcut.hpp"
#include "polybound/testfunctions.hpp"

namespace polybound {

// (pfm gap) / (full gap) at matched order; throws DenominatorZero when the
// full bound already sits at f_min to working tolerance.
HFloat rho_gap_ratio(const HFloat& full_value, const HFloat& pfm_value, const Rat& f_min);

HFloat rho_ratio(const TestFunction& fn, const Domain& domain, unsigned r,
                 const EigOptions& opts = {});

struct RhoRow {
  std::string fn;
  std::string domain;  // "box" | "ball"
  unsigned r = 0;
  HFloat full;
  HFloat pfm;
  HFloat rho;
};

// Catalog functions on box and ball, r = 1..r_max; one shared moment
// computation and one shared matrix assembly per (function, domain).
std::vector<RhoRow> comparison_ratios(unsigned r_max, const EigOptions& opts = {});

struct EvenPowerRow {
  unsigned k = 0;
  unsigned r = 0;
  HFloat full;
  HFloat pfm;
  HFloat rho;
};

// f(x) = x^(2k) on [-1,1], k = 1..k_max, r = 1..r_max.
std::vector<EvenPowerRow> even_power_ratios(unsigned r_max, unsigned k_max = 5,
                                            const EigOptions& opts = {});

void write_comparison_csv(std::ostream& os, const std::vector<RhoRow>& rows);
void write_even_power_csv(std::ostream& os, const std::vector<EvenPowerRow>& rows);
void write_maxcut_bounds_csv(std::ostream& os, const MaxCutInstance& inst,
                             const std::vector<MaxCutBoundsRow>& rows, const Rat& opt);
void write_ratio_table_csv(std::ostream& os, const Rat& p, unsigned count, std::uint64_t seed,
                           const std::vector<RatioRow>& rows);

// Quick end-to-end smoke checks; prints one pass/fail line each, returns the
// number of failures.
int run_selftest(std::ostream& os);

}  // namespace polybound
