#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polybound/hfloat.hpp"
#include "polybound/linalg.hpp"
#include "polybound/mpoly.hpp"
#include "polybound/rational.hpp"

namespace polybound {

// Weighted graph instance: symmetric nonnegative weights, zero diagonal.
// Generation: each pair gets weight 0 with probability p, otherwise a 53-bit
// dyadic uniform from (0,1] (splitmix64 stream named in CSV headers).
struct MaxCutInstance {
  unsigned n = 0;
  std::vector<Rat> upper;  // pair (i<j) at index i*n - i(i+1)/2 + (j-i-1)
  Rat p;
  std::uint64_t seed = 0;

  const Rat& weight(unsigned i, unsigned j) const;
  unsigned edge_count() const;
};

MaxCutInstance maxcut_gen(unsigned n, const Rat& p, std::uint64_t seed);

// f(x) = 1/4 sum_{i<j} w_ij (x_i - x_j)^2, convex, so its box maximum sits at
// a hypercube vertex.
MPoly maxcut_objective(const MaxCutInstance& inst);

// Exact maximum over {-1,1}^n (2^(n-1) sign patterns); n <= 24.
Rat maxcut_opt(const MaxCutInstance& inst);

struct MaxCutBoundsRow {
  unsigned r = 0;
  std::optional<HFloat> full;  // maximization sense: lower bounds on OPT
  HFloat pfm;
};

// Bounds in maximization sense (-(bound of -f)) for r = 0..r_max; full-bound
// rows only up to full_r_max (the C(n+r, r) eigenproblem is the expensive part).
std::vector<MaxCutBoundsRow> maxcut_bounds(const MaxCutInstance& inst, unsigned r_max,
                                           unsigned full_r_max, const EigOptions& opts = {});

struct RatioRow {
  unsigned r = 0;
  double ratio = 0;       // mean of (OPT - full_r) / OPT
  double ratio_pfm = 0;   // mean of (OPT - pfm_r) / OPT
  unsigned instances = 0;
  unsigned skipped = 0;   // OPT == 0 instances
};

// Averages over `count` fresh instances (seeds derived from base_seed by
// instance index).
std::vector<RatioRow> maxcut_ratio_table(const Rat& p, unsigned count, unsigned n,
                                         std::vector<unsigned> r_values, std::uint64_t base_seed,
                                         const EigOptions& opts = {});

}  // namespace polybound
