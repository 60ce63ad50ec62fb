#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "polybound/mpoly.hpp"

namespace polybound {

// Constraint x_bounded <= exp(-1 / x_cap); the one non-polynomial boundary
// shape supported (an exponential cusp). For x_cap <= 0 the right side is
// taken as 0.
struct ExpAtom {
  unsigned cap_var = 0;
  unsigned bounded_var = 0;
};

// Semialgebraic membership test: all polynomial constraints g(x) >= 0, all
// exp atoms satisfied, and x inside the bounding box.
struct RegionSpec {
  unsigned nvars = 0;
  std::vector<MPoly> poly_constraints;
  std::vector<ExpAtom> exp_atoms;
  std::vector<std::pair<double, double>> bbox;

  bool contains(std::span<const double> x) const;
  bool anchor_in_bbox(std::span<const double> x) const;
};

// Text format:
//   nvars N
//   bbox lo1 hi1 lo2 hi2 ...
//   poly <one-line polynomial: terms separated by ';', each "num/den e1 .. eN">
//   exp_atom cap_var bounded_var
RegionSpec region_from_text(std::istream& in);
RegionSpec region_from_text(const std::string& text);

// Prebuilt regions: the parabolic-cusp and exponential-cusp examples plus the
// plain unit box.
RegionSpec region_parabolic_cusp();
RegionSpec region_exponential_cusp();
RegionSpec region_unit_box(unsigned n);

struct VolumeEstimate {
  double delta = 0;
  double fraction = 0;  // vol(K cap B_delta(x)) / vol(B_delta)
  double stderr_ = 0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

// Unbiased Monte-Carlo estimate with uniform ball sampling; deterministic
// given the seed (batches use derived streams).
VolumeEstimate local_volume(const RegionSpec& region, std::span<const double> x, double delta,
                            std::uint64_t samples, std::uint64_t seed);

struct GrowthFit {
  std::vector<VolumeEstimate> estimates;  // one per ladder entry
  double exponent = 0;                    // fitted slope of log vol vs log delta
  double intercept = 0;
  double residual_rms = 0;
  unsigned points_used = 0;
  bool divergence_flag = false;           // exponential-cusp signature
  std::vector<double> pair_slopes;        // successive two-point slopes
};

// Least-squares fit of log(vol(K cap B_delta(x))) against log(delta) over a
// decreasing ladder of radii. Entries with relative stderr >= 20% are left out
// of the fit. Divergence is flagged when the local slopes keep growing as
// delta shrinks or the volume vanishes under the sampler's resolution.
GrowthFit growth_exponent(const RegionSpec& region, std::span<const double> x,
                          std::span<const double> ladder, std::uint64_t samples,
                          std::uint64_t seed);

double ball_volume(unsigned n);  // vol of the unit n-ball

void write_growth_csv(std::ostream& os, const GrowthFit& fit, std::uint64_t samples,
                      std::uint64_t seed);

}  // namespace polybound
