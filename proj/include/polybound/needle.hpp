#pragma once

#include <optional>
#include <utility>

#include "polybound/hfloat.hpp"
#include "polybound/moments.hpp"
#include "polybound/mpoly.hpp"
#include "polybound/upoly.hpp"

namespace polybound {

// Half-needle on [0,1] with peak at t = 0.
struct NeedleParams {
  unsigned r = 1;   // needle degree parameter; the polynomial has degree 2r
  Rat h;            // decay threshold, 0 < h < 1
};

// The degree-r square root w with w(0) = 1; the needle itself is w^2.
UPoly build_needle_sqrt(const NeedleParams& params);

// Perfect square of degree 2r with exact rational coefficients:
//   v(0) = 1,  0 <= v <= 1 on [0,1],  v <= 4 exp(-r sqrt(h)/2) on [h,1].
UPoly build_needle(const NeedleParams& params);

struct NeedleReport {
  bool value_at_zero_ok = false;
  bool range_ok = false;           // 0 <= v <= 1 on the grid
  bool decay_ok = false;           // v <= 4 exp(-r sqrt(h)/2) on the [h,1] part
  HFloat max_on_tail;
  HFloat decay_bound;
  Rat near_peak_radius;            // largest dyadic <= 1/(64 r^2) with v >= 1/2 there
  bool near_peak_ok = false;
  unsigned grid_size = 0;

  bool passed() const { return value_at_zero_ok && range_ok && decay_ok && near_peak_ok; }
};

NeedleReport verify_needle(const UPoly& v, const NeedleParams& params, unsigned grid_size);

struct CertificateReport {
  unsigned r = 0;
  Rat h_used;
  HFloat numerator;    // E[F * v(F)]
  HFloat denominator;  // E[v(F)]
  HFloat ratio;
  HFloat bound;        // f_lo + (f_hi - f_lo) * ratio
  unsigned quad_points_per_axis = 0;
  HFloat quad_error;   // change under a higher-order rule
  bool degenerate_range = false;
  Rat f_lo, f_hi;      // enclosure used for the rescaling
};

// Upper bound on the order-r push-forward bound obtained by plugging the
// needle density into the program: rescale f to F with range inside [0,1],
// take v at a clamped decay threshold, and evaluate both integrals with a
// tensor Gauss-Legendre rule exact for the polynomial integrand. Box domains
// only. When no range is supplied it is found by dense grid search widened by
// a coefficient-based Lipschitz margin, so the enclosure is rigorous.
CertificateReport certificate_bound(const MPoly& f, const Domain& domain, unsigned r,
                                    std::optional<std::pair<Rat, Rat>> range = std::nullopt);

// The clamped decay threshold the certificate uses for given r and dimension.
Rat certificate_h(unsigned r, unsigned nvars);

}  // namespace polybound
