#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "polybound/hfloat.hpp"
#include "polybound/linalg.hpp"
#include "polybound/rational.hpp"

namespace polybound {

// Orthonormal three-term recurrence
//   t p_j = beta_{j+1} p_{j+1} + alpha_j p_j + beta_j p_{j-1},
// so the degree-m Jacobi matrix is tridiag(beta, alpha, beta) and its
// eigenvalues are the roots of p_m. beta[j] > 0 for j >= 1; beta[0] holds
// sqrt of the total mass (1 for probability measures).
struct Recurrence3 {
  std::vector<HFloat> alpha;
  std::vector<HFloat> beta;
  // Monic-convention exact coefficients when the recurrence came from exact
  // moments: beta_sq[j] is the square of the orthonormal off-diagonal.
  std::optional<std::vector<Rat>> exact_alpha;
  std::optional<std::vector<Rat>> exact_beta_sq;

  unsigned length() const { return static_cast<unsigned>(alpha.size()); }
};

// Weight (1-x)^a (1+x)^b on [-1,1]; requires a, b > -1.
struct JacobiParams {
  Rat a;
  Rat b;
};

// Closed-form recurrence coefficients of the orthonormal Jacobi family.
// a = b = 0 is Legendre.
Recurrence3 jacobi_recurrence(const JacobiParams& params, unsigned n);
Recurrence3 legendre_recurrence(unsigned n);

// Affine change of variable [-1,1] -> [lo,hi].
Recurrence3 map_to_interval(const Recurrence3& rec, const Rat& lo, const Rat& hi);

// Smallest eigenvalue of the degree x degree Jacobi matrix (= smallest root
// of p_degree), by Sturm-count bisection.
HFloat smallest_root(const Recurrence3& rec, unsigned degree);

// i-th smallest eigenvalue (0-based), same machinery.
HFloat tridiag_root(const Recurrence3& rec, unsigned degree, unsigned index);

// Smallest eigenvalue plus a unit eigenvector (inverse iteration).
EigResult tridiag_eig_min(const Recurrence3& rec, unsigned degree);

// Moment-to-recurrence transcription: from the exact modified moments
// E[T_j(l(t))], j = 0..2n-1, of a measure supported inside [lo,hi], produce
// the first n orthonormal recurrence coefficients of that measure. Runs in
// exact rational arithmetic; throws BreakdownNonPositiveBeta when the
// underlying measure has fewer than n support points (or the moments are
// inconsistent).
Recurrence3 modified_chebyshev(std::span<const Rat> cheb_moments, const Rat& lo, const Rat& hi,
                               unsigned n);

// Smallest root of the orthonormal family of the push-forward of the uniform
// measure on [-1,1] under x -> x^(2k); a Jacobi family on [0,1] in disguise.
HFloat even_power_pushforward_root(unsigned k, unsigned r);

// Values p_0(x) .. p_{m-1}(x) of the orthonormal family.
std::vector<HFloat> orthonormal_values(const Recurrence3& rec, unsigned m, const HFloat& x);

// Power-basis coefficients of p_0 .. p_{m-1} (row i has i+1 coefficients).
std::vector<std::vector<HFloat>> orthonormal_coeffs(const Recurrence3& rec, unsigned m);

struct Quadrature {
  std::vector<HFloat> nodes;
  std::vector<HFloat> weights;  // sums to 1 (probability normalization)
};

// Gauss-Legendre rule with m nodes on [-1,1] for the uniform probability
// measure; exact for polynomials of degree <= 2m-1.
Quadrature gauss_legendre(unsigned m);

// CSV rows "j,alpha,beta".
void write_recurrence_csv(std::ostream& os, const Recurrence3& rec);

}  // namespace polybound
