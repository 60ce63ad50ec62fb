#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "polybound/linalg.hpp"
#include "polybound/moments.hpp"
#include "polybound/mpoly.hpp"
#include "polybound/orthopoly.hpp"
#include "polybound/upoly.hpp"

namespace polybound {

enum class Method { Full, PfmHankel, PfmChebyshev };
const char* method_name(Method m);

// Graded-lex list of all monomials of degree <= maxdeg in nvars variables;
// the degree <= r monomials are a prefix of the degree <= r' list for r < r'.
std::vector<Exponents> monomial_basis(unsigned nvars, unsigned maxdeg);

struct BoundResult {
  HFloat value;
  unsigned r = 0;
  Method method = Method::Full;
  std::vector<HFloat> eigvec;

  // Basis bookkeeping, by method:
  std::vector<Exponents> monomials;  // Full: eigvec indexes these monomials
  std::vector<Rat> moments;          // Pfm*: E[f^k] power moments, k <= 2r+1
  Recurrence3 rec;                   // PfmChebyshev: eigvec is in this family
  Rat lo, hi;                        // PfmChebyshev support enclosure

  Domain domain{DomainKind::Box, 0};
  MPoly f;
};

// Localizing/Gram pair over the graded monomial basis of degree <= r, in
// exact rationals: A = (E[f b_a b_b]), B = (E[b_a b_b]).
std::pair<SymMatQ, SymMatQ> full_bound_pair(const MPoly& f, const Domain& domain, unsigned r);

// Smallest expected value of f under a degree-2r sum-of-squares probability
// density: min eigenvalue of the (A,B) pencil above. Matrix order C(n+r, r).
BoundResult upper_bound_full(const MPoly& f, const Domain& domain, unsigned r,
                             const EigOptions& opts = {});

// Univariate variant through the push-forward of the domain measure by f.
// PfmHankel solves the (m_{i+j+1}, m_{i+j}) pencil; PfmChebyshev goes through
// the moment-to-recurrence transcription and the smallest root of the
// orthonormal family. Both equal the smallest root of p_{r+1} for the
// push-forward measure.
BoundResult upper_bound_pfm(const MPoly& f, const Domain& domain, unsigned r,
                            Method method = Method::PfmHankel, const EigOptions& opts = {});

// Same bound from an already-computed moment sequence (needs order >= 2r+1);
// lets a sweep over r share one expensive moment computation.
BoundResult pfm_from_moments(const MomentSeq& seq, unsigned r,
                             Method method = Method::PfmHankel, const EigOptions& opts = {});

// Leading principal submatrix of order m (basis prefixes nest in graded order).
SymMatQ leading_submatrix(const SymMatQ& M, unsigned m);

// Optimal sum-of-squares density reconstructed from the minimizing
// eigenvector: density = normalization * q^2 with q's coefficients rounded to
// rationals (continued fraction, denominator cap 2^64) and the normalization
// recomputed exactly so the density integrates to 1.
struct DensityPoly {
  std::variant<MPoly, UPoly> q;
  Rat normalization;
  std::optional<MPoly> composed_q;  // pfm: q(f(x)), exact
  Domain domain{DomainKind::Box, 0};
};

DensityPoly optimal_density(const BoundResult& result);

// Exact density values norm * q(x)^2 at rational points.
std::vector<std::pair<std::vector<Rat>, Rat>> sample_density(
    const DensityPoly& density, std::span<const std::vector<Rat>> grid);

}  // namespace polybound
