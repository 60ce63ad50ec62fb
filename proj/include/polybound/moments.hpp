#pragma once

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "polybound/mpoly.hpp"
#include "polybound/rational.hpp"

namespace polybound {

enum class DomainKind { Box, Ball };

// Box is [-1,1]^n, Ball the closed unit Euclidean ball; both carry the uniform
// probability measure (Lebesgue normalized by volume), which keeps every
// moment an exact rational.
struct Domain {
  DomainKind kind;
  unsigned nvars;
};

inline Domain box_domain(unsigned n) { return {DomainKind::Box, n}; }
inline Domain ball_domain(unsigned n) { return {DomainKind::Ball, n}; }

// E[x^alpha]; zero when any entry of alpha is odd.
Rat monomial_moment(const Domain& domain, const Exponents& alpha);

// E[p] by linearity.
Rat poly_moment(const Domain& domain, const MPoly& p);

// Exact moment sequence of the push-forward of the domain measure by f:
// values[k] = E[f^k], k = 0..order. values[0] = 1.
struct MomentSeq {
  std::vector<Rat> values;
  MPoly f;
  Domain domain;

  unsigned order() const { return static_cast<unsigned>(values.size()) - 1; }
};

MomentSeq pushforward_moments(const Domain& domain, const MPoly& f, unsigned order);

// E[T_j(l(f(x)))] for j = 0..order, where T_j is the Chebyshev polynomial of
// the first kind and l maps [lo,hi] onto [-1,1]. Requires lo < hi.
std::vector<Rat> modified_moments(const Domain& domain, const MPoly& f, const Rat& lo,
                                  const Rat& hi, unsigned order);

// Same, derived from already-computed power moments (values[k] = E[f^k]).
std::vector<Rat> modified_moments_from_powers(std::span<const Rat> power_moments, const Rat& lo,
                                              const Rat& hi, unsigned order);

// Crude interval enclosure of f over the domain from per-monomial ranges.
// Guarantees lo <= f(x) <= hi on the domain; tightness is not attempted.
std::pair<Rat, Rat> range_enclosure(const Domain& domain, const MPoly& f);

// Exact positive-definiteness of the Hankel matrix (m_{i+j}), i,j = 0..r,
// via rational LDL^T pivots.
bool hankel_positive_definite(std::span<const Rat> moments, unsigned r);

// CSV rows "k,num,den".
void write_moments_csv(std::ostream& os, const MomentSeq& seq);

}  // namespace polybound
