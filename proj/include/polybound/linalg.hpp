#pragma once

#include <cstddef>
#include <vector>

#include "polybound/hfloat.hpp"
#include "polybound/rational.hpp"

namespace polybound {

// Dense symmetric matrix, lower triangle stored row-major:
// entry (i,j) with j <= i lives at i(i+1)/2 + j.
struct SymMatQ {
  unsigned n = 0;
  std::vector<Rat> tri;

  explicit SymMatQ(unsigned order) : n(order), tri(std::size_t(order) * (order + 1) / 2, Rat(0)) {}
  Rat& at(unsigned i, unsigned j) { return tri[idx(i, j)]; }
  const Rat& at(unsigned i, unsigned j) const { return tri[idx(i, j)]; }
  static std::size_t idx(unsigned i, unsigned j) {
    if (j > i) std::swap(i, j);
    return std::size_t(i) * (i + 1) / 2 + j;
  }
};

struct SymMat {
  unsigned n = 0;
  std::vector<HFloat> tri;

  explicit SymMat(unsigned order, mpfr_prec_t prec = 0);
  // The single rounding step: exact rational entries to HFloat, entry-wise.
  static SymMat from_exact(const SymMatQ& q, mpfr_prec_t prec = 0);
  HFloat& at(unsigned i, unsigned j) { return tri[SymMatQ::idx(i, j)]; }
  const HFloat& at(unsigned i, unsigned j) const { return tri[SymMatQ::idx(i, j)]; }
  mpfr_prec_t precision() const;
  HFloat frobenius_norm() const;
};

// Lower-triangular Cholesky factor.
struct LowerTri {
  unsigned n = 0;
  std::vector<HFloat> tri;  // same indexing as SymMatQ

  HFloat& at(unsigned i, unsigned j) { return tri[SymMatQ::idx(i, j)]; }
  const HFloat& at(unsigned i, unsigned j) const { return tri[SymMatQ::idx(i, j)]; }
  void solve_lower(std::vector<HFloat>& b) const;       // L y = b, in place
  void solve_transposed(std::vector<HFloat>& b) const;  // L^T x = b, in place
};

struct EigResult {
  HFloat value;
  std::vector<HFloat> vector;
};

// L with L L^T = B. Throws NotPositiveDefinite when a pivot falls at or below
// the precision floor, which signals a degenerate matrix (measure with finite
// support) or exhausted precision.
LowerTri cholesky(const SymMat& B);

// Smallest eigenvalue and unit eigenvector by cyclic Jacobi rotations,
// iterated until the off-diagonal Frobenius norm drops below
// ||S||_F * 2^(-precision/2). Throws NoConvergence after max_sweeps.
EigResult sym_eig_min(const SymMat& S, int max_sweeps = 100);

struct EigOptions {
  // Orders up to this bound use cholesky + sym_eig_min verbatim; larger
  // orders use a double-precision-seeded, inertia-certified shifted inverse
  // iteration with a Jacobi fallback (same residual contract).
  unsigned jacobi_size_limit = 80;
  int max_sweeps = 100;
};

// Smallest lambda with A v = lambda B v; eigenvector normalized v^T B v = 1.
EigResult gen_eig_min(const SymMat& A, const SymMat& B, const EigOptions& opts = {});

// Exact-assembly entry point: sizes the working precision from the exact LDL^T
// pivots of B for small orders, escalates precision on failure, and reports
// genuine (exact) indefiniteness as NotPositiveDefinite.
EigResult gen_eig_min(const SymMatQ& A, const SymMatQ& B, const EigOptions& opts = {});

// Exact LDL^T pivots; stops after the first nonpositive pivot (included).
std::vector<Rat> ldlt_pivots_exact(const SymMatQ& m);
bool positive_definite_exact(const SymMatQ& m);

}  // namespace polybound
