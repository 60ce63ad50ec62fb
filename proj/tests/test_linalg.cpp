#include <doctest.h>

#include <vector>

#include "polybound/errors.hpp"
#include "polybound/linalg.hpp"
#include "polybound/moments.hpp"
#include "polybound/rng.hpp"
#include "polybound/upoly.hpp"

using namespace polybound;

namespace {

// ---- exact characteristic-polynomial oracle (test-only) -------------------

// Faddeev-LeVerrier over rationals: coefficients of det(lambda I - A).
std::vector<Rat> charpoly(const std::vector<std::vector<Rat>>& A) {
  const std::size_t n = A.size();
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = Rat(1);
  for (std::size_t i = 0; i < n; ++i) M[i][i] = Rat(1);
  std::vector<std::vector<Rat>> AM(n, std::vector<Rat>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rat acc(0);
        for (std::size_t l = 0; l < n; ++l) acc += A[i][l] * M[l][j];
        AM[i][j] = acc;
      }
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += AM[i][i];
    Rat ck = -tr / long(k);
    c[n - k] = ck;
    M = AM;
    for (std::size_t i = 0; i < n; ++i) M[i][i] += ck;
  }
  return c;  // c[0] + c[1] x + ... + c[n] x^n
}

UPoly derivative(const UPoly& p) {
  if (p.degree() == 0) return UPoly();
  std::vector<Rat> out;
  for (unsigned i = 1; i <= p.degree(); ++i) out.push_back(p.coeff(i) * long(i));
  return UPoly(std::move(out));
}

UPoly poly_rem(UPoly a, const UPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree() && !b.is_zero()) {
    Rat factor = a.coeff(a.degree()) / b.coeff(b.degree());
    unsigned shift = a.degree() - b.degree();
    std::vector<Rat> sub(shift, Rat(0));
    sub.push_back(factor);
    a -= b * UPoly(std::move(sub));
    if (a.degree() == 0 && a.coeff(0) == 0) break;
  }
  return a;
}

// Sign changes of the Sturm chain at t.
unsigned sturm_changes(const std::vector<UPoly>& chain, const Rat& t) {
  unsigned changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    Rat v = p.eval(t);
    int sgn = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (sgn != 0) {
      if (prev != 0 && sgn != prev) ++changes;
      prev = sgn;
    }
  }
  return changes;
}

// Smallest root of p in (lo, hi], isolated to the given width, all exact.
Rat smallest_real_root(const UPoly& p, Rat lo, Rat hi, const Rat& width) {
  std::vector<UPoly> chain{p, derivative(p)};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(r * Rat(-1));
  }
  auto count_upto = [&](const Rat& t) { return sturm_changes(chain, lo) - sturm_changes(chain, t); };
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    if (count_upto(mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2;
}

SymMatQ hilbert(unsigned n) {
  SymMatQ H(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j <= i; ++j) H.at(i, j) = Rat(1, i + j + 1);
  return H;
}

HFloat tol_bits(int bits) { return HFloat::two_pow(bits); }

}  // namespace

TEST_SUITE_BEGIN("linalg");

TEST_CASE("cholesky of the identity is the identity") {
  SymMat I(3);
  for (unsigned i = 0; i < 3; ++i) I.at(i, i) = HFloat(1L);
  LowerTri L = cholesky(I);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j <= i; ++j) CHECK(L.at(i, j) == HFloat(i == j ? 1L : 0L));
}

TEST_CASE("cholesky hand factorization of [[4,2],[2,2]]") {
  SymMatQ B(2);
  B.at(0, 0) = 4;
  B.at(1, 0) = 2;
  B.at(1, 1) = 2;
  LowerTri L = cholesky(SymMat::from_exact(B));
  CHECK(abs(L.at(0, 0) - HFloat(2L)) < tol_bits(-200));
  CHECK(abs(L.at(1, 0) - HFloat(1L)) < tol_bits(-200));
  CHECK(abs(L.at(1, 1) - HFloat(1L)) < tol_bits(-200));
}

TEST_CASE("Hankel matrix of x^2-pushforward moments factors with positive pivots") {
  auto seq = pushforward_moments(box_domain(1), MPoly::variable(1, 0, 2), 10);
  SymMatQ H(6);
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j <= i; ++j) H.at(i, j) = seq.values[i + j];
  // exact rational leading-minor oracle
  auto pivots = ldlt_pivots_exact(H);
  REQUIRE(pivots.size() == 6);
  for (const auto& d : pivots) CHECK(d > 0);
  CHECK_NOTHROW(cholesky(SymMat::from_exact(H)));
}

TEST_CASE("degenerate (finite-support) moment matrix is rejected") {
  SymMatQ ones(3);
  for (unsigned i = 0; i < 3; ++i)
    for (unsigned j = 0; j <= i; ++j) ones.at(i, j) = 1;
  CHECK_THROWS_AS(cholesky(SymMat::from_exact(ones)), NotPositiveDefinite);
  CHECK_FALSE(positive_definite_exact(ones));
}

TEST_CASE("sym_eig_min on diagonal(3,1,2) returns 1 and e2") {
  SymMat S(3);
  S.at(0, 0) = HFloat(3L);
  S.at(1, 1) = HFloat(1L);
  S.at(2, 2) = HFloat(2L);
  auto [val, vec] = sym_eig_min(S);
  CHECK(abs(val - HFloat(1L)) < tol_bits(-120));
  CHECK(abs(vec[1] - HFloat(1L)) < tol_bits(-120));
  CHECK(abs(vec[0]) < tol_bits(-120));
  CHECK(abs(vec[2]) < tol_bits(-120));
}

TEST_CASE("sym_eig_min of the exchange matrix is -1") {
  SymMat S(2);
  S.at(1, 0) = HFloat(1L);
  auto [val, vec] = sym_eig_min(S);
  CHECK(abs(val + HFloat(1L)) < tol_bits(-120));
}

TEST_CASE("5x5 Hilbert smallest eigenvalue matches the exact charpoly oracle") {
  SymMatQ Hq = hilbert(5);
  std::vector<std::vector<Rat>> dense(5, std::vector<Rat>(5));
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) dense[i][j] = Hq.at(i, j);
  UPoly chi(charpoly(dense));
  Rat oracle = smallest_real_root(chi, Rat(0), Rat(2), Rat(1, Int(1) << 120));

  auto [val, vec] = sym_eig_min(SymMat::from_exact(Hq));
  CHECK(abs(val - HFloat(oracle)) < HFloat(1e-20));
}

TEST_CASE("gen_eig_min with identity B reduces to sym_eig_min") {
  SymMatQ A(3), B(3);
  A.at(0, 0) = 3;
  A.at(1, 1) = -1;
  A.at(2, 2) = 2;
  A.at(2, 0) = Rat(1, 2);
  for (unsigned i = 0; i < 3; ++i) B.at(i, i) = 1;
  auto pencil = gen_eig_min(A, B);
  auto plain = sym_eig_min(SymMat::from_exact(A));
  CHECK(abs(pencil.value - plain.value) < tol_bits(-120));
}

TEST_CASE("diagonal pencil: A=diag(2,6), B=diag(1,2) gives 2") {
  SymMatQ A(2), B(2);
  A.at(0, 0) = 2;
  A.at(1, 1) = 6;
  B.at(0, 0) = 1;
  B.at(1, 1) = 2;
  auto r = gen_eig_min(A, B);
  CHECK(abs(r.value - HFloat(2L)) < tol_bits(-120));
}

TEST_CASE("Hankel pencil for f(x)=x at r=1 gives -1/sqrt(3)") {
  auto seq = pushforward_moments(box_domain(1), MPoly::variable(1, 0), 3);
  SymMatQ A(2), B(2);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j <= i; ++j) {
      A.at(i, j) = seq.values[i + j + 1];
      B.at(i, j) = seq.values[i + j];
    }
  auto r = gen_eig_min(A, B);
  HFloat expect = -HFloat(1L) / sqrt(HFloat(3L));
  CHECK(abs(r.value - expect) < tol_bits(-200));
  // eigenvector is B-normalized
  HFloat quad(0L);
  for (unsigned i = 0; i < 2; ++i)
    for (unsigned j = 0; j < 2; ++j) quad += r.vector[i] * HFloat(B.at(i, j)) * r.vector[j];
  CHECK(abs(quad - HFloat(1L)) < tol_bits(-120));
}

TEST_CASE("Rayleigh quotients of random vectors never undercut the smallest eigenvalue") {
  SplitMix64 g(71);
  SymMatQ A(5), B(5);
  for (unsigned i = 0; i < 5; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      A.at(i, j) = rat(long(g.next() % 21) - 10, 1 + long(g.next() % 5));
      B.at(i, j) = rat(long(g.next() % 9) - 4, 1 + long(g.next() % 5)) / 10;
    }
    B.at(i, i) = B.at(i, i) + 6;  // diagonally dominant, hence PD
  }
  auto r = gen_eig_min(A, B);
  SymMat Af = SymMat::from_exact(A), Bf = SymMat::from_exact(B);
  HFloat slack = abs(r.value) * tol_bits(-200) + tol_bits(-200);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<HFloat> v;
    for (unsigned i = 0; i < 5; ++i) v.emplace_back(double(g.next() % 1000) / 500.0 - 1.0);
    HFloat num(0L), den(0L);
    for (unsigned i = 0; i < 5; ++i)
      for (unsigned j = 0; j < 5; ++j) {
        num += v[i] * Af.at(i, j) * v[j];
        den += v[i] * Bf.at(i, j) * v[j];
      }
    if (den.is_zero()) continue;
    CHECK(num / den >= r.value - slack);
  }
  // equality at the returned eigenvector
  HFloat num(0L), den(0L);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) {
      num += r.vector[i] * Af.at(i, j) * r.vector[j];
      den += r.vector[i] * Bf.at(i, j) * r.vector[j];
    }
  CHECK(abs(num / den - r.value) < tol_bits(-100));
}

TEST_CASE("doubling precision moves the eigenvalue by less than 2^-100") {
  auto seq = pushforward_moments(box_domain(1), MPoly::variable(1, 0, 2), 21);
  SymMatQ A(10), B(10);
  for (unsigned i = 0; i < 10; ++i)
    for (unsigned j = 0; j <= i; ++j) {
      A.at(i, j) = seq.values[i + j + 1];
      B.at(i, j) = seq.values[i + j];
    }
  auto at256 = gen_eig_min(A, B);
  mpfr_prec_t saved = HFloat::default_precision();
  HFloat::set_default_precision(512);
  auto at512 = gen_eig_min(A, B);
  HFloat::set_default_precision(saved);
  CHECK(abs(at256.value.at_precision(512) - at512.value) < tol_bits(-100));
}

TEST_CASE("congruence scaling of the pencil leaves the eigenvalue fixed") {
  SymMatQ A(4), B(4);
  SplitMix64 g(77);
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      A.at(i, j) = rat(long(g.next() % 11) - 5, 1 + long(g.next() % 3));
      B.at(i, j) = rat(long(g.next() % 5) - 2, 3 + long(g.next() % 3)) / 7;
    }
    B.at(i, i) = B.at(i, i) + 4;
  }
  auto base = gen_eig_min(A, B);
  Rat c(7, 3);
  SymMatQ As(4), Bs(4);
  for (unsigned i = 0; i < 4; ++i)
    for (unsigned j = 0; j <= i; ++j) {
      As.at(i, j) = A.at(i, j) * c;
      Bs.at(i, j) = B.at(i, j) * c;
    }
  auto scaled = gen_eig_min(As, Bs);
  CHECK(abs(base.value - scaled.value) < tol_bits(-150));
}

TEST_CASE("seeded large-order path agrees with the Jacobi path") {
  // Random diagonally dominant pencil, solved both ways.
  const unsigned n = 60;
  SplitMix64 g(123);
  SymMatQ A(n), B(n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      A.at(i, j) = rat(long(g.next() % 41) - 20, 1 + long(g.next() % 4));
      B.at(i, j) = rat(long(g.next() % 9) - 4, 20);
    }
    B.at(i, i) = B.at(i, i) + long(n);
  }
  EigOptions seeded;
  seeded.jacobi_size_limit = 10;  // force the seeded path
  EigOptions jacobi;
  jacobi.jacobi_size_limit = 100;  // force the Jacobi path
  auto rs = gen_eig_min(A, B, seeded);
  auto rj = gen_eig_min(A, B, jacobi);
  HFloat scale = max(HFloat(1L), abs(rj.value));
  CHECK(abs(rs.value - rj.value) / scale < tol_bits(-100));
}

TEST_SUITE_END();
