#include "polybound/upoly.hpp"

namespace polybound {

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rat& c) { return UPoly({c}); }

UPoly UPoly::identity() { return UPoly({Rat(0), Rat(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rat> out(a.degree() + b.degree() + 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UPoly(std::move(out));
}

UPoly& UPoly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Rat UPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

HFloat UPoly::eval(const HFloat& t) const {
  HFloat acc(0L, t.precision());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + HFloat(*it, t.precision());
  return acc;
}

UPoly affine_substitute(const UPoly& s, const Rat& a, const Rat& b) {
  // Horner: s(a t + b)
  UPoly lin({b, a});
  UPoly acc;
  for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it)
    acc = acc * lin + UPoly::constant(*it);
  return acc;
}

MPoly compose(const UPoly& s, const MPoly& f) {
  MPoly acc(f.nvars());
  for (auto it = s.coeffs().rbegin(); it != s.coeffs().rend(); ++it) {
    acc = acc * f;
    acc += MPoly::constant(f.nvars(), *it);
  }
  return acc;
}

std::vector<UPoly> chebyshev_family(unsigned n) {
  return chebyshev_family_mapped(n, Rat(1), Rat(0));
}

std::vector<UPoly> chebyshev_family_mapped(unsigned n, const Rat& a, const Rat& b) {
  std::vector<UPoly> fam;
  fam.reserve(n + 1);
  UPoly ell({b, a});
  fam.push_back(UPoly::constant(Rat(1)));
  if (n == 0) return fam;
  fam.push_back(ell);
  UPoly two_ell = ell * Rat(2);
  for (unsigned j = 2; j <= n; ++j) fam.push_back(two_ell * fam[j - 1] - fam[j - 2]);
  return fam;
}

}  // namespace polybound
