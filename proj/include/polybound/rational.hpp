#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace polybound {

// Exact arbitrary-precision integers and rationals. mpq_class keeps values
// canonical (lowest terms, positive denominator) through arithmetic; the only
// care needed is calling canonicalize() after raw num/den construction, which
// the helpers below do.
using Int = mpz_class;
using Rat = mpq_class;

Rat rat(long num, long den = 1);

// q^k for k >= 0.
Rat rat_pow(const Rat& q, unsigned long k);

Int binomial(unsigned long n, unsigned long k);
Int factorial(unsigned long n);

// "num" or "num/den", canonical form.
std::string rat_str(const Rat& q);

// Accepts "num", "num/den", and decimal literals like "-0.25".
std::optional<Rat> rat_parse(std::string_view text);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace polybound
