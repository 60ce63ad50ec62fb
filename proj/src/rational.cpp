#include "polybound/rational.hpp"

#include <cctype>

namespace polybound {

Rat rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_pow(const Rat& q, unsigned long k) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), k);
  // num/den already coprime, so the power is canonical.
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> rat_parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  std::string s(text);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // decimal literal: shift the point into an explicit power-of-ten denominator
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") return std::nullopt;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i == 0 && (digits[i] == '-' || digits[i] == '+')) continue;
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) return std::nullopt;
    }
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), digits.c_str(), 10) != 0) return std::nullopt;
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    q /= Rat(den);
    q.canonicalize();
    return q;
  }

  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

}  // namespace polybound
