#include "polybound/mpoly.hpp"

#include <atomic>
#include <cstdint>
#include <istream>
#include <sstream>
#include <unordered_map>

#include "polybound/errors.hpp"

namespace polybound {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (unsigned x : e) d += x;
  return d;
}

namespace {
std::atomic<std::size_t> g_term_budget{10'000'000};
}

std::size_t term_budget() { return g_term_budget.load(); }
void set_term_budget(std::size_t cap) { g_term_budget.store(cap); }

MPoly MPoly::constant(unsigned nvars, const Rat& c) {
  MPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(unsigned nvars, unsigned index, unsigned power) {
  if (index >= nvars) throw DimensionMismatch("variable index out of range");
  MPoly p(nvars);
  Exponents e(nvars, 0);
  e[index] = power;
  p.add_term(e, Rat(1));
  return p;
}

unsigned MPoly::degree() const {
  if (terms_.empty()) return 0;
  return total_degree(terms_.rbegin()->first);
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rat MPoly::constant_value() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != nvars_) throw DimensionMismatch("exponent vector length != nvars");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw DimensionMismatch("nvars mismatch in addition");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ != o.nvars_) throw DimensionMismatch("nvars mismatch in subtraction");
  for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rat(-c));
  return out;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

namespace {

// Exponent vectors with every entry < 256 and nvars <= 8 pack into a UInt64
// key, which makes the accumulation map in products substantially cheaper.
bool packable(unsigned nvars, unsigned max_exp_sum) {
  return nvars <= 8 && max_exp_sum < 256;
}

std::uint64_t pack_key(const Exponents& e) {
  std::uint64_t k = 0;
  for (unsigned i = 0; i < e.size(); ++i) k |= static_cast<std::uint64_t>(e[i]) << (8 * i);
  return k;
}

Exponents unpack_key(std::uint64_t k, unsigned nvars) {
  Exponents e(nvars);
  for (unsigned i = 0; i < nvars; ++i) e[i] = static_cast<unsigned>((k >> (8 * i)) & 0xff);
  return e;
}

}  // namespace

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("nvars mismatch in multiplication");
  const unsigned n = a.nvars();
  MPoly out(n);
  if (a.is_zero() || b.is_zero()) return out;

  const std::size_t budget = term_budget();

  if (packable(n, a.degree() + b.degree() + 1)) {
    std::unordered_map<std::uint64_t, Rat> acc;
    acc.reserve(a.term_count() * 2);
    Rat prod;
    for (const auto& [ea, ca] : a.terms()) {
      const std::uint64_t ka = pack_key(ea);
      for (const auto& [eb, cb] : b.terms()) {
        prod = ca * cb;
        auto [it, inserted] = acc.emplace(ka + pack_key(eb), prod);
        if (!inserted) it->second += prod;
        if (acc.size() > budget) throw TermBudgetExceeded("product exceeds term budget");
      }
    }
    for (auto& [k, c] : acc)
      if (c != 0) out.add_term(unpack_key(k, n), c);
    return out;
  }

  std::map<Exponents, Rat, GradedLexLess> acc;
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      for (unsigned i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = acc.emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
      if (acc.size() > budget) throw TermBudgetExceeded("product exceeds term budget");
    }
  }
  for (auto& [k, c] : acc)
    if (c != 0) out.add_term(k, c);
  return out;
}

Rat MPoly::eval(std::span<const Rat> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("point length != nvars");
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i] > 0) term *= rat_pow(point[i], e[i]);
    acc += term;
  }
  return acc;
}

HFloat MPoly::eval(std::span<const HFloat> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("point length != nvars");
  HFloat acc(0L);
  for (const auto& [e, c] : terms_) {
    HFloat term{c};
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i] > 0) term *= pow_int(point[i], e[i]);
    acc += term;
  }
  return acc;
}

double MPoly::eval(std::span<const double> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("point length != nvars");
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (unsigned i = 0; i < nvars_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

MPoly pow(const MPoly& p, unsigned k) {
  MPoly result = MPoly::constant(p.nvars(), Rat(1));
  if (k == 0) return result;
  MPoly base = p;
  unsigned e = k;
  while (true) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

std::string to_text(const MPoly& p) {
  std::ostringstream os;
  os << "# nvars=" << p.nvars() << " terms=" << p.term_count() << "\n";
  for (const auto& [e, c] : p.terms()) {
    os << rat_str(c);
    for (unsigned x : e) os << ' ' << x;
    os << '\n';
  }
  return os.str();
}

MPoly mpoly_from_text(std::istream& in) {
  std::vector<std::pair<Rat, Exponents>> rows;
  std::string line;
  unsigned nvars = 0;
  bool first = true;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string coeff_tok;
    if (!(ls >> coeff_tok)) continue;
    auto c = rat_parse(coeff_tok);
    if (!c) throw ParseError("bad coefficient: " + coeff_tok);
    Exponents e;
    long x;
    while (ls >> x) {
      if (x < 0) throw ParseError("negative exponent");
      e.push_back(static_cast<unsigned>(x));
    }
    if (!ls.eof()) throw ParseError("bad exponent token in: " + line);
    if (first) {
      nvars = static_cast<unsigned>(e.size());
      first = false;
    } else if (e.size() != nvars) {
      throw ParseError("inconsistent exponent count");
    }
    rows.emplace_back(*c, std::move(e));
  }
  MPoly p(nvars);
  for (auto& [c, e] : rows) p.add_term(e, c);
  return p;
}

MPoly mpoly_from_text(const std::string& text) {
  std::istringstream is(text);
  return mpoly_from_text(is);
}

}  // namespace polybound
