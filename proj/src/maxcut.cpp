#include "polybound/maxcut.hpp"

#include "polybound/errors.hpp"
#include "polybound/hierarchy.hpp"
#include "polybound/rng.hpp"

namespace polybound {

namespace {

std::size_t pair_index(unsigned n, unsigned i, unsigned j) {
  if (i > j) std::swap(i, j);
  return std::size_t(i) * n - std::size_t(i) * (i + 1) / 2 + (j - i - 1);
}

const Rat kZero(0);

}  // namespace

const Rat& MaxCutInstance::weight(unsigned i, unsigned j) const {
  if (i == j) return kZero;
  return upper[pair_index(n, i, j)];
}

unsigned MaxCutInstance::edge_count() const {
  unsigned count = 0;
  for (const auto& w : upper)
    if (w != 0) ++count;
  return count;
}

MaxCutInstance maxcut_gen(unsigned n, const Rat& p, std::uint64_t seed) {
  if (n < 2) throw InvalidOrder("maxcut needs n >= 2");
  if (p < 0 || p > 1) throw InvalidInterval("p must lie in [0,1]");
  MaxCutInstance inst;
  inst.n = n;
  inst.p = p;
  inst.seed = seed;
  inst.upper.resize(std::size_t(n) * (n - 1) / 2, Rat(0));

  // w_ij = 0 when z < p * 2^64; threshold compared exactly.
  Int threshold = (p.get_num() << 64) / p.get_den();
  SplitMix64 stream(derive_seed(seed, 0));
  const Int two53 = Int(1) << 53;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      Int zi(static_cast<unsigned long>(stream.next()));
      if (zi < threshold) continue;
      std::uint64_t mant = stream.next() >> 11;
      Rat w(Int(mant) + 1, two53);
      w.canonicalize();
      inst.upper[pair_index(n, i, j)] = w;
    }
  return inst;
}

MPoly maxcut_objective(const MaxCutInstance& inst) {
  const unsigned n = inst.n;
  MPoly f(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      const Rat& w = inst.weight(i, j);
      if (w == 0) continue;
      Rat quarter = w / 4;
      Exponents e(n, 0);
      e[i] = 2;
      f.add_term(e, quarter);
      e[i] = 0;
      e[j] = 2;
      f.add_term(e, quarter);
      e[i] = 1;
      e[j] = 1;
      f.add_term(e, -2 * quarter);
    }
  return f;
}

Rat maxcut_opt(const MaxCutInstance& inst) {
  const unsigned n = inst.n;
  if (n > 24) throw BudgetExceeded("vertex enumeration capped at n = 24");

  // Common denominator so the enumeration runs on integers.
  Int den(1);
  for (const auto& w : inst.upper) den = lcm(den, w.get_den());
  struct Edge {
    unsigned i, j;
    Int num;
  };
  std::vector<Edge> edges;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      const Rat& w = inst.weight(i, j);
      if (w != 0) edges.push_back({i, j, w.get_num() * (den / w.get_den())});
    }

  Int best(0);  // empty cut = 0
  const std::uint32_t patterns = 1u << (n - 1);
  Int cut;
  for (std::uint32_t mask = 0; mask < patterns; ++mask) {
    cut = 0;
    for (const auto& e : edges) {
      bool si = e.i == 0 ? false : ((mask >> (e.i - 1)) & 1u);
      bool sj = e.j == 0 ? false : ((mask >> (e.j - 1)) & 1u);
      if (si != sj) cut += e.num;
    }
    if (cut > best) best = cut;
  }
  Rat opt(best, den);
  opt.canonicalize();
  return opt;
}

std::vector<MaxCutBoundsRow> maxcut_bounds(const MaxCutInstance& inst, unsigned r_max,
                                           unsigned full_r_max, const EigOptions& opts) {
  MPoly f = maxcut_objective(inst);
  MPoly g = -f;  // maximization by negation
  Domain dom = box_domain(inst.n);

  std::vector<MaxCutBoundsRow> rows;
  MomentSeq seq = pushforward_moments(dom, g, 2 * r_max + 1);
  for (unsigned r = 0; r <= r_max; ++r) {
    MaxCutBoundsRow row;
    row.r = r;
    {
      SymMatQ A(r + 1), B(r + 1);
      for (unsigned i = 0; i <= r; ++i)
        for (unsigned j = 0; j <= i; ++j) {
          A.at(i, j) = seq.values[i + j + 1];
          B.at(i, j) = seq.values[i + j];
        }
      row.pfm = -gen_eig_min(A, B, opts).value;
    }
    if (r <= full_r_max) row.full = -upper_bound_full(g, dom, r, opts).value;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RatioRow> maxcut_ratio_table(const Rat& p, unsigned count, unsigned n,
                                         std::vector<unsigned> r_values, std::uint64_t base_seed,
                                         const EigOptions& opts) {
  unsigned r_max = 0;
  for (unsigned r : r_values) r_max = std::max(r_max, r);

  std::vector<RatioRow> rows;
  for (unsigned r : r_values) rows.push_back({r, 0, 0, 0, 0});

  for (unsigned idx = 0; idx < count; ++idx) {
    MaxCutInstance inst = maxcut_gen(n, p, derive_seed(base_seed, idx + 1));
    Rat opt = maxcut_opt(inst);
    if (opt == 0) {
      for (auto& row : rows) ++row.skipped;
      continue;
    }
    auto bounds = maxcut_bounds(inst, r_max, r_max, opts);
    double opt_d = opt.get_d();
    for (auto& row : rows) {
      const auto& b = bounds[row.r];
      row.ratio += (opt_d - b.full->to_double()) / opt_d;
      row.ratio_pfm += (opt_d - b.pfm.to_double()) / opt_d;
      ++row.instances;
    }
  }
  for (auto& row : rows) {
    if (row.instances > 0) {
      row.ratio /= row.instances;
      row.ratio_pfm /= row.instances;
    }
  }
  return rows;
}

}  // namespace polybound
