#include "polybound/geometry.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "polybound/errors.hpp"
#include "polybound/rng.hpp"

namespace polybound {

bool RegionSpec::contains(std::span<const double> x) const {
  for (unsigned i = 0; i < nvars; ++i)
    if (x[i] < bbox[i].first || x[i] > bbox[i].second) return false;
  for (const auto& g : poly_constraints)
    if (g.eval(x) < 0) return false;
  for (const auto& atom : exp_atoms) {
    double cap = x[atom.cap_var] <= 0 ? 0.0 : std::exp(-1.0 / x[atom.cap_var]);
    if (x[atom.bounded_var] > cap) return false;
  }
  return true;
}

bool RegionSpec::anchor_in_bbox(std::span<const double> x) const {
  for (unsigned i = 0; i < nvars; ++i)
    if (x[i] < bbox[i].first || x[i] > bbox[i].second) return false;
  return true;
}

RegionSpec region_from_text(std::istream& in) {
  RegionSpec region;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "nvars") {
      if (!(ls >> region.nvars)) throw ParseError("bad nvars line");
    } else if (tok == "bbox") {
      region.bbox.clear();
      double lo, hi;
      while (ls >> lo >> hi) region.bbox.emplace_back(lo, hi);
      if (region.bbox.size() != region.nvars) throw ParseError("bbox entries != nvars");
    } else if (tok == "poly") {
      std::string rest;
      std::getline(ls, rest);
      std::string unfolded;
      for (char c : rest) unfolded.push_back(c == ';' ? '\n' : c);
      region.poly_constraints.push_back(mpoly_from_text(unfolded));
      if (region.poly_constraints.back().nvars() != region.nvars)
        throw ParseError("constraint nvars != region nvars");
    } else if (tok == "exp_atom") {
      ExpAtom atom;
      if (!(ls >> atom.cap_var >> atom.bounded_var)) throw ParseError("bad exp_atom line");
      if (atom.cap_var >= region.nvars || atom.bounded_var >= region.nvars)
        throw ParseError("exp_atom variable out of range");
      region.exp_atoms.push_back(atom);
    } else {
      throw ParseError("unknown region directive: " + tok);
    }
  }
  if (region.nvars == 0) throw ParseError("region needs nvars");
  if (region.bbox.size() != region.nvars) throw ParseError("region needs a bbox");
  return region;
}

RegionSpec region_from_text(const std::string& text) {
  std::istringstream is(text);
  return region_from_text(is);
}

namespace {

MPoly var(unsigned n, unsigned i) { return MPoly::variable(n, i); }

}  // namespace

RegionSpec region_parabolic_cusp() {
  // 0 <= x1 <= 1, 0 <= x2 <= x1^2
  RegionSpec region;
  region.nvars = 2;
  region.bbox = {{0, 1}, {0, 1}};
  region.poly_constraints.push_back(var(2, 0));
  region.poly_constraints.push_back(MPoly::constant(2, Rat(1)) - var(2, 0));
  region.poly_constraints.push_back(var(2, 1));
  region.poly_constraints.push_back(var(2, 0) * var(2, 0) - var(2, 1));
  return region;
}

RegionSpec region_exponential_cusp() {
  // 0 <= x1 <= 1, 0 <= x2 <= exp(-1/x1)
  RegionSpec region;
  region.nvars = 2;
  region.bbox = {{0, 1}, {0, 1}};
  region.poly_constraints.push_back(var(2, 0));
  region.poly_constraints.push_back(MPoly::constant(2, Rat(1)) - var(2, 0));
  region.poly_constraints.push_back(var(2, 1));
  region.exp_atoms.push_back({0, 1});
  return region;
}

RegionSpec region_unit_box(unsigned n) {
  RegionSpec region;
  region.nvars = n;
  for (unsigned i = 0; i < n; ++i) {
    region.bbox.emplace_back(-1.0, 1.0);
    region.poly_constraints.push_back(MPoly::constant(n, Rat(1)) - var(n, i));
    region.poly_constraints.push_back(MPoly::constant(n, Rat(1)) + var(n, i));
  }
  return region;
}

double ball_volume(unsigned n) {
  return std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

VolumeEstimate local_volume(const RegionSpec& region, std::span<const double> x, double delta,
                            std::uint64_t samples, std::uint64_t seed) {
  if (!(delta > 0)) throw InvalidInterval("delta must be positive");
  if (x.size() != region.nvars) throw DimensionMismatch("anchor dimension != region nvars");
  if (!region.anchor_in_bbox(x)) throw AnchorOutsideClosure("anchor outside bounding box");

  const unsigned n = region.nvars;
  const std::uint64_t batch = 1 << 16;
  std::uint64_t hits = 0;
  std::vector<double> dir(n), pt(n);

  std::uint64_t done = 0;
  for (std::uint64_t b = 0; done < samples; ++b) {
    GaussianStream stream(derive_seed(seed, b));
    std::uint64_t todo = std::min<std::uint64_t>(batch, samples - done);
    for (std::uint64_t s = 0; s < todo; ++s) {
      double norm2 = 0;
      for (unsigned i = 0; i < n; ++i) {
        dir[i] = stream.next_gaussian();
        norm2 += dir[i] * dir[i];
      }
      double norm = std::sqrt(norm2);
      if (norm == 0) continue;
      double radius = delta * std::pow(stream.next_uniform(), 1.0 / n);
      for (unsigned i = 0; i < n; ++i) pt[i] = x[i] + dir[i] / norm * radius;
      if (region.contains(pt)) ++hits;
    }
    done += todo;
  }

  VolumeEstimate est;
  est.delta = delta;
  est.hits = hits;
  est.samples = samples;
  est.fraction = double(hits) / double(samples);
  est.stderr_ = std::sqrt(est.fraction * (1.0 - est.fraction) / double(samples));
  return est;
}

GrowthFit growth_exponent(const RegionSpec& region, std::span<const double> x,
                          std::span<const double> ladder, std::uint64_t samples,
                          std::uint64_t seed) {
  if (ladder.size() < 3) throw InvalidOrder("ladder needs at least 3 radii");
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (!(ladder[i] < ladder[i - 1])) throw InvalidInterval("ladder must strictly decrease");

  GrowthFit fit;
  const unsigned n = region.nvars;
  const double vball = ball_volume(n);
  bool any_positive = false;
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    auto est = local_volume(region, x, ladder[i], samples, derive_seed(seed, 1000003 + i));
    any_positive = any_positive || est.hits > 0;
    fit.estimates.push_back(est);
  }
  if (!any_positive) throw AnchorOutsideClosure("no ladder radius produced any hit");

  // log(volume) against log(delta); volume = fraction * delta^n * vol(B^n).
  std::vector<double> lx, ly, weight;
  for (const auto& est : fit.estimates) {
    if (est.hits == 0) continue;
    double rel = est.stderr_ / est.fraction;
    if (rel >= 0.2) continue;
    lx.push_back(std::log(est.delta));
    ly.push_back(std::log(est.fraction * std::pow(est.delta, n) * vball));
    weight.push_back(1.0 / (rel * rel + 1e-12));
  }
  fit.points_used = static_cast<unsigned>(lx.size());
  if (fit.points_used >= 2) {
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      sw += weight[i];
      sx += weight[i] * lx[i];
      sy += weight[i] * ly[i];
      sxx += weight[i] * lx[i] * lx[i];
      sxy += weight[i] * lx[i] * ly[i];
    }
    double det = sw * sxx - sx * sx;
    fit.exponent = (sw * sxy - sx * sy) / det;
    fit.intercept = (sxx * sy - sx * sxy) / det;
    double ss = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      double r = ly[i] - (fit.exponent * lx[i] + fit.intercept);
      ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / double(lx.size()));
  }

  // Successive slopes over all positive estimates; a cusp that defeats any
  // polynomial growth bound shows up as slopes that keep increasing as delta
  // shrinks (or as the volume dropping below the sampler's resolution).
  std::vector<std::pair<double, double>> pts;  // (log delta, log vol), ladder order
  std::vector<double> slope_err;
  for (const auto& est : fit.estimates)
    if (est.hits > 0)
      pts.emplace_back(std::log(est.delta),
                       std::log(est.fraction * std::pow(est.delta, n) * vball));
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double dsl = (pts[i].second - pts[i + 1].second) / (pts[i].first - pts[i + 1].first);
    fit.pair_slopes.push_back(dsl);
  }
  bool vanished_tail = false;
  {
    bool seen_positive = false;
    for (const auto& est : fit.estimates) {
      if (est.hits > 0) seen_positive = true;
      if (est.hits == 0 && seen_positive) vanished_tail = true;
    }
  }
  bool slopes_diverge = fit.pair_slopes.size() >= 2;
  for (std::size_t i = 0; i + 1 < fit.pair_slopes.size() && slopes_diverge; ++i) {
    // require a clear increase, beyond statistical wiggle
    if (!(fit.pair_slopes[i + 1] > fit.pair_slopes[i] + 0.5)) slopes_diverge = false;
  }
  fit.divergence_flag = vanished_tail || slopes_diverge;
  return fit;
}

void write_growth_csv(std::ostream& os, const GrowthFit& fit, std::uint64_t samples,
                      std::uint64_t seed) {
  os << "# schema=geom-v1 samples=" << samples << " seed=" << seed << "\n";
  os << "delta,fraction,stderr,hits,samples\n";
  char buf[64];
  for (const auto& est : fit.estimates) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g", est.delta, est.fraction, est.stderr_);
    os << buf << ',' << est.hits << ',' << est.samples << '\n';
  }
  std::snprintf(buf, sizeof buf, "%.12g", fit.exponent);
  os << "# fit exponent=" << buf;
  std::snprintf(buf, sizeof buf, "%.12g", fit.intercept);
  os << " intercept=" << buf << " points_used=" << fit.points_used
     << " divergence=" << (fit.divergence_flag ? 1 : 0) << "\n";
}

}  // namespace polybound
