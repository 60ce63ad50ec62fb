#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polybound/errors.hpp"
#include "polybound/experiments.hpp"
#include "polybound/geometry.hpp"
#include "polybound/hierarchy.hpp"
#include "polybound/needle.hpp"
#include "polybound/rng.hpp"

namespace {

using namespace polybound;

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw Error("cannot open output file: " + path);
  return file;
}

MPoly load_poly(const std::string& path, unsigned dim) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open polynomial file: " + path);
  MPoly p = mpoly_from_text(in);
  if (dim != 0 && p.nvars() != dim) throw DimensionMismatch("--dim does not match file");
  return p;
}

Rat parse_rat_arg(const std::string& text, const char* what) {
  auto q = rat_parse(text);
  if (!q) throw Error(std::string("cannot parse ") + what + ": " + text);
  return *q;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(static_cast<unsigned>(std::stoul(tok)));
  return out;
}

void export_density(std::ostream& os, const BoundResult& result, const Rat& step) {
  DensityPoly density = optimal_density(result);
  unsigned n = result.domain.nvars;
  std::vector<std::vector<Rat>> grid;
  std::vector<Rat> pt(n, Rat(-1));
  while (true) {
    bool inside = true;
    if (result.domain.kind == DomainKind::Ball) {
      Rat norm2(0);
      for (const auto& c : pt) norm2 += c * c;
      inside = norm2 <= 1;
    }
    if (inside) grid.push_back(pt);
    unsigned pos = 0;
    while (pos < n) {
      pt[pos] += step;
      if (pt[pos] <= 1) break;
      pt[pos] = Rat(-1);
      ++pos;
    }
    if (pos == n) break;
  }
  auto samples = sample_density(density, grid);
  os << "# polybound schema=density-v1 method=" << method_name(result.method)
     << " r=" << result.r << " precision=" << HFloat::default_precision() << "\n";
  for (unsigned i = 0; i < n; ++i) os << 'x' << i + 1 << ',';
  os << "density\n";
  for (const auto& [point, value] : samples) {
    for (const auto& c : point) os << c.get_d() << ',';
    os << value.get_d() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure-based upper bounds for polynomial minimization"};
  app.require_subcommand(1);
  app.fallthrough();

  long precision = 256;
  if (const char* env = std::getenv("POLYBOUND_PRECISION")) precision = std::atol(env);
  app.add_option("--precision", precision, "working precision in bits (>= 64)")
      ->capture_default_str();
  std::uint64_t seed = 20240901;
  app.add_option("--seed", seed, "base seed for randomized commands")->capture_default_str();
  std::string out_path;
  app.add_option("--out", out_path, "output file (default stdout)");

  // bound
  auto* bound = app.add_subcommand("bound", "compute an upper bound for one polynomial");
  std::string method_str = "full", domain_str = "box", poly_path;
  unsigned dim = 0, order = 0;
  std::string density_step;
  bound->add_option("--method", method_str, "full | pfm-hankel | pfm-cheb")
      ->check(CLI::IsMember({"full", "pfm-hankel", "pfm-cheb"}))
      ->capture_default_str();
  bound->add_option("--domain", domain_str, "box | ball")
      ->check(CLI::IsMember({"box", "ball"}))
      ->capture_default_str();
  bound->add_option("--dim", dim, "number of variables (checked against the file)");
  bound->add_option("--poly", poly_path, "polynomial file (one 'num/den e1 .. en' per line)")
      ->required();
  bound->add_option("--r", order, "hierarchy order r")->required();
  bound->add_option("--density-grid", density_step,
                    "also export the optimal density on a grid with this step (rational)");

  // certificate
  auto* cert = app.add_subcommand("certificate", "needle-density certificate bound");
  std::string cert_poly, cert_rs = "4,8,16", cert_range;
  unsigned cert_dim = 0;
  cert->add_option("--poly", cert_poly, "polynomial file")->required();
  cert->add_option("--dim", cert_dim, "number of variables");
  cert->add_option("--r", cert_rs, "comma-separated orders")->capture_default_str();
  cert->add_option("--range", cert_range, "known enclosure lo,hi of f over the box");

  // geom
  auto* geom = app.add_subcommand("geom", "Monte-Carlo local volume growth");
  std::string region_path, anchor_str, ladder_str = "0.2,0.1,0.05,0.025";
  std::uint64_t samples = 1000000;
  geom->add_option("--region", region_path,
                   "region file (or builtin: parabolic-cusp, exponential-cusp, unit-box-2)")
      ->required();
  geom->add_option("--anchor", anchor_str, "anchor point x1,x2,...")->required();
  geom->add_option("--ladder", ladder_str, "decreasing radii")->capture_default_str();
  geom->add_option("--samples", samples, "samples per radius")->capture_default_str();

  // maxcut
  auto* maxcut = app.add_subcommand("maxcut", "random weighted maxcut experiments");
  maxcut->require_subcommand(1);
  std::string p_str = "1/2";
  unsigned mc_n = 8, mc_rmax = 4, mc_full_rmax = 4, mc_count = 50;
  std::string mc_rs = "1,2,3,4";
  auto* mc_gen = maxcut->add_subcommand("gen", "generate and print one instance");
  mc_gen->add_option("--n", mc_n, "vertices")->capture_default_str();
  mc_gen->add_option("--p", p_str, "zero-probability of each weight")->capture_default_str();
  auto* mc_bounds = maxcut->add_subcommand("bounds", "per-order bounds for one instance");
  mc_bounds->add_option("--n", mc_n, "vertices")->capture_default_str();
  mc_bounds->add_option("--p", p_str, "zero-probability of each weight")->capture_default_str();
  mc_bounds->add_option("--r-max", mc_rmax, "largest order")->capture_default_str();
  mc_bounds->add_option("--full-r-max", mc_full_rmax,
                        "largest order for the full bound (the expensive one)")
      ->capture_default_str();
  auto* mc_table = maxcut->add_subcommand("table3", "averaged gap ratios over fresh instances");
  mc_table->add_option("--p", p_str, "zero-probability of each weight")->capture_default_str();
  mc_table->add_option("--count", mc_count, "number of instances")->capture_default_str();
  mc_table->add_option("--r", mc_rs, "orders to evaluate")->capture_default_str();

  // figures
  auto* figures = app.add_subcommand("figures", "CSV data behind the comparison plots");
  figures->require_subcommand(1);
  unsigned fig_rmax = 20, fig_kmax = 5;
  auto* fig3 = figures->add_subcommand("fig3", "catalog functions on box and ball");
  fig3->add_option("--r-max", fig_rmax, "largest order")->capture_default_str();
  auto* fig4 = figures->add_subcommand("fig4", "even powers x^(2k) on [-1,1]");
  fig4->add_option("--r-max", fig_rmax, "largest order")->capture_default_str();
  fig4->add_option("--k-max", fig_kmax, "largest k")->capture_default_str();

  auto* selftest = app.add_subcommand("selftest", "quick end-to-end smoke checks");
  (void)selftest;

  CLI11_PARSE(app, argc, argv);

  try {
    HFloat::set_default_precision(precision);
    std::ofstream out_file;
    std::ostream& os = open_out(out_file, out_path);

    if (bound->parsed()) {
      MPoly f = load_poly(poly_path, dim);
      Domain domain{domain_str == "box" ? DomainKind::Box : DomainKind::Ball, f.nvars()};
      BoundResult result;
      if (method_str == "full")
        result = upper_bound_full(f, domain, order);
      else
        result = upper_bound_pfm(f, domain, order,
                                 method_str == "pfm-hankel" ? Method::PfmHankel
                                                            : Method::PfmChebyshev);
      os << "r,method,value\n";
      os << result.r << ',' << method_name(result.method) << ',' << result.value.str() << '\n';
      if (!density_step.empty())
        export_density(os, result, parse_rat_arg(density_step, "--density-grid"));
      return 0;
    }

    if (cert->parsed()) {
      MPoly f = load_poly(cert_poly, cert_dim);
      Domain domain = box_domain(f.nvars());
      std::optional<std::pair<Rat, Rat>> range;
      if (!cert_range.empty()) {
        auto comma = cert_range.find(',');
        if (comma == std::string::npos) throw Error("--range expects lo,hi");
        range = std::make_pair(parse_rat_arg(cert_range.substr(0, comma), "--range lo"),
                               parse_rat_arg(cert_range.substr(comma + 1), "--range hi"));
      }
      os << "r,h,ratio,bound\n";
      for (unsigned r : parse_unsigned_list(cert_rs)) {
        CertificateReport rep = certificate_bound(f, domain, r, range);
        os << rep.r << ',' << Rat(rep.h_used).get_d() << ',' << rep.ratio.str() << ','
           << rep.bound.str() << '\n';
      }
      return 0;
    }

    if (geom->parsed()) {
      RegionSpec region;
      if (region_path == "parabolic-cusp")
        region = region_parabolic_cusp();
      else if (region_path == "exponential-cusp")
        region = region_exponential_cusp();
      else if (region_path == "unit-box-2")
        region = region_unit_box(2);
      else {
        std::ifstream in(region_path);
        if (!in) throw Error("cannot open region file: " + region_path);
        region = region_from_text(in);
      }
      auto anchor = parse_double_list(anchor_str);
      auto ladder = parse_double_list(ladder_str);
      auto fit = growth_exponent(region, anchor, ladder, samples, seed);
      write_growth_csv(os, fit, samples, seed);
      return 0;
    }

    if (maxcut->parsed()) {
      Rat p = parse_rat_arg(p_str, "--p");
      if (mc_gen->parsed()) {
        MaxCutInstance inst = maxcut_gen(mc_n, p, seed);
        os << "# polybound schema=maxcut-instance-v1 generator=splitmix64 seed=" << seed
           << " n=" << inst.n << " p=" << rat_str(p) << "\n";
        os << "i,j,weight\n";
        for (unsigned i = 0; i < inst.n; ++i)
          for (unsigned j = i + 1; j < inst.n; ++j)
            if (inst.weight(i, j) != 0)
              os << i << ',' << j << ',' << rat_str(inst.weight(i, j)) << '\n';
        return 0;
      }
      if (mc_bounds->parsed()) {
        MaxCutInstance inst = maxcut_gen(mc_n, p, seed);
        auto rows = maxcut_bounds(inst, mc_rmax, mc_full_rmax);
        write_maxcut_bounds_csv(os, inst, rows, maxcut_opt(inst));
        return 0;
      }
      auto rows = maxcut_ratio_table(p, mc_count, mc_n, parse_unsigned_list(mc_rs), seed);
      write_ratio_table_csv(os, p, mc_count, seed, rows);
      return 0;
    }

    if (figures->parsed()) {
      if (fig3->parsed())
        write_comparison_csv(os, comparison_ratios(fig_rmax));
      else
        write_even_power_csv(os, even_power_ratios(fig_rmax, fig_kmax));
      return 0;
    }

    return run_selftest(std::cout) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
