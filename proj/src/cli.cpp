#include "harmlab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "harmlab/appendix_oracle.hpp"
#include "harmlab/barron.hpp"
#include "harmlab/ensemble_io.hpp"
#include "harmlab/errors.hpp"
#include "harmlab/exact_solutions.hpp"
#include "harmlab/one_dim_barron.hpp"
#include "harmlab/poisson_solver.hpp"
#include "harmlab/rates.hpp"

namespace harmlab::cli {

namespace {

std::string format15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string format4(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

double parse_p(const std::string& text) {
  if (text == "inf") return kInf;
  try {
    std::size_t used = 0;
    const double p = std::stod(text, &used);
    if (used == text.size() && p >= 1.0) return p;
  } catch (const std::exception&) {
  }
  throw ValidationError(ValidationCode::ParseError, "p must be a number >= 1 or 'inf', got '" + text + "'");
}

struct GridFlags {
  int nr = 256;
  int nphi = 256;
  double grading = 2.0;
};

void add_grid_flags(CLI::App* app, GridFlags& g) {
  app->add_option("--nr", g.nr, "radial cells");
  app->add_option("--nphi", g.nphi, "angular cells");
  app->add_option("--grading", g.grading, "radial grading exponent");
}

struct OutputFlags {
  std::string out;
  std::string gnuplot;
};

void add_output_flags(CLI::App* app, OutputFlags& o) {
  app->add_option("--out", o.out, "CSV output file (stdout if empty)");
  app->add_option("--gnuplot", o.gnuplot, "also write a gnuplot script to this file");
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw ValidationError(ValidationCode::InvalidArgument, "cannot write '" + path + "'");
  file << text;
}

void emit_csv(const std::vector<ErrorReport>& reports, const OutputFlags& o, std::ostream& out,
              bool log_x, bool log_y) {
  std::ostringstream csv;
  csv << csv_header() << '\n';
  for (const auto& r : reports) csv << csv_row(r) << '\n';
  if (o.out.empty()) {
    out << csv.str();
  } else {
    write_text(o.out, csv.str());
  }
  if (!o.gnuplot.empty()) {
    std::ostringstream script;
    script << "set datafile separator ','\n";
    if (log_x) script << "set logscale x\n";
    if (log_y) script << "set logscale y\n";
    script << "set xlabel 'knob'\nset ylabel 'value'\n";
    script << "plot '" << (o.out.empty() ? "data.csv" : o.out)
           << "' using 6:7 skip 1 with linespoints title '" << reports.front().experiment << "'\n";
    write_text(o.gnuplot, script.str());
  }
}

std::vector<double> parse_pair(const std::vector<double>& v, const char* name) {
  if (v.size() != 2) {
    throw ValidationError(ValidationCode::ParseError, std::string(name) + " needs two numbers");
  }
  return v;
}

}  // namespace

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"harmlab: harmonic extensions of ReLU^alpha data and Barron-space experiments"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a closed-form solution at (x, y)");
  std::string kind = "int";
  double alpha = 0.5;
  int k = 2;
  double eps = 1e-2;
  double x = 0.0;
  double y = 1.0;
  eval->add_option("--kind", kind, "int|frac|half|threehalf|heaviside|reg")
      ->check(CLI::IsMember({"int", "frac", "half", "threehalf", "heaviside", "reg"}));
  eval->add_option("--alpha", alpha, "fractional power");
  eval->add_option("--k", k, "integer power");
  eval->add_option("--eps", eps, "regularization epsilon");
  eval->add_option("--x", x, "abscissa");
  eval->add_option("--y", y, "ordinate (y >= 0 allowed for reg)");

  // solve
  auto* solve = app.add_subcommand("solve", "Poisson-kernel harmonic extension at (x, y)");
  std::string boundary = "heaviside";
  double tol = 1e-9;
  solve->add_option("--boundary", boundary, "relu:A[:w:b] | heaviside | tanh[:w:b] | const:C");
  solve->add_option("--x", x, "abscissa");
  solve->add_option("--y", y, "ordinate");
  solve->add_option("--tol", tol, "quadrature tolerance");

  // rates
  auto* rates = app.add_subcommand("rates", "convergence-rate experiments (CSV output)");
  rates->require_subcommand(1);
  auto* reg = rates->add_subcommand("reg", "norms of u_{eps,k} - u_k over the half-disk");
  double R = 1.0;
  std::string p_text = "2";
  int order = 0;
  double eps_min = 1e-4;
  double eps_max = 1e-1;
  int steps = 4;
  GridFlags grid_flags;
  OutputFlags output;
  reg->add_option("--k", k, "integer power (>= 2)");
  reg->add_option("--R", R, "half-disk radius");
  reg->add_option("--p", p_text, "Lebesgue exponent or 'inf'");
  reg->add_option("--order", order, "derivative order 0, 1 or 2");
  reg->add_option("--eps-min", eps_min, "smallest epsilon");
  reg->add_option("--eps-max", eps_max, "largest epsilon");
  reg->add_option("--steps", steps, "number of log-spaced epsilons");
  add_grid_flags(reg, grid_flags);
  add_output_flags(reg, output);

  auto* mc = rates->add_subcommand("mc", "Monte-Carlo subsampling error of a random target");
  double mc_alpha = 2.0;
  double n_min = 32;
  double n_max = 4096;
  int mc_steps = 8;
  int seeds = 10;
  double q = 2.0;
  int atoms = 2000;
  std::uint64_t seed = 0;
  int dim = 1;
  mc->add_option("--alpha", mc_alpha, "activation power");
  mc->add_option("--n-min", n_min, "smallest subnetwork size");
  mc->add_option("--n-max", n_max, "largest subnetwork size");
  mc->add_option("--steps", mc_steps, "number of log-spaced sizes");
  mc->add_option("--seeds", seeds, "draws per size");
  mc->add_option("--order", order, "Sobolev derivative order m");
  mc->add_option("--q", q, "Sobolev integrability q >= 2");
  mc->add_option("--atoms", atoms, "target atoms");
  mc->add_option("--seed", seed, "base seed");
  mc->add_option("--dim", dim, "input dimension 1 or 2");
  add_output_flags(mc, output);

  auto* sobolev = rates->add_subcommand("sobolev", "squared Sobolev seminorm of u^i_{eps,k}");
  int sob_order = -1;
  sobolev->add_option("--k", k, "integer power (2 or 3)");
  sobolev->add_option("--R", R, "half-disk radius");
  sobolev->add_option("--eps-min", eps_min, "smallest epsilon");
  sobolev->add_option("--eps-max", eps_max, "largest epsilon");
  sobolev->add_option("--steps", steps, "number of log-spaced epsilons");
  sobolev->add_option("--order", sob_order, "seminorm order (-1 means k + 2)");
  add_grid_flags(sobolev, grid_flags);
  add_output_flags(sobolev, output);

  // diag
  auto* diag = app.add_subcommand("diag", "divergence and slice diagnostics");
  diag->require_subcommand(1);
  auto* xklogx = diag->add_subcommand("xklogx", "criterion integral of x^k log x against |log delta|");
  double delta_min = 1e-6;
  double delta_max = 1e-2;
  int diag_steps = 5;
  xklogx->add_option("--k", k, "power k");
  xklogx->add_option("--delta-min", delta_min, "smallest cutoff");
  xklogx->add_option("--delta-max", delta_max, "largest cutoff");
  xklogx->add_option("--steps", diag_steps, "number of log-spaced cutoffs");
  auto* slice = diag->add_subcommand("slice", "fit of u^i_k along a ray");
  double theta = 0.7853981633974483;
  int points = 100;
  slice->add_option("--k", k, "power k");
  slice->add_option("--theta", theta, "ray angle in (0, pi), not pi/2");
  slice->add_option("--points", points, "samples along the ray");

  // ensemble
  auto* ensemble = app.add_subcommand("ensemble", "operations on ensemble files");
  ensemble->require_subcommand(1);
  std::string in_path;
  std::string out_path;
  auto* lift = ensemble->add_subcommand("lift", "Cauchy push-forward of a 1D ensemble");
  std::size_t nodes = kDefaultCauchyNodes;
  std::size_t ppc = 1;
  std::size_t samples = 0;
  lift->add_option("--nodes", nodes, "quadrature cells");
  lift->add_option("--points-per-cell", ppc, "Gauss points per cell");
  lift->add_option("--samples", samples, "use this many random Cauchy draws instead (0 = quadrature)");
  lift->add_option("--seed", seed, "seed for --samples");
  auto* slice_cmd = ensemble->add_subcommand("slice", "restrict a 2D ensemble to a line");
  std::vector<double> x0{0.0, 0.0};
  std::vector<double> dir{1.0, 0.0};
  slice_cmd->add_option("--x0", x0, "base point (two numbers)")->expected(2);
  slice_cmd->add_option("--v", dir, "direction (two numbers)")->expected(2);
  auto* extend = ensemble->add_subcommand("extend", "homogeneous extension of a 1D ensemble");
  auto* sample = ensemble->add_subcommand("sample", "draw an n-neuron subnetwork");
  std::size_t n_sample = 100;
  sample->add_option("--n", n_sample, "subnetwork size");
  sample->add_option("--seed", seed, "seed");
  for (auto* sub : {lift, slice_cmd, extend, sample}) {
    sub->add_option("--in", in_path, "input ensemble file")->required();
    sub->add_option("--out", out_path, "output ensemble file (stdout if empty)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (eval->parsed()) {
      double value = 0.0;
      if (kind == "reg") {
        value = eval_u_reg(x, y, eps, k);
      } else {
        const HalfPlanePoint pt(x, y);
        if (kind == "int") value = eval_u_integer(pt, k);
        if (kind == "frac") value = eval_u_fractional(pt, alpha);
        if (kind == "half") value = eval_u_half(pt);
        if (kind == "threehalf") value = eval_u_three_half(pt);
        if (kind == "heaviside") value = eval_heaviside(pt);
      }
      out << format15(value) << '\n';
    } else if (solve->parsed()) {
      out << format15(solve_at(BoundaryFunction::parse(boundary), HalfPlanePoint(x, y), tol)) << '\n';
    } else if (reg->parsed()) {
      const double p = parse_p(p_text);
      const auto eps_list = log_spaced(eps_max, eps_min, steps);
      const auto result = reg_error_experiment(
          k, R, p, order, eps_list, GridSpec(R, grid_flags.nr, grid_flags.nphi, grid_flags.grading));
      emit_csv(result.reports, output, out, true, true);
      out << "slope=" << format4(result.fit.slope) << " r2=" << format4(result.fit.r_squared) << '\n';
    } else if (mc->parsed()) {
      if (!(n_min >= 1.0) || !(n_max >= n_min)) {
        throw ValidationError(ValidationCode::InvalidArgument, "need 1 <= n-min <= n-max");
      }
      std::vector<std::size_t> n_list;
      for (double n : log_spaced(n_min, n_max, mc_steps)) {
        n_list.push_back(static_cast<std::size_t>(std::llround(n)));
      }
      const auto target = mc_target(mc_alpha, static_cast<std::size_t>(std::max(atoms, 1)), seed, dim);
      const auto result = mc_rate_experiment(target, n_list, order, q, seeds, seed);
      emit_csv(result.reports, output, out, true, true);
      out << "slope=" << format4(result.fit.slope) << " r2=" << format4(result.fit.r_squared)
          << " bound_rate=" << format4(result.satisfaction_rate) << '\n';
    } else if (sobolev->parsed()) {
      const auto eps_list = log_spaced(eps_max, eps_min, steps);
      const auto result = sobolev_lognorm_experiment(
          k, R, eps_list, GridSpec(R, grid_flags.nr, grid_flags.nphi, grid_flags.grading), sob_order);
      emit_csv(result.reports, output, out, true, true);
      out << "slope=" << format4(result.log_fit.slope) << " r2=" << format4(result.log_fit.r_squared)
          << " power_slope=" << format4(result.power_fit.slope) << '\n';
    } else if (xklogx->parsed()) {
      const auto deltas = log_spaced(delta_max, delta_min, diag_steps);
      const auto fit = log_divergence_diagnostic(k, deltas);
      out << "slope=" << format4(fit.slope) << " r2=" << format_double(fit.r_squared) << '\n';
    } else if (slice->parsed()) {
      const auto fit = slice_log_fit(k, theta, points);
      out << "c_fit=" << format_double(fit.c_fit) << " d_fit=" << format_double(fit.d_fit)
          << " residual=" << format_double(fit.residual)
          << " expected=" << format_double(slice_log_constant(k, theta)) << '\n';
    } else if (ensemble->parsed()) {
      const auto input = load_ensemble(in_path);
      NeuronEnsemble result = input;
      if (lift->parsed()) {
        const auto rule = samples > 0 ? cauchy_samples(samples, seed)
                                      : cauchy_quadrature(nodes, input.alpha(), ppc);
        result = lift_ensemble(input, rule);
      } else if (slice_cmd->parsed()) {
        const auto a = parse_pair(x0, "--x0");
        const auto v = parse_pair(dir, "--v");
        result = slice_ensemble(input, {a[0], a[1]}, {v[0], v[1]});
      } else if (extend->parsed()) {
        result = homogeneous_extend(input);
      } else if (sample->parsed()) {
        result = sample_subnetwork(input, n_sample, seed);
      }
      if (out_path.empty()) {
        write_ensemble(out, result);
      } else {
        save_ensemble(out_path, result);
      }
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace harmlab::cli
