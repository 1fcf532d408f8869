#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "expressions.hpp"
#include "pcz/checks.hpp"
#include "pcz/csv_io.hpp"
#include "pcz/depca.hpp"
#include "pcz/diagnostics.hpp"
#include "pcz/extension.hpp"
#include "pcz/json_io.hpp"
#include "pcz/transforms.hpp"

namespace pcz::tools {

namespace {

namespace fs = std::filesystem;

std::string out_path(const GlobalConfig& cfg, const std::string& explicit_path,
                     const std::string& fallback) {
  if (!explicit_path.empty()) return explicit_path;
  fs::create_directories(cfg.out_dir);
  return (fs::path(cfg.out_dir) / fallback).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  os << text;
  if (text.empty() || text.back() != '\n') os << '\n';
}

Kernel parse_kernel(const std::string& spec) {
  if (spec == "exp") return Kernel::exp_decay();
  if (spec.rfind("gauss:", 0) == 0) {
    try {
      return Kernel::gauss_heat(std::stod(spec.substr(6)));
    } catch (const std::invalid_argument&) {
      throw ConfigError("cannot parse diffusion time in '" + spec + "'");
    }
  }
  throw ConfigError("unknown kernel '" + spec + "' (expected gauss:<t> or exp)");
}

struct ExtendOpts {
  std::string kind;
  std::string in;
  std::string out;
  std::string midpoints;
  std::string window;
  int samples_per_unit = 64;
};

struct DiagnoseOpts {
  std::string in;
  std::string report;
  double eps = 1e-2;
  int max_shift = 16;
};

struct ConvOpts {
  std::string kernel;
  std::string mode = "full";
  std::string in;
  std::string out;
  double trunc_eps = 1e-8;
};

struct HeatOpts {
  std::string kernel;
  std::string in;
  std::string out;
  double trunc_eps = 1e-8;
};

struct DepcaOpts {
  std::string mode;
  std::string a = "0";
  std::string b = "0";
  std::string f = "0";
  std::string window;
  std::string out;
  std::string report;
  int steps = 256;
  double y0 = 0.0;
  std::optional<int> anchor;
  double gamma = 0.0;
  double tol = 1e-10;
  int max_iter = 64;
  double trunc_eps = 1e-12;
};

}  // namespace

void register_extend(CLI::App& app, GlobalConfig& cfg) {
  auto opts = std::make_shared<ExtendOpts>();
  CLI::App* cmd = app.add_subcommand("extend", "Extend a sequence CSV to a grid-function CSV");
  cmd->add_option("--kind", opts->kind, "step | linear | two-segment")
      ->required()
      ->check(CLI::IsMember({"step", "linear", "two-segment"}));
  cmd->add_option("--in", opts->in, "sequence CSV (n,v1,...,vp)")->required();
  cmd->add_option("--out", opts->out, "output grid CSV (default <out-dir>/extend_<kind>.csv)");
  cmd->add_option("--samples-per-unit", opts->samples_per_unit, "lattice density M")
      ->capture_default_str();
  cmd->add_option("--window", opts->window, "lo:hi (default: widest the sequence supports)");
  cmd->add_option("--midpoints", opts->midpoints,
                  "sequence CSV of midpoint values m(n) for two-segment "
                  "(default: collinear midpoints)");
  cmd->callback([opts, &cfg]() {
    const AASequence s = read_sequence_csv_file(opts->in);
    ExtensionKind kind = ExtensionKind::step;
    if (opts->kind == "linear") kind = ExtensionKind::linear;
    if (opts->kind == "two-segment") kind = ExtensionKind::two_segment;

    Window w{};
    if (!opts->window.empty()) {
      w = parse_window(opts->window);
    } else {
      w = kind == ExtensionKind::step ? Window{s.window().lo, s.window().hi + 1}
                                      : Window{s.window().lo, s.window().hi};
      if (w.pieces() < 1) throw ConfigError("sequence too short to extend");
    }

    std::optional<MidpointRule> rule;
    std::unique_ptr<AASequence> mids;
    if (kind == ExtensionKind::two_segment) {
      if (!opts->midpoints.empty()) {
        mids = std::make_unique<AASequence>(read_sequence_csv_file(opts->midpoints));
        if (mids->dim() != s.dim())
          throw ConfigError("midpoint CSV dimension does not match the sequence");
        const AASequence* mp = mids.get();
        rule = [mp](int n, std::span<double> out) {
          auto v = mp->value(n);
          for (std::size_t i = 0; i < out.size(); ++i) out[i] = v[i];
        };
      } else {
        rule = collinear_midpoints(s);
      }
    }

    const GridFunction g = extend(s, kind, opts->samples_per_unit, w, rule);
    const std::string path = out_path(cfg, opts->out, "extend_" + opts->kind + ".csv");
    write_grid_csv_file(g, path, cfg.precision);
    std::cout << "wrote " << path << '\n';
  });
}

void register_diagnose(CLI::App& app, GlobalConfig& cfg) {
  auto opts = std::make_shared<DiagnoseOpts>();
  CLI::App* cmd =
      app.add_subcommand("diagnose", "Recurrence, uniform-continuity and compact-AA diagnostics");
  cmd->add_option("--in", opts->in, "grid CSV")->required();
  cmd->add_option("--report", opts->report, "output JSON (default <out-dir>/diagnose.json)");
  cmd->add_option("--eps", opts->eps, "consistency tolerance")->capture_default_str();
  cmd->add_option("--max-shift", opts->max_shift, "largest integer translation tested")
      ->capture_default_str();
  cmd->callback([opts, &cfg]() {
    const GridFunction f = read_grid_csv_file(opts->in);
    const ClassifyResult res = classify_kaa(f, opts->eps, opts->max_shift);
    const std::string path = out_path(cfg, opts->report, "diagnose.json");
    write_text(path, to_json(res, norm_report(f)));
    std::cout << verdict_name(res.verdict) << " (min defect "
              << format_double(res.scan.min_defect(), 6) << ", report " << path << ")\n";
  });
}

void register_conv(CLI::App& app, GlobalConfig& cfg) {
  auto opts = std::make_shared<ConvOpts>();
  CLI::App* cmd = app.add_subcommand("conv", "Convolve a grid function with an L1 kernel");
  cmd->add_option("--kernel", opts->kernel, "gauss:<t> | exp")->required();
  cmd->add_option("--mode", opts->mode, "full | causal | halfline")
      ->check(CLI::IsMember({"full", "causal", "halfline"}))
      ->capture_default_str();
  cmd->add_option("--in", opts->in, "grid CSV")->required();
  cmd->add_option("--out", opts->out, "output grid CSV (default <out-dir>/conv.csv)");
  cmd->add_option("--trunc-eps", opts->trunc_eps, "certified truncation tolerance")
      ->capture_default_str();
  cmd->callback([opts, &cfg]() {
    const Kernel kernel = parse_kernel(opts->kernel);
    const GridFunction f = read_grid_csv_file(opts->in);
    GridFunction out = [&]() {
      if (opts->mode == "full") return conv_full_line(kernel, f, opts->trunc_eps);
      if (opts->mode == "causal") return conv_causal(kernel, f, opts->trunc_eps);
      return conv_halfline_asymptotic(kernel, f, opts->trunc_eps);
    }();
    const std::string path = out_path(cfg, opts->out, "conv.csv");
    write_grid_csv_file(out, path, cfg.precision);
    std::cout << "wrote " << path << '\n';
  });
}

void register_heat(CLI::App& app, GlobalConfig& cfg) {
  auto opts = std::make_shared<HeatOpts>();
  CLI::App* cmd = app.add_subcommand("heat", "Heat-equation evolution of continuous initial data");
  cmd->add_option("--kernel", opts->kernel, "gauss:<t>, t = diffusion time")->required();
  cmd->add_option("--in", opts->in, "grid CSV of u0")->required();
  cmd->add_option("--out", opts->out, "output grid CSV (default <out-dir>/heat.csv)");
  cmd->add_option("--trunc-eps", opts->trunc_eps, "certified truncation tolerance")
      ->capture_default_str();
  cmd->callback([opts, &cfg]() {
    if (opts->kernel.rfind("gauss:", 0) != 0)
      throw ConfigError("heat requires --kernel gauss:<t>");
    double t = 0.0;
    try {
      t = std::stod(opts->kernel.substr(6));
    } catch (const std::invalid_argument&) {
      throw ConfigError("cannot parse diffusion time in '" + opts->kernel + "'");
    }
    const GridFunction u0 = read_grid_csv_file(opts->in);
    const GridFunction u = heat_solve(u0, t, opts->trunc_eps);
    const std::string path = out_path(cfg, opts->out, "heat.csv");
    write_grid_csv_file(u, path, cfg.precision);
    std::cout << "wrote " << path << '\n';
  });
}

void register_depca(CLI::App& app, GlobalConfig& cfg) {
  auto opts = std::make_shared<DepcaOpts>();
  CLI::App* cmd = app.add_subcommand(
      "depca", "Solve y' = a(t) y + b(t) y([t]) + f(t) (scalar) or the Lasota-Wazewska model");
  cmd->add_option("--mode", opts->mode, "ivp | bounded | lw")
      ->required()
      ->check(CLI::IsMember({"ivp", "bounded", "lw"}));
  cmd->add_option("--a", opts->a, "coefficient a(t); for lw this is the decay delta(t)")
      ->capture_default_str();
  cmd->add_option("--b", opts->b, "coefficient b(t)")->capture_default_str();
  cmd->add_option("--f", opts->f, "forcing f(t); for lw this is the production p(t)")
      ->capture_default_str();
  cmd->add_option("--window", opts->window, "lo:hi")->required();
  cmd->add_option("--steps", opts->steps, "RK4 steps per unit interval")->capture_default_str();
  cmd->add_option("--y0", opts->y0, "initial value (ivp)")->capture_default_str();
  cmd->add_option("--anchor", opts->anchor, "integer time of the initial value (ivp)");
  cmd->add_option("--gamma", opts->gamma, "Lasota-Wazewska gamma")->capture_default_str();
  cmd->add_option("--tol", opts->tol, "Picard stopping tolerance (lw)")->capture_default_str();
  cmd->add_option("--max-iter", opts->max_iter, "Picard iteration cap (lw)")
      ->capture_default_str();
  cmd->add_option("--trunc-eps", opts->trunc_eps, "bounded-solution truncation")
      ->capture_default_str();
  cmd->add_option("--out", opts->out, "trajectory CSV (default <out-dir>/depca_<mode>.csv)");
  cmd->add_option("--report", opts->report,
                  "residual report JSON (default <out-dir>/depca_<mode>_report.json)");
  cmd->callback([opts, &cfg]() {
    const Window w = parse_window(opts->window);
    const ScalarExpr a = parse_scalar_expr(opts->a);
    const ScalarExpr b = parse_scalar_expr(opts->b);
    const ScalarExpr f = parse_scalar_expr(opts->f);
    const auto regularity = (a.piecewise || b.piecewise || f.piecewise)
                                ? depca::CoefficientRegularity::piecewise_at_integers
                                : depca::CoefficientRegularity::continuous;

    depca::DepcaSolution sol = [&]() {
      if (opts->mode == "lw") {
        depca::LasotaWazewskaOptions lw_opts;
        lw_opts.steps = opts->steps;
        lw_opts.max_iter = opts->max_iter;
        lw_opts.tol = opts->tol;
        lw_opts.trunc_eps = opts->trunc_eps;
        return depca::lasota_wazewska({a.fn, f.fn, opts->gamma}, w, lw_opts);
      }
      const depca::LinearDepca sys = depca::scalar_system(a.fn, b.fn, f.fn, regularity);
      if (opts->mode == "ivp")
        return depca::solve_ivp(sys, Eigen::VectorXd::Constant(1, opts->y0), w, opts->steps,
                                opts->anchor);
      return depca::bounded_solution(sys, w, opts->steps, opts->trunc_eps);
    }();

    const std::string traj = out_path(cfg, opts->out, "depca_" + opts->mode + ".csv");
    const std::string rep =
        out_path(cfg, opts->report, "depca_" + opts->mode + "_report.json");
    write_grid_csv_file(sol.trajectory, traj, cfg.precision);
    write_text(rep, to_json(sol.residual_report));
    std::cout << "wrote " << traj << " and " << rep << '\n';
  });
}

void register_demo(CLI::App& app, GlobalConfig& cfg) {
  CLI::App* cmd = app.add_subcommand(
      "demo", "Write the deterministic artifact set and run the self-check table");
  cmd->callback([&cfg]() {
    fs::create_directories(cfg.out_dir);
    checks::generate_artifacts((fs::path(cfg.out_dir) / "artifacts").string(), cfg.seed);
    const auto results = checks::run_all_checks(cfg.out_dir);
    const std::string table = checks::summary_table(results);
    write_text((fs::path(cfg.out_dir) / "summary.txt").string(), table);
    std::cout << table;
  });
}

}  // namespace pcz::tools
