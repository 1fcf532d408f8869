#include "pcz/depca.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "pcz/diagnostics.hpp"

namespace pcz::depca {

namespace {

constexpr double kPieceClamp = 9.313225746154785e-10;  // 2^-30
constexpr double kBackwardCertFloor = 1e-8;
constexpr double kCertTolerance = 1e-12;
constexpr double kDichotomyMargin = 1e-6;

double clamped_time(double u, int base, CoefficientRegularity reg) {
  if (reg == CoefficientRegularity::piecewise_at_integers && u >= base + 1.0)
    return base + 1.0 - kPieceClamp;
  return u;
}

void check_matrix(const Eigen::MatrixXd& m, int dim, double t, const char* what) {
  if (m.rows() != dim || m.cols() != dim)
    throw ConfigError(std::string(what) + "(t) has wrong shape at t=" + std::to_string(t));
  if (!m.allFinite())
    throw ConfigError(std::string(what) + "(t) is not finite at t=" + std::to_string(t));
}

void check_vector(const Eigen::VectorXd& v, int dim, double t, const char* what) {
  if (v.size() != dim)
    throw ConfigError(std::string(what) + "(t) has wrong size at t=" + std::to_string(t));
  if (!v.allFinite())
    throw ConfigError(std::string(what) + "(t) is not finite at t=" + std::to_string(t));
}

// Boundedness of the coefficients on the working window, checked by sampling.
void sample_coefficients(const LinearDepca& sys, Window window) {
  const int per_unit = 8;
  for (int n = window.lo; n < window.hi; ++n)
    for (int j = 0; j <= per_unit; ++j) {
      const double t =
          clamped_time(n + static_cast<double>(j) / per_unit, n, sys.regularity);
      check_matrix(sys.A(t), sys.dim, t, "A");
      check_matrix(sys.B(t), sys.dim, t, "B");
      check_vector(sys.forcing(t), sys.dim, t, "f");
    }
}

void validate_steps(int steps) {
  if (steps < 2 || steps % 2 != 0)
    throw ConfigError("steps must be even and >= 2 (Simpson on the RK4 lattice)");
}

// Everything the variation-of-constants formula needs on one interval
// [base, base+1]: the fundamental matrix on the RK4 lattice and the
// cumulative integrals Q_B(t) = int_base^t Phi(base,u) B(u) du and Q_f.
// y(t) = M(t) [ (I + Q_B(t)) y(base) + Q_f(t) ],
// C(n) = M(1) (I + Q_B(1)),  h(n) = M(1) Q_f(1).
struct IntervalData {
  int base = 0;
  std::vector<Eigen::MatrixXd> M;
  std::vector<Eigen::MatrixXd> QB;
  std::vector<Eigen::VectorXd> Qf;
  Eigen::MatrixXd C;
  Eigen::VectorXd h;
  double certificate = 0.0;
};

std::vector<Eigen::MatrixXd> rk4_fundamental(const MatrixFn& A, int dim, int base, int steps,
                                             CoefficientRegularity reg) {
  const double h = 1.0 / steps;
  std::vector<Eigen::MatrixXd> M;
  M.reserve(static_cast<std::size_t>(steps) + 1);
  M.push_back(Eigen::MatrixXd::Identity(dim, dim));
  auto coeff = [&](double u) {
    Eigen::MatrixXd a = A(clamped_time(u, base, reg));
    check_matrix(a, dim, u, "A");
    return a;
  };
  for (int k = 0; k < steps; ++k) {
    const double t = base + k * h;
    const Eigen::MatrixXd& m = M.back();
    const Eigen::MatrixXd a0 = coeff(t);
    const Eigen::MatrixXd ah = coeff(t + 0.5 * h);
    const Eigen::MatrixXd a1 = coeff(t + h);
    const Eigen::MatrixXd k1 = a0 * m;
    const Eigen::MatrixXd k2 = ah * (m + 0.5 * h * k1);
    const Eigen::MatrixXd k3 = ah * (m + 0.5 * h * k2);
    const Eigen::MatrixXd k4 = a1 * (m + h * k3);
    M.push_back(m + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
  }
  return M;
}

// Cumulative quadrature on the RK4 lattice: composite Simpson at even nodes,
// a one-sided 4th-order rule h/12 (5 g_k + 8 g_{k+1} - g_{k+2}) to reach odd
// nodes; the final value equals plain composite Simpson.
template <typename T>
std::vector<T> cumulative_integral(const std::vector<T>& g, double h, const T& zero) {
  const int s = static_cast<int>(g.size()) - 1;
  std::vector<T> q(g.size(), zero);
  for (int k = 2; k <= s; k += 2)
    q[k] = q[k - 2] + h / 3.0 * (g[k - 2] + 4.0 * g[k - 1] + g[k]);
  for (int k = 1; k <= s; k += 2)
    q[k] = q[k - 1] + h / 12.0 * (5.0 * g[k - 1] + 8.0 * g[k] - g[k + 1]);
  return q;
}

IntervalData build_interval(const LinearDepca& sys, int base, int steps) {
  IntervalData data;
  data.base = base;
  data.M = rk4_fundamental(sys.A, sys.dim, base, steps, sys.regularity);

  const double h = 1.0 / steps;
  const int dim = sys.dim;
  std::vector<Eigen::MatrixXd> gB(static_cast<std::size_t>(steps) + 1);
  std::vector<Eigen::VectorXd> gf(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const double t = clamped_time(base + k * h, base, sys.regularity);
    Eigen::MatrixXd b = sys.B(t);
    Eigen::VectorXd f = sys.forcing(t);
    check_matrix(b, dim, t, "B");
    check_vector(f, dim, t, "f");
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(data.M[static_cast<std::size_t>(k)]);
    gB[static_cast<std::size_t>(k)] = lu.solve(b);
    gf[static_cast<std::size_t>(k)] = lu.solve(f);
  }
  data.QB = cumulative_integral(gB, h, Eigen::MatrixXd::Zero(dim, dim).eval());
  data.Qf = cumulative_integral(gf, h, Eigen::VectorXd::Zero(dim).eval());

  const Eigen::MatrixXd& end = data.M.back();
  data.C = end * (Eigen::MatrixXd::Identity(dim, dim) + data.QB.back());
  data.h = end * data.Qf.back();

  // Invertibility certificates for I + int_tau^t Phi(tau,u) B(u) du over a
  // coarse tau,t sub-lattice (both orientations).
  int stride = std::max(2, 2 * (steps / 32));
  std::vector<int> nodes;
  for (int k = 0; k < steps; k += stride) nodes.push_back(k);
  nodes.push_back(steps);
  double cert = std::numeric_limits<double>::infinity();
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(dim, dim);
  for (int tau : nodes)
    for (int t : nodes) {
      if (tau == t) continue;
      const Eigen::MatrixXd k_mat =
          eye + data.M[static_cast<std::size_t>(tau)] *
                    (data.QB[static_cast<std::size_t>(t)] - data.QB[static_cast<std::size_t>(tau)]);
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(k_mat);
      const double smin = svd.singularValues().minCoeff();
      if (smin < cert) cert = smin;
    }
  data.certificate = cert;
  return data;
}

// Lattice trajectory of one interval from its start value.
std::vector<Eigen::VectorXd> interval_lattice(const IntervalData& d, const Eigen::VectorXd& yn) {
  const int s = static_cast<int>(d.M.size()) - 1;
  const int dim = static_cast<int>(yn.size());
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(dim, dim);
  std::vector<Eigen::VectorXd> y(static_cast<std::size_t>(s) + 1);
  for (int k = 0; k <= s; ++k) {
    const std::size_t ks = static_cast<std::size_t>(k);
    y[ks] = d.M[ks] * ((eye + d.QB[ks]) * yn + d.Qf[ks]);
  }
  return y;
}

struct AssemblyResult {
  GridFunction trajectory;
  ResidualReport report;
};

// Builds the trajectory grid (samples_per_unit = steps) from integer values
// and interval data, plus the residual bookkeeping shared by every solver.
AssemblyResult assemble_trajectory(const LinearDepca& sys, Window window, int steps,
                                   const std::function<const IntervalData&(int)>& interval,
                                   const std::function<Eigen::VectorXd(int)>& integer_value) {
  AssemblyResult out{GridFunction(window, steps, sys.dim), {}};
  GridFunction& traj = out.trajectory;
  ResidualReport& rep = out.report;
  const double h = 1.0 / steps;

  for (int n = window.lo; n < window.hi; ++n) {
    const IntervalData& d = interval(n);
    const Eigen::VectorXd yn = integer_value(n);
    const auto lattice = interval_lattice(d, yn);
    for (int k = 0; k < steps; ++k) {
      auto dst = traj.value(n, k);
      for (int i = 0; i < sys.dim; ++i) dst[i] = lattice[static_cast<std::size_t>(k)](i);
    }
    auto ll = traj.left_limit(n + 1);
    for (int i = 0; i < sys.dim; ++i) ll[i] = lattice.back()(i);

    // ODE residual via central differences (O(h^2) estimator) and the sup of
    // the right-hand side, both on the RK4 lattice.
    double res = 0.0;
    for (int k = 1; k < steps; ++k) {
      const double t = n + k * h;
      const Eigen::VectorXd dy =
          (lattice[static_cast<std::size_t>(k + 1)] - lattice[static_cast<std::size_t>(k - 1)]) /
          (2.0 * h);
      const Eigen::VectorXd rhs =
          sys.A(t) * lattice[static_cast<std::size_t>(k)] + sys.B(t) * yn + sys.forcing(t);
      res = std::max(res, (dy - rhs).norm());
    }
    rep.per_interval.push_back(res);
    rep.sup_residual = std::max(rep.sup_residual, res);
    for (int k = 0; k <= steps; ++k) {
      const double t = clamped_time(n + k * h, n, sys.regularity);
      const Eigen::VectorXd rhs =
          sys.A(t) * lattice[static_cast<std::size_t>(k)] + sys.B(t) * yn + sys.forcing(t);
      rep.rhs_sup = std::max(rep.rhs_sup, rhs.norm());
    }

    const Eigen::VectorXd next = integer_value(n + 1);
    rep.difference_consistency =
        std::max(rep.difference_consistency, (next - (d.C * yn + d.h)).norm());
  }
  rep.continuity_defect = norm_report(traj).jump_bound;
  return out;
}

// error_allowance: additive budget for the construction's own numerical
// error (sum truncation, iteration tolerance); the modulus of the computed
// trajectory can exceed the modulus of the exact solution by twice that.
void run_uc_check(ResidualReport& rep, const GridFunction& traj, double error_allowance) {
  rep.uc_bound_checked = true;
  const auto table = uc_modulus(traj, default_deltas(traj.samples_per_unit())).modulus_table;
  rep.uc_bound_ok = true;
  for (const auto& [delta, omega] : table)
    if (omega > 2.0 * rep.rhs_sup * delta + 2.0 * error_allowance + 1e-12)
      rep.uc_bound_ok = false;
}

AASequence to_sequence(Window window, int dim,
                       const std::function<Eigen::VectorXd(int)>& value) {
  AASequence s(Window{window.lo, window.hi}, dim);
  for (int n = window.lo; n <= window.hi; ++n) {
    auto dst = s.value(n);
    const Eigen::VectorXd v = value(n);
    for (int i = 0; i < dim; ++i) dst[i] = v(i);
  }
  return s;
}

}  // namespace

LinearDepca scalar_system(const std::function<double(double)>& a,
                          const std::function<double(double)>& b,
                          const std::function<double(double)>& f,
                          CoefficientRegularity regularity) {
  LinearDepca sys;
  sys.dim = 1;
  sys.A = [a](double t) { return Eigen::MatrixXd::Constant(1, 1, a(t)); };
  sys.B = [b](double t) { return Eigen::MatrixXd::Constant(1, 1, b(t)); };
  sys.forcing = [f](double t) { return Eigen::VectorXd::Constant(1, f(t)); };
  sys.regularity = regularity;
  return sys;
}

FundamentalMatrix::FundamentalMatrix(const MatrixFn& A, int dim, int base, int steps,
                                     CoefficientRegularity regularity)
    : base_(base), steps_(steps), dim_(dim) {
  validate_steps(steps);
  if (dim < 1) throw ConfigError("FundamentalMatrix: dim must be >= 1");
  from_base_ = rk4_fundamental(A, dim, base, steps, regularity);
}

int FundamentalMatrix::node_index(double t) const {
  const double pos = (t - base_) * steps_;
  const long long k = std::llround(pos);
  if (k < 0 || k > steps_ || std::abs(pos - static_cast<double>(k)) > 1e-9 * steps_)
    throw DomainError("FundamentalMatrix: time " + std::to_string(t) +
                      " is not on the RK4 lattice of [" + std::to_string(base_) + ", " +
                      std::to_string(base_ + 1) + "]");
  return static_cast<int>(k);
}

Eigen::MatrixXd FundamentalMatrix::at(double t, double s) const {
  const int kt = node_index(t);
  const int ks = node_index(s);
  if (kt == ks) return Eigen::MatrixXd::Identity(dim_, dim_);
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(from_base_[static_cast<std::size_t>(ks)]);
  return from_base_[static_cast<std::size_t>(kt)] * lu.inverse();
}

const Eigen::MatrixXd& DifferenceSystem::C(int n) const {
  if (!window.contains_piece(n)) throw DomainError("DifferenceSystem::C: n outside window");
  return coeff[static_cast<std::size_t>(n - window.lo)];
}

const Eigen::VectorXd& DifferenceSystem::h(int n) const {
  if (!window.contains_piece(n)) throw DomainError("DifferenceSystem::h: n outside window");
  return forcing[static_cast<std::size_t>(n - window.lo)];
}

double DifferenceSystem::certificate(int n) const {
  if (!window.contains_piece(n)) throw DomainError("DifferenceSystem::certificate: n outside window");
  return certificates[static_cast<std::size_t>(n - window.lo)];
}

DifferenceSystem reduce_to_difference(const LinearDepca& sys, Window window, int steps) {
  validate_steps(steps);
  if (window.pieces() < 1) throw DomainError("reduce_to_difference: empty window");
  sample_coefficients(sys, window);
  DifferenceSystem out;
  out.window = window;
  out.dim = sys.dim;
  out.steps = steps;
  for (int n = window.lo; n < window.hi; ++n) {
    IntervalData d = build_interval(sys, n, steps);
    if (d.certificate <= kCertTolerance)
      throw IllPosedError("reduce_to_difference: invertibility certificate " +
                          std::to_string(d.certificate) + " on interval [" + std::to_string(n) +
                          ", " + std::to_string(n + 1) + "]");
    out.coeff.push_back(std::move(d.C));
    out.forcing.push_back(std::move(d.h));
    out.certificates.push_back(d.certificate);
  }
  return out;
}

DepcaSolution solve_ivp(const LinearDepca& sys, const Eigen::VectorXd& y0, Window window,
                        int steps, std::optional<int> anchor_opt) {
  validate_steps(steps);
  if (window.pieces() < 1) throw DomainError("solve_ivp: empty window");
  if (y0.size() != sys.dim) throw ShapeError("solve_ivp: y0 has wrong dimension");
  const int anchor = anchor_opt.value_or(window.lo);
  if (anchor < window.lo || anchor > window.hi)
    throw DomainError("solve_ivp: anchor must lie in the window");
  sample_coefficients(sys, window);

  std::map<int, IntervalData> intervals;
  auto interval = [&](int n) -> const IntervalData& {
    auto it = intervals.find(n);
    if (it == intervals.end()) it = intervals.emplace(n, build_interval(sys, n, steps)).first;
    return it->second;
  };

  std::map<int, Eigen::VectorXd> y;
  y[anchor] = y0;
  for (int n = anchor; n < window.hi; ++n) {
    const IntervalData& d = interval(n);
    y[n + 1] = d.C * y[n] + d.h;
  }
  for (int n = anchor - 1; n >= window.lo; --n) {
    const IntervalData& d = interval(n);
    if (d.certificate < kBackwardCertFloor)
      throw IllPosedError("solve_ivp: backward solve on [" + std::to_string(n) + ", " +
                          std::to_string(n + 1) + "] requires certificate >= 1e-8, have " +
                          std::to_string(d.certificate));
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(d.C);
    y[n] = lu.solve(y[n + 1] - d.h);
  }

  auto value_at = [&y](int n) { return y.at(n); };
  auto assembled = assemble_trajectory(sys, window, steps, interval, value_at);
  DepcaSolution sol{std::move(assembled.trajectory),
                    to_sequence(window, sys.dim, value_at),
                    std::move(assembled.report)};
  return sol;
}

DepcaSolution bounded_solution(const LinearDepca& sys, Window window, int steps, double trunc_eps,
                               bool uc_check) {
  validate_steps(steps);
  if (window.pieces() < 1) throw DomainError("bounded_solution: empty window");
  if (!(trunc_eps > 0.0 && trunc_eps < 1.0))
    throw ConfigError("bounded_solution: trunc_eps must lie in (0, 1)");
  sample_coefficients(sys, window);
  const int dim = sys.dim;

  std::map<int, IntervalData> intervals;
  auto interval = [&](int n) -> const IntervalData& {
    auto it = intervals.find(n);
    if (it == intervals.end()) it = intervals.emplace(n, build_interval(sys, n, steps)).first;
    return it->second;
  };

  // Scalar/diagonal dichotomy verification over the window.
  double offdiag = 0.0;
  for (int n = window.lo; n < window.hi; ++n) {
    const Eigen::MatrixXd& c = interval(n).C;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (i != j) offdiag = std::max(offdiag, std::abs(c(i, j)));
  }
  if (offdiag > 1e-10)
    throw DichotomyError(
        "bounded_solution: difference coefficients are not diagonal (off-diagonal mass " +
        std::to_string(offdiag) + "); general dichotomies are unsupported");

  std::vector<bool> stable(static_cast<std::size_t>(dim));
  std::vector<double> rates(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int n = window.lo; n < window.hi; ++n) {
      const double c = std::abs(interval(n).C(i, i));
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi <= 1.0 - kDichotomyMargin) {
      stable[static_cast<std::size_t>(i)] = true;
      rates[static_cast<std::size_t>(i)] = hi;
    } else if (lo >= 1.0 + kDichotomyMargin) {
      stable[static_cast<std::size_t>(i)] = false;
      rates[static_cast<std::size_t>(i)] = lo;
    } else {
      throw DichotomyError("bounded_solution: direction " + std::to_string(i) +
                           " has |C| in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                           "], neither uniform contraction nor expansion");
    }
  }

  const int max_terms = 100000;
  auto stable_sum = [&](int i, int n) {
    double acc = 0.0, prod = 1.0;
    for (int k = n - 1; k > n - max_terms; --k) {
      const IntervalData& d = interval(k);
      acc += prod * d.h(i);
      prod *= d.C(i, i);
      if (std::abs(prod) < trunc_eps) return acc;
    }
    throw DichotomyError("bounded_solution: stable sum did not truncate within " +
                         std::to_string(max_terms) + " terms");
  };
  auto unstable_sum = [&](int i, int n) {
    double acc = 0.0, prod = 1.0;
    for (int k = n; k < n + max_terms; ++k) {
      const IntervalData& d = interval(k);
      prod /= d.C(i, i);
      acc -= prod * d.h(i);
      if (std::abs(prod) < trunc_eps) return acc;
    }
    throw DichotomyError("bounded_solution: unstable sum did not truncate within " +
                         std::to_string(max_terms) + " terms");
  };

  std::map<int, Eigen::VectorXd> y;
  for (int n = window.lo; n <= window.hi; ++n) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i)
      v(i) = stable[static_cast<std::size_t>(i)] ? stable_sum(i, n) : unstable_sum(i, n);
    y[n] = std::move(v);
  }

  auto value_at = [&y](int n) { return y.at(n); };
  auto assembled = assemble_trajectory(sys, window, steps, interval, value_at);
  assembled.report.dichotomy_rates = rates;
  if (uc_check) run_uc_check(assembled.report, assembled.trajectory,
                           trunc_eps * (1.0 + norm_report(assembled.trajectory).sup_norm));
  DepcaSolution sol{std::move(assembled.trajectory),
                    to_sequence(window, sys.dim, value_at),
                    std::move(assembled.report)};
  return sol;
}

DepcaSolution lasota_wazewska(const LasotaWazewska& model, Window window,
                              const LasotaWazewskaOptions& opts) {
  validate_steps(opts.steps);
  if (window.pieces() < 1) throw DomainError("lasota_wazewska: empty window");
  if (model.gamma < 0.0) throw ConfigError("lasota_wazewska: gamma must be >= 0");
  if (opts.max_iter < 1) throw ConfigError("lasota_wazewska: max_iter must be >= 1");
  if (!(opts.tol > 0.0)) throw ConfigError("lasota_wazewska: tol must be positive");

  // Sampled verification of the model hypotheses and the a-priori
  // contraction estimate kappa = gamma sup(p) / inf(delta).
  double delta_min = std::numeric_limits<double>::infinity();
  double p_sup = 0.0;
  for (int n = window.lo; n < window.hi; ++n)
    for (int j = 0; j <= 64; ++j) {
      const double t = n + static_cast<double>(j) / 64.0;
      const double dv = model.decay(t);
      const double pv = model.production(t);
      if (!std::isfinite(dv) || !std::isfinite(pv))
        throw ConfigError("lasota_wazewska: non-finite coefficient at t=" + std::to_string(t));
      if (pv < 0.0) throw ConfigError("lasota_wazewska: production must be >= 0");
      delta_min = std::min(delta_min, dv);
      p_sup = std::max(p_sup, pv);
    }
  if (!(delta_min > 0.0))
    throw ConfigError("lasota_wazewska: inf(delta) must be positive, sampled " +
                      std::to_string(delta_min));
  const double kappa = model.gamma * p_sup / delta_min;
  if (kappa >= 1.0)
    throw ConfigError("lasota_wazewska: contraction estimate kappa = " + std::to_string(kappa) +
                      " >= 1; the iteration is not certified to contract");

  // Extended integer range so y_k([t]) is available wherever the bounded
  // -solution sums reach.
  const double rho = std::exp(-delta_min);
  const int ext = static_cast<int>(std::ceil(std::log(opts.trunc_eps) / std::log(rho))) + 2;
  const Window extended{window.lo - ext, window.hi + ext};

  std::vector<double> iterate(static_cast<std::size_t>(extended.count()), 0.0);
  auto lookup = [&iterate, extended](double t) {
    int n = static_cast<int>(std::floor(t));
    n = std::clamp(n, extended.lo, extended.hi);
    return iterate[static_cast<std::size_t>(n - extended.lo)];
  };

  LinearDepca linear;
  linear.dim = 1;
  linear.A = [&model](double t) { return Eigen::MatrixXd::Constant(1, 1, -model.decay(t)); };
  linear.B = [](double) { return Eigen::MatrixXd::Zero(1, 1); };
  const double gamma = model.gamma;
  linear.forcing = [&model, &lookup, gamma](double t) {
    return Eigen::VectorXd::Constant(1, model.production(t) * std::exp(-gamma * lookup(t)));
  };
  linear.regularity = CoefficientRegularity::piecewise_at_integers;

  std::vector<double> trace;
  std::optional<DepcaSolution> last;
  for (int it = 0; it < opts.max_iter; ++it) {
    DepcaSolution next =
        bounded_solution(linear, extended, opts.steps, opts.trunc_eps, /*uc_check=*/false);
    double diff = 0.0;
    for (int n = extended.lo; n <= extended.hi; ++n) {
      const std::size_t idx = static_cast<std::size_t>(n - extended.lo);
      diff = std::max(diff, std::abs(next.integer_values.value_scalar(n) - iterate[idx]));
      iterate[idx] = next.integer_values.value_scalar(n);
    }
    trace.push_back(diff);
    last = std::move(next);
    if (diff <= opts.tol) break;
  }
  if (trace.empty() || trace.back() > opts.tol) {
    const double ratio = trace.size() >= 2 ? trace.back() / trace[trace.size() - 2]
                                           : std::numeric_limits<double>::quiet_NaN();
    throw ConvergenceError("lasota_wazewska: no convergence within " +
                           std::to_string(opts.max_iter) + " iterations (last sup-difference " +
                           std::to_string(trace.back()) + ", last contraction ratio " +
                           std::to_string(ratio) + ")");
  }

  DepcaSolution& full = *last;
  run_uc_check(full.residual_report, full.trajectory, opts.tol);
  DepcaSolution sol{restrict_window(full.trajectory, window),
                    AASequence(window, 1),
                    std::move(full.residual_report)};
  for (int n = window.lo; n <= window.hi; ++n)
    sol.integer_values.value(n)[0] = full.integer_values.value_scalar(n);
  sol.residual_report.iteration_trace = std::move(trace);
  sol.residual_report.contraction_estimate = kappa;
  return sol;
}

}  // namespace pcz::depca
