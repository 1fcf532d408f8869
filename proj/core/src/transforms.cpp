#include "pcz/transforms.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace pcz {

namespace {

// Trims trailing zeros so kernel names are stable ("gauss:0.5", "gauss:4").
std::string trim_number(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// Accumulates w * phi(t - s_node) * f[node] into out, node weights from the
// Newton-Cotes family on `cells` lattice subintervals of width h starting at
// s0. f values come from `sample(i)`; for a single subinterval the midpoint
// value of f is the representation's linear interpolant.
class PanelAccumulator {
public:
  PanelAccumulator(std::span<double> out, const std::function<double(double)>& phi, double t)
      : out_(out), phi_(phi), t_(t) {}

  void add(double s0, double h, int cells,
           const std::function<std::span<const double>(int)>& sample) {
    if (cells <= 0) return;
    if (cells == 1) {
      // Simpson on one subinterval; the midpoint uses the in-piece linear
      // interpolant, which is exact for the stored representation.
      const auto a = sample(0);
      const auto b = sample(1);
      const double wa = h / 6.0 * phi_(t_ - s0);
      const double wm = 4.0 * h / 6.0 * phi_(t_ - (s0 + 0.5 * h));
      const double wb = h / 6.0 * phi_(t_ - (s0 + h));
      for (std::size_t i = 0; i < out_.size(); ++i)
        out_[i] += wa * a[i] + wm * (0.5 * (a[i] + b[i])) + wb * b[i];
      return;
    }
    int simpson_cells = cells;
    bool tail38 = false;
    if (cells % 2 != 0) {
      simpson_cells = cells - 3;  // >= 0 and even
      tail38 = true;
    }
    for (int i = 0; i <= simpson_cells; ++i) {
      double w = (i == 0 || i == simpson_cells) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      if (simpson_cells == 0) break;
      accumulate(sample(i), h / 3.0 * w * phi_(t_ - (s0 + i * h)));
    }
    if (tail38) {
      static constexpr double w38[4] = {1.0, 3.0, 3.0, 1.0};
      for (int i = 0; i <= 3; ++i) {
        const int node = simpson_cells + i;
        accumulate(sample(node), 3.0 * h / 8.0 * w38[i] * phi_(t_ - (s0 + node * h)));
      }
    }
  }

private:
  void accumulate(std::span<const double> v, double w) {
    for (std::size_t i = 0; i < out_.size(); ++i) out_[i] += w * v[i];
  }

  std::span<double> out_;
  const std::function<double(double)>& phi_;
  double t_;
};

// Integrates phi(t - s) f(s) over the full closed piece [m, m+1] using the
// M lattice samples and the left limit as the closed right endpoint.
void add_full_piece(PanelAccumulator& acc, const GridFunction& f, int m) {
  const int M = f.samples_per_unit();
  acc.add(static_cast<double>(m), 1.0 / M, M, [&f, m, M](int i) {
    return i < M ? f.value(m, i) : f.left_limit(m + 1);
  });
}

// Integrates phi(t - s) f(s) over the partial piece [n, n + j/M], j >= 1.
void add_partial_piece(PanelAccumulator& acc, const GridFunction& f, int n, int j) {
  const int M = f.samples_per_unit();
  acc.add(static_cast<double>(n), 1.0 / M, j,
          [&f, n](int i) { return f.value(n, i); });
}

void require_even_density(const GridFunction& f, const char* op) {
  if (f.samples_per_unit() % 2 != 0)
    throw ConfigError(std::string(op) + ": samples_per_unit must be even for Simpson panels");
}

void require_positive_eps(double eps, const char* op) {
  if (!(eps > 0.0)) throw ConfigError(std::string(op) + ": trunc_eps must be positive");
}

}  // namespace

Kernel Kernel::gauss_heat(double t) {
  if (!(t > 0.0)) throw ConfigError("gauss_heat: diffusion time must be positive");
  Kernel k;
  const double norm = 1.0 / std::sqrt(4.0 * std::numbers::pi * t);
  const double inv4t = 1.0 / (4.0 * t);
  k.rule = [norm, inv4t](double x) { return norm * std::exp(-x * x * inv4t); };
  k.support = Support::full_line;
  const double scale = 1.0 / (2.0 * std::sqrt(t));
  k.l1_tail_bound = [scale](double r) { return std::erfc(r * scale); };
  k.l1_norm = 1.0;
  k.name = "gauss:" + trim_number(t);
  return k;
}

Kernel Kernel::exp_decay() {
  Kernel k;
  k.rule = [](double s) { return s < 0.0 ? 0.0 : std::exp(-s); };
  k.support = Support::half_line;
  k.l1_tail_bound = [](double r) { return std::exp(-r); };
  k.l1_norm = 1.0;
  k.name = "exp";
  return k;
}

int truncation_radius(const Kernel& kernel, double eps) {
  if (!(eps > 0.0)) throw ConfigError("truncation_radius: eps must be positive");
  for (int r = 1; r <= 4096; ++r)
    if (kernel.l1_tail_bound(static_cast<double>(r)) <= eps) return r;
  throw ConfigError("truncation_radius: tail bound does not reach eps within R = 4096");
}

GridFunction conv_full_line(const Kernel& kernel, const GridFunction& f, double trunc_eps) {
  if (kernel.support != Kernel::Support::full_line)
    throw ConfigError("conv_full_line: kernel must have full-line support");
  require_even_density(f, "conv_full_line");
  require_positive_eps(trunc_eps, "conv_full_line");
  f.validate();

  const int R = truncation_radius(kernel, trunc_eps);
  const Window out_win{f.window().lo + R, f.window().hi - R};
  if (out_win.pieces() < 1)
    throw DomainError("conv_full_line: window of " + std::to_string(f.window().pieces()) +
                      " pieces is insufficient, truncation requires radius R = " +
                      std::to_string(R) + " on both sides");

  GridFunction out(out_win, f.samples_per_unit(), f.dim());
  const int M = f.samples_per_unit();
  auto eval_at = [&](int n, int j, std::span<double> dst) {
    // Integration pieces cover [n - R, n + R (+1 if j > 0)].
    const double t = out.time_at(n, j);
    PanelAccumulator acc(dst, kernel.rule, t);
    const int hi_piece = (j == 0) ? n + R : n + R + 1;
    for (int m = n - R; m < hi_piece; ++m) add_full_piece(acc, f, m);
  };
  for (int n = out_win.lo; n < out_win.hi; ++n)
    for (int j = 0; j < M; ++j) eval_at(n, j, out.value(n, j));
  // The convolution of an L1 kernel is continuous: interior left limits equal
  // the samples; the final one is evaluated directly at t = out_win.hi.
  for (int n = out_win.lo + 1; n < out_win.hi; ++n) {
    auto src = out.value(n, 0);
    auto dst = out.left_limit(n);
    for (int i = 0; i < f.dim(); ++i) dst[i] = src[i];
  }
  eval_at(out_win.hi, 0, out.left_limit(out_win.hi));
  return out;
}

GridFunction conv_causal(const Kernel& kernel, const GridFunction& f, double trunc_eps) {
  if (kernel.support != Kernel::Support::half_line)
    throw ConfigError("conv_causal: kernel must have half-line support");
  require_even_density(f, "conv_causal");
  require_positive_eps(trunc_eps, "conv_causal");
  f.validate();

  const int R = truncation_radius(kernel, trunc_eps);
  const Window out_win{f.window().lo + R, f.window().hi};
  if (out_win.pieces() < 1)
    throw DomainError("conv_causal: window insufficient, truncation requires radius R = " +
                      std::to_string(R) + " on the left");

  GridFunction out(out_win, f.samples_per_unit(), f.dim());
  const int M = f.samples_per_unit();
  auto eval_at = [&](int n, int j, std::span<double> dst) {
    const double t = out.time_at(n, j);
    PanelAccumulator acc(dst, kernel.rule, t);
    for (int m = n - R; m < n; ++m) add_full_piece(acc, f, m);
    if (j > 0) add_partial_piece(acc, f, n, j);
  };
  for (int n = out_win.lo; n < out_win.hi; ++n)
    for (int j = 0; j < M; ++j) eval_at(n, j, out.value(n, j));
  for (int n = out_win.lo + 1; n < out_win.hi; ++n) {
    auto src = out.value(n, 0);
    auto dst = out.left_limit(n);
    for (int i = 0; i < f.dim(); ++i) dst[i] = src[i];
  }
  eval_at(out_win.hi, 0, out.left_limit(out_win.hi));
  return out;
}

GridFunction conv_halfline_asymptotic(const Kernel& kernel, const GridFunction& f,
                                      double trunc_eps) {
  if (kernel.support != Kernel::Support::half_line)
    throw ConfigError("conv_halfline_asymptotic: kernel must have half-line support");
  if (f.window().lo != 0)
    throw DomainError("conv_halfline_asymptotic: f must be defined on [0, n_hi]");
  require_even_density(f, "conv_halfline_asymptotic");
  require_positive_eps(trunc_eps, "conv_halfline_asymptotic");
  f.validate();

  GridFunction out(f.window(), f.samples_per_unit(), f.dim());
  const int M = f.samples_per_unit();
  auto eval_at = [&](int n, int j, std::span<double> dst) {
    const double t = out.time_at(n, j);
    PanelAccumulator acc(dst, kernel.rule, t);
    for (int m = 0; m < n; ++m) add_full_piece(acc, f, m);
    if (j > 0) add_partial_piece(acc, f, n, j);
  };
  for (int n = 0; n < f.window().hi; ++n)
    for (int j = 0; j < M; ++j) eval_at(n, j, out.value(n, j));
  for (int n = 1; n < f.window().hi; ++n) {
    auto src = out.value(n, 0);
    auto dst = out.left_limit(n);
    for (int i = 0; i < f.dim(); ++i) dst[i] = src[i];
  }
  eval_at(f.window().hi, 0, out.left_limit(f.window().hi));
  return out;
}

double kernel_mass(const Kernel& kernel, double tail_eps, double target_h) {
  const int r = truncation_radius(kernel, tail_eps);
  const double lo = kernel.support == Kernel::Support::half_line ? 0.0 : -static_cast<double>(r);
  const double hi = static_cast<double>(r);
  int cells = static_cast<int>(std::ceil((hi - lo) / target_h));
  if (cells % 2 != 0) ++cells;
  const double h = (hi - lo) / cells;
  double mass = 0.0;
  for (int i = 0; i <= cells; ++i) {
    const double w = (i == 0 || i == cells) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    mass += w * kernel.rule(lo + i * h);
  }
  return mass * h / 3.0;
}

GridFunction heat_solve(const GridFunction& u0, double t, double trunc_eps) {
  if (!(t > 0.0)) throw DomainError("heat_solve: diffusion time must be positive");
  require_positive_eps(trunc_eps, "heat_solve");
  const Kernel kernel = Kernel::gauss_heat(t);
  const double mass = kernel_mass(kernel, 1e-12, std::min(1.0 / 64.0, std::sqrt(t) / 16.0));
  if (std::abs(mass - 1.0) > 1e-10)
    throw NumericalContractError("heat_solve: kernel mass " + std::to_string(mass) +
                                 " deviates from 1 beyond 1e-10");
  return conv_full_line(kernel, u0, trunc_eps);
}

LipschitzMap make_scalar_map(const std::function<double(double, double)>& fn, double lipschitz) {
  LipschitzMap m;
  m.fn = [fn](double t, std::span<const double> x, std::span<double> y) { y[0] = fn(t, x[0]); };
  m.lipschitz = lipschitz;
  m.out_dim = 1;
  return m;
}

GridFunction compose_lipschitz(const LipschitzMap& map, const GridFunction& x) {
  if (map.lipschitz < 0.0) throw ConfigError("compose_lipschitz: Lipschitz constant must be >= 0");
  if (map.out_dim < 1) throw ConfigError("compose_lipschitz: out_dim must be >= 1");
  GridFunction out(x.window(), x.samples_per_unit(), map.out_dim);
  for (int n = x.window().lo; n < x.window().hi; ++n)
    for (int j = 0; j < x.samples_per_unit(); ++j)
      map.fn(x.time_at(n, j), x.value(n, j), out.value(n, j));
  for (int n = x.window().lo + 1; n <= x.window().hi; ++n)
    map.fn(static_cast<double>(n), x.left_limit(n), out.left_limit(n));
  return out;
}

}  // namespace pcz
