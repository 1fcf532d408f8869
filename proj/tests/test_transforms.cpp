#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "pcz/diagnostics.hpp"
#include "pcz/extension.hpp"
#include "pcz/signals.hpp"
#include "pcz/transforms.hpp"

using namespace pcz;

namespace {

GridFunction sin_two_pi(Window w, int m) {
  return GridFunction::from_continuous_scalar(
      w, m, [](double t) { return std::sin(2.0 * std::numbers::pi * t); });
}

double max_dev(const GridFunction& f, const std::function<double(double)>& ref, int component = 0) {
  double worst = 0.0;
  for (int n = f.window().lo; n < f.window().hi; ++n)
    for (int j = 0; j < f.samples_per_unit(); ++j)
      worst = std::max(worst, std::abs(f.value(n, j)[component] - ref(f.time_at(n, j))));
  for (int n = f.window().lo + 1; n <= f.window().hi; ++n)
    worst = std::max(worst, std::abs(f.left_limit(n)[component] - ref(static_cast<double>(n))));
  return worst;
}

}  // namespace

TEST_CASE("kernel metadata") {
  for (double t : {0.1, 0.5, 1.0, 4.0})
    CHECK(std::abs(kernel_mass(Kernel::gauss_heat(t)) - 1.0) <= 1e-10);
  CHECK(std::abs(kernel_mass(Kernel::exp_decay()) - 1.0) <= 1e-10);
  CHECK(truncation_radius(Kernel::gauss_heat(0.5), 1e-8) == 6);
  CHECK(truncation_radius(Kernel::exp_decay(), 1e-8) == 19);
  CHECK_THROWS_AS((void)Kernel::gauss_heat(0.0), ConfigError);
}

TEST_CASE("full-line convolution preserves constants") {
  const GridFunction c = GridFunction::constant_scalar({-16, 16}, 64, 2.0);
  const GridFunction out = conv_full_line(Kernel::gauss_heat(0.5), c, 1e-8);
  CHECK(max_dev(out, [](double) { return 2.0; }) <= 1e-8 * (1.0 + 2.0));
}

TEST_CASE("Gaussian convolution of sin(2 pi t) is the Fourier multiplier") {
  const GridFunction f = sin_two_pi({-32, 32}, 128);
  const GridFunction out = conv_full_line(Kernel::gauss_heat(0.5), f, 1e-8);
  const double factor = std::exp(-2.0 * std::numbers::pi * std::numbers::pi);
  CHECK(max_dev(out, [factor](double t) {
          return factor * std::sin(2.0 * std::numbers::pi * t);
        }) <= 1e-6);

  // second quadrature route at one point: fine Simpson on the closed form
  const double t0 = 1.25;
  const Kernel k = Kernel::gauss_heat(0.5);
  const double oracle = oracles::fine_simpson(
      [&k, t0](double s) { return k.rule(t0 - s) * std::sin(2.0 * std::numbers::pi * s); },
      t0 - 8.0, t0 + 8.0, 4096);
  CHECK(out.eval_scalar(1.25) == doctest::Approx(oracle).epsilon(1e-9));
}

TEST_CASE("full-line convolution acts componentwise on vector data") {
  const GridFunction f = GridFunction::from_continuous({-16, 16}, 64, 2,
                                                       [](double t, std::span<double> v) {
                                                         v[0] = std::sin(t);
                                                         v[1] = 0.5;
                                                       });
  const GridFunction out = conv_full_line(Kernel::gauss_heat(0.5), f, 1e-8);
  const double factor = std::exp(-0.5);
  CHECK(max_dev(out, [factor](double t) { return factor * std::sin(t); }, 0) <= 1e-6);
  CHECK(max_dev(out, [](double) { return 0.5; }, 1) <= 1e-7);
}

TEST_CASE("full-line convolution smooths step inputs") {
  const GridFunction stp = psi_step_grid({-32, 32}, 64);
  const GridFunction out = conv_full_line(Kernel::gauss_heat(0.5), stp, 1e-8);
  CHECK(norm_report(out).jump_bound <= 10.0 * 1e-8);
}

TEST_CASE("full-line convolution reports the required radius on tiny windows") {
  const GridFunction c = GridFunction::constant_scalar({-2, 2}, 8, 1.0);
  CHECK_THROWS_WITH_AS((void)conv_full_line(Kernel::gauss_heat(0.5), c, 1e-8),
                       doctest::Contains("R = 6"), DomainError);
}

TEST_CASE("convolution is linear within 2 trunc_eps") {
  const double eps = 1e-8;
  const Kernel k = Kernel::gauss_heat(0.5);
  const GridFunction f = psi_step_grid({-24, 24}, 64);
  const GridFunction g = sin_two_pi({-24, 24}, 64);
  const GridFunction lhs = conv_full_line(k, add(scale(f, 1.75), g), eps);
  const GridFunction rhs = add(scale(conv_full_line(k, f, eps), 1.75), conv_full_line(k, g, eps));
  double worst = 0.0;
  for (int n = lhs.window().lo; n < lhs.window().hi; ++n)
    for (int j = 0; j < lhs.samples_per_unit(); ++j)
      worst = std::max(worst, std::abs(lhs.value(n, j)[0] - rhs.value(n, j)[0]));
  CHECK(worst <= 2.0 * eps);
}

TEST_CASE("causal convolution with the exponential kernel") {
  const GridFunction c = GridFunction::constant_scalar({-32, 32}, 64, 3.0);
  const GridFunction out = conv_causal(Kernel::exp_decay(), c, 1e-8);
  CHECK(out.window().lo == -13);
  CHECK(out.window().hi == 32);
  CHECK(max_dev(out, [](double) { return 3.0; }) <= 1e-8 * (1.0 + 3.0));

  // e^{it} as a (cos, sin) pair maps to e^{it}/(1+i)
  const GridFunction rot = GridFunction::from_continuous({-32, 32}, 64, 2,
                                                         [](double t, std::span<double> v) {
                                                           v[0] = std::cos(t);
                                                           v[1] = std::sin(t);
                                                         });
  const GridFunction lrot = conv_causal(Kernel::exp_decay(), rot, 1e-8);
  const double e0 =
      max_dev(lrot, [](double t) { return 0.5 * (std::cos(t) + std::sin(t)); }, 0);
  const double e1 =
      max_dev(lrot, [](double t) { return 0.5 * (std::sin(t) - std::cos(t)); }, 1);
  CHECK(e0 <= 1e-6);
  CHECK(e1 <= 1e-6);

  // smoothing of steps
  const GridFunction stp = psi_step_grid({-32, 32}, 64);
  CHECK(norm_report(conv_causal(Kernel::exp_decay(), stp, 1e-8)).jump_bound <= 1e-6);

  CHECK_THROWS_AS((void)conv_causal(Kernel::gauss_heat(0.5), c, 1e-8), ConfigError);
}

TEST_CASE("half-line asymptotic convolution") {
  const Kernel k = Kernel::exp_decay();
  const GridFunction zero({0, 8}, 64, 1);
  const GridFunction z = conv_halfline_asymptotic(k, zero, 1e-8);
  for (int n = 0; n < 8; ++n)
    for (int j = 0; j < 64; ++j) CHECK(z.value(n, j)[0] == 0.0);

  const GridFunction one = GridFunction::constant_scalar({0, 16}, 64, 1.0);
  CHECK(max_dev(conv_halfline_asymptotic(k, one, 1e-8),
                [](double t) { return 1.0 - std::exp(-t); }) <= 1e-6);

  const GridFunction decay = GridFunction::from_continuous_scalar(
      {0, 16}, 64, [](double t) { return std::exp(-t); });
  CHECK(max_dev(conv_halfline_asymptotic(k, decay, 1e-8),
                [](double t) { return t * std::exp(-t); }) <= 1e-6);

  const GridFunction shifted = GridFunction::constant_scalar({1, 8}, 64, 1.0);
  CHECK_THROWS_AS((void)conv_halfline_asymptotic(k, shifted, 1e-8), DomainError);
}

TEST_CASE("heat solve") {
  const GridFunction u0 = GridFunction::from_continuous_scalar(
      {-32, 32}, 64, [](double x) { return std::sin(x); });
  const GridFunction u = heat_solve(u0, 0.5, 1e-8);
  const double factor = std::exp(-0.5);
  CHECK(max_dev(u, [factor](double x) { return factor * std::sin(x); }) <= 1e-6);

  CHECK_THROWS_AS((void)heat_solve(u0, 0.0, 1e-8), DomainError);
  CHECK_THROWS_AS((void)heat_solve(u0, -1.0, 1e-8), DomainError);

  // constants preserved within the error contract
  const GridFunction c0 = GridFunction::constant_scalar({-16, 16}, 64, 2.5);
  const GridFunction uc = heat_solve(c0, 1.0, 1e-6);
  CHECK(max_dev(uc, [](double) { return 2.5; }) <= 1e-6 * (1.0 + 2.5));

  // sample maximum principle on the psi linear extension
  const GridFunction lin = linear_extension(psi_sequence({-34, 34}), 64, {-32, 32});
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double x : lin.interior_data()) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  const GridFunction ul = heat_solve(lin, 0.5, 1e-8);
  for (double x : ul.interior_data()) {
    CHECK(x >= lo - 1e-8);
    CHECK(x <= hi + 1e-8);
  }
}

TEST_CASE("compose_lipschitz") {
  const GridFunction x = psi_step_grid({-16, 16}, 32);

  const LipschitzMap ident = make_scalar_map([](double, double v) { return v; }, 1.0);
  const GridFunction same = compose_lipschitz(ident, x);
  CHECK(same.interior_data() == x.interior_data());
  CHECK(same.left_limit_data() == x.left_limit_data());

  const LipschitzMap sine = make_scalar_map([](double, double v) { return std::sin(v); }, 1.0);
  const GridFunction y = compose_lipschitz(sine, x);
  for (int n = -16; n < 16; ++n) CHECK(y.value(n, 5)[0] == std::sin(x.value(n, 5)[0]));
  for (int n = -15; n <= 16; ++n) CHECK(y.left_limit(n)[0] == std::sin(x.left_limit(n)[0]));
}

TEST_CASE("autonomous Lipschitz composition contracts recurrence defects") {
  const GridFunction x = psi_step_grid({-32, 32}, 32);
  const LipschitzMap sine = make_scalar_map([](double, double v) { return std::sin(v); }, 1.0);
  const LipschitzMap half = make_scalar_map([](double, double v) { return 0.5 * v + 1.0; }, 0.5);
  for (const auto& [map, name] :
       std::initializer_list<std::pair<const LipschitzMap&, const char*>>{{sine, "sin"},
                                                                          {half, "affine"}}) {
    const GridFunction y = compose_lipschitz(map, x);
    for (int s = 1; s <= 8; ++s) {
      const ShiftDefect dx = recurrence_defect(x, s, {-8, 8});
      const ShiftDefect dy = recurrence_defect(y, s, {-8, 8});
      CHECK(dy.forward <= map.lipschitz * dx.forward + 1e-12);
      CHECK(dy.backward <= map.lipschitz * dx.backward + 1e-12);
    }
  }
}

TEST_CASE("convolution defect contraction across fixtures") {
  const Kernel k = Kernel::gauss_heat(0.5);
  const double eps = 1e-8;
  std::vector<GridFunction> fixtures;
  fixtures.push_back(sin_two_pi({-32, 32}, 64));
  fixtures.push_back(psi_step_grid({-32, 32}, 64));
  fixtures.push_back(linear_extension(noise_sequence({-34, 34}), 64, {-32, 32}));
  for (const auto& f : fixtures) {
    const GridFunction lf = conv_full_line(k, f, eps);
    const double slack = 2.0 * eps * norm_report(f).sup_norm;
    for (int s = 1; s <= 16; ++s) {
      const ShiftDefect df = recurrence_defect(f, s, {-10, 10});
      const ShiftDefect dl = recurrence_defect(lf, s, {-10, 10});
      CHECK(dl.forward <= k.l1_norm * df.forward + slack);
      CHECK(dl.backward <= k.l1_norm * df.backward + slack);
    }
  }
}
