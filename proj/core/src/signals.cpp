#include "pcz/signals.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace pcz {

double psi(double t) {
  return std::sin(1.0 / (2.0 + std::cos(t) + std::cos(std::numbers::sqrt2 * t)));
}

double psi_step(double t) { return psi(std::floor(t)); }

std::vector<double> seeded_uniform(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 gen(seed);
  std::vector<double> out(count);
  for (auto& x : out) {
    const double u = std::ldexp(static_cast<double>(gen() >> 11), -53);  // [0, 1)
    x = 2.0 * u - 1.0;
  }
  return out;
}

AASequence noise_sequence(Window window, std::uint64_t seed) {
  const auto u = seeded_uniform(seed, static_cast<std::size_t>(window.count()));
  AASequence s(window, 1);
  for (int k = window.lo; k <= window.hi; ++k)
    s.value(k)[0] = u[static_cast<std::size_t>(k - window.lo)];
  return s;
}

AASequence psi_sequence(Window window) {
  return AASequence::from_rule_scalar(window, [](int k) { return psi(static_cast<double>(k)); });
}

GridFunction psi_step_grid(Window window, int samples_per_unit) {
  GridFunction g(window, samples_per_unit, 1);
  for (int n = window.lo; n < window.hi; ++n) {
    const double v = psi(static_cast<double>(n));
    for (int j = 0; j < samples_per_unit; ++j) g.value(n, j)[0] = v;
    g.left_limit(n + 1)[0] = v;
  }
  return g;
}

}  // namespace pcz
