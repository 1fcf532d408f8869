#ifndef PCZ_TESTS_ORACLES_HPP
#define PCZ_TESTS_ORACLES_HPP

// Test-only oracles, independent of the library code paths they check.

#include <cmath>
#include <functional>
#include <vector>

#include "pcz/grid_function.hpp"

namespace oracles {

// Recurrence defect by brute force through the public eval/left_limit
// surface (the diagnostics module iterates raw storage instead).
struct Defect {
  double forward = 0.0;
  double backward = 0.0;
};

inline Defect brute_force_defect(const pcz::GridFunction& f, int s, pcz::Window tw) {
  Defect d;
  auto dist = [](const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(acc);
  };
  for (int n = tw.lo; n < tw.hi; ++n)
    for (int j = 0; j < f.samples_per_unit(); ++j) {
      const double t = f.time_at(n, j);
      const auto here = f.eval(t);
      d.forward = std::max(d.forward, dist(f.eval(t + s), here));
      d.backward = std::max(d.backward, dist(f.eval(t - s), here));
    }
  for (int n = tw.lo + 1; n <= tw.hi; ++n) {
    auto copy = [&f](int k) {
      auto v = f.left_limit(k);
      return std::vector<double>(v.begin(), v.end());
    };
    const auto here = copy(n);
    d.forward = std::max(d.forward, dist(copy(n + s), here));
    d.backward = std::max(d.backward, dist(copy(n - s), here));
  }
  return d;
}

// Composite Simpson at a caller-chosen resolution for closed-form integrands;
// used to cross-check convolution values through a second quadrature route.
inline double fine_simpson(const std::function<double(double)>& g, double a, double b, int cells) {
  if (cells % 2 != 0) ++cells;
  const double h = (b - a) / cells;
  double acc = 0.0;
  for (int i = 0; i <= cells; ++i) {
    const double w = (i == 0 || i == cells) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += w * g(a + i * h);
  }
  return acc * h / 3.0;
}

inline double bisect(const std::function<double(double)>& g, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// (e^a - 1)/a with the series route for tiny a.
inline double phi1(double a) {
  return std::abs(a) < 1e-6 ? 1.0 + a / 2.0 + a * a / 6.0 : (std::exp(a) - 1.0) / a;
}

}  // namespace oracles

#endif
