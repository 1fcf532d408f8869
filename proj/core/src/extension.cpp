#include "pcz/extension.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace pcz {

namespace {

// hi_need: the largest sequence index the construction reads.
void require_window(const AASequence& s, Window window, int hi_need, const char* op) {
  if (window.lo < s.window().lo || hi_need > s.window().hi)
    throw DomainError(std::string(op) + ": window [" + std::to_string(window.lo) + ", " +
                      std::to_string(window.hi) + "] needs sequence values on [" +
                      std::to_string(window.lo) + ", " + std::to_string(hi_need) + "], have [" +
                      std::to_string(s.window().lo) + ", " + std::to_string(s.window().hi) + "]");
}

}  // namespace

GridFunction step_extension(const AASequence& s, int samples_per_unit, Window window) {
  s.validate();
  require_window(s, window, window.hi - 1, "step_extension");
  GridFunction g(window, samples_per_unit, s.dim());
  for (int n = window.lo; n < window.hi; ++n) {
    auto sv = s.value(n);
    for (int j = 0; j < samples_per_unit; ++j) {
      auto dst = g.value(n, j);
      for (int i = 0; i < s.dim(); ++i) dst[i] = sv[i];
    }
    auto ll = g.left_limit(n + 1);
    for (int i = 0; i < s.dim(); ++i) ll[i] = sv[i];
  }
  return g;
}

GridFunction linear_extension(const AASequence& s, int samples_per_unit, Window window) {
  s.validate();
  require_window(s, window, window.hi, "linear_extension");
  GridFunction g(window, samples_per_unit, s.dim());
  const int m = samples_per_unit;
  for (int n = window.lo; n < window.hi; ++n) {
    auto a = s.value(n);
    auto b = s.value(n + 1);
    for (int j = 0; j < m; ++j) {
      const double frac = static_cast<double>(j) / m;
      auto dst = g.value(n, j);
      for (int i = 0; i < s.dim(); ++i)
        dst[i] = (j == 0) ? a[i] : a[i] + frac * (b[i] - a[i]);
    }
    // continuous by construction: the closed right endpoint is S(n+1) itself
    auto ll = g.left_limit(n + 1);
    for (int i = 0; i < s.dim(); ++i) ll[i] = b[i];
  }
  return g;
}

GridFunction two_segment_extension(const AASequence& s, const MidpointRule& midpoint,
                                   int samples_per_unit, Window window) {
  s.validate();
  if (samples_per_unit % 2 != 0)
    throw ConfigError("two_segment_extension: samples_per_unit must be even so n+1/2 is a lattice point");
  require_window(s, window, window.hi, "two_segment_extension");
  GridFunction g(window, samples_per_unit, s.dim());
  const int m = samples_per_unit;
  const int half = m / 2;
  std::vector<double> mid(static_cast<std::size_t>(s.dim()));
  for (int n = window.lo; n < window.hi; ++n) {
    auto a = s.value(n);
    auto b = s.value(n + 1);
    midpoint(n, mid);
    for (double x : mid)
      if (!std::isfinite(x)) throw ShapeError("two_segment_extension: non-finite midpoint value");
    for (int j = 0; j < m; ++j) {
      auto dst = g.value(n, j);
      if (j == 0) {
        for (int i = 0; i < s.dim(); ++i) dst[i] = a[i];
      } else if (j < half) {
        const double frac = static_cast<double>(j) / m;  // t - n
        for (int i = 0; i < s.dim(); ++i) dst[i] = a[i] + 2.0 * frac * (mid[i] - a[i]);
      } else if (j == half) {
        for (int i = 0; i < s.dim(); ++i) dst[i] = mid[i];
      } else {
        const double frac = static_cast<double>(j - half) / m;  // t - n - 1/2
        for (int i = 0; i < s.dim(); ++i) dst[i] = mid[i] + 2.0 * frac * (b[i] - mid[i]);
      }
    }
    auto ll = g.left_limit(n + 1);
    for (int i = 0; i < s.dim(); ++i) ll[i] = b[i];
  }
  return g;
}

GridFunction extend(const AASequence& s, ExtensionKind kind, int samples_per_unit, Window window,
                    const std::optional<MidpointRule>& midpoint) {
  switch (kind) {
    case ExtensionKind::step:
      return step_extension(s, samples_per_unit, window);
    case ExtensionKind::linear:
      return linear_extension(s, samples_per_unit, window);
    case ExtensionKind::two_segment:
      if (!midpoint) throw ConfigError("extend: two_segment requires a midpoint rule");
      return two_segment_extension(s, *midpoint, samples_per_unit, window);
  }
  throw ConfigError("extend: unknown kind");
}

MidpointRule collinear_midpoints(const AASequence& s) {
  return [&s](int n, std::span<double> out) {
    auto a = s.value(n);
    auto b = s.value(n + 1);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (a[i] + b[i]) / 2.0;
  };
}

}  // namespace pcz
