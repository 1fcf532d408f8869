#include "pcz/sequence.hpp"

#include <cmath>
#include <string>

namespace pcz {

AASequence::AASequence(Window window, int dim) : window_(window), dim_(dim) {
  if (window.count() < 1) throw ConfigError("AASequence: window must be nonempty");
  if (dim < 1) throw ConfigError("AASequence: dim must be >= 1");
  values_.assign(static_cast<std::size_t>(window.count()) * dim, 0.0);
}

AASequence AASequence::from_rule(Window window, int dim,
                                 const std::function<void(int, std::span<double>)>& rule) {
  AASequence s(window, dim);
  for (int k = window.lo; k <= window.hi; ++k) rule(k, s.value(k));
  return s;
}

AASequence AASequence::from_rule_scalar(Window window, const std::function<double(int)>& rule) {
  return from_rule(window, 1, [&rule](int k, std::span<double> out) { out[0] = rule(k); });
}

std::span<const double> AASequence::value(int k) const {
  if (k < window_.lo || k > window_.hi)
    throw DomainError("AASequence: index " + std::to_string(k) + " outside window");
  return {values_.data() + static_cast<std::size_t>(k - window_.lo) * dim_,
          static_cast<std::size_t>(dim_)};
}

std::span<double> AASequence::value(int k) {
  if (k < window_.lo || k > window_.hi)
    throw DomainError("AASequence: index " + std::to_string(k) + " outside window");
  return {values_.data() + static_cast<std::size_t>(k - window_.lo) * dim_,
          static_cast<std::size_t>(dim_)};
}

double AASequence::value_scalar(int k) const { return value(k)[0]; }

bool AASequence::all_finite() const {
  for (double x : values_)
    if (!std::isfinite(x)) return false;
  return true;
}

void AASequence::validate() const {
  if (!all_finite()) throw ShapeError("AASequence: non-finite value");
}

double sup_norm(const AASequence& s) {
  double best = 0.0;
  for (int k = s.window().lo; k <= s.window().hi; ++k) {
    double acc = 0.0;
    for (double x : s.value(k)) acc += x * x;
    acc = std::sqrt(acc);
    if (acc > best) best = acc;
  }
  return best;
}

}  // namespace pcz
