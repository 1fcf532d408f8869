#ifndef PCZ_SEQUENCE_HPP
#define PCZ_SEQUENCE_HPP

#include <functional>
#include <span>
#include <vector>

#include "pcz/types.hpp"

namespace pcz {

/// Integer-indexed sequence of R^p values on an inclusive window
/// [window.lo, window.hi].
class AASequence {
public:
  AASequence(Window window, int dim);

  static AASequence from_rule(Window window, int dim,
                              const std::function<void(int, std::span<double>)>& rule);
  static AASequence from_rule_scalar(Window window, const std::function<double(int)>& rule);

  const Window& window() const { return window_; }
  int dim() const { return dim_; }
  int count() const { return window_.count(); }

  std::span<const double> value(int k) const;
  std::span<double> value(int k);
  double value_scalar(int k) const;

  bool all_finite() const;
  void validate() const;

  const std::vector<double>& data() const { return values_; }
  std::vector<double>& data() { return values_; }

private:
  Window window_;
  int dim_;
  std::vector<double> values_;  // count * dim
};

/// sup over the window of the Euclidean norm.
double sup_norm(const AASequence& s);

}  // namespace pcz

#endif
