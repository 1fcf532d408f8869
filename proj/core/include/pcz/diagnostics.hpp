#ifndef PCZ_DIAGNOSTICS_HPP
#define PCZ_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcz/grid_function.hpp"

namespace pcz {

/// Defects of a single candidate integer translation s over a test window:
/// forward = sup over the test lattice (interior samples and left limits) of
/// |f(t+s) - f(t)|, backward the same with t-s. A finite-shift necessary
/// -condition proxy of the defining recurrence; zero exactly for s-periodic f.
struct ShiftDefect {
  double forward = 0.0;
  double backward = 0.0;
  double combined() const { return forward > backward ? forward : backward; }
};

ShiftDefect recurrence_defect(const GridFunction& f, int shift, Window test_window);

struct RecurrenceReport {
  std::vector<int> shifts_tested;
  int best_shift = 0;
  double forward_defect = 0.0;   // at best_shift
  double backward_defect = 0.0;  // at best_shift
  Window test_window;
  std::vector<std::pair<int, double>> defect_profile;  // (s, combined defect)

  double min_defect() const {
    return forward_defect > backward_defect ? forward_defect : backward_defect;
  }
};

/// Exhaustive search over integer translations 1..max_shift for the one with
/// the smallest combined defect. By default the test window is the function
/// window shrunk by max_shift on both sides, so every shift is computable on
/// a common lattice. Enlarging max_shift never increases the reported minimum.
/// This is a necessary-condition diagnostic, not a proof of recurrence.
RecurrenceReport zaa_scan(const GridFunction& f, int max_shift,
                          std::optional<Window> test_window = std::nullopt);

/// Modulus-of-continuity table. omega(delta) is the sup of |f(t1) - f(t2)|
/// over lattice pairs at distance <= delta, where the left-limit slot counts
/// as a point at t = n approached from the left: the pair (f(n^-), f(n)) has
/// distance zero, so a genuine jump bounds omega from below at every delta.
struct UCReport {
  std::vector<std::pair<double, double>> modulus_table;  // (delta, omega)

  /// true iff some tabulated delta has omega(delta) <= eps.
  bool is_uc_at(double eps) const;
};

UCReport uc_modulus(const GridFunction& f, const std::vector<double>& deltas);

/// Geometric default 1/(2M), 1/M, 2/M, ... capped at 1.
std::vector<double> default_deltas(int samples_per_unit);

enum class Verdict { consistent_with_kaa, fails_uc, fails_recurrence };

std::string verdict_name(Verdict v);

struct ClassifyResult {
  Verdict verdict = Verdict::consistent_with_kaa;
  UCReport uc;
  RecurrenceReport scan;
  double eps = 0.0;
};

/// Compact-AA consistency test: consistent iff the UC verdict holds at eps
/// and the minimum scan defect is <= eps. Failure verdicts are conclusive on
/// the lattice; "consistent" is one-sided by nature.
ClassifyResult classify_kaa(const GridFunction& f, double eps, int max_shift,
                            std::optional<std::vector<double>> deltas = std::nullopt);

struct DecompositionReport {
  double g_norm = 0.0;
  double h_norm = 0.0;
  double f_norm = 0.0;
  bool bound_satisfied = false;  // g_norm + h_norm <= 3 f_norm
};

/// Checks the norm bound of the asymptotic decomposition f = g + h, with
/// g on its full window, h on the nonnegative part and f formed on the
/// overlap.
DecompositionReport decomposition_check(const GridFunction& g, const GridFunction& h);

}  // namespace pcz

#endif
