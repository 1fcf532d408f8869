#ifndef PCZ_GRID_FUNCTION_HPP
#define PCZ_GRID_FUNCTION_HPP

#include <functional>
#include <span>
#include <vector>

#include "pcz/types.hpp"

namespace pcz {

/// How eval() treats off-lattice arguments.
enum class Interpolation {
  lattice_only,  // t must sit on the sample lattice
  linear         // piecewise-linear inside a piece, never across an integer
};

struct NormReport {
  double sup_norm = 0.0;     // sup of Euclidean norms over samples and left limits
  double attained_at = 0.0;  // a time point where the sup is attained
  double jump_bound = 0.0;   // max over integers n of |f(n) - f(n^-)|
};

/// Sampled representation of a function with unit-interval pieces: values in
/// R^p stored at t = n + j/M (0 <= j < M) for every piece n in [window.lo,
/// window.hi), plus one explicit left-limit slot f(n^-) per integer
/// window.lo < n <= window.hi. The left limit is first-class data: nothing
/// ever interpolates across an integer, and the continuity defect
/// |f(n) - f(n^-)| is computed, never assumed zero.
class GridFunction {
public:
  GridFunction(Window window, int samples_per_unit, int dim);

  /// Samples a continuous rule; left limits are filled with fn(n) (continuity).
  static GridFunction from_continuous(Window window, int samples_per_unit, int dim,
                                      const std::function<void(double, std::span<double>)>& fn);

  /// Scalar convenience overload of from_continuous.
  static GridFunction from_continuous_scalar(Window window, int samples_per_unit,
                                             const std::function<double(double)>& fn);

  static GridFunction constant(Window window, int samples_per_unit,
                               std::span<const double> value);
  static GridFunction constant_scalar(Window window, int samples_per_unit, double value);

  const Window& window() const { return window_; }
  int samples_per_unit() const { return samples_per_unit_; }
  int dim() const { return dim_; }
  int pieces() const { return window_.pieces(); }

  double time_at(int piece, int j) const {
    return static_cast<double>(piece) + static_cast<double>(j) / samples_per_unit_;
  }

  std::span<const double> value(int piece, int j) const;
  std::span<double> value(int piece, int j);

  /// Stored f(n^-), window.lo < n <= window.hi.
  std::span<const double> left_limit(int n) const;
  std::span<double> left_limit(int n);

  /// Evaluates f(t) for t in [window.lo, window.hi). With lattice_only the
  /// argument must land on a lattice point (1e-9 snap). With linear it is the
  /// piecewise-linear interpolant; the last sub-interval of a piece anchors
  /// its right end at the left limit, so pieces stay independent.
  std::vector<double> eval(double t, Interpolation interp = Interpolation::lattice_only) const;
  double eval_scalar(double t, Interpolation interp = Interpolation::lattice_only) const;

  /// Per-piece closed evaluation: the closure of piece [n, n+1] whose right
  /// endpoint value is f((n+1)^-). t must lie in [n, n+1].
  std::vector<double> eval_closed(int piece, double t,
                                  Interpolation interp = Interpolation::lattice_only) const;

  bool same_shape(const GridFunction& other) const {
    return window_ == other.window_ && samples_per_unit_ == other.samples_per_unit_ &&
           dim_ == other.dim_;
  }

  /// True if every stored value is finite.
  bool all_finite() const;

  /// Throws ShapeError when a stored value is NaN/Inf.
  void validate() const;

  // Raw storage access for I/O and bulk operations.
  const std::vector<double>& interior_data() const { return interior_; }
  const std::vector<double>& left_limit_data() const { return left_limits_; }
  std::vector<double>& interior_data() { return interior_; }
  std::vector<double>& left_limit_data() { return left_limits_; }

private:
  Window window_;
  int samples_per_unit_;
  int dim_;
  std::vector<double> interior_;     // pieces * M * dim, row-major by (piece, j)
  std::vector<double> left_limits_;  // pieces * dim, entry i <-> integer lo+1+i
};

/// The canonical closed representation (Eq. of the per-piece closure): the
/// left-limit slots already carry each piece's closed right endpoint, so this
/// is the identity projection. Idempotent by construction; eval_closed gives
/// the per-piece closure queries.
GridFunction closure_completion(const GridFunction& f);

GridFunction add(const GridFunction& f, const GridFunction& g);
GridFunction subtract(const GridFunction& f, const GridFunction& g);
GridFunction scale(const GridFunction& f, double a);
/// Entrywise product (the Banach-algebra multiplication on R^p).
GridFunction multiply(const GridFunction& f, const GridFunction& g);

/// One monomial of a real polynomial in k variables.
struct PolyTerm {
  double coefficient = 0.0;
  std::vector<int> exponents;  // one entry per variable, >= 0
};

/// Evaluates a polynomial in k grid functions pointwise, composed from
/// add/scale/multiply so the result stays in the same representation.
GridFunction poly_apply(const std::vector<PolyTerm>& poly,
                        const std::vector<GridFunction>& fs);

NormReport norm_report(const GridFunction& f);

/// Copy of f restricted to a sub-window (sub must be contained in f.window).
GridFunction restrict_window(const GridFunction& f, Window sub);

}  // namespace pcz

#endif
