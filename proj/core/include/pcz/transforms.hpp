#ifndef PCZ_TRANSFORMS_HPP
#define PCZ_TRANSFORMS_HPP

#include <functional>
#include <span>
#include <string>

#include "pcz/grid_function.hpp"

namespace pcz {

/// Integrable convolution kernel: closed-form rule plus certified L1 tail
/// metadata. l1_tail_bound(R) must bound the mass of |rule| outside [-R, R]
/// (outside [0, R] for half-line kernels) and tend to zero.
struct Kernel {
  enum class Support { full_line, half_line };

  std::function<double(double)> rule;
  Support support = Support::full_line;
  std::function<double(double)> l1_tail_bound;
  double l1_norm = 1.0;
  std::string name;

  /// Heat kernel (4 pi t)^{-1/2} exp(-x^2 / (4 t)); mass 1, variance 2t.
  static Kernel gauss_heat(double t);

  /// exp(-s) on [0, inf); mass 1.
  static Kernel exp_decay();
};

/// Smallest integer R >= 1 with l1_tail_bound(R) <= eps.
int truncation_radius(const Kernel& kernel, double eps);

/// Composite-Simpson mass of the kernel over [-R, R] (or [0, R] for
/// half-line support) with R chosen from tail_eps.
double kernel_mass(const Kernel& kernel, double tail_eps = 1e-12, double target_h = 1.0 / 256);

/// (Lf)(t) = integral over R of Phi(t-s) f(s) ds. Composite Simpson per unit
/// interval, panels split exactly at the integers so discontinuities never
/// straddle a panel; the output window shrinks by the truncation radius on
/// both sides. The result is continuous (left limits equal the samples).
GridFunction conv_full_line(const Kernel& kernel, const GridFunction& f, double trunc_eps);

/// (Lf)(t) = integral_{-inf}^{t} Phi(t-s) f(s) ds for a half-line kernel;
/// the output window shrinks by the truncation radius on the left only.
GridFunction conv_causal(const Kernel& kernel, const GridFunction& f, double trunc_eps);

/// (Lf)(t) = integral_0^t Phi(t-s) f(s) ds for f on [0, n_hi]; the integral
/// is finite, so only quadrature error applies and the window is preserved.
GridFunction conv_halfline_asymptotic(const Kernel& kernel, const GridFunction& f,
                                      double trunc_eps);

/// Solution of the 1D heat equation at diffusion time t: Gaussian
/// convolution of u0. The kernel mass is re-verified at runtime to 1e-10.
GridFunction heat_solve(const GridFunction& u0, double t, double trunc_eps);

/// Map (t, x) -> y with a declared Lipschitz constant in x. out_dim is the
/// dimension of y. The map is assumed continuous in t; jumps at integers
/// belong in x, whose left-limit slot is composed through f(n, x(n^-)).
struct LipschitzMap {
  std::function<void(double, std::span<const double>, std::span<double>)> fn;
  double lipschitz = 0.0;
  int out_dim = 1;
};

LipschitzMap make_scalar_map(const std::function<double(double, double)>& fn, double lipschitz);

/// Pointwise composition f(t, x(t)) on interior values and left limits.
GridFunction compose_lipschitz(const LipschitzMap& map, const GridFunction& x);

}  // namespace pcz

#endif
