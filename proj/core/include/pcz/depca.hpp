#ifndef PCZ_DEPCA_HPP
#define PCZ_DEPCA_HPP

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <vector>

#include "pcz/grid_function.hpp"
#include "pcz/sequence.hpp"

namespace pcz::depca {

using MatrixFn = std::function<Eigen::MatrixXd(double)>;
using VectorFn = std::function<Eigen::VectorXd(double)>;

enum class CoefficientRegularity { continuous, piecewise_at_integers };

/// Linear system y'(t) = A(t) y(t) + B(t) y([t]) + f(t) on R^p.
/// Coefficient maps must be evaluable on the whole working range (bounded
/// -solution sums extend past the output window). With the piecewise tag,
/// right-endpoint evaluations at integers are taken from inside the piece.
struct LinearDepca {
  int dim = 1;
  MatrixFn A;
  MatrixFn B;
  VectorFn forcing;
  CoefficientRegularity regularity = CoefficientRegularity::continuous;
};

LinearDepca scalar_system(const std::function<double(double)>& a,
                          const std::function<double(double)>& b,
                          const std::function<double(double)>& f,
                          CoefficientRegularity regularity = CoefficientRegularity::continuous);

/// y'(t) = -delta(t) y(t) + p(t) exp(-gamma y([t])).
struct LasotaWazewska {
  std::function<double(double)> decay;       // delta, inf > 0
  std::function<double(double)> production;  // p, >= 0
  double gamma = 0.0;
};

/// Fundamental matrix of y' = A(t) y on one unit interval [base, base+1],
/// computed by fixed-step RK4 with `steps` sub-steps. Phi(s, s) = I exactly;
/// arguments must lie on the RK4 sub-lattice.
class FundamentalMatrix {
public:
  FundamentalMatrix(const MatrixFn& A, int dim, int base, int steps,
                    CoefficientRegularity regularity = CoefficientRegularity::continuous);

  int base() const { return base_; }
  int steps() const { return steps_; }
  int dim() const { return dim_; }

  /// Phi(base + k/steps, base).
  const Eigen::MatrixXd& from_base(int k) const { return from_base_[static_cast<std::size_t>(k)]; }

  /// Phi(t, s) = Phi(t, base) Phi(s, base)^{-1} for lattice t, s in [base, base+1].
  Eigen::MatrixXd at(double t, double s) const;

private:
  int node_index(double t) const;

  int base_;
  int steps_;
  int dim_;
  std::vector<Eigen::MatrixXd> from_base_;
};

/// Difference equation y(n+1) = C(n) y(n) + h(n) obtained from the
/// per-interval variation-of-constants formula, with per-interval
/// invertibility certificates (smallest singular value of
/// I + integral_tau^t Phi(tau,u) B(u) du over a tau,t lattice).
struct DifferenceSystem {
  Window window;  // intervals [n, n+1) for window.lo <= n < window.hi
  int dim = 1;
  int steps = 0;
  std::vector<Eigen::MatrixXd> coeff;
  std::vector<Eigen::VectorXd> forcing;
  std::vector<double> certificates;

  const Eigen::MatrixXd& C(int n) const;
  const Eigen::VectorXd& h(int n) const;
  double certificate(int n) const;
};

DifferenceSystem reduce_to_difference(const LinearDepca& sys, Window window, int steps);

struct ResidualReport {
  std::vector<double> per_interval;      // sup |y' - rhs| per interval (central differences)
  double sup_residual = 0.0;
  double difference_consistency = 0.0;   // max_n |y(n+1) - (C(n) y(n) + h(n))|
  double continuity_defect = 0.0;        // max_n |y(n) - y(n^-)|
  double rhs_sup = 0.0;                  // M = sup |A y + B y([t]) + f|
  bool uc_bound_checked = false;
  bool uc_bound_ok = false;              // omega(delta) <= 2 M delta on tabulated deltas
  std::vector<double> dichotomy_rates;   // per-direction rates (bounded mode)
  std::vector<double> iteration_trace;   // sup-differences (Lasota-Wazewska)
  double contraction_estimate = 0.0;     // a-priori kappa (Lasota-Wazewska)
};

struct DepcaSolution {
  GridFunction trajectory;
  AASequence integer_values;
  ResidualReport residual_report;
};

/// Initial-value solve with y(anchor) = y0 (anchor defaults to window.lo).
/// Forward propagation is always possible; propagation below the anchor
/// requires every certificate on that side to be >= 1e-8.
DepcaSolution solve_ivp(const LinearDepca& sys, const Eigen::VectorXd& y0, Window window,
                        int steps, std::optional<int> anchor = std::nullopt);

/// Unique bounded solution under a verified scalar/diagonal exponential
/// dichotomy of the reduced difference equation: every direction must be
/// uniformly contractive (|C_ii| <= rho < 1) or uniformly expansive.
/// Stable directions sum the forcing over the past, unstable ones over the
/// future; both sums are truncated when the propagator factor drops below
/// trunc_eps, extending coefficient evaluation past the window as needed.
DepcaSolution bounded_solution(const LinearDepca& sys, Window window, int steps,
                               double trunc_eps = 1e-12, bool uc_check = true);

struct LasotaWazewskaOptions {
  int steps = 256;
  int max_iter = 64;
  double tol = 1e-10;
  double trunc_eps = 1e-12;
};

/// Picard iteration on the bounded-solution operator of
/// y' = -delta(t) y + p(t) exp(-gamma y_k([t])). Requires the a-priori
/// contraction estimate kappa = gamma sup(p)/inf(delta) < 1; stops when the
/// sup-difference of successive iterates is <= tol.
DepcaSolution lasota_wazewska(const LasotaWazewska& model, Window window,
                              const LasotaWazewskaOptions& opts = {});

}  // namespace pcz::depca

#endif
