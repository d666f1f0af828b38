#pragma once

// Independent ground truth for the HF machinery: closed-form fractional
// integrals, singularity-aware quadrature of the Riemann-Liouville integral,
// and the catalogue of benchmark problems with known exact solutions.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "hfm/expr.hpp"
#include "hfm/solver.hpp"

namespace hfm::oracle {

/// J^alpha t^p = Gamma(p+1) t^{p+alpha} / Gamma(p+1+alpha).
double frac_int_monomial(double p, double alpha, double t);

/// Caputo derivative of t^s (integer s >= 0) of order beta >= 0, written
/// through frac_int_monomial: D^beta t^s = s!/(s-n)! J^{n-beta} t^{s-n}, n = ceil(beta).
double caputo_monomial(std::size_t s, double beta, double t);

struct QuadratureResult {
  double value;
  double error_estimate;
  std::size_t intervals;
};

/// Globally adaptive 15-point Gauss-Kronrod integration of f over [a, b],
/// split beforehand at `breaks`. Throws AccuracyError when `max_intervals`
/// is exhausted before the summed error estimate drops below `tol`.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, std::span<const double> breaks = {},
                           std::size_t max_intervals = 20000);

/// (1/Gamma(alpha)) int_0^t (t - tau)^{alpha-1} f(tau) dtau to absolute
/// accuracy `tol`. The kernel singularity is removed by tau = t - u^{1/alpha},
/// leaving (1/Gamma(alpha+1)) int_0^{t^alpha} f(t - u^{1/alpha}) du.
/// `breaks` lists points in (0, t) where f is discontinuous.
double frac_int_quadrature(const std::function<double(double)>& f, double alpha, double t,
                           double tol = 1e-10, std::span<const double> breaks = {});
double frac_int_quadrature(const Expr& f, double alpha, double t, double tol = 1e-10);

/// Value of J^alpha S_i at node j for a grid of step h (closed form), as a
/// function of offset = j - i. Zero for offset <= 0.
long double shf_integral_at_node(double alpha, double h, long offset);

/// Value of J^alpha T_i at node j, offset = j - i. Zero for offset <= 0.
long double tf_integral_at_node(double alpha, double h, long offset);

/// Published error of a competing method, shown next to our result in reports.
struct Baseline {
  std::string method;
  std::string step;
  double max_error;
};

struct ExactCase {
  std::string name;   ///< "5.4-3" style identifier; the part before '-' is the example id.
  std::string title;  ///< Short description.
  FdeProblem problem;
  Expr exact;
  /// Exact solution as polynomial coefficients in t (all suite solutions are polynomials).
  std::vector<double> exact_poly;
  /// Hand-entered derivatives y, y', y'', ... as expressions; entry s is checked against init[s].
  std::vector<Expr> exact_derivatives;
  double reference_error;  ///< Published max abs error of the HF method on this case.
  double reference_h;      ///< Step used for that reference.
  std::size_t m;           ///< Subinterval count matching reference_h.
  double threshold;        ///< Acceptance bound on the max abs node error at m.
  std::vector<Baseline> baselines;

  std::string example_id() const;
};

/// Checks exact_derivatives[s](0) == init[s]; throws ProblemError otherwise.
void check_initial_conditions(const ExactCase& c, double tol = 1e-14);

/// The fourteen benchmark cases. Construction validates initial conditions.
const std::vector<ExactCase>& builtin_cases();

/// Evaluate sum_s coeffs[s] t^s.
double polynomial(std::span<const double> coeffs, double t);

/// |LHS - RHS| of the equation with the exact polynomial solution substituted,
/// every Caputo derivative evaluated by caputo_monomial.
double forcing_residual(const ExactCase& c, double t);

/// Max abs error of `sol` against the exact solution over all grid nodes.
double max_node_error(const Solution& sol, const Expr& exact);

}  // namespace hfm::oracle
