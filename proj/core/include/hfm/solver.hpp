#pragma once

// Multi-order fractional differential equations
//
//   D^alpha y(t) = sum_k b_k(t) (D^{beta_k} y(t))^{p_k} + g(t),   t in [0, T],
//   y^{(s)}(0) = init[s],  s = 0 .. n-1,  n = ceil(alpha),
//
// with Caputo derivatives, solved in the HF basis. The unknown is the HF
// expansion u of D^alpha y; every lower-order derivative is J^{alpha-beta} u
// through the one-shot matrices, and the coefficient equations are solved
// node by node.

#include <cstddef>
#include <vector>

#include "hfm/expr.hpp"
#include "hfm/hf_basis.hpp"

namespace hfm {

/// One right-hand-side term b(t) * (D^beta y)^power. beta = 0 acts on y itself.
struct Term {
  Expr coeff;
  double beta = 0.0;
  double power = 1.0;
};

class FdeProblem {
 public:
  /// Validates the description and sorts `terms` by descending beta.
  /// Throws ProblemError on an inconsistent description.
  FdeProblem(double alpha, std::vector<Term> terms, Expr forcing, std::vector<double> init,
             double t_end = 1.0);

  double alpha() const noexcept { return alpha_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  const Expr& forcing() const noexcept { return forcing_; }
  const std::vector<double>& init() const noexcept { return init_; }
  double t_end() const noexcept { return t_end_; }

  /// n = ceil(alpha): the number of initial conditions.
  std::size_t order() const noexcept { return init_.size(); }

  /// True when any term with beta > 0 carries power != 1.
  bool has_generalized_terms() const noexcept;

  /// Taylor polynomial sum_s init[s] t^s / s! built from the initial conditions.
  double ic_poly(double t) const;

  /// Caputo derivative of order beta of ic_poly.
  double ic_poly_derivative(double beta, double t) const;

 private:
  double alpha_;
  std::vector<Term> terms_;
  Expr forcing_;
  std::vector<double> init_;
  double t_end_;
};

/// ceil(alpha) for alpha > 0 (an integer alpha gives itself).
std::size_t caputo_order(double alpha);

struct SolverOptions {
  double tol = 1e-13;
  int max_iter = 100;
  int damping_after = 20;
  double damping = 0.5;
  /// Allow (D^beta y)^p with beta > 0 and p != 1.
  bool allow_generalized_terms = true;
};

/// Orders this close to zero are applied as the identity.
inline constexpr double kIdentityGap = 1e-12;

struct Solution {
  Grid grid;
  HfPair u;  ///< HF coefficients of D^alpha y.
  HfPair y;  ///< Reconstructed solution.
  /// Scalar iterations spent at each subinterval (1 for a direct solve).
  std::vector<int> iterations;
  /// Max node violation of the equation, see residual().
  double residual = 0.0;

  int max_iterations() const;
};

/// Throws ProblemError, ConvergenceError (naming the node) or DomainError.
Solution solve(const FdeProblem& problem, std::size_t m, const SolverOptions& opts = {});

/// max over nodes |LHS - RHS| of the equation, with every fractional operator
/// applied to sol.u in the HF domain.
double residual(const FdeProblem& problem, const Solution& sol);

}  // namespace hfm
