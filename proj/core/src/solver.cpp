#include "hfm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "hfm/error.hpp"
#include "hfm/gamma.hpp"
#include "hfm/opmat.hpp"

namespace hfm {

namespace {

double pow0(double base, double e) {
  if (base == 0.0) return e == 0.0 ? 1.0 : 0.0;
  return std::pow(base, e);
}

double node_pow(double base, double p, std::size_t node) {
  if (p == 1.0) return base;
  if (base < 0.0 && p != std::floor(p)) {
    throw DomainError("negative value " + std::to_string(base) + " raised to fractional power " +
                      std::to_string(p) + " at node " + std::to_string(node));
  }
  return std::pow(base, p);
}

// Per-term data fixed for the whole solve.
struct TermState {
  HfPair coeff;                          // b(t)
  HfPair ic;                             // D^beta of the initial-condition polynomial
  std::shared_ptr<const OpMatSet> ops;   // J^{alpha - beta}; null means identity
  double power;
};

std::vector<TermState> prepare_terms(const FdeProblem& problem, const Grid& grid) {
  std::vector<TermState> out;
  out.reserve(problem.terms().size());
  for (const Term& term : problem.terms()) {
    const double gap = problem.alpha() - term.beta;
    auto ops = gap < kIdentityGap ? nullptr : OpMatCache::global().get(gap, grid);
    const double beta = term.beta;
    out.push_back(TermState{
        sample(term.coeff, grid),
        sample([&](double t) { return problem.ic_poly_derivative(beta, t); }, grid),
        std::move(ops), term.power});
  }
  return out;
}

// Fixed-point iteration x <- x + w (F(x) - x), undamped at first.
template <typename F>
double fixed_point(F&& f, double x0, const SolverOptions& opts, std::size_t node, int& iters) {
  double x = x0;
  for (int it = 1; it <= opts.max_iter; ++it) {
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      throw ConvergenceError(node, "non-finite iterate at node " + std::to_string(node));
    }
    const double w = it > opts.damping_after ? opts.damping : 1.0;
    const double next = x + w * (fx - x);
    if (std::abs(next - x) <= opts.tol * std::max(1.0, std::abs(next))) {
      iters = it;
      return next;
    }
    x = next;
  }
  throw ConvergenceError(node, "scalar iteration did not converge within " +
                                   std::to_string(opts.max_iter) + " iterations at node " +
                                   std::to_string(node));
}

}  // namespace

std::size_t caputo_order(double alpha) {
  return static_cast<std::size_t>(std::ceil(alpha));
}

FdeProblem::FdeProblem(double alpha, std::vector<Term> terms, Expr forcing,
                       std::vector<double> init, double t_end)
    : alpha_(alpha),
      terms_(std::move(terms)),
      forcing_(std::move(forcing)),
      init_(std::move(init)),
      t_end_(t_end) {
  if (!(alpha_ > 0.0) || !(alpha_ <= kMaxOrder)) {
    throw ProblemError("alpha must lie in (0, 50], got " + std::to_string(alpha_));
  }
  if (!(t_end_ > 0.0) || !std::isfinite(t_end_)) {
    throw ProblemError("t_end must be positive and finite");
  }
  const std::size_t n = caputo_order(alpha_);
  if (init_.size() != n) {
    throw ProblemError("alpha = " + std::to_string(alpha_) + " needs " + std::to_string(n) +
                       " initial values, got " + std::to_string(init_.size()));
  }
  for (double v : init_) {
    if (!std::isfinite(v)) throw ProblemError("initial values must be finite");
  }
  for (const Term& term : terms_) {
    if (!(term.beta >= 0.0) || !(term.beta < alpha_)) {
      throw ProblemError("term order beta = " + std::to_string(term.beta) +
                         " must lie in [0, alpha)");
    }
    if (!std::isfinite(term.power)) throw ProblemError("term power must be finite");
  }
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) { return a.beta > b.beta; });
}

bool FdeProblem::has_generalized_terms() const noexcept {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.beta > 0.0 && t.power != 1.0; });
}

double FdeProblem::ic_poly(double t) const { return ic_poly_derivative(0.0, t); }

double FdeProblem::ic_poly_derivative(double beta, double t) const {
  // D^beta t^s = Gamma(s+1)/Gamma(s+1-beta) t^{s-beta} for s >= ceil(beta), else 0.
  const auto first = static_cast<std::size_t>(std::ceil(beta));
  double acc = 0.0;
  for (std::size_t s = first; s < init_.size(); ++s) {
    if (init_[s] == 0.0) continue;
    const double e = static_cast<double>(s) - beta;
    acc += init_[s] / gamma(e + 1.0) * pow0(t, e);
  }
  return acc;
}

int Solution::max_iterations() const {
  return iterations.empty() ? 0 : *std::max_element(iterations.begin(), iterations.end());
}

Solution solve(const FdeProblem& problem, std::size_t m, const SolverOptions& opts) {
  if (!opts.allow_generalized_terms && problem.has_generalized_terms()) {
    throw ProblemError("terms (D^beta y)^p with beta > 0 and p != 1 are disabled");
  }
  const Grid grid(problem.t_end(), m);
  const HfPair g = sample(problem.forcing(), grid);
  const auto terms = prepare_terms(problem, grid);

  const bool linear = std::all_of(terms.begin(), terms.end(),
                                  [](const TermState& t) { return t.power == 1.0; });
  const bool implicit_s = std::any_of(terms.begin(), terms.end(),
                                      [](const TermState& t) { return !t.ops; });

  std::vector<double> cs(m, 0.0), ct(m, 0.0);
  std::vector<int> iterations(m, 1);
  std::vector<double> hist_s(terms.size()), hist_t(terms.size());

  for (std::size_t j = 0; j < m; ++j) {
    // SHF equation: contributions of J^gamma u at node j come only from
    // subintervals i < j because Pss and Pts are strictly upper triangular.
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& ops = terms[k].ops;
      double acc = 0.0;
      if (ops) {
        const auto ss = ops->pss.first_row();
        const auto ts = ops->pts.first_row();
        for (std::size_t i = 0; i < j; ++i) acc += cs[i] * ss[j - i] + ct[i] * ts[j - i];
      }
      hist_s[k] = acc + terms[k].ic.cs()[j];
    }
    auto shf_rhs = [&](double xs) {
      double acc = g.cs()[j];
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const double z = hist_s[k] + (terms[k].ops ? 0.0 : xs);
        acc += terms[k].coeff.cs()[j] * node_pow(z, terms[k].power, j);
      }
      return acc;
    };

    int iters_s = 1;
    if (!implicit_s) {
      cs[j] = shf_rhs(0.0);
    } else if (linear) {
      double slope = 0.0;
      for (const auto& t : terms) {
        if (!t.ops) slope += t.coeff.cs()[j];
      }
      cs[j] = shf_rhs(0.0) / (1.0 - slope);
    } else {
      cs[j] = fixed_point(shf_rhs, j > 0 ? cs[j - 1] + ct[j - 1] : 0.0, opts, j, iters_s);
    }

    // TF equation: the diagonal entries of Pst and Ptt couple ct[j] into the
    // right-node value, so this is a scalar equation in ct[j].
    std::vector<double> zs(terms.size()), zs_pow(terms.size()), diag(terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const auto& ops = terms[k].ops;
      double acc = 0.0;
      if (ops) {
        const auto st = ops->pst.first_row();
        const auto tt = ops->ptt.first_row();
        for (std::size_t i = 0; i < j; ++i) acc += cs[i] * st[j - i] + ct[i] * tt[j - i];
        acc += cs[j] * st[0];
        diag[k] = tt[0];
        zs[k] = hist_s[k];
      } else {
        diag[k] = 1.0;
        zs[k] = hist_s[k] + cs[j];
      }
      hist_t[k] = acc + terms[k].ic.ct()[j];
      zs_pow[k] = node_pow(zs[k], terms[k].power, j);
    }
    auto tf_rhs = [&](double x) {
      double acc = g.ct()[j];
      for (std::size_t k = 0; k < terms.size(); ++k) {
        const double bs = terms[k].coeff.cs()[j];
        const double bt = terms[k].coeff.ct()[j];
        const double zt = hist_t[k] + diag[k] * x;
        if (terms[k].power == 1.0) {
          acc += bt * zs[k] + (bs + bt) * zt;
        } else {
          const double next = node_pow(zs[k] + zt, terms[k].power, j + 1);
          acc += bt * zs_pow[k] + (bs + bt) * (next - zs_pow[k]);
        }
      }
      return acc;
    };

    int iters_t = 1;
    if (linear) {
      double slope = 0.0;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        slope += (terms[k].coeff.cs()[j] + terms[k].coeff.ct()[j]) * diag[k];
      }
      const double denom = 1.0 - slope;
      if (denom == 0.0) {
        throw ConvergenceError(j, "singular node equation at node " + std::to_string(j));
      }
      ct[j] = tf_rhs(0.0) / denom;
    } else {
      ct[j] = fixed_point(tf_rhs, j > 0 ? ct[j - 1] : 0.0, opts, j, iters_t);
    }
    iterations[j] = std::max(iters_s, iters_t);
  }

  HfPair u(grid, std::move(cs), std::move(ct));
  HfPair y = frac_integrate(u, problem.alpha()) +
             sample([&](double t) { return problem.ic_poly(t); }, grid);
  Solution sol{grid, std::move(u), std::move(y), std::move(iterations), 0.0};
  sol.residual = residual(problem, sol);
  return sol;
}

double residual(const FdeProblem& problem, const Solution& sol) {
  const Grid& grid = sol.grid;
  const std::size_t m = grid.m();
  const HfPair g = sample(problem.forcing(), grid);

  std::vector<double> rhs = g.node_values();
  for (const Term& term : problem.terms()) {
    const double gap = problem.alpha() - term.beta;
    const double beta = term.beta;
    HfPair inner = (gap < kIdentityGap ? sol.u : frac_integrate(sol.u, gap)) +
                   sample([&](double t) { return problem.ic_poly_derivative(beta, t); }, grid);
    const HfPair b = sample(term.coeff, grid);
    for (std::size_t j = 0; j <= m; ++j) {
      rhs[j] += b.node_value(j) * node_pow(inner.node_value(j), term.power, j);
    }
  }
  double worst = 0.0;
  for (std::size_t j = 0; j <= m; ++j) {
    worst = std::max(worst, std::abs(sol.u.node_value(j) - rhs[j]));
  }
  return worst;
}

}  // namespace hfm
