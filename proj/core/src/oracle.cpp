#include "hfm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "hfm/error.hpp"
#include "hfm/gamma.hpp"

namespace hfm::oracle {

double frac_int_monomial(double p, double alpha, double t) {
  if (!(p >= 0.0) || !(alpha > 0.0) || !(t >= 0.0)) {
    throw DomainError("frac_int_monomial needs p >= 0, alpha > 0, t >= 0");
  }
  if (t == 0.0) return 0.0;
  return gamma(p + 1.0) / gamma(p + 1.0 + alpha) * std::pow(t, p + alpha);
}

double caputo_monomial(std::size_t s, double beta, double t) {
  const auto n = static_cast<std::size_t>(std::ceil(beta));
  if (s < n) return 0.0;
  // s!/(s-n)! * t^{s-n}, the n-th classical derivative.
  double falling = 1.0;
  for (std::size_t i = 0; i < n; ++i) falling *= static_cast<double>(s - i);
  const double rest = static_cast<double>(n) - beta;
  const auto p = static_cast<double>(s - n);
  if (rest == 0.0) return falling * (p == 0.0 ? 1.0 : std::pow(t, p));
  return falling * frac_int_monomial(p, rest, t);
}

long double shf_integral_at_node(double alpha, double h, long offset) {
  if (offset <= 0) return 0.0L;
  const long double a = alpha;
  const long double k = offset;
  const long double c = std::pow(static_cast<long double>(h), a) / std::tgamma(a + 1);
  return c * (std::pow(k, a) - std::pow(k - 1, a));
}

long double tf_integral_at_node(double alpha, double h, long offset) {
  if (offset <= 0) return 0.0L;
  const long double a = alpha;
  const long double k = offset;
  const long double d = std::pow(static_cast<long double>(h), a) / std::tgamma(a + 2);
  const long double prev = offset == 1 ? 0.0L : std::pow(k - 1, a);
  return d * (std::pow(k, a + 1) - prev * (k + a));
}

std::string ExactCase::example_id() const { return name.substr(0, name.find('-')); }

void check_initial_conditions(const ExactCase& c, double tol) {
  const auto& init = c.problem.init();
  if (c.exact_derivatives.size() < init.size()) {
    throw ProblemError(c.name + ": missing derivatives of the exact solution");
  }
  for (std::size_t s = 0; s < init.size(); ++s) {
    const double v = c.exact_derivatives[s](0.0);
    if (std::abs(v - init[s]) > tol) {
      throw ProblemError(c.name + ": exact solution violates initial condition " +
                         std::to_string(s));
    }
  }
  if (std::abs(c.exact(0.0) - init[0]) > tol) {
    throw ProblemError(c.name + ": exact expression disagrees with y(0)");
  }
}

double polynomial(std::span<const double> coeffs, double t) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
  return acc;
}

namespace {

double caputo_poly(std::span<const double> coeffs, double beta, double t) {
  double acc = 0.0;
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (coeffs[s] != 0.0) acc += coeffs[s] * caputo_monomial(s, beta, t);
  }
  return acc;
}

}  // namespace

double forcing_residual(const ExactCase& c, double t) {
  const auto& p = c.problem;
  double rhs = p.forcing()(t);
  for (const Term& term : p.terms()) {
    rhs += term.coeff(t) * std::pow(caputo_poly(c.exact_poly, term.beta, t), term.power);
  }
  return std::abs(caputo_poly(c.exact_poly, p.alpha(), t) - rhs);
}

double max_node_error(const Solution& sol, const Expr& exact) {
  double worst = 0.0;
  for (std::size_t j = 0; j <= sol.grid.m(); ++j) {
    const double err = std::abs(sol.y.node_value(j) - exact(sol.grid.node(j)));
    worst = std::max(worst, err);
  }
  return worst;
}

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string("(") + buf + ")";
}

Term term(double coeff, double beta, double power = 1.0) {
  return Term{Expr::number(coeff), beta, power};
}

Term term(const std::string& coeff, double beta, double power = 1.0) {
  return Term{parse(coeff), beta, power};
}

std::vector<Expr> parse_all(std::initializer_list<const char*> srcs) {
  std::vector<Expr> out;
  for (const char* s : srcs) out.push_back(parse(s));
  return out;
}

// D^2 y + D^beta y + y = f, exact y = t^3.
ExactCase example_1(std::string name, double beta, const std::string& forcing, double reference_error,
                    double threshold, std::vector<Baseline> baselines) {
  FdeProblem problem(2.0, {term(-1.0, beta), term(-1.0, 0.0)}, parse(forcing), {0.0, 0.0});
  return ExactCase{std::move(name),
                   "linear, constant coefficients, alpha = 2",
                   std::move(problem),
                   parse("t^3"),
                   {0.0, 0.0, 0.0, 1.0},
                   parse_all({"t^3", "3*t^2"}),
                   reference_error,
                   0.1,
                   10,
                   threshold,
                   std::move(baselines)};
}

// D^a x + b D^a2 x + c D^a1 x + e x = f, exact x = t^2 - t.
ExactCase example_2(std::string name, double b, double c, double e, double a1, double a2,
                    double alpha, double reference_error, double threshold,
                    std::vector<Baseline> baselines) {
  const std::string f = "2*" + num(b) + "/gamma(3 - " + num(a2) + ")*t^(2 - " + num(a2) + ")" +
                        " + 2*" + num(c) + "/gamma(3 - " + num(a1) + ")*t^(2 - " + num(a1) + ")" +
                        " - " + num(c) + "/gamma(2 - " + num(a1) + ")*t^(1 - " + num(a1) + ")" +
                        " + " + num(e) + "*(t^2 - t)";
  FdeProblem problem(alpha, {term(-b, a2), term(-c, a1), term(-e, 0.0)}, parse(f),
                     {0.0, -1.0, 2.0, 0.0});
  return ExactCase{std::move(name),
                   "linear, four initial conditions",
                   std::move(problem),
                   parse("t^2 - t"),
                   {0.0, -1.0, 1.0},
                   parse_all({"t^2 - t", "2*t - 1", "2", "0"}),
                   reference_error,
                   1.0 / 500,
                   500,
                   threshold,
                   std::move(baselines)};
}

// a D^2 x + b D x + c D^a2 x + e D^a1 x + k x = f, exact x = 1 + t^2/2.
ExactCase example_3(std::string name, double a, double b, double c, double e, double k, double a1,
                    double a2, double reference_error, double threshold,
                    std::vector<Baseline> baselines) {
  const std::string f = "(" + num(a) + " + " + num(b) + "*t + " + num(c) + "/gamma(3 - " +
                        num(a2) + ")*t^(2 - " + num(a2) + ") + " + num(e) + "/gamma(3 - " +
                        num(a1) + ")*t^(2 - " + num(a1) + ") + " + num(k) +
                        "*(1 + 0.5*t^2))/" + num(a);
  FdeProblem problem(2.0, {term(-b / a, 1.0), term(-c / a, a2), term(-e / a, a1), term(-k / a, 0.0)},
                     parse(f), {1.0, 0.0});
  return ExactCase{std::move(name),
                   "linear, nonzero initial value",
                   std::move(problem),
                   parse("1 + 0.5*t^2"),
                   {1.0, 0.0, 0.5},
                   parse_all({"1 + 0.5*t^2", "t"}),
                   reference_error,
                   1.0 / 500,
                   500,
                   threshold,
                   std::move(baselines)};
}

// D^a x + b D^a2 x + c D^a1 x + e x^3 = f, exact x = t^3/3.
ExactCase example_4(std::string name, double b, double c, double e, double a1, double a2,
                    double alpha, double reference_error, double reference_h, std::size_t m,
                    double threshold, std::vector<Baseline> baselines) {
  const std::string f = "2*t^(3 - " + num(alpha) + ")/gamma(4 - " + num(alpha) + ") + 2*" +
                        num(b) + "/gamma(4 - " + num(a2) + ")*t^(3 - " + num(a2) + ") + 2*" +
                        num(c) + "/gamma(4 - " + num(a1) + ")*t^(3 - " + num(a1) + ") + " +
                        num(e) + "*(t^3/3)^3";
  std::vector<double> init(caputo_order(alpha), 0.0);
  FdeProblem problem(alpha, {term(-b, a2), term(-c, a1), term(-e, 0.0, 3.0)}, parse(f),
                     std::move(init));
  return ExactCase{std::move(name),
                   "nonlinear, cubic in y",
                   std::move(problem),
                   parse("t^3/3"),
                   {0.0, 0.0, 0.0, 1.0 / 3.0},
                   parse_all({"t^3/3", "t^2", "2*t"}),
                   reference_error,
                   reference_h,
                   m,
                   threshold,
                   std::move(baselines)};
}

// D^2 x + b D^a2 x + c (D^a1 x)^2 + e x^3 = f, exact x = t^3/3.
ExactCase example_5(std::string name, double b, double c, double e, double a1, double a2,
                    double reference_error, double threshold, std::vector<Baseline> baselines) {
  const std::string f = "2*t + 2*" + num(b) + "*t^(3 - " + num(a2) + ")/gamma(4 - " + num(a2) +
                        ") + " + num(c) + "*(2*t^(3 - " + num(a1) + ")/gamma(4 - " + num(a1) +
                        "))^2 + " + num(e) + "*(t^3/3)^3";
  FdeProblem problem(2.0, {term(-b, a2), term(-c, a1, 2.0), term(-e, 0.0, 3.0)}, parse(f),
                     {0.0, 0.0});
  return ExactCase{std::move(name),
                   "nonlinear, squared fractional derivative",
                   std::move(problem),
                   parse("t^3/3"),
                   {0.0, 0.0, 0.0, 1.0 / 3.0},
                   parse_all({"t^3/3", "t^2"}),
                   reference_error,
                   1.0 / 300,
                   300,
                   threshold,
                   std::move(baselines)};
}

// a D^2 x + b(t) D x + c(t) D^a2 x + e(t) D^a1 x + k(t) x = f, exact x = 2 - t^2/2.
ExactCase example_6(std::string name, double a, const std::string& b, const std::string& c,
                    const std::string& e, const std::string& k, double a1, double a2,
                    double reference_error, double threshold, std::vector<Baseline> baselines) {
  const std::string f = "(-" + num(a) + " - (" + b + ")*t - (" + c + ")*t^(2 - " + num(a2) +
                        ")/gamma(3 - " + num(a2) + ") - (" + e + ")*t^(2 - " + num(a1) +
                        ")/gamma(3 - " + num(a1) + ") + (" + k + ")*(2 - 0.5*t^2))/" + num(a);
  auto coeff = [&](const std::string& s) { return "-(" + s + ")/" + num(a); };
  FdeProblem problem(2.0,
                     {term(coeff(b), 1.0), term(coeff(c), a2), term(coeff(e), a1),
                      term(coeff(k), 0.0)},
                     parse(f), {2.0, 0.0});
  return ExactCase{std::move(name),
                   "linear, variable coefficients",
                   std::move(problem),
                   parse("2 - 0.5*t^2"),
                   {2.0, 0.0, -0.5},
                   parse_all({"2 - 0.5*t^2", "-t"}),
                   reference_error,
                   1.0 / 500,
                   500,
                   threshold,
                   std::move(baselines)};
}

std::vector<ExactCase> make_cases() {
  const double r2 = std::sqrt(2.0), r5 = std::sqrt(5.0), r7 = std::sqrt(7.0);
  std::vector<ExactCase> cases;

  const std::vector<Baseline> fc1 = {{"HWCM", "1/512", 1.8626e-09},
                                     {"Method 1a", "1/512", 2.96e-04},
                                     {"Method 1b", "1/512", 2.71e-04},
                                     {"Method 2", "1/512", 1.79e-05},
                                     {"Method 3", "1/512", 2.96e-04},
                                     {"Method 1a(2)", "1/512", 8.14e-07},
                                     {"Method 3(2)", "1/512", 8.14e-07},
                                     {"RVIM", "-", 8.55e-10}};
  const std::vector<Baseline> fc2 = {{"HWCM", "1/512", 1.8624e-09},
                                     {"Method 1a", "1/512", 3.54e-03},
                                     {"Method 1b", "1/512", 6.93e-05},
                                     {"Method 2", "1/512", 1.18e-04},
                                     {"Method 3", "1/512", 5.43e-04},
                                     {"Method 1a(2)", "1/512", 3.10e-06},
                                     {"Method 3(2)", "1/512", 5.07e-06}};
  cases.push_back(example_1("5.1-1", 0.5, "t^3 + 6*t + (3.2/gamma(0.5))*t^2.5", 1.7341e-13, 1e-11,
                            fc1));
  cases.push_back(example_1("5.1-2", 0.75, "t^3 + 6*t + (6/0.703125)/gamma(0.25)*t^2.25",
                            5.91726e-12, 1e-10, fc2));

  cases.push_back(example_2("5.2-1", 1, 1, 1, 0.77, 1.44, 3.91, 2.6650e-05, 1e-4,
                            {{"ET", "1/1000", 0.0009980642}, {"ER", "1/1000", 0.0009538565}}));
  cases.push_back(example_2("5.2-2", 1, 0.5, 0.5, r2 / 20, r2, std::sqrt(11.0), 7.006286e-06,
                            3e-5,
                            {{"ET", "1/1000", 0.0009958541}, {"ER", "1/1000", 0.0009805249}}));

  cases.push_back(example_3("5.3-1", 1, 3, 2, 1, 5, 0.0159, 0.1379, 1.841512e-07, 1e-6,
                            {{"PECE", "1/1000", 0.0004096262}}));
  cases.push_back(example_3("5.3-2", 0.2, 1, 1, 0.5, 2, 0.00196, 0.07621, 1.965186e-07, 1e-6,
                            {{"PECE", "1/1000", 0.0004379749}}));

  cases.push_back(example_4("5.4-1", 2, 0.5, 1, 0.00196, 0.07621, 2.0, 7.205347e-14, 0.1, 10,
                            1e-12,
                            {{"ET", "1/1000", 0.0008924007},
                             {"ER", "1/1000", 0.0007891357},
                             {"PNM", "1/2000", 0.000399235},
                             {"ADM", "-", 0.000150218},
                             {"NM", "1/2000", 9.39e-5}}));
  cases.push_back(example_4("5.4-2", 0.1, 0.2, 0.3, r5 / 5, r2 / 2, 2.0, 5.268008e-14, 0.1, 10,
                            1e-12,
                            {{"ET", "1/1000", 0.0009717941},
                             {"ER", "1/1000", 0.0009438396},
                             {"PNM", "1/2000", 0.000388881},
                             {"ADM", "-", 5.74351e-06},
                             {"NM", "1/2000", 2.6866e-4}}));
  cases.push_back(example_4("5.4-3", 2, 0.5, 1, 0.00196, 1.07621, 2.55, 2.80956210e-05,
                            1.0 / 500, 500, 1e-4,
                            {{"2E", "1/1000", 0.00134739300}, {"3E", "1/1000", 0.00120052700}}));
  cases.push_back(example_4("5.4-4", 0.1, 0.2, 0.3, r7 / 7, r7 / 2, r7, 8.5593407e-05, 1.0 / 500,
                            500, 3e-4,
                            {{"2E", "1/1000", 0.00150859400}, {"3E", "1/1000", 0.00149777500}}));

  cases.push_back(example_5("5.5-1", 1, 1, 1, 0.555, 1.455, 4.96926379e-06, 2e-5,
                            {{"PECE", "1/1000", 0.000006325524}}));
  cases.push_back(example_5("5.5-2", 0.5, 0.5, 0.5, 0.276, 1.999, 1.62141126e-07, 1e-6,
                            {{"PECE", "1/1000", 0.00057616830}}));

  cases.push_back(example_6("5.6-1", 0.1, "t", "1 + t", "t^2", "(1 + t)^2", 0.781, 0.891,
                            1.34738857e-07, 1e-6,
                            {{"ET", "1/1000", 0.00031542780}, {"ER", "1/1000", 0.00002789852}}));
  cases.push_back(example_6("5.6-2", 5, "sqrt(t)", "t^2 - t", "3*t", "t^3 - t", r7 / 70,
                            std::sqrt(13.0) / 13, 4.00000005e-06, 2e-5,
                            {{"ET", "1/1000", 0.00050354}, {"ER", "1/1000", 0.0004844666}}));

  for (const auto& c : cases) check_initial_conditions(c);
  return cases;
}

}  // namespace

const std::vector<ExactCase>& builtin_cases() {
  static const std::vector<ExactCase> cases = make_cases();
  return cases;
}

}  // namespace hfm::oracle
