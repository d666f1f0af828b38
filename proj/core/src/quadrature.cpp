#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>

#include "hfm/error.hpp"
#include "hfm/gamma.hpp"
#include "hfm/oracle.hpp"

namespace hfm::oracle {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (positive half).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kXgk[1], kXgk[3], kXgk[5], kXgk[7].
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[i] * sum;
    if (i % 2 == 1) gauss += kWg[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return Segment{a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, std::span<const double> breaks,
                           std::size_t max_intervals) {
  std::vector<double> cuts{a};
  for (double x : breaks) {
    if (x > a && x < b) cuts.push_back(x);
  }
  std::sort(cuts.begin() + 1, cuts.end());
  cuts.push_back(b);

  std::priority_queue<Segment> heap;
  double value = 0.0, error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    Segment s = gauss_kronrod(f, cuts[i], cuts[i + 1]);
    value += s.value;
    error += s.error;
    heap.push(s);
  }
  while (error > tol) {
    if (heap.size() >= max_intervals || heap.empty()) {
      throw AccuracyError("quadrature: tolerance " + std::to_string(tol) +
                          " not reached, error estimate " + std::to_string(error));
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw AccuracyError("quadrature: interval cannot be bisected further");
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum to shed the drift of incremental updates.
  double total = 0.0, total_err = 0.0;
  const std::size_t count = heap.size();
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().error;
    heap.pop();
  }
  return QuadratureResult{total, total_err, count};
}

double frac_int_quadrature(const std::function<double(double)>& f, double alpha, double t,
                           double tol, std::span<const double> breaks) {
  if (!(alpha > 0.0)) throw DomainError("fractional order must be positive");
  if (!(t >= 0.0)) throw DomainError("quadrature point must be non-negative");
  if (t == 0.0) return 0.0;
  const double inv = 1.0 / alpha;
  const double upper = std::pow(t, alpha);
  const double scale = 1.0 / gamma(alpha + 1.0);
  std::vector<double> ubreaks;
  for (double b : breaks) {
    if (b > 0.0 && b < t) ubreaks.push_back(std::pow(t - b, alpha));
  }
  auto integrand = [&](double u) { return f(std::max(0.0, t - std::pow(u, inv))); };
  const auto r = integrate(integrand, 0.0, upper, tol / scale, ubreaks);
  return scale * r.value;
}

double frac_int_quadrature(const Expr& f, double alpha, double t, double tol) {
  return frac_int_quadrature([&](double x) { return f(x); }, alpha, t, tol);
}

}  // namespace hfm::oracle
