#include "hfm/opmat.hpp"

#include <bit>
#include <cmath>
#include <mutex>
#include <string>

#include "hfm/gamma.hpp"

namespace hfm {

namespace {

using Real = long double;

// Below this k the differences are formed directly in extended precision.
constexpr std::size_t kDirectLimit = 8;

bool is_integer(double a) { return a == std::floor(a); }

// Integer order and all intermediate powers exactly representable in double:
// the direct formulas are then exact, which keeps alpha = 1 bit-identical to
// the first-order matrices.
bool exact_integer_case(std::size_t k, double alpha) {
  if (!is_integer(alpha)) return false;
  return std::pow(static_cast<double>(k + 1), alpha + 1.0) < 0x1p53;
}

template <typename T>
T pw(T base, T e) {
  if (base == T(0)) return e == T(0) ? T(1) : T(0);
  return std::pow(base, e);
}

template <typename T>
T direct_shf_node(T k, T a) { return pw(k, a) - pw(k - 1, a); }

template <typename T>
T direct_shf_slope(T k, T a) { return pw(k + 1, a) - 2 * pw(k, a) + pw(k - 1, a); }

template <typename T>
T direct_tf_node(T k, T a) { return pw(k, a + 1) - pw(k - 1, a) * (k + a); }

template <typename T>
T direct_tf_slope(T k, T a) {
  return pw(k + 1, a + 1) - (k + 1 + a) * pw(k, a) - pw(k, a + 1) + (k + a) * pw(k - 1, a);
}

// Sum of c_n x^n for n >= first, stopping once two consecutive terms are negligible.
template <typename Coeff>
Real power_series(Real x, std::size_t first, Coeff&& coeff) {
  Real sum = 0;
  Real xn = std::pow(x, static_cast<Real>(first));
  int small = 0;
  for (std::size_t n = first; n < first + 400; ++n, xn *= x) {
    const Real term = coeff(n) * xn;
    sum += term;
    if (std::abs(term) <= 1e-22L * std::abs(sum)) {
      if (++small == 2) break;
    } else {
      small = 0;
    }
  }
  return sum;
}

// Generalized binomial coefficients C(a, 0..count-1).
std::vector<Real> binomials(Real a, std::size_t count) {
  std::vector<Real> c(count);
  c[0] = 1;
  for (std::size_t n = 1; n < count; ++n) c[n] = c[n - 1] * (a - static_cast<Real>(n - 1)) / n;
  return c;
}

constexpr std::size_t kSeriesTerms = 402;

// build() evaluates every k for one order, so the last table is reused.
const std::vector<Real>& cached_binomials(Real a) {
  thread_local Real last = NAN;
  thread_local std::vector<Real> table;
  if (!(a == last)) {
    table = binomials(a, kSeriesTerms);
    last = a;
  }
  return table;
}

// Large-k forms: with x = 1/k every sequence is k^p times a power series in x
// whose leading cancelling terms have been removed analytically.
Real series_shf_node(Real k, Real a) {
  return -std::pow(k, a) * std::expm1(a * std::log1p(-1 / k));
}

Real series_shf_slope(Real k, Real a) {
  const auto& c = cached_binomials(a);
  const Real s = power_series(1 / k, 2, [&](std::size_t n) {
    return (n % 2 == 0) ? 2 * c[n] : Real(0);
  });
  return std::pow(k, a) * s;
}

// (1 - x)^a (1 + a x) = sum_n (a_n + a * a_{n-1}) x^n with a_n = (-1)^n C(a, n).
Real alt_product_coeff(const std::vector<Real>& c, Real a, std::size_t n) {
  const Real an = (n % 2 == 0 ? 1 : -1) * c[n];
  const Real an1 = ((n - 1) % 2 == 0 ? 1 : -1) * c[n - 1];
  return an + a * an1;
}

Real series_tf_node(Real k, Real a) {
  const auto& c = cached_binomials(a);
  const Real s = power_series(1 / k, 2, [&](std::size_t n) { return alt_product_coeff(c, a, n); });
  return -std::pow(k, a + 1) * s;
}

Real series_tf_slope(Real k, Real a) {
  const auto& c = cached_binomials(a);
  // C(a+1, n) = C(a, n) + C(a, n-1).
  const Real s = power_series(1 / k, 3, [&](std::size_t n) {
    return c[n] + c[n - 1] + alt_product_coeff(c, a, n);
  });
  return std::pow(k, a + 1) * s;
}

template <typename Direct, typename Series>
double generator(std::size_t k, double alpha, Direct&& direct, Series&& series) {
  if (k == 0) throw DomainError("generator index must be >= 1");
  if (exact_integer_case(k, alpha)) {
    return direct(static_cast<double>(k), alpha);
  }
  if (k <= kDirectLimit) {
    return static_cast<double>(direct(static_cast<Real>(k), static_cast<Real>(alpha)));
  }
  return static_cast<double>(series(static_cast<Real>(k), static_cast<Real>(alpha)));
}

}  // namespace

double shf_node_weight(std::size_t k, double alpha) {
  return generator(k, alpha, [](auto kk, auto a) { return direct_shf_node(kk, a); },
                   series_shf_node);
}

double shf_slope_weight(std::size_t k, double alpha) {
  return generator(k, alpha, [](auto kk, auto a) { return direct_shf_slope(kk, a); },
                   series_shf_slope);
}

double tf_node_weight(std::size_t k, double alpha) {
  return generator(k, alpha, [](auto kk, auto a) { return direct_tf_node(kk, a); },
                   series_tf_node);
}

double tf_slope_weight(std::size_t k, double alpha) {
  return generator(k, alpha, [](auto kk, auto a) { return direct_tf_slope(kk, a); },
                   series_tf_slope);
}

std::vector<double> apply_row(std::span<const double> coeffs, const UtToeplitz& mat) {
  if (coeffs.size() != mat.size()) {
    throw ShapeError("apply_row: vector length " + std::to_string(coeffs.size()) +
                     " does not match matrix dimension " + std::to_string(mat.size()));
  }
  std::vector<double> out(coeffs.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = apply_row_at(coeffs, mat, j);
  return out;
}

double apply_row_at(std::span<const double> coeffs, const UtToeplitz& mat, std::size_t j,
                    std::size_t begin) {
  const auto row = mat.first_row();
  double acc = 0.0;
  for (std::size_t i = begin; i <= j; ++i) acc += coeffs[i] * row[j - i];
  return acc;
}

OpMatSet build(double alpha, const Grid& grid) {
  if (!(alpha > 0.0) || !(alpha <= kMaxOrder)) {
    throw DomainError("integration order must lie in (0, 50], got " + std::to_string(alpha));
  }
  const std::size_t m = grid.m();
  const double ha = std::pow(grid.h(), alpha);
  const double c = ha / gamma(alpha + 1.0);
  const double d = ha / gamma(alpha + 2.0);

  std::vector<double> ss(m), st(m), ts(m), tt(m);
  ss[0] = 0.0;
  st[0] = c;
  ts[0] = 0.0;
  tt[0] = d;
  for (std::size_t k = 1; k < m; ++k) {
    ss[k] = c * shf_node_weight(k, alpha);
    st[k] = c * shf_slope_weight(k, alpha);
    ts[k] = d * tf_node_weight(k, alpha);
    tt[k] = d * tf_slope_weight(k, alpha);
  }
  return OpMatSet{alpha, grid, UtToeplitz(std::move(ss)), UtToeplitz(std::move(st)),
                  UtToeplitz(std::move(ts)), UtToeplitz(std::move(tt))};
}

std::shared_ptr<const OpMatSet> OpMatCache::get(double alpha, const Grid& grid) {
  const Key key{std::bit_cast<std::uint64_t>(alpha), grid.m(),
                std::bit_cast<std::uint64_t>(grid.h())};
  {
    std::shared_lock lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  }
  auto built = std::make_shared<const OpMatSet>(build(alpha, grid));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = entries_.emplace(key, std::move(built));
  return it->second;
}

std::size_t OpMatCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void OpMatCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

OpMatCache& OpMatCache::global() {
  static OpMatCache cache;
  return cache;
}

HfPair frac_integrate(const HfPair& p, const OpMatSet& ops) {
  if (!(p.grid() == ops.grid)) throw ShapeError("frac_integrate: matrices built for another grid");
  auto cs = apply_row(p.cs(), ops.pss);
  auto cs_t = apply_row(p.ct(), ops.pts);
  auto ct = apply_row(p.cs(), ops.pst);
  auto ct_t = apply_row(p.ct(), ops.ptt);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    cs[j] += cs_t[j];
    ct[j] += ct_t[j];
  }
  return HfPair(p.grid(), std::move(cs), std::move(ct));
}

HfPair frac_integrate(const HfPair& p, double alpha) {
  return frac_integrate(p, *OpMatCache::global().get(alpha, p.grid()));
}

}  // namespace hfm
