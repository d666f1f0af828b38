#pragma once

// Hybrid-function (HF) representation of a function on a uniform grid.
//
// On each subinterval [ih, (i+1)h) a function is represented by
//   c_i * S_i(t) + d_i * T_i(t)
// where S_i is the sample-and-hold indicator of the subinterval and T_i the
// right-handed ramp (t - ih)/h on it. Collecting the coefficients gives the
// pair (cs, ct); for a sampled function cs holds node values and ct the
// forward differences, so the pair is the piecewise-linear interpolant.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hfm/error.hpp"

namespace hfm {

/// Uniform partition of [0, t_end] into m subintervals of width h.
class Grid {
 public:
  Grid(double t_end, std::size_t m);

  double t_end() const noexcept { return t_end_; }
  std::size_t m() const noexcept { return m_; }
  double h() const noexcept { return h_; }

  /// Node i*h for 0 <= i <= m; node m is t_end exactly.
  double node(std::size_t i) const;

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.m_ == b.m_ && a.t_end_ == b.t_end_;
  }

 private:
  double t_end_;
  std::size_t m_;
  double h_;
};

class HfPair {
 public:
  /// Zero function on `grid`.
  explicit HfPair(const Grid& grid);
  HfPair(const Grid& grid, std::vector<double> cs, std::vector<double> ct);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return cs_.size(); }
  std::span<const double> cs() const noexcept { return cs_; }
  std::span<const double> ct() const noexcept { return ct_; }

  /// Value at node i (0 <= i <= m). Node m is the right-endpoint limit.
  double node_value(std::size_t i) const;

  /// All m+1 node values.
  std::vector<double> node_values() const;

  HfPair& operator+=(const HfPair& other);
  friend HfPair operator+(HfPair a, const HfPair& b) { return a += b; }

 private:
  Grid grid_;
  std::vector<double> cs_;
  std::vector<double> ct_;
};

template <typename F>
concept ScalarFunction = requires(const F& f, double t) {
  { f(t) } -> std::convertible_to<double>;
};

/// Expand f by sampling it at the m+1 grid nodes.
template <ScalarFunction F>
HfPair sample(const F& f, const Grid& grid) {
  const std::size_t m = grid.m();
  std::vector<double> values(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const double t = grid.node(i);
    const double v = static_cast<double>(f(t));
    if (!std::isfinite(v)) {
      throw SamplingError(i, t,
                          "non-finite function value at node " +
                              std::to_string(i) + " (t = " + std::to_string(t) + ")");
    }
    values[i] = v;
  }
  std::vector<double> cs(values.begin(), values.end() - 1);
  std::vector<double> ct(m);
  for (std::size_t i = 0; i < m; ++i) ct[i] = values[i + 1] - values[i];
  return HfPair(grid, std::move(cs), std::move(ct));
}

/// Piecewise-linear reconstruction at t in [0, t_end].
double evaluate(const HfPair& p, double t);

/// HF approximation of the pointwise product (element-wise rule).
HfPair multiply(const HfPair& p, const HfPair& q);

/// HF approximation of p(t)^n from node values.
HfPair power(const HfPair& p, double n);

enum class BasisProduct { SS, TT, ST };

/// Analytic integral over [0, t_end] of the product of two basis functions.
double inner_product(std::size_t i, std::size_t j, const Grid& grid, BasisProduct kind);

}  // namespace hfm
