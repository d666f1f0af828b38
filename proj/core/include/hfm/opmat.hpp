#pragma once

// One-shot operational matrices of Riemann-Liouville fractional integration
// in the HF basis.
//
// For an order alpha > 0 the integral of the SHF vector is
//   J^a S(t) = Pss S(t) + Pst T(t)
// and of the TF vector
//   J^a T(t) = Pts S(t) + Ptt T(t),
// with all four matrices upper-triangular Toeplitz. With c = h^a / G(a+1) and
// d = h^a / G(a+2) their first rows are
//   Pss: c [0, s_1, ..., s_{m-1}]     s_k = k^a - (k-1)^a
//   Pst: c [1, x_1, ..., x_{m-1}]     x_k = (k+1)^a - 2k^a + (k-1)^a
//   Pts: d [0, f_1, ..., f_{m-1}]     f_k = k^(a+1) - (k-1)^a (k+a)
//   Ptt: d [1, p_1, ..., p_{m-1}]     p_k = (k+1)^(a+1) - (k+1+a)k^a - k^(a+1) + (k+a)(k-1)^a
// The node values produced are exact for the piecewise-linear input; only
// the first rows are ever stored.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <vector>

#include "hfm/hf_basis.hpp"

namespace hfm {

/// Upper-triangular Toeplitz matrix: entry (i, j) = first_row[j - i] for j >= i.
class UtToeplitz {
 public:
  UtToeplitz() = default;
  explicit UtToeplitz(std::vector<double> first_row) : row_(std::move(first_row)) {}

  std::size_t size() const noexcept { return row_.size(); }
  std::span<const double> first_row() const noexcept { return row_; }
  double operator()(std::size_t i, std::size_t j) const noexcept {
    return j >= i ? row_[j - i] : 0.0;
  }

 private:
  std::vector<double> row_;
};

/// Row vector times matrix: result_j = sum_{i <= j} coeffs_i * first_row[j - i].
std::vector<double> apply_row(std::span<const double> coeffs, const UtToeplitz& mat);

/// The j-th entry of apply_row, summing only i in [begin, j].
double apply_row_at(std::span<const double> coeffs, const UtToeplitz& mat, std::size_t j,
                    std::size_t begin = 0);

struct OpMatSet {
  double alpha;
  Grid grid;
  UtToeplitz pss;
  UtToeplitz pst;
  UtToeplitz pts;
  UtToeplitz ptt;
};

// Dimensionless generator sequences (k >= 1). Integer orders with small k
// are evaluated directly, which is exact; otherwise large k switches to
// cancellation-free forms.
double shf_node_weight(std::size_t k, double alpha);   ///< s_k
double shf_slope_weight(std::size_t k, double alpha);  ///< x_k
double tf_node_weight(std::size_t k, double alpha);    ///< f_k
double tf_slope_weight(std::size_t k, double alpha);   ///< p_k

/// Accepted order range.
inline constexpr double kMaxOrder = 50.0;

/// Build the four matrices for order `alpha` in (0, 50] on `grid`.
OpMatSet build(double alpha, const Grid& grid);

/// Thread-safe memo of OpMatSets keyed by (alpha bits, m, h bits).
class OpMatCache {
 public:
  std::shared_ptr<const OpMatSet> get(double alpha, const Grid& grid);
  std::size_t size() const;
  void clear();

  /// Process-wide instance used by frac_integrate.
  static OpMatCache& global();

 private:
  using Key = std::tuple<std::uint64_t, std::size_t, std::uint64_t>;
  mutable std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const OpMatSet>> entries_;
};

/// HF coefficients of J^alpha applied to the function represented by `p`.
HfPair frac_integrate(const HfPair& p, const OpMatSet& ops);
HfPair frac_integrate(const HfPair& p, double alpha);

}  // namespace hfm
