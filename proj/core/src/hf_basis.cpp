#include "hfm/hf_basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hfm {

Grid::Grid(double t_end, std::size_t m) : t_end_(t_end), m_(m), h_(0.0) {
  if (m == 0) throw DomainError("grid needs at least one subinterval");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) {
    throw DomainError("grid end point must be positive and finite");
  }
  h_ = t_end / static_cast<double>(m);
}

double Grid::node(std::size_t i) const {
  if (i > m_) throw DomainError("node index " + std::to_string(i) + " beyond grid");
  if (i == m_) return t_end_;
  return static_cast<double>(i) * h_;
}

HfPair::HfPair(const Grid& grid) : grid_(grid), cs_(grid.m(), 0.0), ct_(grid.m(), 0.0) {}

HfPair::HfPair(const Grid& grid, std::vector<double> cs, std::vector<double> ct)
    : grid_(grid), cs_(std::move(cs)), ct_(std::move(ct)) {
  if (cs_.size() != grid_.m() || ct_.size() != grid_.m()) {
    throw ShapeError("coefficient vectors must have length m = " + std::to_string(grid_.m()));
  }
}

double HfPair::node_value(std::size_t i) const {
  const std::size_t m = cs_.size();
  if (i < m) return cs_[i];
  if (i == m) return cs_[m - 1] + ct_[m - 1];
  throw DomainError("node index " + std::to_string(i) + " beyond grid");
}

std::vector<double> HfPair::node_values() const {
  std::vector<double> out(cs_.size() + 1);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = node_value(i);
  return out;
}

HfPair& HfPair::operator+=(const HfPair& other) {
  if (!(grid_ == other.grid_)) throw ShapeError("HF pairs live on different grids");
  for (std::size_t i = 0; i < cs_.size(); ++i) {
    cs_[i] += other.cs_[i];
    ct_[i] += other.ct_[i];
  }
  return *this;
}

double evaluate(const HfPair& p, double t) {
  const Grid& g = p.grid();
  if (!(t >= 0.0 && t <= g.t_end())) {
    throw DomainError("evaluation point " + std::to_string(t) + " outside [0, " +
                      std::to_string(g.t_end()) + "]");
  }
  const std::size_t m = g.m();
  const double s = t / g.h();

  // Snap to a node when t is a node up to rounding of i*h, so node values come back exactly.
  const double nearest = std::nearbyint(s);
  if (std::abs(s - nearest) <= 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, s)) {
    const auto k = static_cast<std::size_t>(nearest);
    return p.node_value(std::min(k, m));
  }
  auto i = static_cast<std::size_t>(std::floor(s));
  if (i >= m) i = m - 1;
  const double theta = s - static_cast<double>(i);
  return p.cs()[i] + theta * p.ct()[i];
}

HfPair multiply(const HfPair& p, const HfPair& q) {
  if (!(p.grid() == q.grid())) throw ShapeError("multiply: HF pairs live on different grids");
  const std::size_t m = p.size();
  std::vector<double> cs(m), ct(m);
  const auto ps = p.cs(), pt = p.ct(), qs = q.cs(), qt = q.ct();
  for (std::size_t i = 0; i < m; ++i) {
    cs[i] = ps[i] * qs[i];
    ct[i] = ps[i] * qt[i] + pt[i] * qs[i] + pt[i] * qt[i];
  }
  return HfPair(p.grid(), std::move(cs), std::move(ct));
}

namespace {

double checked_pow(double base, double n, std::size_t node) {
  if (base < 0.0 && n != std::floor(n)) {
    throw DomainError("negative value " + std::to_string(base) + " raised to fractional power " +
                      std::to_string(n) + " at node " + std::to_string(node));
  }
  return std::pow(base, n);
}

}  // namespace

HfPair power(const HfPair& p, double n) {
  const std::size_t m = p.size();
  const auto ps = p.cs();
  std::vector<double> powered(m + 1);
  for (std::size_t i = 0; i < m; ++i) powered[i] = checked_pow(ps[i], n, i);
  powered[m] = checked_pow(p.node_value(m), n, m);

  std::vector<double> cs(powered.begin(), powered.end() - 1);
  std::vector<double> ct(m);
  for (std::size_t i = 0; i < m; ++i) ct[i] = powered[i + 1] - powered[i];
  return HfPair(p.grid(), std::move(cs), std::move(ct));
}

double inner_product(std::size_t i, std::size_t j, const Grid& grid, BasisProduct kind) {
  if (i >= grid.m() || j >= grid.m()) throw DomainError("basis index beyond grid");
  // Supports of different basis indices are disjoint.
  if (i != j) return 0.0;
  switch (kind) {
    case BasisProduct::SS:
      return grid.h();
    case BasisProduct::TT:
      return grid.h() / 3.0;
    case BasisProduct::ST:
      return grid.h() / 2.0;
  }
  return 0.0;
}

}  // namespace hfm
