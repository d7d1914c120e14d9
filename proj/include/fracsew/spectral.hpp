#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "fracsew/grid.hpp"

namespace fracsew {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Diagonal model of the sectorial generator A: -A has eigenvalues mu_k > 0,
/// sorted ascending, so the analytic semigroup S_t acts mode-wise as
/// exp(-mu_k t) and the interpolation norms are weighted l2 norms.
class DiagonalGenerator {
 public:
  /// mu_k = 1 + k^2 (shifted Laplacian), k = 0..n_modes-1.
  static DiagonalGenerator laplacian_shifted(std::size_t n_modes);
  /// Explicit spectrum; must be positive and ascending.
  explicit DiagonalGenerator(std::vector<double> mu);

  std::size_t n_modes() const { return mu_.size(); }
  double mu(std::size_t k) const { return mu_[k]; }
  const Vec& eigenvalues() const { return mu_vec_; }
  double nu() const { return mu_.front(); }  // spectral gap, |S_t| = e^{-nu t}

  /// S_t x, t >= 0.
  Vec apply_semigroup(double t, const Vec& x) const;
  /// (-A)^kappa x, any real kappa.
  Vec apply_fractional_power(double kappa, const Vec& x) const;
  /// |x|_{H_kappa} = (sum mu_k^{2 kappa} x_k^2)^{1/2}.
  double fractional_norm(double kappa, const Vec& x) const;

  /// Table of semigroup factors exp(-mu * k dt) for k = 0..n_steps; row k is
  /// the diagonal of S_{k dt}. Precomputed once per grid for solver loops.
  Mat semigroup_table(const TimeGrid& grid) const;

 private:
  std::vector<double> mu_;
  Vec mu_vec_;
};

}  // namespace fracsew
