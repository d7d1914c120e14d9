#include "fracsew/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace fracsew {

DiagonalGenerator DiagonalGenerator::laplacian_shifted(std::size_t n_modes) {
  if (n_modes == 0) throw std::invalid_argument("laplacian_shifted: n_modes must be positive");
  std::vector<double> mu(n_modes);
  for (std::size_t k = 0; k < n_modes; ++k) mu[k] = 1.0 + double(k) * double(k);
  return DiagonalGenerator(std::move(mu));
}

DiagonalGenerator::DiagonalGenerator(std::vector<double> mu) : mu_(std::move(mu)) {
  if (mu_.empty()) throw std::invalid_argument("DiagonalGenerator: empty spectrum");
  for (std::size_t k = 0; k < mu_.size(); ++k) {
    if (!(mu_[k] > 0.0)) throw std::invalid_argument("DiagonalGenerator: eigenvalues must be positive");
    if (k > 0 && mu_[k] < mu_[k - 1])
      throw std::invalid_argument("DiagonalGenerator: eigenvalues must be ascending");
  }
  mu_vec_ = Eigen::Map<const Vec>(mu_.data(), long(mu_.size()));
}

Vec DiagonalGenerator::apply_semigroup(double t, const Vec& x) const {
  if (t < 0.0) throw std::invalid_argument("apply_semigroup: t must be nonnegative");
  if (x.size() != long(mu_.size())) throw std::invalid_argument("apply_semigroup: dimension mismatch");
  if (t == 0.0) return x;
  return (-t * mu_vec_.array()).exp() * x.array();
}

Vec DiagonalGenerator::apply_fractional_power(double kappa, const Vec& x) const {
  if (x.size() != long(mu_.size()))
    throw std::invalid_argument("apply_fractional_power: dimension mismatch");
  if (kappa == 0.0) return x;
  return mu_vec_.array().pow(kappa) * x.array();
}

double DiagonalGenerator::fractional_norm(double kappa, const Vec& x) const {
  if (x.size() != long(mu_.size())) throw std::invalid_argument("fractional_norm: dimension mismatch");
  if (kappa == 0.0) return x.norm();
  return (mu_vec_.array().pow(kappa) * x.array()).matrix().norm();
}

Mat DiagonalGenerator::semigroup_table(const TimeGrid& grid) const {
  Mat tab(grid.n_points(), mu_.size());
  Eigen::ArrayXd step = (-grid.dt * mu_vec_.array()).exp();
  tab.row(0).setOnes();
  for (std::size_t k = 1; k < grid.n_points(); ++k)
    tab.row(k) = tab.row(k - 1).array() * step.transpose();
  return tab;
}

}  // namespace fracsew
