#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fracsew/grid.hpp"
#include "fracsew/spectral.hpp"

namespace fracsew {

/// Covariance of one-dimensional fBm: E[beta_s beta_t].
double fbm_covariance(double H, double s, double t);

/// Trace-class covariance spectrum of Q on the noise space.
struct QSpec {
  std::vector<double> lambda;  // descending, positive
  double trace = 0.0;

  static QSpec power_law(std::size_t m_modes, double q_exponent = 1.5);
  static QSpec explicit_spectrum(std::vector<double> lambda);
  std::size_t m_modes() const { return lambda.size(); }
};

/// Scalar path on a uniform grid (values, one per grid point).
struct ScalarPath {
  TimeGrid grid;
  std::vector<double> values;

  double operator[](std::size_t k) const { return values[k]; }
  std::size_t n_points() const { return values.size(); }
};

/// Hilbert-space-valued path: one coordinate vector (length m_modes) per grid point.
struct QfbmPath {
  TimeGrid grid;
  std::vector<Vec> values;

  const Vec& operator[](std::size_t k) const { return values[k]; }
  Vec increment(std::size_t j, std::size_t k) const { return values[k] - values[j]; }
};

/// Stationary fractional Gaussian noise sampler. Circulant embedding is the
/// default O(n log n) route; the dense Cholesky factor of the exact increment
/// covariance doubles as oracle and as fallback when the embedding fails.
class FgnSampler {
 public:
  FgnSampler(double H, std::size_t n, double dt);

  double hurst() const { return H_; }
  bool used_cholesky_fallback() const { return fallback_; }

  /// n stationary increments with Cov(d_i, d_j) = gamma(|i-j|).
  std::vector<double> sample(std::uint64_t seed) const;
  /// Exact-covariance O(n^2) sampler (test oracle).
  std::vector<double> sample_cholesky(std::uint64_t seed) const;

  /// Lag-k increment covariance gamma(k).
  double increment_covariance(std::size_t lag) const;

 private:
  double H_, dt_;
  std::size_t n_;
  bool fallback_ = false;
  std::vector<double> sqrt_eig_;      // sqrt(lambda_k / m) of the circulant embedding
  std::vector<double> chol_;          // lower-triangular factor (column-major packed), lazy
  void build_circulant();
  void build_cholesky();
};

/// Cumulative fBm path from fGn increments: beta_0 = 0.
ScalarPath sample_fbm(double H, const TimeGrid& grid, std::uint64_t seed);

/// Q-fBm: coordinate n is sqrt(lambda_n) times an independent fBm; per-mode
/// seeds derive from (seed, mode) so truncation changes keep earlier modes.
QfbmPath sample_qfbm(const QSpec& q, double H, const TimeGrid& grid, std::uint64_t seed);

/// In-place radix-2 complex FFT (n must be a power of two); inverse applies 1/n.
void fft_radix2(std::vector<std::complex<double>>& a, bool inverse);

}  // namespace fracsew
