#include "fracsew/fbm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fracsew/rng.hpp"

namespace fracsew {

double fbm_covariance(double H, double s, double t) {
  if (!(H > 0.0 && H < 1.0)) throw std::invalid_argument("fbm_covariance: H must lie in (0,1)");
  if (s < 0.0 || t < 0.0) throw std::invalid_argument("fbm_covariance: times must be nonnegative");
  return 0.5 * (std::pow(t, 2 * H) + std::pow(s, 2 * H) - std::pow(std::abs(t - s), 2 * H));
}

QSpec QSpec::power_law(std::size_t m_modes, double q_exponent) {
  if (m_modes == 0) throw std::invalid_argument("QSpec: m_modes must be positive");
  QSpec q;
  q.lambda.resize(m_modes);
  for (std::size_t n = 0; n < m_modes; ++n) q.lambda[n] = std::pow(double(n + 1), -q_exponent);
  for (double l : q.lambda) q.trace += l;
  return q;
}

QSpec QSpec::explicit_spectrum(std::vector<double> lambda) {
  if (lambda.empty()) throw std::invalid_argument("QSpec: empty spectrum");
  for (std::size_t n = 0; n < lambda.size(); ++n) {
    if (!(lambda[n] > 0.0)) throw std::invalid_argument("QSpec: eigenvalues must be positive");
    if (n > 0 && lambda[n] > lambda[n - 1])
      throw std::invalid_argument("QSpec: eigenvalues must be descending");
  }
  QSpec q;
  q.lambda = std::move(lambda);
  for (double l : q.lambda) q.trace += l;
  return q;
}

void fft_radix2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft_radix2: size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = 2.0 * std::numbers::pi / double(len) * (inverse ? -1.0 : 1.0);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& z : a) z /= double(n);
}

namespace {
std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}
}  // namespace

FgnSampler::FgnSampler(double H, std::size_t n, double dt) : H_(H), dt_(dt), n_(n) {
  if (!(H > 0.0 && H < 1.0)) throw std::invalid_argument("FgnSampler: H must lie in (0,1)");
  if (n == 0) throw std::invalid_argument("FgnSampler: n must be positive");
  if (!(dt > 0.0)) throw std::invalid_argument("FgnSampler: dt must be positive");
  build_circulant();
  if (fallback_) build_cholesky();
}

double FgnSampler::increment_covariance(std::size_t lag) const {
  const double k = double(lag);
  return 0.5 * (std::pow(k + 1, 2 * H_) - 2 * std::pow(k, 2 * H_) + std::pow(std::abs(k - 1.0), 2 * H_)) *
         std::pow(dt_, 2 * H_);
}

void FgnSampler::build_circulant() {
  const std::size_t np = next_pow2(n_);
  const std::size_t m = 2 * np;
  std::vector<std::complex<double>> row(m);
  for (std::size_t k = 0; k <= np; ++k) row[k] = increment_covariance(k);
  for (std::size_t k = np + 1; k < m; ++k) row[k] = row[m - k];
  fft_radix2(row, false);
  sqrt_eig_.resize(m);
  const double tol = -1e-9 * std::abs(row[0].real());
  for (std::size_t k = 0; k < m; ++k) {
    double lam = row[k].real();
    if (lam < tol) {
      fallback_ = true;  // for H > 1/2 this does not occur; kept for safety
      return;
    }
    sqrt_eig_[k] = std::sqrt(std::max(lam, 0.0) / double(m));
  }
}

void FgnSampler::build_cholesky() {
  const std::size_t n = n_;
  chol_.assign(n * n, 0.0);
  auto L = [&](std::size_t i, std::size_t j) -> double& { return chol_[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = increment_covariance(i - j);
      for (std::size_t k = 0; k < j; ++k) s -= L(i, k) * L(j, k);
      if (i == j) {
        if (s <= 0.0) throw std::runtime_error("FgnSampler: increment covariance not positive definite");
        L(i, j) = std::sqrt(s);
      } else {
        L(i, j) = s / L(j, j);
      }
    }
  }
}

std::vector<double> FgnSampler::sample(std::uint64_t seed) const {
  if (fallback_) return sample_cholesky(seed);
  const std::size_t m = sqrt_eig_.size();
  Rng rng(seed);
  std::vector<std::complex<double>> z(m);
  for (std::size_t k = 0; k < m; ++k) z[k] = {sqrt_eig_[k] * rng.normal(), sqrt_eig_[k] * rng.normal()};
  fft_radix2(z, false);
  std::vector<double> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = z[k].real();
  return out;
}

std::vector<double> FgnSampler::sample_cholesky(std::uint64_t seed) const {
  if (chol_.empty()) const_cast<FgnSampler*>(this)->build_cholesky();
  Rng rng(seed);
  std::vector<double> xi(n_);
  for (auto& v : xi) v = rng.normal();
  std::vector<double> out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j <= i; ++j) s += chol_[i * n_ + j] * xi[j];
    out[i] = s;
  }
  return out;
}

ScalarPath sample_fbm(double H, const TimeGrid& grid, std::uint64_t seed) {
  FgnSampler sampler(H, grid.n_steps, grid.dt);
  auto incr = sampler.sample(seed);
  ScalarPath path;
  path.grid = grid;
  path.values.resize(grid.n_points());
  path.values[0] = 0.0;
  for (std::size_t k = 0; k < grid.n_steps; ++k) path.values[k + 1] = path.values[k] + incr[k];
  return path;
}

QfbmPath sample_qfbm(const QSpec& q, double H, const TimeGrid& grid, std::uint64_t seed) {
  const std::size_t m = q.m_modes();
  QfbmPath path;
  path.grid = grid;
  path.values.assign(grid.n_points(), Vec::Zero(long(m)));
  FgnSampler sampler(H, grid.n_steps, grid.dt);
  for (std::size_t n = 0; n < m; ++n) {
    auto incr = sampler.sample(derive_seed(seed, /*stream=*/7, n));
    const double scale = std::sqrt(q.lambda[n]);
    double acc = 0.0;
    for (std::size_t k = 0; k < grid.n_steps; ++k) {
      acc += scale * incr[k];
      path.values[k + 1][long(n)] = acc;
    }
  }
  return path;
}

}  // namespace fracsew
