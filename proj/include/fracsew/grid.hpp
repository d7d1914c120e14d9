#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fracsew {

/// Uniform time grid: points t0 + k*dt, k = 0..n_steps.
struct TimeGrid {
  double t0 = 0.0;
  double dt = 0.0;
  std::size_t n_steps = 0;

  TimeGrid() = default;
  TimeGrid(double start, double step, std::size_t steps) : t0(start), dt(step), n_steps(steps) {
    if (step <= 0.0) throw std::invalid_argument("TimeGrid: dt must be positive");
  }
  static TimeGrid over(double T, std::size_t steps) { return TimeGrid(0.0, T / double(steps), steps); }

  std::size_t n_points() const { return n_steps + 1; }
  double time(std::size_t k) const { return t0 + double(k) * dt; }
  double horizon() const { return t0 + double(n_steps) * dt; }
};

inline std::vector<double> grid_times(const TimeGrid& g) {
  std::vector<double> ts(g.n_points());
  for (std::size_t k = 0; k < ts.size(); ++k) ts[k] = g.time(k);
  return ts;
}

}  // namespace fracsew
