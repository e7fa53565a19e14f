#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "duffing/model.hpp"

namespace duffing {

enum class Method { Euler, RK4 };

struct IntegrationConfig {
  double h = 0.01;
  double t0 = 0.0;
  double t_max = 1.0;
  Method method = Method::RK4;
  std::size_t record_stride = 1;
};

/// Throws UsageError unless h > 0, t_max > t0, record_stride >= 1 and at least one step fits.
void validate(const IntegrationConfig& cfg);

/// floor((t_max - t0) / h + 0.5). Step i lands at t0 + i h.
std::size_t step_count(const IntegrationConfig& cfg);

State step_euler(const ModelSpec& model, const State& s, double h);
State step_rk4(const ModelSpec& model, const State& s, double h);

struct IntegrationResult {
  Trajectory trajectory;
  /// Set to the first non-finite state when integration aborted.
  std::optional<State> overflow;

  bool overflowed() const noexcept { return overflow.has_value(); }
};

/// Records s0, every record_stride-th step, and the final step. The initial
/// time is taken from cfg.t0; s0.t is ignored.
IntegrationResult integrate(const ModelSpec& model, const State& s0, const IntegrationConfig& cfg);

/// Inputs of one finite-difference run; coefficients live in the model.
struct FdRun {
  double x0 = 0.0;
  double x1 = 0.0;
  double h = 0.01;
  std::size_t steps = 10000;
};

struct FdResult {
  std::vector<double> x;
  bool overflow = false;
};

/// Explicit solve of the damped second-difference recurrence
///
///   (x[n+1] - 2x[n] + x[n-1]) / h^2 + lambda (x[n+1] - x[n]) / h
///       + lambda (alpha x[n] + beta x[n]^3) = lambda gamma cos(omega n h)
///
/// for x[n+1]. Coefficients come from a DuffingHomotopy model. Returns
/// x[0..n]; on a non-finite value the sequence is truncated before it.
FdResult iterate_fd_duffing(const ModelSpec& params, double x0, double x1, double h, std::size_t n);

namespace detail {

struct Phase {
  double q;
  double p;
};

inline Phase euler_unchecked(const ModelSpec& m, double q, double p, double t, double h) noexcept {
  const Rate k = rhs_unchecked(m, q, p, t);
  return {q + h * k.dq, p + h * k.dp};
}

inline Phase rk4_unchecked(const ModelSpec& m, double q, double p, double t, double h) noexcept {
  const double half = 0.5 * h;
  const Rate k1 = rhs_unchecked(m, q, p, t);
  const Rate k2 = rhs_unchecked(m, q + half * k1.dq, p + half * k1.dp, t + half);
  const Rate k3 = rhs_unchecked(m, q + half * k2.dq, p + half * k2.dp, t + half);
  const Rate k4 = rhs_unchecked(m, q + h * k3.dq, p + h * k3.dp, t + h);
  const double w = h / 6.0;
  return {q + w * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq),
          p + w * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp)};
}

}  // namespace detail
}  // namespace duffing
