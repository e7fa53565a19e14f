#include "duffing/approx.hpp"

#include <algorithm>
#include <cmath>

namespace duffing {

double analytical_undamped(double a, double b, double omega, double t) {
  return a * std::cos(omega * t) + b * std::sin(omega * t);
}

void validate(const HomotopyApprox& cfg) {
  if (!std::isfinite(cfg.amplitude) || !std::isfinite(cfg.omega) || !std::isfinite(cfg.correction_coeff))
    throw UsageError("homotopy coefficients must be finite");
  if (!(cfg.lambda_h >= 0.0 && cfg.lambda_h <= 1.0)) throw UsageError("lambda_h must lie in [0, 1]");
}

double homotopy_primary(const HomotopyApprox& cfg, double t) {
  validate(cfg);
  return cfg.amplitude * std::cos(cfg.omega * t);
}

double homotopy_correction(const HomotopyApprox& cfg, double t) {
  validate(cfg);
  return cfg.correction_coeff * cfg.lambda_h * cfg.lambda_h * std::cos(cfg.omega * t);
}

double homotopy_approx(const HomotopyApprox& cfg, double t) {
  validate(cfg);
  return (cfg.amplitude + cfg.correction_coeff * cfg.lambda_h * cfg.lambda_h) * std::cos(cfg.omega * t);
}

double bessel_j0(double x) {
  if (!(std::abs(x) <= kBesselJ0MaxArgument)) throw UsageError("bessel_j0 argument outside [-50, 50]");
  // term_k = (-1)^k (x/2)^{2k} / (k!)^2; term_{k+1} = -term_k (x/2)^2 / (k+1)^2.
  // Extended precision softens the cancellation for moderate |x|.
  const long double z = static_cast<long double>(x) * x / 4.0L;
  long double sum = 1.0L;
  long double term = 1.0L;
  for (int k = 1; k < 1000; ++k) {
    term *= -z / (static_cast<long double>(k) * k);
    if (std::abs(term) < 1e-16L * (1.0L + std::abs(sum))) break;
    sum += term;
  }
  return static_cast<double>(sum);
}

double error_model(double a_coef, double lambda_h) {
  if (!(lambda_h >= 0.0 && lambda_h <= 1.0)) throw UsageError("lambda_h must lie in [0, 1]");
  return a_coef * bessel_j0(lambda_h);
}

double error_bound(double a_coef) { return std::abs(a_coef); }

std::vector<double> uniform_grid(double t0, double t_end, double h) {
  if (!std::isfinite(h) || h <= 0.0) throw UsageError("grid step must be positive");
  if (!std::isfinite(t0) || !std::isfinite(t_end) || t_end <= t0) throw UsageError("grid end must exceed start");
  const auto n = static_cast<std::size_t>(std::floor((t_end - t0) / h + 0.5));
  std::vector<double> grid(n + 1);
  for (std::size_t i = 0; i <= n; ++i) grid[i] = t0 + static_cast<double>(i) * h;
  return grid;
}

PicardResult picard_solve(const ModelSpec& model, const State& s0, std::span<const double> grid,
                          std::size_t iterations) {
  validate(model);
  if (grid.empty()) throw UsageError("picard grid is empty");
  if (grid.front() != s0.t) throw UsageError("picard grid must start at the initial time");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw UsageError("picard grid must be strictly increasing");
  if (!is_finite(s0)) throw UsageError("initial state is not finite");

  const std::size_t n = grid.size();
  std::vector<double> q(n, s0.q), p(n, s0.p);
  std::vector<double> next_q(n), next_p(n);
  std::vector<Rate> f(n);

  PicardResult out;
  out.trajectory.model = model;
  for (std::size_t it = 0; it < iterations; ++it) {
    for (std::size_t i = 0; i < n; ++i) f[i] = detail::rhs_unchecked(model, q[i], p[i], grid[i]);
    next_q[0] = s0.q;
    next_p[0] = s0.p;
    double acc_q = 0.0, acc_p = 0.0, dist = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
      const double w = 0.5 * (grid[i] - grid[i - 1]);
      acc_q += w * (f[i - 1].dq + f[i].dq);
      acc_p += w * (f[i - 1].dp + f[i].dp);
      next_q[i] = s0.q + acc_q;
      next_p[i] = s0.p + acc_p;
      dist = std::max({dist, std::abs(next_q[i] - q[i]), std::abs(next_p[i] - p[i])});
    }
    if (!std::isfinite(acc_q) || !std::isfinite(acc_p) || !std::isfinite(dist)) {
      out.overflow = true;
      break;
    }
    q.swap(next_q);
    p.swap(next_p);
    out.increments.push_back(dist);
  }

  out.trajectory.samples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.trajectory.samples.push_back({q[i], p[i], grid[i]});
  return out;
}

}  // namespace duffing
