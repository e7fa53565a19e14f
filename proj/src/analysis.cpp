#include "duffing/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace duffing {

ErrorTable error_table(std::span<const double> times, std::span<const double> reference,
                       std::span<const double> approximate) {
  if (times.empty()) throw UsageError("error table needs at least one row");
  if (reference.size() != times.size() || approximate.size() != times.size())
    throw UsageError("error table columns differ in length");
  ErrorTable table{{times.begin(), times.end()},
                   {reference.begin(), reference.end()},
                   {approximate.begin(), approximate.end()},
                   {}};
  table.errors.reserve(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) table.errors.push_back(std::abs(reference[i] - approximate[i]));
  return table;
}

std::optional<double> convergence_rate(std::span<const double> errors, std::size_t n) {
  if (n + 1 >= errors.size()) throw UsageError("convergence rate index out of range");
  const double num = errors[n];
  const double den = errors[n + 1];
  if (den == 0.0) {
    if (num == 0.0) return 1.0;
    return std::nullopt;
  }
  return num / den;
}

void validate(const LyapunovConfig& cfg) {
  if (!std::isfinite(cfg.h) || cfg.h <= 0.0) throw UsageError("lyapunov step h must be positive");
  if (!std::isfinite(cfg.t_transient) || cfg.t_transient < 0.0) throw UsageError("t_transient must be >= 0");
  if (!std::isfinite(cfg.t_total) || cfg.t_total <= cfg.t_transient)
    throw UsageError("t_total must exceed t_transient");
  if (cfg.renorm_every == 0) throw UsageError("renorm_every must be at least 1");
  if ((cfg.t_total - cfg.t_transient) / cfg.h < 100.0)
    throw UsageError("lyapunov accumulation window must span at least 100 steps");
}

namespace {

struct Vec2 {
  double x;
  double y;
};

Vec2 apply(const Jacobian& j, Vec2 v) {
  return {j[0][0] * v.x + j[0][1] * v.y, j[1][0] * v.x + j[1][1] * v.y};
}

Vec2 axpy(Vec2 v, double a, Vec2 k) { return {v.x + a * k.x, v.y + a * k.y}; }

double trace_at(const ModelSpec& m, double q) {
  const Jacobian j = detail::jacobian_unchecked(m, q);
  return j[0][0] + j[1][1];
}

// Orthonormalizes in place and returns the two stretch factors.
std::array<double, 2> gram_schmidt(Vec2& v1, Vec2& v2) {
  const double n1 = std::hypot(v1.x, v1.y);
  v1 = {v1.x / n1, v1.y / n1};
  const double proj = v2.x * v1.x + v2.y * v1.y;
  v2 = {v2.x - proj * v1.x, v2.y - proj * v1.y};
  const double n2 = std::hypot(v2.x, v2.y);
  v2 = {v2.x / n2, v2.y / n2};
  return {n1, n2};
}

}  // namespace

LyapunovResult lyapunov_spectrum(const ModelSpec& model, const State& s0, const LyapunovConfig& cfg) {
  validate(model);
  validate(cfg);
  if (!is_finite(s0)) throw UsageError("initial state is not finite");

  const double h = cfg.h;
  const auto n_total = static_cast<std::size_t>(std::floor(cfg.t_total / h + 0.5));
  const auto n_transient = static_cast<std::size_t>(std::floor(cfg.t_transient / h + 0.5));

  LyapunovResult out;
  double q = s0.q;
  double p = s0.p;
  Vec2 v1{1.0, 0.0};
  Vec2 v2{0.0, 1.0};
  std::array<double, 2> log_sum{0.0, 0.0};
  double trace_integral = 0.0;
  double trace_integral_accumulated = 0.0;
  double prev_trace = trace_at(model, q);

  for (std::size_t i = 0; i < n_total; ++i) {
    const double t = s0.t + static_cast<double>(i) * h;
    const double half = 0.5 * h;

    const Rate k1 = detail::rhs_unchecked(model, q, p, t);
    const Jacobian j1 = detail::jacobian_unchecked(model, q);
    const Vec2 a1 = apply(j1, v1), b1 = apply(j1, v2);

    const double q2 = q + half * k1.dq, p2 = p + half * k1.dp;
    const Rate k2 = detail::rhs_unchecked(model, q2, p2, t + half);
    const Jacobian j2 = detail::jacobian_unchecked(model, q2);
    const Vec2 a2 = apply(j2, axpy(v1, half, a1)), b2 = apply(j2, axpy(v2, half, b1));

    const double q3 = q + half * k2.dq, p3 = p + half * k2.dp;
    const Rate k3 = detail::rhs_unchecked(model, q3, p3, t + half);
    const Jacobian j3 = detail::jacobian_unchecked(model, q3);
    const Vec2 a3 = apply(j3, axpy(v1, half, a2)), b3 = apply(j3, axpy(v2, half, b2));

    const double q4 = q + h * k3.dq, p4 = p + h * k3.dp;
    const Rate k4 = detail::rhs_unchecked(model, q4, p4, t + h);
    const Jacobian j4 = detail::jacobian_unchecked(model, q4);
    const Vec2 a4 = apply(j4, axpy(v1, h, a3)), b4 = apply(j4, axpy(v2, h, b3));

    const double w = h / 6.0;
    q += w * (k1.dq + 2.0 * k2.dq + 2.0 * k3.dq + k4.dq);
    p += w * (k1.dp + 2.0 * k2.dp + 2.0 * k3.dp + k4.dp);
    v1 = {v1.x + w * (a1.x + 2.0 * a2.x + 2.0 * a3.x + a4.x), v1.y + w * (a1.y + 2.0 * a2.y + 2.0 * a3.y + a4.y)};
    v2 = {v2.x + w * (b1.x + 2.0 * b2.x + 2.0 * b3.x + b4.x), v2.y + w * (b1.y + 2.0 * b2.y + 2.0 * b3.y + b4.y)};

    const std::size_t step = i + 1;
    const State s{q, p, s0.t + static_cast<double>(step) * h};
    if (!is_finite(s) || !std::isfinite(v1.x + v1.y + v2.x + v2.y)) {
      out.overflow = s;
      break;
    }

    const double tr = trace_at(model, q);
    if (step > n_transient) trace_integral += 0.5 * h * (prev_trace + tr);
    prev_trace = tr;

    if (step <= n_transient) {
      if (step % cfg.renorm_every != 0 && step != n_transient) continue;
      gram_schmidt(v1, v2);
      ++out.renorm_count;
    } else if (step > n_transient && ((step - n_transient) % cfg.renorm_every == 0 || step == n_total)) {
      const auto stretch = gram_schmidt(v1, v2);
      log_sum[0] += std::log(stretch[0]);
      log_sum[1] += std::log(stretch[1]);
      ++out.renorm_count;
      out.accumulation_time = static_cast<double>(step - n_transient) * h;
      trace_integral_accumulated = trace_integral;
    }
  }

  if (out.accumulation_time > 0.0) {
    out.exponents = {log_sum[0] / out.accumulation_time, log_sum[1] / out.accumulation_time};
    std::sort(out.exponents.begin(), out.exponents.end(), std::greater<>());
    out.mean_trace = trace_integral_accumulated / out.accumulation_time;
    out.sum_residual = out.exponents[0] + out.exponents[1] - out.mean_trace;
  }
  return out;
}

}  // namespace duffing
