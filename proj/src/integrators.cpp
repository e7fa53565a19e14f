#include "duffing/integrators.hpp"

#include <cmath>

namespace duffing {

void validate(const IntegrationConfig& cfg) {
  if (!std::isfinite(cfg.h) || cfg.h <= 0.0) throw UsageError("step h must be positive and finite");
  if (!std::isfinite(cfg.t0) || !std::isfinite(cfg.t_max) || cfg.t_max <= cfg.t0)
    throw UsageError("t_max must exceed t0");
  if (cfg.record_stride == 0) throw UsageError("record_stride must be at least 1");
  if ((cfg.t_max - cfg.t0) / cfg.h < 1.0) throw UsageError("integration window shorter than one step");
}

std::size_t step_count(const IntegrationConfig& cfg) {
  validate(cfg);
  return static_cast<std::size_t>(std::floor((cfg.t_max - cfg.t0) / cfg.h + 0.5));
}

namespace {

void check_step(double h, const State& s) {
  if (!std::isfinite(h) || h <= 0.0) throw UsageError("step h must be positive and finite");
  if (!is_finite(s)) throw UsageError("initial state is not finite");
}

State finish(const State& s, detail::Phase next, double h) {
  State out{next.q, next.p, s.t + h};
  if (!is_finite(out)) throw NumericalOverflow(out);
  return out;
}

}  // namespace

State step_euler(const ModelSpec& model, const State& s, double h) {
  validate(model);
  check_step(h, s);
  return finish(s, detail::euler_unchecked(model, s.q, s.p, s.t, h), h);
}

State step_rk4(const ModelSpec& model, const State& s, double h) {
  validate(model);
  check_step(h, s);
  return finish(s, detail::rk4_unchecked(model, s.q, s.p, s.t, h), h);
}

IntegrationResult integrate(const ModelSpec& model, const State& s0, const IntegrationConfig& cfg) {
  validate(model);
  const std::size_t n = step_count(cfg);
  if (!std::isfinite(s0.q) || !std::isfinite(s0.p)) throw UsageError("initial state is not finite");

  IntegrationResult out;
  out.trajectory.model = model;
  out.trajectory.samples.reserve(n / cfg.record_stride + 2);
  out.trajectory.samples.push_back({s0.q, s0.p, cfg.t0});

  double q = s0.q;
  double p = s0.p;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = cfg.t0 + static_cast<double>(i) * cfg.h;
    const detail::Phase next = cfg.method == Method::RK4
                                   ? detail::rk4_unchecked(model, q, p, t, cfg.h)
                                   : detail::euler_unchecked(model, q, p, t, cfg.h);
    q = next.q;
    p = next.p;
    const std::size_t step = i + 1;
    const State s{q, p, cfg.t0 + static_cast<double>(step) * cfg.h};
    if (!is_finite(s)) {
      out.overflow = s;
      return out;
    }
    if (step % cfg.record_stride == 0 || step == n) out.trajectory.samples.push_back(s);
  }
  return out;
}

FdResult iterate_fd_duffing(const ModelSpec& params, double x0, double x1, double h, std::size_t n) {
  if (params.kind != ModelKind::DuffingHomotopy)
    throw UsageError("finite-difference recurrence needs a DUFFING_HOMOTOPY parameter set");
  validate(params);
  if (n < 2) throw UsageError("finite-difference recurrence needs n >= 2");
  if (!std::isfinite(h) || h <= 0.0) throw UsageError("step h must be positive and finite");
  if (!std::isfinite(x0) || !std::isfinite(x1)) throw UsageError("initial displacements must be finite");

  const double lambda = params.lambda_h;
  const double h2l = h * h * lambda;
  const double lead = 2.0 + h * lambda;
  const double denom = 1.0 + h * lambda;

  FdResult out;
  out.x.reserve(n + 1);
  out.x.push_back(x0);
  out.x.push_back(x1);
  for (std::size_t k = 1; k < n; ++k) {
    const double xn = out.x[k];
    const double xp = out.x[k - 1];
    const double forcing = params.gamma * std::cos(params.omega * static_cast<double>(k) * h);
    const double next =
        (lead * xn - xp - h2l * (params.alpha * xn + params.beta * xn * xn * xn) + h2l * forcing) / denom;
    if (!std::isfinite(next)) {
      out.overflow = true;
      return out;
    }
    out.x.push_back(next);
  }
  return out;
}

}  // namespace duffing
