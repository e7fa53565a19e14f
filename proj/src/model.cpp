#include "duffing/model.hpp"

#include <cmath>
#include <cstdio>

namespace duffing {

namespace {

std::string describe(const State& s) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "non-finite state (q=%g, p=%g, t=%g)", s.q, s.p, s.t);
  return buf;
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw UsageError(std::string("model field '") + name + "' is not finite");
}

}  // namespace

NumericalOverflow::NumericalOverflow(const State& s) : std::runtime_error(describe(s)), state_(s) {}

std::string_view to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::DuffingClassic: return "DUFFING_CLASSIC";
    case ModelKind::DuffingHomotopy: return "DUFFING_HOMOTOPY";
    case ModelKind::DuffingChaos: return "DUFFING_CHAOS";
    case ModelKind::DuffingQuintic: return "DUFFING_QUINTIC";
    case ModelKind::Ecology: return "ECOLOGY";
    case ModelKind::LinearTest: return "LINEAR_TEST";
  }
  return "UNKNOWN";
}

ModelKind model_kind_from_string(std::string_view name) {
  for (auto k : {ModelKind::DuffingClassic, ModelKind::DuffingHomotopy, ModelKind::DuffingChaos,
                 ModelKind::DuffingQuintic, ModelKind::Ecology, ModelKind::LinearTest}) {
    if (to_string(k) == name) return k;
  }
  throw UsageError("unknown model kind '" + std::string(name) + "'");
}

bool is_finite(const State& s) noexcept {
  return std::isfinite(s.q) && std::isfinite(s.p) && std::isfinite(s.t);
}

void validate(const ModelSpec& m) {
  switch (m.kind) {
    case ModelKind::DuffingClassic:
      require_finite(m.delta, "delta");
      require_finite(m.alpha, "alpha");
      require_finite(m.beta, "beta");
      require_finite(m.gamma, "gamma");
      require_finite(m.omega, "omega");
      break;
    case ModelKind::DuffingHomotopy:
      require_finite(m.delta, "delta");
      require_finite(m.alpha, "alpha");
      require_finite(m.beta, "beta");
      require_finite(m.gamma, "gamma");
      require_finite(m.omega, "omega");
      require_finite(m.lambda_h, "lambda_h");
      if (m.lambda_h < 0.0 || m.lambda_h > 1.0) throw UsageError("lambda_h must lie in [0, 1]");
      break;
    case ModelKind::DuffingChaos:
      require_finite(m.delta, "delta");
      require_finite(m.gamma, "gamma");
      require_finite(m.omega, "omega");
      break;
    case ModelKind::DuffingQuintic:
      require_finite(m.delta, "delta");
      require_finite(m.beta, "beta");
      require_finite(m.gamma, "gamma");
      require_finite(m.omega, "omega");
      break;
    case ModelKind::Ecology:
      require_finite(m.alpha, "alpha");
      require_finite(m.beta, "beta");
      require_finite(m.omega, "omega");
      require_finite(m.coupling_a, "coupling_a");
      break;
    case ModelKind::LinearTest:
      require_finite(m.delta, "delta");
      require_finite(m.alpha, "alpha");
      break;
  }
}

Rate rhs(const ModelSpec& model, const State& s) {
  validate(model);
  const Rate r = detail::rhs_unchecked(model, s.q, s.p, s.t);
  if (!std::isfinite(r.dq) || !std::isfinite(r.dp)) throw NumericalOverflow(s);
  return r;
}

Jacobian jacobian(const ModelSpec& m, const State& s) {
  validate(m);
  const Jacobian j = detail::jacobian_unchecked(m, s.q);
  for (const auto& row : j)
    for (double v : row)
      if (!std::isfinite(v)) throw NumericalOverflow(s);
  return j;
}

double conserved_offset(const ModelSpec& model, const State& s) {
  if (model.kind != ModelKind::Ecology)
    throw UsageError("conserved_offset is defined only for the ECOLOGY model");
  return s.p - model.beta * s.q;
}

}  // namespace duffing
