#pragma once

#include <cmath>

namespace duffing::detail {

inline Rate rhs_unchecked(const ModelSpec& m, double q, double p, double t) noexcept {
  const double q2 = q * q;
  const double q3 = q2 * q;
  switch (m.kind) {
    case ModelKind::DuffingClassic:
      return {p, m.gamma * std::cos(m.omega * t) - m.delta * p - m.alpha * q - m.beta * q3};
    case ModelKind::DuffingHomotopy:
      return {p, m.lambda_h * m.gamma * std::cos(m.omega * t) - m.lambda_h * m.delta * p -
                     m.lambda_h * m.alpha * q - m.lambda_h * m.beta * q3};
    case ModelKind::DuffingChaos:
      return {p, q - q3 - m.delta * p + m.gamma * std::cos(m.omega * t)};
    case ModelKind::DuffingQuintic:
      return {p, q + m.beta * q3 - m.delta * p + m.gamma * std::cos(m.omega * t) -
                     m.gamma * q3 * q2};
    case ModelKind::Ecology: {
      // p' is beta times the freshly computed q'; this keeps p - beta q invariant
      // under any integrator whose stages reuse rhs.
      const double dq = -m.coupling_a * p - std::cos(m.omega * t) - q3 + m.alpha * q3 * q2;
      return {dq, m.beta * dq};
    }
    case ModelKind::LinearTest:
      return {p, -m.delta * p - m.alpha * q};
  }
  return {};
}

inline Jacobian jacobian_unchecked(const ModelSpec& m, double q) noexcept {
  const double q2 = q * q;
  switch (m.kind) {
    case ModelKind::DuffingClassic:
      return {{{0.0, 1.0}, {-m.alpha - 3.0 * m.beta * q2, -m.delta}}};
    case ModelKind::DuffingHomotopy:
      return {{{0.0, 1.0}, {-m.lambda_h * (m.alpha + 3.0 * m.beta * q2), -m.lambda_h * m.delta}}};
    case ModelKind::DuffingChaos:
      return {{{0.0, 1.0}, {1.0 - 3.0 * q2, -m.delta}}};
    case ModelKind::DuffingQuintic:
      return {{{0.0, 1.0}, {1.0 + 3.0 * m.beta * q2 - 5.0 * m.gamma * q2 * q2, -m.delta}}};
    case ModelKind::Ecology: {
      const double dq_dq = -3.0 * q2 + 5.0 * m.alpha * q2 * q2;
      const double dq_dp = -m.coupling_a;
      return {{{dq_dq, dq_dp}, {m.beta * dq_dq, m.beta * dq_dp}}};
    }
    case ModelKind::LinearTest:
      return {{{0.0, 1.0}, {-m.alpha, -m.delta}}};
  }
  return {};
}

}  // namespace duffing::detail
