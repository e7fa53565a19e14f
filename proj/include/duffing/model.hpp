#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace duffing {

/// Caller supplied an invalid argument or configuration.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ModelKind {
  DuffingClassic,
  DuffingHomotopy,
  DuffingChaos,
  DuffingQuintic,
  Ecology,
  LinearTest,
};

std::string_view to_string(ModelKind kind);
ModelKind model_kind_from_string(std::string_view name);

/// Dynamical system plus coefficient set. Which fields are read depends on
/// `kind`; the rest are ignored.
///
///   DuffingClassic   q' = p,  p' = gamma cos(omega t) - delta p - alpha q - beta q^3
///   DuffingHomotopy  as DuffingClassic with every right-hand term scaled by lambda_h
///   DuffingChaos     q' = p,  p' = q - q^3 - delta p + gamma cos(omega t)
///   DuffingQuintic   q' = p,  p' = q + beta q^3 - delta p + gamma cos(omega t) - gamma q^5
///   Ecology          q' = -coupling_a p - cos(omega t) - q^3 + alpha q^5,  p' = beta q'
///   LinearTest       q' = p,  p' = -delta p - alpha q
struct ModelSpec {
  ModelKind kind = ModelKind::LinearTest;
  double delta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double omega = 0.0;
  double lambda_h = 0.0;
  double coupling_a = 0.0;
};

struct State {
  double q = 0.0;
  double p = 0.0;
  double t = 0.0;
};

struct Rate {
  double dq = 0.0;
  double dp = 0.0;
};

/// Row-major 2x2 matrix of partials of (dq, dp) with respect to (q, p).
using Jacobian = std::array<std::array<double, 2>, 2>;

struct Trajectory {
  std::vector<State> samples;
  ModelSpec model;
};

/// A computation produced a non-finite state.
class NumericalOverflow : public std::runtime_error {
 public:
  explicit NumericalOverflow(const State& s);
  const State& state() const noexcept { return state_; }

 private:
  State state_;
};

bool is_finite(const State& s) noexcept;

/// Throws UsageError if a field read by the model is non-finite or
/// lambda_h lies outside [0, 1] for the homotopy model.
void validate(const ModelSpec& model);

/// Time derivative of (q, p). Throws NumericalOverflow on a non-finite result.
Rate rhs(const ModelSpec& model, const State& s);

/// Exact analytic partials of rhs; time is treated as a parameter.
Jacobian jacobian(const ModelSpec& model, const State& s);

/// p - beta q, constant along exact Ecology solutions.
double conserved_offset(const ModelSpec& model, const State& s);

namespace detail {

// Hot-path evaluation without validation or finiteness checks.
inline Rate rhs_unchecked(const ModelSpec& m, double q, double p, double t) noexcept;
inline Jacobian jacobian_unchecked(const ModelSpec& m, double q) noexcept;

}  // namespace detail
}  // namespace duffing

#include "duffing/model_inl.hpp"
