#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "duffing/model.hpp"

namespace duffing {

struct ErrorTable {
  std::vector<double> times;
  std::vector<double> reference;
  std::vector<double> approximate;
  std::vector<double> errors;
};

/// errors[i] = |reference[i] - approximate[i]|. Throws UsageError on empty or
/// mismatched columns.
ErrorTable error_table(std::span<const double> times, std::span<const double> reference,
                       std::span<const double> approximate);

/// errors[n] / errors[n+1]. A zero denominator gives 1 when the numerator is
/// also zero and std::nullopt (undefined) otherwise. Throws UsageError if
/// n + 1 is out of range.
std::optional<double> convergence_rate(std::span<const double> errors, std::size_t n);

struct LyapunovConfig {
  double t_transient = 100.0;
  double t_total = 800.0;
  double h = 0.01;
  std::size_t renorm_every = 10;
};

/// Requires t_transient >= 0, t_total > t_transient, renorm_every >= 1 and at
/// least 100 steps in the accumulation window.
void validate(const LyapunovConfig& cfg);

struct LyapunovResult {
  std::array<double, 2> exponents{};  // descending
  /// Sum of exponents minus the time-averaged Jacobian trace.
  double sum_residual = 0.0;
  double mean_trace = 0.0;
  std::size_t renorm_count = 0;
  double accumulation_time = 0.0;
  std::optional<State> overflow;

  bool overflowed() const noexcept { return overflow.has_value(); }
};

/// Benettin estimate of the two-dimensional spectrum. State and two tangent
/// vectors advance together with RK4; the tangent vectors are Gram-Schmidt
/// orthonormalized every renorm_every steps and, after t_transient, their log
/// stretch factors are accumulated.
LyapunovResult lyapunov_spectrum(const ModelSpec& model, const State& s0, const LyapunovConfig& cfg);

}  // namespace duffing
