#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "duffing/model.hpp"

namespace duffing {

/// A cos(omega t) + B sin(omega t): periodic solution of the undamped, unforced linear oscillator.
double analytical_undamped(double a, double b, double omega, double t);

/// Second-order homotopy series: primary oscillation plus a lambda^2 correction.
/// correction_coeff is data, not derived; 0.00015625 is the published value for
/// amplitude 0.05 and omega 0.2.
struct HomotopyApprox {
  double amplitude = 0.05;
  double omega = 0.2;
  double lambda_h = 0.05;
  double correction_coeff = 0.00015625;
};

void validate(const HomotopyApprox& cfg);

/// amplitude cos(omega t).
double homotopy_primary(const HomotopyApprox& cfg, double t);
/// correction_coeff lambda^2 cos(omega t).
double homotopy_correction(const HomotopyApprox& cfg, double t);
/// (amplitude + correction_coeff lambda^2) cos(omega t).
double homotopy_approx(const HomotopyApprox& cfg, double t);

inline constexpr double kBesselJ0MaxArgument = 50.0;

/// Bessel J0 by its Maclaurin series. Terms are summed until the next term
/// falls below 1e-16 (1 + |partial sum|). Cancellation grows with |x|: the
/// result is accurate to ~1e-13 for |x| <= 10 and degrades beyond |x| ~ 20.
/// Throws UsageError for |x| > 50.
double bessel_j0(double x);

/// a J0(lambda). Throws UsageError for lambda outside [0, 1].
double error_model(double a_coef, double lambda_h);

/// |a|.
double error_bound(double a_coef);

struct PicardResult {
  Trajectory trajectory;
  /// Max-norm distance between successive iterates; entry j compares j and j+1.
  std::vector<double> increments;
  bool overflow = false;
};

/// Picard iteration on the integral form of the initial-value problem with
/// trapezoid quadrature on `grid`. Iterate 0 is the constant s0; the result
/// holds iterate `iterations` sampled on the grid. grid[0] must equal s0.t.
PicardResult picard_solve(const ModelSpec& model, const State& s0, std::span<const double> grid,
                          std::size_t iterations);

/// t0, t0 + h, ..., t0 + n h with n = floor((t_end - t0) / h + 0.5).
std::vector<double> uniform_grid(double t0, double t_end, double h);

}  // namespace duffing
