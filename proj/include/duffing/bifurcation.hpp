#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "duffing/analysis.hpp"
#include "duffing/approx.hpp"
#include "duffing/integrators.hpp"
#include "duffing/model.hpp"

namespace duffing {

/// Forcing-frequency sweep. model_template.omega is overwritten per sample.
struct SweepConfig {
  ModelSpec model_template;
  double omega_min = 0.0;
  double omega_max = 1.0;
  std::size_t n_samples = 500;
  State s0;
  double t_max = 10000.0;
  double h = 0.01;
};

void validate(const SweepConfig& cfg);

/// Closed uniform grid of n_samples points; the last point is omega_max exactly.
std::vector<double> omega_grid(const SweepConfig& cfg);

struct SweepRecord {
  double omega = 0.0;
  double x_final = 0.0;
  double y_final = 0.0;
  /// |conserved_offset(final) - conserved_offset(s0)| for Ecology, else 0.
  double conservation_residual = 0.0;
  /// Integration hit a non-finite state; the other columns are NaN.
  bool diverged = false;
};

/// RK4-integrates one copy of the template per grid frequency, from s0.t to
/// t_max. Records come back in grid order regardless of `threads`
/// (0 = hardware concurrency).
std::vector<SweepRecord> sweep_omega(const SweepConfig& cfg, std::size_t threads = 0);

enum class PresetId {
  BifCase1,
  BifCase2,
  BifCase3,
  EcoDyn1,
  EcoDyn2,
  FdPaper,
  ChaosA02,
  QuinticA00025,
  QuinticA0002,
  QuinticA000025,
  HomotopyA005,
};

std::span<const PresetId> all_presets();
std::string_view to_string(PresetId id);
/// Throws UsageError for an unknown name.
PresetId preset_id_from_string(std::string_view name);

/// A published parameterization plus the run settings the tool uses for it.
/// Optional blocks are present only where the case defines them.
struct Preset {
  PresetId id;
  std::string_view summary;
  ModelSpec model;
  State s0;
  IntegrationConfig integration;
  std::optional<SweepConfig> sweep;
  std::optional<LyapunovConfig> lyapunov;
  std::optional<HomotopyApprox> homotopy;
  std::optional<FdRun> fd;
  /// Exponents reported alongside the published chaos runs. Informational.
  std::array<std::optional<double>, 2> reported_exponents;
};

Preset preset(PresetId id);

/// Time / analytical / homotopy columns of the published comparison table,
/// t = 0..20. Fixture data only.
struct ComparisonFixture {
  std::vector<double> times;
  std::vector<double> analytical;
  std::vector<double> approximate;
  std::vector<double> tabulated_errors;
};

const ComparisonFixture& comparison_fixture();

}  // namespace duffing
