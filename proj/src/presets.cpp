#include <array>
#include <string>

#include "duffing/bifurcation.hpp"

namespace duffing {

namespace {

constexpr std::array kPresets{
    PresetId::BifCase1,      PresetId::BifCase2,     PresetId::BifCase3,       PresetId::EcoDyn1,
    PresetId::EcoDyn2,       PresetId::FdPaper,      PresetId::ChaosA02,       PresetId::QuinticA00025,
    PresetId::QuinticA0002,  PresetId::QuinticA000025, PresetId::HomotopyA005,
};

// Shared run settings for the ecology model: step 0.01 out to t = 10^4.
IntegrationConfig ecology_run() { return {0.01, 0.0, 10000.0, Method::RK4, 100}; }

Preset ecology_bifurcation(PresetId id, std::string_view summary, double coupling_a, double beta,
                           double alpha, double omega_min, double omega_max) {
  Preset p{};
  p.id = id;
  p.summary = summary;
  p.model = {.kind = ModelKind::Ecology, .alpha = alpha, .beta = beta, .omega = omega_min, .coupling_a = coupling_a};
  p.s0 = {0.0, 0.0, 0.0};
  p.integration = ecology_run();
  p.sweep = SweepConfig{p.model, omega_min, omega_max, 500, p.s0, 10000.0, 0.01};
  return p;
}

Preset ecology_dynamics(PresetId id, std::string_view summary, double coupling_a, double beta, double omega,
                        double alpha, State s0) {
  Preset p{};
  p.id = id;
  p.summary = summary;
  p.model = {.kind = ModelKind::Ecology, .alpha = alpha, .beta = beta, .omega = omega, .coupling_a = coupling_a};
  p.s0 = s0;
  p.integration = ecology_run();
  return p;
}

Preset quintic(PresetId id, std::string_view summary, double amplitude,
               std::array<std::optional<double>, 2> reported) {
  Preset p{};
  p.id = id;
  p.summary = summary;
  p.model = {.kind = ModelKind::DuffingQuintic, .delta = 0.05, .beta = 0.3, .gamma = amplitude, .omega = 0.004};
  p.s0 = {0.0, 0.0, 0.0};
  p.integration = {0.01, 0.0, 800.0, Method::RK4, 10};
  p.lyapunov = LyapunovConfig{100.0, 800.0, 0.01, 10};
  p.reported_exponents = reported;
  return p;
}

}  // namespace

std::span<const PresetId> all_presets() { return kPresets; }

std::string_view to_string(PresetId id) {
  switch (id) {
    case PresetId::BifCase1: return "BIF_CASE_1";
    case PresetId::BifCase2: return "BIF_CASE_2";
    case PresetId::BifCase3: return "BIF_CASE_3";
    case PresetId::EcoDyn1: return "ECO_DYN_1";
    case PresetId::EcoDyn2: return "ECO_DYN_2";
    case PresetId::FdPaper: return "FD_PAPER";
    case PresetId::ChaosA02: return "CHAOS_A02";
    case PresetId::QuinticA00025: return "QUINTIC_A00025";
    case PresetId::QuinticA0002: return "QUINTIC_A0002";
    case PresetId::QuinticA000025: return "QUINTIC_A000025";
    case PresetId::HomotopyA005: return "HOMOTOPY_A005";
  }
  return "UNKNOWN";
}

PresetId preset_id_from_string(std::string_view name) {
  for (PresetId id : kPresets)
    if (to_string(id) == name) return id;
  throw UsageError("unknown preset '" + std::string(name) + "'");
}

Preset preset(PresetId id) {
  switch (id) {
    case PresetId::BifCase1:
      return ecology_bifurcation(id, "ecology omega sweep, case 1", -0.095, 2.00056, -0.0000056, 0.000025, 0.003);
    case PresetId::BifCase2:
      return ecology_bifurcation(id, "ecology omega sweep, case 2", -0.000095, -3.00056, -0.6, 0.0000237, 0.00281);
    case PresetId::BifCase3:
      return ecology_bifurcation(id, "ecology omega sweep near omega = 0, case 3", -0.000095, -3.00056, -0.0006,
                                 0.000000000000237, 0.0000000008);
    case PresetId::EcoDyn1:
      return ecology_dynamics(id, "ecology dynamics, complex oscillations", 0.2, 0.001, 0.06, -0.0005,
                              {0.08, 0.07, 0.0});
    case PresetId::EcoDyn2:
      return ecology_dynamics(id, "ecology dynamics, strong impact", 0.0004, 0.1, 0.01, 0.005, {0.8, 0.9, 0.0});
    case PresetId::FdPaper: {
      Preset p{};
      p.id = id;
      p.summary = "finite-difference recurrence of the lambda-embedded Duffing equation";
      p.model = {.kind = ModelKind::DuffingHomotopy,
                 .alpha = 0.005,
                 .beta = 0.02,
                 .gamma = -0.04,
                 .omega = 0.001,
                 .lambda_h = 0.1};
      p.s0 = {0.0, 0.0, 0.0};
      p.integration = {0.01, 0.0, 100.0, Method::RK4, 1};
      p.fd = FdRun{0.0, 0.0, 0.01, 10000};
      return p;
    }
    case PresetId::ChaosA02: {
      Preset p{};
      p.id = id;
      p.summary = "double-well forced Duffing, A = 0.2";
      p.model = {.kind = ModelKind::DuffingChaos, .delta = 0.05, .gamma = 0.2, .omega = 1.1};
      p.s0 = {0.0, 0.0, 0.0};
      p.integration = {0.01, 0.0, 800.0, Method::RK4, 10};
      p.lyapunov = LyapunovConfig{100.0, 800.0, 0.01, 10};
      p.reported_exponents = {0.503437, 0.551156};
      return p;
    }
    case PresetId::QuinticA00025:
      return quintic(id, "quintic Duffing, A = 0.0025", 0.0025, {11.1, 0.0});
    case PresetId::QuinticA0002:
      return quintic(id, "quintic Duffing, A = 0.2", 0.2, {});
    case PresetId::QuinticA000025:
      return quintic(id, "quintic Duffing, A = 0.00025", 0.00025, {});
    case PresetId::HomotopyA005: {
      Preset p{};
      p.id = id;
      p.summary = "homotopy series, amplitude 0.05, omega 0.2, lambda 0.05";
      // Undamped linear reference x'' + omega^2 x = 0 started on the primary oscillation.
      p.model = {.kind = ModelKind::DuffingClassic, .alpha = 0.04, .omega = 0.2};
      p.s0 = {0.05, 0.0, 0.0};
      p.integration = {0.01, 0.0, 20.0, Method::RK4, 100};
      p.homotopy = HomotopyApprox{0.05, 0.2, 0.05, 0.00015625};
      return p;
    }
  }
  throw UsageError("unknown preset");
}

const ComparisonFixture& comparison_fixture() {
  static const ComparisonFixture fixture{
      {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20},
      {0, 0.84, 0.54, 0.12, -0.36, -0.76, -1.08, -1.32, -1.48, -1.56, -1.56, -1.48, -1.32, -1.08, -0.76, -0.36, 0.12,
       0.54, 0.84, 1, 1.1},
      {0, 0.888, 0.572, 0.148, -0.34, -0.712, -1.028, -1.268, -1.428, -1.548, -1.572, -1.496, -1.336, -1.084, -0.764,
       -0.36, 0.12, 0.54, 0.84, 1, 1.1},
      {0, 0.048, 0.032, 0.028, 0.02, 0.048, 0.052, 0.052, 0.052, 0.012, 0.012, 0.016, 0.016, 0.004, 0.004, 0, 0, 0, 0,
       0, 0},
  };
  return fixture;
}

}  // namespace duffing
