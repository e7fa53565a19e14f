#include "duffing/bifurcation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

namespace duffing {

void validate(const SweepConfig& cfg) {
  validate(cfg.model_template);
  if (!std::isfinite(cfg.omega_min) || !std::isfinite(cfg.omega_max) || !(cfg.omega_min < cfg.omega_max))
    throw UsageError("sweep needs omega_min < omega_max");
  if (cfg.n_samples < 2) throw UsageError("sweep needs at least 2 samples");
  if (!is_finite(cfg.s0)) throw UsageError("sweep initial state is not finite");
  validate(IntegrationConfig{cfg.h, cfg.s0.t, cfg.t_max, Method::RK4, 1});
}

std::vector<double> omega_grid(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<double> grid(cfg.n_samples);
  const double span = cfg.omega_max - cfg.omega_min;
  const double last = static_cast<double>(cfg.n_samples - 1);
  for (std::size_t i = 0; i < cfg.n_samples; ++i)
    grid[i] = cfg.omega_min + span * (static_cast<double>(i) / last);
  grid.back() = cfg.omega_max;
  return grid;
}

namespace {

SweepRecord run_sample(const SweepConfig& cfg, double omega) {
  ModelSpec model = cfg.model_template;
  model.omega = omega;
  IntegrationConfig ic{cfg.h, cfg.s0.t, cfg.t_max, Method::RK4, 1};
  ic.record_stride = step_count(ic);
  const IntegrationResult run = integrate(model, cfg.s0, ic);

  SweepRecord rec;
  rec.omega = omega;
  if (run.overflowed()) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    rec.x_final = rec.y_final = rec.conservation_residual = nan;
    rec.diverged = true;
    return rec;
  }
  const State& last = run.trajectory.samples.back();
  rec.x_final = last.q;
  rec.y_final = last.p;
  if (model.kind == ModelKind::Ecology)
    rec.conservation_residual = std::abs(conserved_offset(model, last) - conserved_offset(model, cfg.s0));
  return rec;
}

}  // namespace

std::vector<SweepRecord> sweep_omega(const SweepConfig& cfg, std::size_t threads) {
  const std::vector<double> grid = omega_grid(cfg);
  std::vector<SweepRecord> records(grid.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, grid.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < grid.size(); i = next.fetch_add(1))
      records[i] = run_sample(cfg, grid[i]);
  };
  if (threads <= 1) {
    worker();
    return records;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  return records;
}

}  // namespace duffing
