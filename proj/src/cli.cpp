#include "duffing/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

#include "duffing/analysis.hpp"
#include "duffing/approx.hpp"
#include "duffing/integrators.hpp"

namespace duffing::cli {

namespace {

constexpr std::array kCommands{Command::Simulate, Command::Fd,        Command::Homotopy,
                               Command::Picard,   Command::Compare,   Command::Lyapunov,
                               Command::Bifurcate, Command::Presets,  Command::Rates};

using FieldRef = std::variant<double*, std::size_t*, Method*>;
using FieldList = std::vector<std::pair<std::string, FieldRef>>;

FieldList bind_fields(RunSettings& s) {
  Preset& p = s.preset;
  FieldList f{
      {"model.delta", &p.model.delta},
      {"model.alpha", &p.model.alpha},
      {"model.beta", &p.model.beta},
      {"model.gamma", &p.model.gamma},
      {"model.omega", &p.model.omega},
      {"model.lambda_h", &p.model.lambda_h},
      {"model.coupling_a", &p.model.coupling_a},
      {"s0.q", &p.s0.q},
      {"s0.p", &p.s0.p},
      {"s0.t", &p.s0.t},
      {"integration.h", &p.integration.h},
      {"integration.t0", &p.integration.t0},
      {"integration.t_max", &p.integration.t_max},
      {"integration.method", &p.integration.method},
      {"integration.record_stride", &p.integration.record_stride},
      {"picard.iterations", &s.picard_iterations},
  };
  if (p.sweep) {
    f.insert(f.end(), {{"sweep.omega_min", &p.sweep->omega_min},
                       {"sweep.omega_max", &p.sweep->omega_max},
                       {"sweep.n_samples", &p.sweep->n_samples},
                       {"sweep.t_max", &p.sweep->t_max},
                       {"sweep.h", &p.sweep->h}});
  }
  if (p.lyapunov) {
    f.insert(f.end(), {{"lyapunov.t_transient", &p.lyapunov->t_transient},
                       {"lyapunov.t_total", &p.lyapunov->t_total},
                       {"lyapunov.h", &p.lyapunov->h},
                       {"lyapunov.renorm_every", &p.lyapunov->renorm_every}});
  }
  if (p.homotopy) {
    f.insert(f.end(), {{"homotopy.amplitude", &p.homotopy->amplitude},
                       {"homotopy.omega", &p.homotopy->omega},
                       {"homotopy.lambda_h", &p.homotopy->lambda_h},
                       {"homotopy.correction_coeff", &p.homotopy->correction_coeff}});
  }
  if (p.fd) {
    f.insert(f.end(), {{"fd.x0", &p.fd->x0}, {"fd.x1", &p.fd->x1}, {"fd.h", &p.fd->h}, {"fd.steps", &p.fd->steps}});
  }
  return f;
}

std::size_t to_count(const std::string& path, double v) {
  if (!(v >= 0.0) || v != std::floor(v) || v > 1e15)
    throw UsageError("field '" + path + "' needs a non-negative integer");
  return static_cast<std::size_t>(v);
}

void assign(const std::string& path, FieldRef ref, double v) {
  std::visit(
      [&](auto* target) {
        using T = std::remove_pointer_t<decltype(target)>;
        if constexpr (std::is_same_v<T, double>) {
          *target = v;
        } else if constexpr (std::is_same_v<T, std::size_t>) {
          *target = to_count(path, v);
        } else {
          const std::size_t m = to_count(path, v);
          if (m > 1) throw UsageError("integration.method is 0 (Euler) or 1 (RK4)");
          *target = m == 0 ? Method::Euler : Method::RK4;
        }
      },
      ref);
}

double read(FieldRef ref) {
  return std::visit(
      [](auto* target) -> double {
        using T = std::remove_pointer_t<decltype(target)>;
        if constexpr (std::is_same_v<T, Method>)
          return *target == Method::RK4 ? 1.0 : 0.0;
        else
          return static_cast<double>(*target);
      },
      ref);
}

void apply_override(RunSettings& s, const std::string& path, double v) {
  if (path == "fd.t_max") {
    if (!s.preset.fd) throw UsageError("preset has no finite-difference block");
    if (!(v > 0.0)) throw UsageError("fd horizon must be positive");
    s.preset.fd->steps = static_cast<std::size_t>(std::floor(v / s.preset.fd->h + 0.5));
    return;
  }
  for (auto& [name, ref] : bind_fields(s)) {
    if (name == path) {
      assign(path, ref, v);
      return;
    }
  }
  throw UsageError("unknown field path '" + path + "' for this configuration");
}

// --------------------------------------------------------------------------
// Command handlers

std::vector<std::size_t> strided_indices(std::size_t n, std::size_t stride) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
  if (idx.empty() || idx.back() != n - 1) idx.push_back(n - 1);
  return idx;
}

void simulate(const Preset& p, RunOutput& out) {
  const IntegrationResult run = integrate(p.model, p.s0, p.integration);
  out.document.columns = {"t", "x", "v"};
  for (const State& s : run.trajectory.samples) out.document.rows.push_back({s.t, s.q, s.p});
  if (run.overflowed()) out.numerical_abort = NumericalOverflow(*run.overflow).what();
}

void finite_difference(const Preset& p, RunOutput& out) {
  if (!p.fd) throw UsageError("preset has no finite-difference block");
  const FdResult run = iterate_fd_duffing(p.model, p.fd->x0, p.fd->x1, p.fd->h, p.fd->steps);
  out.document.columns = {"n", "x"};
  for (std::size_t i = 0; i < run.x.size(); ++i)
    out.document.rows.push_back({static_cast<std::int64_t>(i), run.x[i]});
  if (run.overflow)
    out.numerical_abort = "finite-difference recurrence produced a non-finite value at n=" + std::to_string(run.x.size());
}

void homotopy(const Preset& p, RunOutput& out) {
  if (!p.homotopy) throw UsageError("preset has no homotopy block");
  const auto grid = uniform_grid(p.integration.t0, p.integration.t_max, p.integration.h);
  out.document.columns = {"t", "x_primary", "x_correction", "x_total"};
  for (std::size_t i : strided_indices(grid.size(), p.integration.record_stride)) {
    const double t = grid[i];
    out.document.rows.push_back(
        {t, homotopy_primary(*p.homotopy, t), homotopy_correction(*p.homotopy, t), homotopy_approx(*p.homotopy, t)});
  }
}

PicardResult picard_on_grid(const RunSettings& s, const std::vector<double>& grid) {
  const Preset& p = s.preset;
  return picard_solve(p.model, {p.s0.q, p.s0.p, grid.front()}, grid, s.picard_iterations);
}

void picard(const RunSettings& s, RunOutput& out) {
  const Preset& p = s.preset;
  const auto grid = uniform_grid(p.integration.t0, p.integration.t_max, p.integration.h);
  const PicardResult run = picard_on_grid(s, grid);
  out.document.columns = {"t", "x", "v"};
  for (std::size_t i : strided_indices(grid.size(), p.integration.record_stride)) {
    const State& st = run.trajectory.samples[i];
    out.document.rows.push_back({st.t, st.q, st.p});
  }
  if (run.overflow) out.numerical_abort = "picard iterate became non-finite";
}

void compare(const RunSettings& s, RunOutput& out) {
  const Preset& p = s.preset;
  IntegrationConfig every_step = p.integration;
  every_step.record_stride = 1;
  const IntegrationResult rk4 = integrate(p.model, p.s0, every_step);
  const auto& ref = rk4.trajectory.samples;
  if (rk4.overflowed()) out.numerical_abort = NumericalOverflow(*rk4.overflow).what();

  if (p.homotopy) {
    out.document.columns = {"t", "x_rk4", "x_homotopy", "abs_diff"};
    for (std::size_t i : strided_indices(ref.size(), p.integration.record_stride)) {
      const double approx = homotopy_approx(*p.homotopy, ref[i].t);
      out.document.rows.push_back({ref[i].t, ref[i].q, approx, std::abs(ref[i].q - approx)});
    }
    return;
  }

  const auto grid = uniform_grid(p.integration.t0, p.integration.t_max, p.integration.h);
  const PicardResult pic = picard_on_grid(s, grid);
  if (pic.overflow && !out.numerical_abort) out.numerical_abort = "picard iterate became non-finite";
  const std::size_t n = std::min(ref.size(), pic.trajectory.samples.size());
  out.document.columns = {"t", "x_rk4", "x_picard", "abs_diff"};
  if (n == 0) return;
  for (std::size_t i : strided_indices(n, p.integration.record_stride)) {
    const double a = ref[i].q;
    const double b = pic.trajectory.samples[i].q;
    out.document.rows.push_back({ref[i].t, a, b, std::abs(a - b)});
  }
}

void lyapunov(const Preset& p, RunOutput& out) {
  if (!p.lyapunov) throw UsageError("preset has no lyapunov block");
  const LyapunovResult r = lyapunov_spectrum(p.model, p.s0, *p.lyapunov);
  auto reported = [](const std::optional<double>& v) -> io::Cell {
    if (v) return *v;
    return io::Undefined{};
  };
  out.document.columns = {"lambda1",      "lambda2", "sum_residual", "renorm_count", "paper_reported_lambda1",
                          "paper_reported_lambda2"};
  out.document.rows.push_back({r.exponents[0], r.exponents[1], r.sum_residual,
                               static_cast<std::int64_t>(r.renorm_count), reported(p.reported_exponents[0]),
                               reported(p.reported_exponents[1])});
  if (r.overflowed()) out.numerical_abort = NumericalOverflow(*r.overflow).what();
}

void bifurcate(const Preset& p, std::size_t threads, RunOutput& out) {
  if (!p.sweep) throw UsageError("preset has no sweep block");
  SweepConfig cfg = *p.sweep;
  cfg.model_template = p.model;
  cfg.s0 = p.s0;
  const auto records = sweep_omega(cfg, threads);
  out.document.columns = {"omega", "x_final", "y_final", "conservation_residual", "diverged"};
  for (const SweepRecord& r : records)
    out.document.rows.push_back({r.omega, r.x_final, r.y_final, r.conservation_residual, r.diverged});
}

void list_presets(RunOutput& out) {
  out.document.columns = {"preset", "kind", "field", "value"};
  for (PresetId id : all_presets()) {
    RunSettings s{preset(id)};
    const std::string name(to_string(id));
    const std::string kind(to_string(s.preset.model.kind));
    for (const auto& [path, value] : flatten(s)) {
      if (path == "picard.iterations") continue;
      out.document.rows.push_back({name, kind, path, value});
    }
    for (std::size_t k = 0; k < 2; ++k) {
      if (const auto& v = s.preset.reported_exponents[k])
        out.document.rows.push_back({name, kind, "reported.lambda" + std::to_string(k + 1), *v});
    }
  }
}

void rates(RunOutput& out) {
  const auto& errors = comparison_fixture().tabulated_errors;
  out.document.columns = {"N", "error_N", "error_N1", "rate"};
  for (std::size_t n = 0; n + 1 < errors.size(); ++n) {
    const auto r = convergence_rate(errors, n);
    io::Cell rate = io::Undefined{};
    if (r) rate = *r;
    out.document.rows.push_back({static_cast<std::int64_t>(n), errors[n], errors[n + 1], rate});
  }
}

Format format_from_string(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw UsageError("format must be csv or json");
}

std::size_t threads_from_string(const std::string& s) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw UsageError("");
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError("thread count must be a non-negative integer, got '" + s + "'");
  }
}

double number_from_string(const std::string& key, const std::string& s) {
  try {
    return io::parse_number(s);
  } catch (const UsageError&) {
    throw UsageError("value for '" + key + "' is not a number: '" + s + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct FileConfig {
  std::optional<std::string> command, preset, format, out, threads;
  std::vector<std::pair<std::string, double>> overrides;
};

FileConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  FileConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config line " + std::to_string(lineno) + " is not key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "command") cfg.command = value;
    else if (key == "preset") cfg.preset = value;
    else if (key == "format") cfg.format = value;
    else if (key == "out") cfg.out = value;
    else if (key == "threads") cfg.threads = value;
    else cfg.overrides.emplace_back(key, number_from_string(key, value));
  }
  return cfg;
}

std::string horizon_path(Command c) {
  switch (c) {
    case Command::Lyapunov: return "lyapunov.t_total";
    case Command::Bifurcate: return "sweep.t_max";
    case Command::Fd: return "fd.t_max";
    default: return "integration.t_max";
  }
}

std::string step_path(Command c) {
  switch (c) {
    case Command::Lyapunov: return "lyapunov.h";
    case Command::Bifurcate: return "sweep.h";
    case Command::Fd: return "fd.h";
    default: return "integration.h";
  }
}

}  // namespace

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Simulate: return "simulate";
    case Command::Fd: return "fd";
    case Command::Homotopy: return "homotopy";
    case Command::Picard: return "picard";
    case Command::Compare: return "compare";
    case Command::Lyapunov: return "lyapunov";
    case Command::Bifurcate: return "bifurcate";
    case Command::Presets: return "presets";
    case Command::Rates: return "rates";
  }
  return "unknown";
}

Command command_from_string(std::string_view name) {
  for (Command c : kCommands)
    if (to_string(c) == name) return c;
  throw UsageError("unknown command '" + std::string(name) + "'");
}

RunSettings resolve(const RunManifest& manifest) {
  if (!manifest.preset) throw UsageError(std::string(to_string(manifest.command)) + " needs --preset");
  RunSettings s{preset(*manifest.preset)};
  for (const auto& [path, value] : manifest.overrides) apply_override(s, path, value);
  return s;
}

std::vector<std::pair<std::string, double>> flatten(const RunSettings& settings) {
  RunSettings copy = settings;
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [name, ref] : bind_fields(copy)) out.emplace_back(name, read(ref));
  return out;
}

RunOutput execute(const RunManifest& m) {
  RunOutput out;
  out.document.command = std::string(to_string(m.command));

  if (m.command == Command::Presets || m.command == Command::Rates) {
    if (m.preset || !m.overrides.empty())
      throw UsageError(std::string(to_string(m.command)) + " takes no preset or overrides");
    if (m.command == Command::Presets) list_presets(out);
    else rates(out);
    return out;
  }

  const RunSettings s = resolve(m);
  out.document.config = flatten(s);
  const Preset& p = s.preset;
  switch (m.command) {
    case Command::Simulate: simulate(p, out); break;
    case Command::Fd: finite_difference(p, out); break;
    case Command::Homotopy: homotopy(p, out); break;
    case Command::Picard: picard(s, out); break;
    case Command::Compare: compare(s, out); break;
    case Command::Lyapunov: lyapunov(p, out); break;
    case Command::Bifurcate: bifurcate(p, m.threads, out); break;
    case Command::Presets:
    case Command::Rates: break;
  }
  return out;
}

int run(const RunManifest& manifest, std::ostream& out, std::ostream& err) {
  RunOutput result;
  try {
    result = execute(manifest);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalOverflow& e) {
    err << "numerical abort: " << e.what() << '\n';
    return kExitNumerical;
  }

  std::ofstream file;
  std::ostream* target = &out;
  if (manifest.output_path != "-") {
    file.open(manifest.output_path, std::ios::binary | std::ios::trunc);
    if (!file) {
      err << "usage error: cannot open output '" << manifest.output_path << "'\n";
      return kExitUsage;
    }
    target = &file;
  }
  if (manifest.format == Format::Json) io::write_json(*target, result.document);
  else io::write_csv(*target, result.document);
  target->flush();

  if (result.numerical_abort) {
    err << "numerical abort: " << *result.numerical_abort << '\n';
    return kExitNumerical;
  }
  return kExitOk;
}

RunManifest parse_arguments(const std::vector<std::string>& args, const char* env_threads) {
  CLI::App app{"Forced Duffing and ecology-model simulation toolkit", "duffing-lab"};
  std::string command, preset_name, format, out_path, config_path;
  std::vector<std::string> sets;
  std::optional<double> t_max, h, omega_min, omega_max;
  std::optional<std::size_t> samples;

  app.set_help_flag("--help", "Print usage");
  app.add_option("command", command,
                 "simulate | fd | homotopy | picard | compare | lyapunov | bifurcate | presets | rates");
  app.add_option("--preset", preset_name, "Preset id (see the presets command)");
  app.add_option("--set", sets, "Override a field: path=value")->take_all();
  app.add_option("--t-max", t_max, "Integration horizon");
  app.add_option("--h", h, "Time step");
  app.add_option("--omega-min", omega_min, "Sweep lower bound");
  app.add_option("--omega-max", omega_max, "Sweep upper bound");
  app.add_option("--samples", samples, "Sweep grid size");
  app.add_option("--format", format, "csv or json");
  app.add_option("--out", out_path, "Output path, - for stdout");
  app.add_option("--config", config_path, "Flat key = value file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  app.parse(reversed);

  FileConfig file;
  if (!config_path.empty()) file = read_config_file(config_path);

  RunManifest m;
  if (!command.empty()) m.command = command_from_string(command);
  else if (file.command) m.command = command_from_string(*file.command);
  else throw UsageError("no command given");

  if (!preset_name.empty()) m.preset = preset_id_from_string(preset_name);
  else if (file.preset) m.preset = preset_id_from_string(*file.preset);

  if (!format.empty()) m.format = format_from_string(format);
  else if (file.format) m.format = format_from_string(*file.format);

  if (!out_path.empty()) m.output_path = out_path;
  else if (file.out) m.output_path = *file.out;

  if (env_threads && *env_threads) m.threads = threads_from_string(env_threads);
  if (file.threads) m.threads = threads_from_string(*file.threads);

  m.overrides = file.overrides;
  for (const std::string& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--set expects path=value, got '" + kv + "'");
    const std::string key = trim(kv.substr(0, eq));
    m.overrides.emplace_back(key, number_from_string(key, trim(kv.substr(eq + 1))));
  }
  if (t_max) m.overrides.emplace_back(horizon_path(m.command), *t_max);
  if (h) m.overrides.emplace_back(step_path(m.command), *h);
  if (omega_min) m.overrides.emplace_back("sweep.omega_min", *omega_min);
  if (omega_max) m.overrides.emplace_back("sweep.omega_max", *omega_max);
  if (samples) m.overrides.emplace_back("sweep.n_samples", static_cast<double>(*samples));
  return m;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const char* env_threads) {
  RunManifest manifest;
  try {
    manifest = parse_arguments(args, env_threads);
  } catch (const CLI::CallForHelp&) {
    out << "usage: duffing-lab <command> [--preset ID] [--set path=value]... [--t-max T] [--h H]\n"
           "                   [--omega-min W] [--omega-max W] [--samples N] [--format csv|json]\n"
           "                   [--out PATH] [--config FILE]\n"
           "commands: simulate fd homotopy picard compare lyapunov bifurcate presets rates\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return run(manifest, out, err);
}

}  // namespace duffing::cli
