#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "duffing/bifurcation.hpp"
#include "duffing/io.hpp"

namespace duffing::cli {

enum class Command { Simulate, Fd, Homotopy, Picard, Compare, Lyapunov, Bifurcate, Presets, Rates };
enum class Format { Csv, Json };

std::string_view to_string(Command c);
Command command_from_string(std::string_view name);

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;

struct RunManifest {
  Command command = Command::Presets;
  std::optional<PresetId> preset;
  /// Applied in order; later entries win.
  std::vector<std::pair<std::string, double>> overrides;
  std::string output_path = "-";
  Format format = Format::Csv;
  /// Sweep worker cap; 0 = hardware concurrency.
  std::size_t threads = 0;
};

/// A preset with overrides applied, plus settings that belong to no preset block.
struct RunSettings {
  Preset preset;
  std::size_t picard_iterations = 12;
};

/// Resolves the preset and applies overrides. Unknown or inapplicable field
/// paths throw UsageError.
RunSettings resolve(const RunManifest& manifest);

/// Field path / value pairs of every settable field, in a fixed order.
std::vector<std::pair<std::string, double>> flatten(const RunSettings& settings);

struct RunOutput {
  io::Document document;
  /// Set when the computation aborted on a non-finite state.
  std::optional<std::string> numerical_abort;
};

/// Runs the command and builds its document without writing anything.
RunOutput execute(const RunManifest& manifest);

/// Runs, writes exactly one document to the manifest's output, and returns the
/// exit status. Diagnostics go to `err` as one line.
int run(const RunManifest& manifest, std::ostream& out, std::ostream& err);

/// Parses the command line (and any --config file) into a manifest.
/// `env_threads` is the raw DUFFING_LAB_THREADS value, if set.
RunManifest parse_arguments(const std::vector<std::string>& args, const char* env_threads = nullptr);

/// Full entry point: parse, run, map failures onto exit statuses.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const char* env_threads = nullptr);

}  // namespace duffing::cli
