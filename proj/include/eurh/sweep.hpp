#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "eurh/scenario.hpp"
#include "eurh/states.hpp"

namespace eurh {

/// Evenly spaced grid `points` values from min to max inclusive.
struct Axis {
  std::string name;
  double min = 0.0;
  double max = 0.0;
  std::size_t points = 2;

  std::vector<double> values() const;
  /// "name:min:max:points"
  static Axis parse(const std::string& text);
  std::string describe() const;
};

/// Parameter names understood by sweeps: p, q, Gamma_t, T_over_omega, gamma, omega.
/// Gamma_t is a decay exponent, converted to q = 1 - exp(-Gamma_t).
struct SweepSpec {
  std::string figure_id;
  std::string scenario;
  BellParams bell;
  std::map<std::string, double> fixed;
  Axis sweep_axis;
  /// Second grid dimension (heatmaps) or the family of curves in a line plot;
  /// exported as column y.
  std::optional<Axis> series_axis;
  std::vector<std::string> outputs;
  std::string note;

  /// Throws ConfigError for unknown scenarios or parameters, out-of-domain
  /// bounds, fewer than two points, or unphysical Bell coefficients.
  void validate() const;
  /// Point parameters at grid coordinates (x, y).
  PointConfig point(double x, std::optional<double> y) const;
  std::vector<std::string> columns() const;
};

const std::vector<std::string>& known_scenarios();
/// Every column a sweep can export besides x, y and status.
const std::vector<std::string>& known_outputs();
const std::vector<std::string>& default_outputs();

/// Flat "key = value" text; '#' starts a comment. Keys are the SweepSpec
/// field names; bell is "c1, c2, c3", fixed is "name=value, ...", axes are
/// "name:min:max:points" and outputs is a comma-separated column list.
SweepSpec parse_sweep_config(const std::string& text);
SweepSpec load_sweep_config(const std::filesystem::path& path);

enum class RowStatus { Ok, PublishedMismatch, DegeneratePostSelection };
const char* to_string(RowStatus status);

struct SweepRow {
  double x = 0.0;
  std::optional<double> y;
  RowStatus status = RowStatus::Ok;
  std::optional<UncertaintyReport> report;  // empty when degenerate
};

/// Evaluates the grid (series outer, sweep axis inner) on `jobs` workers.
/// Rows come back in grid order whatever the scheduling.
std::vector<SweepRow> compute_sweep(const SweepSpec& spec, unsigned jobs = 0);

/// 12 significant digits, locale independent.
std::string format_number(double v);

std::string render_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);

struct SweepRun {
  std::filesystem::path csv_path;
  std::filesystem::path manifest_path;
  nlohmann::json manifest;
  std::vector<SweepRow> rows;
};

/// Computes the sweep and writes <figure_id>.csv and <figure_id>.manifest.json
/// into `out_dir`.
SweepRun run_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir, unsigned jobs = 0);

const std::vector<SweepSpec>& figure_presets();
/// ConfigError for an unknown id.
const SweepSpec& find_preset(const std::string& id);

}  // namespace eurh
