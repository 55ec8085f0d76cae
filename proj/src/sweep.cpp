#include "eurh/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "eurh/channels.hpp"
#include "eurh/errors.hpp"

namespace eurh {

namespace {

struct ScenarioInfo {
  const char* name;
  NoiseKind noise;
  bool weak_measurement;
};

constexpr ScenarioInfo kScenarios[] = {
    {"dp_vs_T", NoiseKind::Depolarizing, false},  {"dp_vs_p", NoiseKind::Depolarizing, false},
    {"dp_heatmap_pT", NoiseKind::Depolarizing, false}, {"pd_vs_T", NoiseKind::PhaseDamping, false},
    {"pd_vs_gammat", NoiseKind::PhaseDamping, false}, {"pd_heatmap", NoiseKind::PhaseDamping, false},
    {"qwm_dp", NoiseKind::Depolarizing, true},     {"qwm_pd", NoiseKind::PhaseDamping, true},
    {"mixedness_sync", NoiseKind::Depolarizing, false},
};

const ScenarioInfo& scenario_info(const std::string& name) {
  for (const auto& s : kScenarios)
    if (name == s.name) return s;
  throw ConfigError("unknown scenario '" + name + "'");
}

const std::vector<std::string> kParameters = {"p", "q", "Gamma_t", "T_over_omega", "gamma", "omega"};

void check_domain(const std::string& name, double v) {
  if (!std::isfinite(v)) throw ConfigError("parameter " + name + " is not finite");
  const bool unit = name == "p" || name == "q" || name == "gamma";
  if (unit && (v < 0.0 || v > 1.0)) throw ConfigError("parameter " + name + " must lie in [0, 1]");
  if ((name == "T_over_omega" || name == "Gamma_t") && v < 0.0)
    throw ConfigError("parameter " + name + " must be non-negative");
  if (name == "omega" && v <= 0.0) throw ConfigError("omega must be positive");
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) parts.push_back(trim(item));
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("cannot parse " + what + " from '" + text + "'");
  return v;
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError("cannot parse " + what + " from '" + text + "'");
  return v;
}

double output_value(const std::string& column, const UncertaintyReport& r) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (column == "U_analytic") return r.lhs_analytic;
  if (column == "U_numeric") return r.lhs_numeric;
  if (column == "Ub_analytic") return r.bound_analytic;
  if (column == "Ub_numeric") return r.bound_numeric;
  if (column == "QD") return r.discord;
  if (column == "mixedness") return r.mixedness;
  if (column == "Psucc") return r.success_probability;
  if (column == "U_published") return r.lhs_published.value_or(nan);
  if (column == "Ub_published") return r.bound_published.value_or(nan);
  throw ConfigError("unknown output column '" + column + "'");
}

nlohmann::json axis_json(const Axis& a) {
  return {{"name", a.name}, {"min", a.min}, {"max", a.max}, {"points", a.points}};
}

}  // namespace

std::vector<double> Axis::values() const {
  std::vector<double> out(points);
  for (std::size_t i = 0; i < points; ++i)
    out[i] = i + 1 == points ? max : min + (max - min) * static_cast<double>(i) / static_cast<double>(points - 1);
  return out;
}

Axis Axis::parse(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 4) throw ConfigError("axis must be name:min:max:points, got '" + text + "'");
  return {parts[0], parse_double(parts[1], "axis min"), parse_double(parts[2], "axis max"),
          parse_count(parts[3], "axis points")};
}

std::string Axis::describe() const {
  return name + ":" + format_number(min) + ":" + format_number(max) + ":" + std::to_string(points);
}

const std::vector<std::string>& known_scenarios() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kScenarios) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& known_outputs() {
  static const std::vector<std::string> v = {"U_analytic", "U_numeric", "Ub_analytic", "Ub_numeric", "QD",
                                             "mixedness",  "Psucc",     "U_published", "Ub_published"};
  return v;
}

const std::vector<std::string>& default_outputs() {
  static const std::vector<std::string> v = {"U_analytic", "U_numeric", "Ub_analytic", "Ub_numeric",
                                             "QD",         "mixedness", "Psucc"};
  return v;
}

void SweepSpec::validate() const {
  const ScenarioInfo& info = scenario_info(scenario);
  if (!bell.physical()) throw ConfigError("unphysical Bell coefficients " + bell.describe());

  std::map<std::string, std::vector<double>> ranges;
  for (const auto& [name, v] : fixed) ranges[name].push_back(v);
  std::vector<const Axis*> axes = {&sweep_axis};
  if (series_axis) axes.push_back(&*series_axis);
  for (const Axis* a : axes) {
    if (a->points < 2) throw ConfigError("axis " + a->name + " needs at least 2 points");
    if (ranges.count(a->name)) throw ConfigError("parameter " + a->name + " is given more than once");
    ranges[a->name] = {a->min, a->max};
  }
  for (const auto& [name, values] : ranges) {
    if (std::find(kParameters.begin(), kParameters.end(), name) == kParameters.end())
      throw ConfigError("unknown parameter '" + name + "'");
    for (double v : values) check_domain(name, v);
  }

  if (!ranges.count("T_over_omega")) throw ConfigError("T_over_omega must be fixed or swept");
  if (info.noise == NoiseKind::Depolarizing) {
    if (!ranges.count("p")) throw ConfigError("scenario " + scenario + " needs p");
    if (ranges.count("q") || ranges.count("Gamma_t"))
      throw ConfigError("scenario " + scenario + " uses depolarizing noise; q and Gamma_t do not apply");
  } else {
    if (ranges.count("q") + ranges.count("Gamma_t") != 1)
      throw ConfigError("scenario " + scenario + " needs exactly one of q and Gamma_t");
    if (ranges.count("p")) throw ConfigError("scenario " + scenario + " uses phase damping; p does not apply");
  }
  if (info.weak_measurement != static_cast<bool>(ranges.count("gamma")))
    throw ConfigError(info.weak_measurement ? "scenario " + scenario + " needs gamma"
                                            : "gamma only applies to the qwm scenarios");
  for (const auto& column : outputs)
    if (std::find(known_outputs().begin(), known_outputs().end(), column) == known_outputs().end())
      throw ConfigError("unknown output column '" + column + "'");
}

PointConfig SweepSpec::point(double x, std::optional<double> y) const {
  const ScenarioInfo& info = scenario_info(scenario);
  std::map<std::string, double> v = fixed;
  v[sweep_axis.name] = x;
  if (series_axis && y) v[series_axis->name] = *y;

  PointConfig c;
  c.bell = bell;
  c.noise = info.noise;
  c.omega = v.count("omega") ? v.at("omega") : 1.0;
  c.temperature = v.at("T_over_omega") * c.omega;
  if (info.noise == NoiseKind::Depolarizing) {
    c.strength = v.at("p");
  } else {
    c.strength = v.count("q") ? v.at("q") : NoiseParams::from_decay_exponent(v.at("Gamma_t")).strength;
  }
  if (info.weak_measurement) c.gamma = v.at("gamma");
  return c;
}

std::vector<std::string> SweepSpec::columns() const {
  std::vector<std::string> cols = {"x"};
  if (series_axis) cols.emplace_back("y");
  const auto& quantities = outputs.empty() ? default_outputs() : outputs;
  cols.insert(cols.end(), quantities.begin(), quantities.end());
  cols.emplace_back("status");
  return cols;
}

SweepSpec parse_sweep_config(const std::string& text) {
  SweepSpec spec;
  spec.figure_id = "custom";
  std::map<std::string, std::string> entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    if (!entries.emplace(key, trim(std::string_view(body).substr(eq + 1))).second)
      throw ConfigError("duplicate key '" + key + "'");
  }

  for (const auto& [key, value] : entries) {
    if (key == "figure_id") {
      spec.figure_id = value;
    } else if (key == "scenario") {
      spec.scenario = value;
    } else if (key == "bell") {
      const auto parts = split(value, ',');
      if (parts.size() != 3) throw ConfigError("bell needs three coefficients");
      spec.bell = {parse_double(parts[0], "c1"), parse_double(parts[1], "c2"), parse_double(parts[2], "c3")};
    } else if (key == "fixed") {
      for (const auto& item : split(value, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("fixed entries are name=value, got '" + item + "'");
        const std::string name = trim(std::string_view(item).substr(0, eq));
        if (!spec.fixed.emplace(name, parse_double(item.substr(eq + 1), name)).second)
          throw ConfigError("parameter " + name + " fixed twice");
      }
    } else if (key == "sweep_axis") {
      spec.sweep_axis = Axis::parse(value);
    } else if (key == "series_axis") {
      spec.series_axis = Axis::parse(value);
    } else if (key == "outputs") {
      for (const auto& column : split(value, ','))
        if (!column.empty()) spec.outputs.push_back(column);
    } else if (key == "note") {
      spec.note = value;
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  if (!entries.count("scenario") || !entries.count("bell") || !entries.count("sweep_axis"))
    throw ConfigError("config needs scenario, bell and sweep_axis");
  spec.validate();
  return spec;
}

SweepSpec load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_sweep_config(text.str());
}

const char* to_string(RowStatus status) {
  switch (status) {
    case RowStatus::Ok: return "ok";
    case RowStatus::PublishedMismatch: return "published_mismatch";
    case RowStatus::DegeneratePostSelection: return "degenerate_postselection";
  }
  return "?";
}

std::vector<SweepRow> compute_sweep(const SweepSpec& spec, unsigned jobs) {
  spec.validate();
  std::vector<SweepRow> rows;
  const auto xs = spec.sweep_axis.values();
  if (spec.series_axis) {
    for (double y : spec.series_axis->values())
      for (double x : xs) rows.push_back({x, y, RowStatus::Ok, std::nullopt});
  } else {
    for (double x : xs) rows.push_back({x, std::nullopt, RowStatus::Ok, std::nullopt});
  }

  std::vector<std::exception_ptr> errors(rows.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      SweepRow& row = rows[i];
      try {
        row.report = evaluate(spec.point(row.x, row.y));
        row.status = row.report->published_mismatch ? RowStatus::PublishedMismatch : RowStatus::Ok;
      } catch (const DegeneratePostSelection&) {
        row.status = RowStatus::DegeneratePostSelection;
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, rows.size()));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

std::string render_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  const auto cols = spec.columns();
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + cols[i];
  out += '\n';
  for (const SweepRow& row : rows) {
    out += format_number(row.x);
    if (spec.series_axis) out += "," + format_number(row.y.value_or(std::nan("")));
    for (std::size_t i = spec.series_axis ? 2 : 1; i + 1 < cols.size(); ++i)
      out += "," + format_number(row.report ? output_value(cols[i], *row.report) : std::nan(""));
    out += ",";
    out += to_string(row.status);
    out += '\n';
  }
  return out;
}

SweepRun run_sweep(const SweepSpec& spec, const std::filesystem::path& out_dir, unsigned jobs) {
  const auto start = std::chrono::steady_clock::now();
  SweepRun run;
  run.rows = compute_sweep(spec, jobs);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::filesystem::create_directories(out_dir);
  run.csv_path = out_dir / (spec.figure_id + ".csv");
  run.manifest_path = out_dir / (spec.figure_id + ".manifest.json");
  {
    std::ofstream csv(run.csv_path, std::ios::binary);
    csv << render_csv(spec, run.rows);
    if (!csv) throw ConfigError("cannot write " + run.csv_path.string());
  }

  std::map<std::string, std::size_t> counts;
  for (const auto& row : run.rows) ++counts[to_string(row.status)];
  nlohmann::json parameters = {{"bell", {spec.bell.c1, spec.bell.c2, spec.bell.c3}},
                               {"fixed", spec.fixed},
                               {"sweep_axis", axis_json(spec.sweep_axis)}};
  if (spec.series_axis) parameters["series_axis"] = axis_json(*spec.series_axis);
  run.manifest = {{"figure_id", spec.figure_id},
                  {"scenario", spec.scenario},
                  {"parameters", parameters},
                  {"csv", run.csv_path.filename().string()},
                  {"columns", spec.columns()},
                  {"rows", run.rows.size()},
                  {"status_counts", counts},
                  {"code_version", EURH_VERSION},
                  {"duration_seconds", seconds},
                  {"notes", spec.note}};
  std::ofstream manifest(run.manifest_path, std::ios::binary);
  manifest << run.manifest.dump(2) << '\n';
  if (!manifest) throw ConfigError("cannot write " + run.manifest_path.string());
  return run;
}

namespace {

SweepSpec preset(std::string id, std::string scenario, BellParams bell, std::map<std::string, double> fixed, Axis sweep,
                 std::optional<Axis> series = std::nullopt, std::string note = {}) {
  SweepSpec s;
  s.figure_id = std::move(id);
  s.scenario = std::move(scenario);
  s.bell = bell;
  s.fixed = std::move(fixed);
  s.sweep_axis = std::move(sweep);
  s.series_axis = std::move(series);
  s.note = std::move(note);
  return s;
}

std::string scaled_note(const BellParams& caption) {
  const BellParams used = caption.scaled_into_tetrahedron();
  return "caption coefficients " + caption.describe() + " are not a valid state; scaled along the ray to " +
         used.describe();
}

std::vector<SweepSpec> build_presets() {
  const BellParams max_ent{1, -1, 1};
  const BellParams fig2b{0.5, 0.5, 0.5};
  const BellParams fig3b{0.7, 0.8, 0.9};
  const BellParams fig8{0.9, -0.8, 0.6};
  const Axis t3{"T_over_omega", 0, 3, 121};
  const Axis t3_grid{"T_over_omega", 0, 3, 41};
  const Axis p_line{"p", 0, 1, 121};
  const Axis p_grid{"p", 0, 1, 41};
  const Axis gamma_family{"gamma", 0.2, 0.8, 4};

  std::vector<SweepSpec> v;
  v.push_back(preset("fig1a", "dp_vs_T", max_ent, {{"p", 0}}, t3));
  v.push_back(preset("fig1b", "dp_vs_T", {0.9, 0.8, -0.9}, {{"p", 0.2}}, t3));
  v.push_back(preset("fig2a", "dp_vs_p", max_ent, {{"T_over_omega", 1}}, p_line));
  v.push_back(preset("fig2b", "dp_vs_p", fig2b.scaled_into_tetrahedron(), {{"T_over_omega", 1}}, p_line, {},
                     scaled_note(fig2b)));
  v.push_back(preset("fig3a", "dp_heatmap_pT", max_ent, {}, p_grid, t3_grid));
  v.push_back(preset("fig3b", "dp_heatmap_pT", fig3b.scaled_into_tetrahedron(), {}, p_grid, t3_grid,
                     scaled_note(fig3b)));
  v.push_back(preset("fig4a", "pd_vs_T", max_ent, {{"q", 0.1}}, {"T_over_omega", 0, 20, 121}));
  v.push_back(preset("fig4b", "pd_vs_T", {0.9, -0.63, 0.7}, {{"q", 0.1}}, {"T_over_omega", 0, 20, 121}));
  v.push_back(preset("fig5a", "pd_vs_gammat", max_ent, {{"T_over_omega", 2}}, {"Gamma_t", 0, 5, 121}));
  v.push_back(preset("fig5b", "pd_vs_gammat", {0.8, 0.9, -0.7}, {{"T_over_omega", 2}}, {"Gamma_t", 0, 5, 121}));
  v.push_back(preset("fig7", "pd_heatmap", max_ent, {}, {"Gamma_t", 0, 5, 41}, t3_grid));
  v.push_back(preset("fig8a", "qwm_dp", fig8.scaled_into_tetrahedron(), {{"T_over_omega", 1}}, p_line, gamma_family,
                     scaled_note(fig8)));
  v.push_back(preset("fig8b", "qwm_dp", fig8.scaled_into_tetrahedron(), {{"p", 0.5}}, {"gamma", 0, 1, 41}, t3_grid,
                     scaled_note(fig8)));
  v.push_back(preset("fig88a", "qwm_dp", fig8.scaled_into_tetrahedron(), {{"T_over_omega", 1}}, p_line, gamma_family,
                     scaled_note(fig8) + "; plot column mixedness"));
  v.push_back(preset("fig88b", "qwm_dp", fig8.scaled_into_tetrahedron(), {{"T_over_omega", 1}}, p_line, gamma_family,
                     scaled_note(fig8) + "; plot column QD"));
  v.push_back(preset("fig9a", "qwm_pd", {0.7, 0.6, -0.8}, {{"q", 0.6}}, t3, gamma_family));
  v.push_back(preset("fig9b", "qwm_pd", {0.7, 0.6, -0.8}, {{"T_over_omega", 1}}, {"Gamma_t", 0, 5, 41},
                     Axis{"gamma", 0, 1, 41}));
  v.push_back(preset("fig44a", "mixedness_sync", max_ent, {}, {"p", 0, 1, 101}, Axis{"T_over_omega", 0, 2, 3}));
  v.push_back(preset("fig44b", "mixedness_sync", max_ent, {}, t3, Axis{"p", 0, 0.4, 3}));
  for (const auto& s : v) s.validate();
  return v;
}

}  // namespace

const std::vector<SweepSpec>& figure_presets() {
  static const std::vector<SweepSpec> presets = build_presets();
  return presets;
}

const SweepSpec& find_preset(const std::string& id) {
  for (const auto& s : figure_presets())
    if (s.figure_id == id) return s;
  throw ConfigError("unknown preset '" + id + "'");
}

}  // namespace eurh
