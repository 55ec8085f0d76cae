// eur-hawking: figure sweeps and single-point evaluation.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "eurh/errors.hpp"
#include "eurh/scenario.hpp"
#include "eurh/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitContract = 3;

std::string optional_number(const std::optional<double>& v) {
  return v ? eurh::format_number(*v) : "n/a";
}

void print_report(const eurh::PointConfig& c, const eurh::UncertaintyReport& r, bool csv) {
  using eurh::format_number;
  const std::vector<std::pair<std::string, std::string>> fields = {
      {"c1", format_number(c.bell.c1)},
      {"c2", format_number(c.bell.c2)},
      {"c3", format_number(c.bell.c3)},
      {"noise", eurh::to_string(c.noise)},
      {"strength", format_number(c.strength)},
      {"temperature", format_number(c.temperature)},
      {"omega", format_number(c.omega)},
      {"gamma", optional_number(c.gamma)},
      {"a", format_number(r.a)},
      {"b", format_number(r.b)},
      {"U_numeric", format_number(r.lhs_numeric)},
      {"U_analytic", format_number(r.lhs_analytic)},
      {"U_published", optional_number(r.lhs_published)},
      {"Ub_numeric", format_number(r.bound_numeric)},
      {"Ub_analytic", format_number(r.bound_analytic)},
      {"Ub_published", optional_number(r.bound_published)},
      {"conditional_entropy", format_number(r.conditional_entropy)},
      {"QD", format_number(r.discord)},
      {"mixedness", format_number(r.mixedness)},
      {"Psucc", format_number(r.success_probability)},
      {"status", r.published_mismatch ? "published_mismatch" : "ok"},
  };
  if (csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "," : "") << fields[i].first;
    std::cout << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "," : "") << fields[i].second;
    std::cout << '\n';
  } else {
    for (const auto& [k, v] : fields) std::cout << k << " = " << v << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entropic uncertainty with a Hawking-radiated quantum memory"};
  app.set_version_flag("--version", std::string(EURH_VERSION));
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Run a figure preset or a sweep config, writing CSV and manifest");
  std::string preset_id;
  std::string config_path;
  std::string out_dir = "out";
  unsigned jobs = 0;
  std::string format = "csv";
  auto* preset_opt = run->add_option("--preset", preset_id, "Preset id, or 'all'");
  auto* config_opt = run->add_option("--config", config_path, "Sweep config file");
  preset_opt->excludes(config_opt);
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
  run->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));

  auto* eval = app.add_subcommand("eval", "Evaluate one parameter point");
  eurh::PointConfig point;
  std::string noise = "dp";
  std::optional<double> gamma;
  bool eval_csv = false;
  eval->add_option("--c1", point.bell.c1)->required();
  eval->add_option("--c2", point.bell.c2)->required();
  eval->add_option("--c3", point.bell.c3)->required();
  eval->add_option("--noise", noise, "dp or pd")->check(CLI::IsMember({"dp", "pd"}));
  eval->add_option("--strength", point.strength, "p for dp, q for pd")->required();
  eval->add_option("--temperature", point.temperature, "Hawking temperature T")->required();
  eval->add_option("--omega", point.omega, "Mode frequency");
  eval->add_option("--gamma", gamma, "Weak measurement strength on A");
  eval->add_flag("--csv", eval_csv, "Print a single-row CSV instead of key = value lines");

  auto* list = app.add_subcommand("list-presets", "List the figure presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*list) {
      for (const auto& s : eurh::figure_presets()) {
        std::cout << s.figure_id << "  " << s.scenario << "  bell=" << s.bell.describe()
                  << "  x=" << s.sweep_axis.describe();
        if (s.series_axis) std::cout << "  y=" << s.series_axis->describe();
        std::cout << '\n';
      }
    } else if (*run) {
      std::vector<eurh::SweepSpec> specs;
      if (!config_path.empty()) {
        specs.push_back(eurh::load_sweep_config(config_path));
      } else if (preset_id == "all") {
        specs = eurh::figure_presets();
      } else if (!preset_id.empty()) {
        specs.push_back(eurh::find_preset(preset_id));
      } else {
        throw eurh::ConfigError("run needs --preset or --config");
      }
      for (const auto& spec : specs) {
        const auto result = eurh::run_sweep(spec, out_dir, jobs);
        std::cout << spec.figure_id << ": " << result.rows.size() << " rows -> " << result.csv_path.string() << '\n';
      }
    } else if (*eval) {
      point.noise = eurh::parse_noise_kind(noise);
      point.gamma = gamma;
      print_report(point, eurh::evaluate(point), eval_csv);
    }
  } catch (const eurh::ContractViolation& e) {
    std::cerr << "numerical contract violated: " << e.what() << '\n';
    return kExitContract;
  } catch (const eurh::DegeneratePostSelection& e) {
    std::cerr << "degenerate post-selection: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
