// Batch front end: ftlab_cli <study> [--config f] [--out dir] [--format csv|json] [--workers k]

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ftlab/errors.hpp"
#include "ftlab/lab/config.hpp"
#include "ftlab/lab/records.hpp"
#include "ftlab/lab/studies.hpp"
#include "ftlab/lab/worker_pool.hpp"

namespace lab = ftlab::lab;

int main(int argc, char** argv) {
  CLI::App app{"Numerical lab for deformed orthogonal-polynomial ensembles and finite-temperature Airy statistics"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir;
  std::string format = "csv";
  int workers = 0;
  for (const auto& name : lab::study_names()) {
    auto* sub = app.add_subcommand(name, "run the " + name + " study");
    sub->add_option("--config", config_path, "JSON config file (defaults apply when omitted)");
    sub->add_option("--out", out_dir, "output directory (overrides output_dir)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--workers", workers, "worker threads (overrides config; FTLAB_WORKERS overrides both)")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string study = app.get_subcommands().front()->get_name();

  lab::LabConfig cfg;
  try {
    cfg = config_path.empty() ? lab::parse_config_text("{}") : lab::parse_config(config_path);
  } catch (const lab::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const lab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  if (!out_dir.empty()) cfg.output_dir = out_dir;
  if (workers > 0) cfg.workers = workers;
  cfg.workers = lab::workers_from_env(cfg.workers);

  std::vector<lab::ResultRecord> records;
  try {
    records = lab::run_study(study, cfg);
  } catch (const lab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return 4;
  }

  const std::string path = (std::filesystem::path(cfg.output_dir) / (study + "." + format)).string();
  try {
    lab::write_text(path, format == "json" ? lab::to_json(records) : lab::to_csv(records));
  } catch (const lab::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }

  std::size_t counts[4] = {0, 0, 0, 0};
  for (const auto& r : records) ++counts[static_cast<int>(r.verdict)];
  std::printf("%s: %zu records (%zu pass, %zu fail, %zu info, %zu error) -> %s\n", study.c_str(), records.size(),
              counts[0], counts[1], counts[2], counts[3], path.c_str());
  return lab::exit_code_for(records);
}
