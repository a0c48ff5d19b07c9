#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "slr/scenario.hpp"

namespace {

struct CommonOpts {
  std::string config_path;
  std::string out_dir;
  int workers = 0;
  std::string format;
};

// flag > environment > config file > built-in default
void apply_overrides(slr::ScenarioConfig& cfg, const CommonOpts& opts, std::string& out_dir) {
  if (const char* env = std::getenv("SLR_WORKERS")) {
    char* end = nullptr;
    const long w = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || w < 1)
      throw slr::config_error("SLR_WORKERS: expected a positive integer");
    cfg.workers = static_cast<int>(w);
  }
  if (opts.workers > 0) cfg.workers = opts.workers;
  if (!opts.format.empty()) {
    if (opts.format != "csv" && opts.format != "json" && opts.format != "both")
      throw slr::config_error("--format: expected csv, json or both");
    cfg.format = opts.format;
  }
  out_dir = "out";
  if (const char* env = std::getenv("SLR_OUT_DIR")) out_dir = env;
  if (!opts.out_dir.empty()) out_dir = opts.out_dir;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool config_required) {
  auto* c = cmd->add_option("--config", opts.config_path, "scenario config or manifest JSON");
  if (config_required) c->required();
  cmd->add_option("--out", opts.out_dir, "output directory (default: out, env SLR_OUT_DIR)");
  cmd->add_option("--workers", opts.workers, "worker thread count (env SLR_WORKERS)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", opts.format, "csv | json | both");
}

int execute(const slr::ScenarioConfig& cfg, const std::string& out_dir) {
  const auto bundle = slr::run_scenario(cfg, out_dir);
  for (const auto& f : bundle.files) std::cout << f.string() << "\n";
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"collective dipole-chain spectra: extinction, dispersion, field maps,\n"
               "vibrational sidebands, multilevel emitters and pump-probe pipelines"};
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"extinction", "dispersion", "fieldmap", "optomech",
                                          "single-mode-om", "exciton", "pump-probe"};
  std::vector<CommonOpts> kind_opts(kinds.size());
  std::vector<CLI::App*> kind_cmds(kinds.size());
  for (size_t i = 0; i < kinds.size(); ++i) {
    kind_cmds[i] = app.add_subcommand(kinds[i], "run a " + kinds[i] + " scenario");
    add_common(kind_cmds[i], kind_opts[i], true);
  }

  CommonOpts preset_opts;
  std::string preset_name;
  auto* preset_cmd = app.add_subcommand("preset", "run a bundled parameter set");
  preset_cmd->add_option("name", preset_name, "preset name (see --list)")->required();
  add_common(preset_cmd, preset_opts, false);
  preset_cmd->get_option("--config")->excludes(preset_cmd->get_option("name"));

  auto* list_cmd = app.add_subcommand("list-presets", "print bundled preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& n : slr::preset_names()) std::cout << n << "\n";
      return 0;
    }
    slr::ScenarioConfig cfg;
    const CommonOpts* opts = nullptr;
    if (preset_cmd->parsed()) {
      cfg = slr::parse_config(slr::preset_config(preset_name));
      opts = &preset_opts;
    } else {
      for (size_t i = 0; i < kinds.size(); ++i) {
        if (!kind_cmds[i]->parsed()) continue;
        cfg = slr::parse_config_file(kind_opts[i].config_path);
        if (slr::to_string(cfg.kind) != kinds[i])
          throw slr::config_error("config is a " + slr::to_string(cfg.kind) +
                                  " scenario, invoked as " + kinds[i]);
        opts = &kind_opts[i];
      }
    }
    std::string out_dir;
    apply_overrides(cfg, *opts, out_dir);
    return execute(cfg, out_dir);
  } catch (const slr::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const slr::physics_error& e) {
    std::cerr << "physics error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
