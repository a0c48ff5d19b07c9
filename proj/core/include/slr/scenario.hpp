#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "slr/errors.hpp"

namespace slr {

enum class ScenarioKind {
  Extinction,
  Dispersion,
  FieldMap,
  Optomech,
  SingleModeOM,
  Exciton,
  PumpProbe
};

ScenarioKind scenario_kind_from_string(const std::string& s);
std::string to_string(ScenarioKind k);

// A fully resolved run description. params is the strict, validated JSON
// parameter block for the scenario kind (schema in docs/config.md).
struct ScenarioConfig {
  ScenarioKind kind;
  nlohmann::json params;
  int workers = 1;
  std::string format = "both"; // csv | json | both
};

// Bundled figure-caption parameter sets.
std::vector<std::string> preset_names();
nlohmann::json preset_config(const std::string& name);

// Accepts either a plain config document or a previously written run
// manifest (re-running a manifest reproduces the outputs byte for byte).
ScenarioConfig parse_config(const nlohmann::json& doc);
ScenarioConfig parse_config_file(const std::filesystem::path& path);

struct OutputBundle {
  std::vector<std::filesystem::path> files; // data files, manifest last
  std::filesystem::path manifest;
};

// Dispatches to the physics modules and writes CSV/JSON plus manifest.json
// into out_dir. Partial outputs are removed if anything throws.
OutputBundle run_scenario(const ScenarioConfig& config,
                          const std::filesystem::path& out_dir);

} // namespace slr
