#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rft/jsa.hpp"
#include "rft/oracle.hpp"
#include "rft/potential.hpp"
#include "rft/transition.hpp"

namespace rft {

inline constexpr char kVersion[] = "0.1.0";

// A scenario file is a strict INI description of one computation: grid,
// transition data, potential, oracle settings, and an ordered task list.
// Unknown sections or keys are rejected. Frequencies are given as whole
// numbers of grid bins (keys ending in _dw) so every spectral placement is
// exact by construction; time offsets are given in units of dt.
struct ScenarioConfig {
  std::string name;
  std::string description;
  std::string text;  // raw file content, hashed into the manifest

  DualGrid grid;
  TransitionSpec spec;
  SelfTermMode mode = SelfTermMode::spectral_delta;

  std::optional<Potential> potential;

  QuadratureRule rule = QuadratureRule::midpoint;
  std::size_t steps = 1024;
  std::size_t steps_inner = 0;  // 0: same as steps

  std::optional<JsaParams> jsa;

  std::vector<std::string> tasks;
};

ScenarioConfig parse_scenario(const std::string& text,
                              const std::string& name);
ScenarioConfig load_scenario_file(const std::string& path);

struct BundledScenario {
  std::string name;
  std::string text;
};
const std::vector<BundledScenario>& bundled_scenarios();
ScenarioConfig load_bundled(const std::string& name);

struct TaskRecord {
  std::string task;
  std::vector<std::string> files;
  double milliseconds = 0.0;
  std::string note;
};

struct RunOptions {
  std::string out_dir = ".";
  bool quiet = false;
  std::ostream* log = nullptr;
};

struct RunResult {
  std::vector<TaskRecord> records;
  std::string manifest_path;
  std::string report_path;
};

// Executes the task list in order, writing one file per 1-D product
// ("<task>.tsv"), matrix and axis files for map products, a deterministic
// manifest.json (content hashes, no timestamps), and a report.txt that also
// carries runtimes and diagnostics.
RunResult run_scenario(const ScenarioConfig& cfg, const RunOptions& opts);

}  // namespace rft
