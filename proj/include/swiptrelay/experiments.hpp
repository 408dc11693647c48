#ifndef SWIPTRELAY_EXPERIMENTS_HPP
#define SWIPTRELAY_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swiptrelay/scenario.hpp"

namespace swiptrelay {

// Experiment orchestration: a manifest names one experiment, the scenario it
// runs on, Monte Carlo sizing and seeds, and experiment-specific grid knobs
// (kept as raw JSON under "grid" and parsed per experiment). Every run is a
// pure function of the manifest: reruns produce byte-identical files.
struct ExperimentManifest {
  std::string experiment;
  std::optional<ScenarioConfig> scenario;
  long long mc_samples = 0;
  bool has_seeds = false;
  std::uint64_t geometry_seed = 0;
  std::uint64_t sampling_seed = 0;
  std::string output_dir = ".";
  std::string grid_json = "{}";
};

// Known experiment tags, in the order list-experiments prints them.
const std::vector<std::string>& experiment_names();

// Strict manifest parsing. Scenario may be inline or a path (resolved
// against base_dir). The scenario is optional only for iid_pitfall, which
// builds its link parameters directly.
ExperimentManifest load_manifest(const std::string& json_text,
                                 const std::string& base_dir);
ExperimentManifest load_manifest_file(const std::string& path);

// Runs the named experiment, writing summary.csv plus per-curve CSV files
// under output_dir. Throws ValidationError for bad manifests and
// NumericalError for numerical failures.
void run_experiment(const ExperimentManifest& manifest);

}  // namespace swiptrelay

#endif
