#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "fognet/synthetic.hpp"
#include "fognet/trainer.hpp"

namespace fognet {

// Flat key=value configuration ('#' comments, later assignments win). CLI
// --set overrides are applied after the file, in the order given.
using KeyValues = std::map<std::string, std::string>;

KeyValues parse_config_file(const std::filesystem::path& path);
void apply_override(KeyValues& keys, const std::string& assignment);  // "key=value"

enum class DataMode { kFiles, kSynthetic };

struct RunConfig {
  DataMode mode = DataMode::kSynthetic;

  // files mode
  std::filesystem::path tdcsfog_dir, tdcsfog_metadata;
  std::filesystem::path defog_dir, defog_metadata;

  // synthetic mode
  SynthConfig synth;
  uint64_t synth_seed = 0;

  bool defog_row_exclusion = false;  // series-level exclusion when false
  int64_t folds_k = 5;
  uint64_t folds_seed = 0;
  TrainConfig train;
  std::filesystem::path output_dir = "out";

  uint64_t digest = 0;  // over the effective key set

  static RunConfig from_keys(const KeyValues& keys);

  // Full catalog (every series); training catalog applies the defog
  // exclusion rule at series granularity unless row exclusion is selected.
  Catalog build_full_catalog() const;
  Catalog build_training_catalog() const;
};

// The documented key set, with defaults; unknown keys are rejected.
std::string config_reference_text();

}  // namespace fognet
