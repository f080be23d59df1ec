#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "fognet/data.hpp"

namespace fognet {

// Event signature injected for one outcome class: band-limited oscillation
// with a half-cosine onset/offset envelope, riding on the background noise.
struct SynthClassSpec {
  double events_per_minute = 0.0;
  double duration_s_min = 2.0;
  double duration_s_max = 8.0;
  double amplitude = 1.0;
  double freq_hz_min = 1.5;
  double freq_hz_max = 3.0;
};

// Desk-scale stand-in for the competition corpus: per-subject recordings with
// gaussian background, per-source gravity offsets and per-class injected
// signatures, labels consistent with the injections by construction.
struct SynthConfig {
  int64_t subjects = 20;
  int64_t series_per_subject_min = 2;
  int64_t series_per_subject_max = 4;
  int64_t series_length_min = 2200;
  int64_t series_length_max = 6000;
  double defog_fraction = 0.5;           // subjects recorded at home, in g
  double eventless_defog_fraction = 0.1;  // whole defog recordings without events
  double noise_sigma = 0.15;
  std::array<SynthClassSpec, 3> classes = {
      SynthClassSpec{0.6, 1.0, 3.0, 0.8, 0.3, 0.8},   // StartHesitation: short lurch
      SynthClassSpec{3.0, 3.0, 8.0, 1.2, 1.5, 3.0},   // Turn: strong mid-band sway
      SynthClassSpec{1.5, 3.0, 10.0, 0.7, 1.7, 2.3},  // Walking: step cadence
  };
  std::string subject_prefix = "SYN";
  std::string series_prefix = "series";
};

Catalog synthesize_dataset(const SynthConfig& config, uint64_t seed);

}  // namespace fognet
