#pragma once

#include <cstdint>
#include <vector>

#include "sgsim/rng.hpp"

namespace sgsim {

// Spectrum measurement at a station base and active-density inference.
//
// A station samples the interference power at its base (offset d, the
// antenna height) over a measurement campaign. Samples arrive in coherence
// blocks: within a block the interferer configuration (positions, on/off
// activity) is frozen and only fading varies between samples; successive
// blocks are independent. The inferred active density comes from the median
// of the campaign through the closed-form median inverse over the
// observation zone [d, R].

struct MeasurementSpec {
  double parent_density;  // deployed-station density chi (normalized)
  double activity;        // per-station on probability
  double d;               // measurement offset / exclusion radius
  double window;          // simulated interferer radius (>= zone radius)
  unsigned block_len;     // samples per coherence block
};

// One campaign of n samples; returns the sample median of the measured power.
double measure_campaign_median(const MeasurementSpec& spec, std::uint64_t n,
                               Rng& rng);

struct DensityValidationConfig {
  std::vector<double> chis_per_km2 = {2.0, 5.0, 10.0};
  std::vector<std::uint64_t> sample_counts = {1000, 5000};
  double activity = 0.5;
  double antenna_height_m = 10.0;
  unsigned block_len = 24;
  std::uint64_t campaigns = 300;
  double zone_fraction = 0.01;  // gradient budget fraction fixing the zone radius
  double window_margin = 2.5;   // simulated radius beyond the zone radius
};

struct DensityValidationRow {
  double chi_per_km2;
  std::uint64_t n_samples;
  double lambda_true;   // normalized active density
  double lambda_hat;    // mean inferred density over campaigns
  double accuracy;      // mean over campaigns of 1 - |l' - l| / l
};

std::vector<DensityValidationRow> run_density_validation(
    const DensityValidationConfig& cfg, std::uint64_t seed, unsigned workers);

}  // namespace sgsim
