#pragma once

#include <cstdint>
#include <vector>

#include "sgsim/rng.hpp"

namespace sgsim {

// Monte Carlo sampling of the aggregate interference field produced by a
// planar Poisson process of transmitters on an annulus [inner, outer] around
// the observation point, unit-mean Rayleigh-power fading per transmitter and
// sample, independent on/off activity per transmitter.
//
// Normalized units: the station density is in points per unit area and the
// per-point contribution is w = u^-4 (power scale folded into beta outside).

struct AnnulusSpec {
  double density;   // active-transmitter density when activity == 1
  double inner;     // exclusion radius r
  double outer;     // zone radius R
  double activity;  // per-transmitter on probability per sample
};

// One position realization: fills w with u^-4 for each point of a Poisson
// draw on the annulus. Returns the point count.
std::size_t sample_annulus_weights(const AnnulusSpec& spec, Rng& rng,
                                   std::vector<double>& w);

// One field sample given frozen positions: sum of Bern(activity)*Exp(1)*w_i.
double field_sample(const std::vector<double>& w, double activity, Rng& rng);

// Median-equivalence experiment: `drops` independent position realizations,
// `redraws` fading/activity samples each; returns the pooled empirical median
// alongside the closed-form prediction for the same zone.
struct MedianValidationPoint {
  double r;
  double sim_median;
  double model_median;
  double rel_error;
};

struct MedianValidationConfig {
  double density = 0.15915494309189535;  // 0.5/pi: half-active normalized field
  double outer = 100.0;
  std::vector<double> inner_radii = {0.002, 0.004, 0.006, 0.008, 0.010};
  std::uint64_t drops = 10000;
  unsigned redraws = 8;
  double activity = 0.5;
};

std::vector<MedianValidationPoint> run_median_validation(
    const MedianValidationConfig& cfg, std::uint64_t seed, unsigned workers);

// Laplace-transform equivalence experiment: Monte Carlo estimate of
// E[exp(-s I)] against the closed form, one row per s.
struct MgfValidationPoint {
  double s;
  double sim_mgf;
  double model_mgf;
  double rel_error;
};

struct MgfValidationConfig {
  double density = 0.039788735772973836;  // 1/(8 pi)
  double inner = 0.01;
  double outer = 100.0;
  std::vector<double> s_values = {0.1, 1.0, 10.0};
  std::uint64_t drops = 100000;
};

std::vector<MgfValidationPoint> run_mgf_validation(const MgfValidationConfig& cfg,
                                                   std::uint64_t seed,
                                                   unsigned workers);

// Deterministic median of a sample vector (averages the two central order
// statistics for even sizes). Mutates the input.
double median_inplace(std::vector<double>& v);

}  // namespace sgsim
