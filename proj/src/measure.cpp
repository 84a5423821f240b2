#include "sgsim/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sgsim/analytic.hpp"
#include "sgsim/field.hpp"
#include "sgsim/parallel.hpp"
#include "sgsim/zone.hpp"

namespace sgsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

double measure_campaign_median(const MeasurementSpec& spec, std::uint64_t n,
                               Rng& rng) {
  if (n == 0) throw std::domain_error("measure_campaign_median: n must be > 0");
  if (spec.block_len == 0) {
    throw std::domain_error("measure_campaign_median: block_len must be > 0");
  }
  AnnulusSpec field{spec.parent_density, spec.d, spec.window, spec.activity};
  std::vector<double> samples;
  samples.reserve(n);
  std::vector<double> w;
  std::vector<double> active;
  while (samples.size() < n) {
    sample_annulus_weights(field, rng, w);
    active.clear();
    for (double wi : w) {
      if (rng.uniform01() < spec.activity) active.push_back(wi);
    }
    std::uint64_t take = std::min<std::uint64_t>(spec.block_len, n - samples.size());
    for (std::uint64_t j = 0; j < take; ++j) {
      double acc = 0.0;
      for (double wi : active) acc += wi * rng.exponential();
      samples.push_back(acc);
    }
  }
  return median_inplace(samples);
}

std::vector<DensityValidationRow> run_density_validation(
    const DensityValidationConfig& cfg, std::uint64_t seed, unsigned workers) {
  if (cfg.campaigns == 0) {
    throw std::domain_error("run_density_validation: campaigns must be > 0");
  }
  if (!(cfg.activity > 0.0 && cfg.activity <= 1.0)) {
    throw std::domain_error("run_density_validation: activity must be in (0, 1]");
  }
  const double chi_n = 1.0 / kPi;  // deployed density in normalized units
  std::vector<DensityValidationRow> rows;
  for (std::size_t ci = 0; ci < cfg.chis_per_km2.size(); ++ci) {
    double chi = cfg.chis_per_km2[ci];
    if (chi <= 0.0) throw std::domain_error("run_density_validation: chi must be > 0");
    // d_ref = 1/sqrt(pi chi); the antenna height in normalized units.
    double chi_m2 = chi * 1e-6;
    double d_n = cfg.antenna_height_m * std::sqrt(kPi * chi_m2);
    double zone = zone_radius_default(d_n, cfg.zone_fraction);
    double q = q_factor(d_n, zone);
    double lambda_true = cfg.activity * chi_n;
    MeasurementSpec spec{chi_n, cfg.activity, d_n, zone + cfg.window_margin,
                         cfg.block_len};
    for (std::size_t ni = 0; ni < cfg.sample_counts.size(); ++ni) {
      std::uint64_t n = cfg.sample_counts[ni];
      std::vector<double> lambda_hats(cfg.campaigns);
      parallel_for(cfg.campaigns, workers, [&](std::size_t c) {
        Rng rng = Rng::derive(seed, {tag::kDensityCampaign, ci, ni, c});
        double med = measure_campaign_median(spec, n, rng);
        lambda_hats[c] = infer_aggregate(med, q);  // beta = 1 in normalized units
      });
      CompensatedSum hat_sum, acc_sum;
      for (double lh : lambda_hats) {
        hat_sum.add(lh);
        acc_sum.add(1.0 - std::abs(lh - lambda_true) / lambda_true);
      }
      double nc = static_cast<double>(cfg.campaigns);
      rows.push_back({chi, n, lambda_true, hat_sum.value() / nc,
                      acc_sum.value() / nc});
    }
  }
  return rows;
}

}  // namespace sgsim
