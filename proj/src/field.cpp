#include "sgsim/field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sgsim/analytic.hpp"
#include "sgsim/parallel.hpp"

namespace sgsim {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::size_t sample_annulus_weights(const AnnulusSpec& spec, Rng& rng,
                                   std::vector<double>& w) {
  if (!(spec.outer > spec.inner) || spec.inner < 0.0) {
    throw std::domain_error("sample_annulus_weights: need 0 <= inner < outer");
  }
  double lo2 = spec.inner * spec.inner;
  double hi2 = spec.outer * spec.outer;
  double mean = spec.density * kPi * (hi2 - lo2);
  std::size_t n = static_cast<std::size_t>(rng.poisson(mean));
  w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double u2 = lo2 + (hi2 - lo2) * rng.uniform01();  // radius^2 is uniform
    w[i] = 1.0 / (u2 * u2);
  }
  return n;
}

double field_sample(const std::vector<double>& w, double activity, Rng& rng) {
  double acc = 0.0;
  if (activity >= 1.0) {
    for (double wi : w) acc += wi * rng.exponential();
  } else {
    for (double wi : w) {
      if (rng.uniform01() < activity) acc += wi * rng.exponential();
    }
  }
  return acc;
}

double median_inplace(std::vector<double>& v) {
  if (v.empty()) throw std::domain_error("median_inplace: empty sample");
  std::size_t n = v.size();
  std::size_t mid = n / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  double hi = v[mid];
  if (n % 2 == 1) return hi;
  double lo = *std::max_element(v.begin(), v.begin() + mid);
  return 0.5 * (lo + hi);
}

std::vector<MedianValidationPoint> run_median_validation(
    const MedianValidationConfig& cfg, std::uint64_t seed, unsigned workers) {
  if (cfg.drops == 0 || cfg.redraws == 0) {
    throw std::domain_error("run_median_validation: drops and redraws must be > 0");
  }
  std::vector<MedianValidationPoint> out;
  out.reserve(cfg.inner_radii.size());
  for (std::size_t ri = 0; ri < cfg.inner_radii.size(); ++ri) {
    double r = cfg.inner_radii[ri];
    AnnulusSpec spec{cfg.density / cfg.activity, r, cfg.outer, cfg.activity};
    std::vector<double> samples(cfg.drops * cfg.redraws);
    parallel_for(cfg.drops, workers, [&](std::size_t d) {
      thread_local std::vector<double> w;
      Rng pos = Rng::derive(seed, {tag::kMedianPositions, ri, d});
      Rng smp = Rng::derive(seed, {tag::kMedianSamples, ri, d});
      sample_annulus_weights(spec, pos, w);
      for (unsigned j = 0; j < cfg.redraws; ++j) {
        samples[d * cfg.redraws + j] = field_sample(w, spec.activity, smp);
      }
    });
    double sim = median_inplace(samples);
    double model = levy_median(levy_scale(q_factor(r, cfg.outer), cfg.density));
    out.push_back({r, sim, model, sim / model - 1.0});
  }
  return out;
}

std::vector<MgfValidationPoint> run_mgf_validation(const MgfValidationConfig& cfg,
                                                   std::uint64_t seed,
                                                   unsigned workers) {
  if (cfg.drops == 0) throw std::domain_error("run_mgf_validation: drops must be > 0");
  AnnulusSpec spec{cfg.density, cfg.inner, cfg.outer, 1.0};
  std::size_t ns = cfg.s_values.size();
  // Per-drop partial sums, merged in index order afterwards.
  std::vector<double> partial(cfg.drops * ns);
  parallel_for(cfg.drops, workers, [&](std::size_t d) {
    thread_local std::vector<double> w;
    Rng rng = Rng::derive(seed, {tag::kMgf, d});
    sample_annulus_weights(spec, rng, w);
    double field = field_sample(w, 1.0, rng);
    for (std::size_t k = 0; k < ns; ++k) {
      partial[d * ns + k] = std::exp(-cfg.s_values[k] * field);
    }
  });
  std::vector<MgfValidationPoint> out;
  out.reserve(ns);
  double q = q_factor(cfg.inner, cfg.outer);
  for (std::size_t k = 0; k < ns; ++k) {
    CompensatedSum acc;
    for (std::size_t d = 0; d < cfg.drops; ++d) acc.add(partial[d * ns + k]);
    double sim = acc.value() / static_cast<double>(cfg.drops);
    double model = mgf(cfg.s_values[k], q, cfg.density);
    out.push_back({cfg.s_values[k], sim, model, sim / model - 1.0});
  }
  return out;
}

}  // namespace sgsim
