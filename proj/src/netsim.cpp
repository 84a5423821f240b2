#include "sgsim/netsim.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sgsim/analytic.hpp"
#include "sgsim/field.hpp"
#include "sgsim/parallel.hpp"
#include "sgsim/rng.hpp"
#include "sgsim/zone.hpp"

namespace sgsim {
namespace {

constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x;
  double y;
};

double dist2(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

Vec2 sample_disc(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform01());
  const double th = rng.uniform(0.0, 2.0 * kPi);
  return {r * std::cos(th), r * std::sin(th)};
}

double inv_quartic(double d2) { return 1.0 / (d2 * d2); }

struct DropResult {
  double thr_baseline = 0.0;
  double thr_proposed = 0.0;
  double thr_served = 0.0;
  double muted = 0.0;
};

void validate(const ThroughputConfig& cfg) {
  if (!(cfg.mean_cells > 0.0)) throw std::domain_error("mean_cells must be positive");
  if (!(cfg.ues_per_cell > 0.0)) throw std::domain_error("ues_per_cell must be positive");
  if (cfg.n_rrb == 0) throw std::domain_error("n_rrb must be positive");
  if (!(cfg.rrb_bandwidth_hz > 0.0)) throw std::domain_error("rrb_bandwidth_hz must be positive");
  if (cfg.activities.empty()) throw std::domain_error("activity sweep is empty");
  for (double a : cfg.activities)
    if (!(a > 0.0) || a > 1.0) throw std::domain_error("activity must lie in (0, 1]");
  if (!(cfg.noise >= 0.0)) throw std::domain_error("noise must be nonnegative");
  if (cfg.meas_samples == 0) throw std::domain_error("meas_samples must be positive");
  if (cfg.meas_block_len == 0) throw std::domain_error("meas_block_len must be positive");
  if (cfg.eval_instants == 0) throw std::domain_error("eval_instants must be positive");
  if (cfg.drops < 2) throw std::domain_error("need at least two drops");
  if (!(cfg.antenna_height_m > 0.0)) throw std::domain_error("antenna_height_m must be positive");
  if (!(cfg.chi_per_km2 > 0.0)) throw std::domain_error("chi_per_km2 must be positive");
  if (!(cfg.zone_fraction > 0.0) || cfg.zone_fraction >= 1.0)
    throw std::domain_error("zone_fraction must lie in (0, 1)");
  if (!std::isfinite(cfg.eps_db)) throw std::domain_error("eps_db must be finite");
}

DropResult run_drop(const ThroughputConfig& cfg, const McsTable& mcs, double activity,
                    double d_meas, double zone_outer, double eps_lin, std::uint64_t seed,
                    std::uint64_t point, std::uint64_t drop) {
  Rng rng = Rng::derive(seed, {tag::kNetDrop, point, drop});
  const double disc_radius = std::sqrt(cfg.mean_cells);  // density 1/pi on a disc

  std::vector<Vec2> st;
  for (;;) {
    const std::uint64_t n = rng.poisson(cfg.mean_cells);
    if (n == 0) continue;
    st.resize(n);
    for (auto& p : st) p = sample_disc(rng, disc_radius);
    break;
  }
  const std::size_t ns = st.size();

  std::size_t obs = 0;
  {
    const Vec2 origin{0.0, 0.0};
    double best = dist2(st[0], origin);
    for (std::size_t i = 1; i < ns; ++i) {
      const double d2 = dist2(st[i], origin);
      if (d2 < best) {
        best = d2;
        obs = i;
      }
    }
  }

  const std::uint64_t nu = rng.poisson(cfg.ues_per_cell * cfg.mean_cells);
  std::vector<Vec2> ue(nu);
  for (auto& p : ue) p = sample_disc(rng, disc_radius);

  std::vector<std::vector<std::uint32_t>> cell_ues(ns);
  std::vector<double> serv_dist(nu);
  for (std::uint64_t u = 0; u < nu; ++u) {
    std::size_t best_i = 0;
    double best_d2 = dist2(ue[u], st[0]);
    for (std::size_t i = 1; i < ns; ++i) {
      const double d2 = dist2(ue[u], st[i]);
      if (d2 < best_d2) {
        best_d2 = d2;
        best_i = i;
      }
    }
    cell_ues[best_i].push_back(static_cast<std::uint32_t>(u));
    serv_dist[u] = std::max(std::sqrt(best_d2), 1e-12);
  }

  if (cell_ues[obs].empty()) return {};  // observed cell idle under both schemes

  // base-to-base path weights
  std::vector<double> w_bb(ns * ns, 0.0);
  for (std::size_t i = 0; i < ns; ++i)
    for (std::size_t j = i + 1; j < ns; ++j) {
      const double ww = inv_quartic(std::max(dist2(st[i], st[j]), 1e-24));
      w_bb[i * ns + j] = ww;
      w_bb[j * ns + i] = ww;
    }

  // each station measures the median interference at its own base under
  // unmitigated traffic: activity redrawn per coherence block, fading per sample
  std::vector<double> mhat(ns);
  std::vector<double> buf;
  buf.reserve(cfg.meas_samples);
  std::vector<double> act_w;
  act_w.reserve(ns);
  for (std::size_t i = 0; i < ns; ++i) {
    Rng mr = Rng::derive(seed, {tag::kNetMeasure, point, drop, i});
    buf.clear();
    std::uint64_t remaining = cfg.meas_samples;
    while (remaining > 0) {
      act_w.clear();
      for (std::size_t j = 0; j < ns; ++j)
        if (j != i && mr.bernoulli(activity)) act_w.push_back(w_bb[i * ns + j]);
      const std::uint64_t m = std::min<std::uint64_t>(remaining, cfg.meas_block_len);
      for (std::uint64_t s = 0; s < m; ++s) {
        double acc = 0.0;
        for (double wj : act_w) acc += wj * mr.exponential();
        buf.push_back(acc);
      }
      remaining -= m;
    }
    mhat[i] = median_inplace(buf);
  }

  // per-user transmit decisions from each station's own inferred zone profile
  std::vector<char> ue_dec(nu, 0);
  std::vector<double> ranges;
  for (std::size_t i = 0; i < ns; ++i) {
    ranges.clear();
    for (std::uint32_t u : cell_ues[i]) ranges.push_back(serv_dist[u]);
    const std::vector<char> dec =
        station_decisions(mhat, i, ranges, d_meas, zone_outer, cfg.noise, eps_lin);
    for (std::size_t k = 0; k < ranges.size(); ++k) ue_dec[cell_ues[i][k]] = dec[k];
  }

  // round-robin resource-block schedule, frozen for the drop
  const unsigned nb = cfg.n_rrb;
  std::vector<char> dec_rrb(ns * nb, 0);
  for (std::size_t i = 0; i < ns; ++i) {
    const auto& list = cell_ues[i];
    if (list.empty()) continue;
    for (unsigned b = 0; b < nb; ++b) dec_rrb[i * nb + b] = ue_dec[list[b % list.size()]];
  }

  // link geometry toward the observed cell's scheduled users
  const auto& obs_list = cell_ues[obs];
  std::vector<double> sig_w(nb);
  std::vector<double> int_w(ns * nb, 0.0);
  for (unsigned b = 0; b < nb; ++b) {
    const std::uint32_t u = obs_list[b % obs_list.size()];
    sig_w[b] = inv_quartic(serv_dist[u] * serv_dist[u]);
    for (std::size_t j = 0; j < ns; ++j) {
      if (j == obs) continue;
      int_w[j * nb + b] = inv_quartic(std::max(dist2(st[j], ue[u]), 1e-24));
    }
  }

  // realized scheduling instants: traffic per (cell, block), fading per link,
  // shared between schemes so the comparison is paired
  double eff_base = 0.0;
  double eff_prop = 0.0;
  std::vector<char> traffic(ns * nb, 0);
  for (unsigned t = 0; t < cfg.eval_instants; ++t) {
    Rng er = Rng::derive(seed, {tag::kNetEval, point, drop, t});
    for (std::size_t j = 0; j < ns; ++j) {
      if (j == obs || cell_ues[j].empty()) continue;
      for (unsigned b = 0; b < nb; ++b) traffic[j * nb + b] = er.bernoulli(activity) ? 1 : 0;
    }
    for (unsigned b = 0; b < nb; ++b) {
      const double h0 = er.exponential();
      double int_base = 0.0;
      double int_prop = 0.0;
      for (std::size_t j = 0; j < ns; ++j) {
        if (j == obs || cell_ues[j].empty() || !traffic[j * nb + b]) continue;
        const double c = er.exponential() * int_w[j * nb + b];
        int_base += c;
        if (dec_rrb[j * nb + b]) int_prop += c;
      }
      const double sig = h0 * sig_w[b];
      const double sir_base = sig / (cfg.noise + int_base);
      if (!std::isnan(sir_base)) eff_base += mcs.efficiency_at(sir_base);
      if (dec_rrb[obs * nb + b]) {
        const double sir_prop = sig / (cfg.noise + int_prop);
        if (!std::isnan(sir_prop)) eff_prop += mcs.efficiency_at(sir_prop);
      }
    }
  }

  const double scale = cfg.rrb_bandwidth_hz / static_cast<double>(cfg.eval_instants) * 1e-6;
  unsigned kept = 0;
  for (unsigned b = 0; b < nb; ++b)
    if (dec_rrb[obs * nb + b]) ++kept;
  const double served =
      kept > 0 ? eff_prop * scale * static_cast<double>(nb) / static_cast<double>(kept) : 0.0;
  const double muted = 1.0 - static_cast<double>(kept) / static_cast<double>(nb);
  return {eff_base * scale, eff_prop * scale, served, muted};
}

}  // namespace

std::vector<char> station_decisions(const std::vector<double>& measurements,
                                    std::size_t station, const std::vector<double>& ue_ranges,
                                    double d, double zone_outer, double noise,
                                    double eps_linear) {
  if (station >= measurements.size())
    throw std::domain_error("station index out of range");
  const double own = measurements[station];
  if (!(own >= 0.0)) throw std::domain_error("station has no valid measurement");
  std::vector<char> out(ue_ranges.size(), 0);
  for (std::size_t k = 0; k < ue_ranges.size(); ++k) {
    const double r = ue_ranges[k];
    if (!(r > 0.0)) throw std::domain_error("ue range must be positive");
    if (r >= zone_outer) continue;  // outside the modeled zone: stay silent
    const double pred = predict_median_at(r, own, d, zone_outer);
    out[k] = transmit_decision(r, pred, noise, eps_linear, 1.0) ? 1 : 0;
  }
  return out;
}

std::vector<ThroughputPoint> run_throughput_sweep(const ThroughputConfig& cfg,
                                                  std::uint64_t seed, unsigned workers) {
  validate(cfg);
  const McsTable* mcs = cfg.mcs;
  const McsTable& table = mcs ? *mcs : McsTable::default_table();
  const double d_meas = cfg.antenna_height_m * std::sqrt(kPi * cfg.chi_per_km2 * 1e-6);
  const double zone_outer = zone_radius_default(d_meas, cfg.zone_fraction);
  const double eps_lin = db_to_linear(cfg.eps_db);

  const std::size_t np = cfg.activities.size();
  const std::size_t items = np * static_cast<std::size_t>(cfg.drops);
  std::vector<DropResult> slots(items);
  parallel_for(items, workers, [&](std::size_t k) {
    const std::uint64_t point = static_cast<std::uint64_t>(k / cfg.drops);
    const std::uint64_t drop = static_cast<std::uint64_t>(k % cfg.drops);
    slots[k] = run_drop(cfg, table, cfg.activities[point], d_meas, zone_outer, eps_lin, seed,
                        point, drop);
  });

  std::vector<ThroughputPoint> out(np);
  for (std::size_t p = 0; p < np; ++p) {
    CompensatedSum sum_b;
    CompensatedSum sum_p;
    CompensatedSum sum_s;
    CompensatedSum sum_m;
    CompensatedSum sum_d;
    CompensatedSum sum_ds;
    for (std::uint64_t d = 0; d < cfg.drops; ++d) {
      const DropResult& r = slots[p * cfg.drops + d];
      sum_b.add(r.thr_baseline);
      sum_p.add(r.thr_proposed);
      sum_s.add(r.thr_served);
      sum_m.add(r.muted);
      sum_d.add(r.thr_proposed - r.thr_baseline);
      sum_ds.add(r.thr_served - r.thr_baseline);
    }
    const double n = static_cast<double>(cfg.drops);
    const double mean_b = sum_b.value() / n;
    const double mean_p = sum_p.value() / n;
    const double mean_s = sum_s.value() / n;
    const double mean_d = sum_d.value() / n;
    const double mean_ds = sum_ds.value() / n;
    CompensatedSum ss;
    CompensatedSum sss;
    for (std::uint64_t d = 0; d < cfg.drops; ++d) {
      const DropResult& r = slots[p * cfg.drops + d];
      const double dd = (r.thr_proposed - r.thr_baseline) - mean_d;
      ss.add(dd * dd);
      const double dv = (r.thr_served - r.thr_baseline) - mean_ds;
      sss.add(dv * dv);
    }
    const double var_d = ss.value() / (n - 1.0);
    const double var_ds = sss.value() / (n - 1.0);
    out[p] = {cfg.activities[p],
              mean_b,
              mean_p,
              mean_s,
              sum_m.value() / n,
              mean_b > 0.0 ? mean_p / mean_b : 0.0,
              mean_b > 0.0 ? mean_s / mean_b : 0.0,
              mean_d,
              std::sqrt(var_d / n),
              mean_ds,
              std::sqrt(var_ds / n)};
  }
  return out;
}

}  // namespace sgsim
