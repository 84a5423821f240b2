#include <cstdint>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgsim/analytic.hpp"
#include "sgsim/config.hpp"
#include "sgsim/csv.hpp"
#include "sgsim/field.hpp"
#include "sgsim/measure.hpp"
#include "sgsim/mcs.hpp"
#include "sgsim/netsim.hpp"
#include "sgsim/special.hpp"
#include "sgsim/version.hpp"
#include "sgsim/zone.hpp"

namespace {

struct Common {
  std::string config;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string out = "-";
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "experiment config file (sectioned key = value)");
  sub->add_option("--seed", c.seed, "master seed")->capture_default_str();
  sub->add_option("--workers", c.workers, "worker threads, 0 = hardware")
      ->capture_default_str();
  sub->add_option("--out", c.out, "output CSV path, '-' = stdout")->capture_default_str();
}

sgsim::Config load_config(const Common& c) {
  return c.config.empty() ? sgsim::Config() : sgsim::Config::load(c.config);
}

void provenance(sgsim::CsvWriter& w, const std::string& sub, const Common& c) {
  w.meta("tool", std::string(sgsim::kToolName) + " " + sgsim::kToolVersion);
  w.meta("subcommand", sub);
  w.meta("config", c.config.empty() ? "none" : c.config);
  w.meta("seed", c.seed);
  // worker count deliberately not recorded: output is a pure function of
  // (config, seed) and must be byte-identical for any worker count
}

void emit(const sgsim::CsvWriter& w, const Common& c) {
  if (c.out == "-")
    std::cout << w.finish();
  else
    w.finish_to_file(c.out);
}

int run_zone_sweep(const Common& c) {
  const sgsim::Config cfg = load_config(c);
  const std::vector<double> r_list = cfg.get_doubles(
      "zone", "r_list", {0.0, 0.0251, 0.0396, 0.056, 0.1, 0.2, 0.5, 1.0});
  const double agg = cfg.get_double("zone", "agg", 1.0);
  const double fraction = cfg.get_double("zone", "fraction", 0.01);
  const double r_max = cfg.get_double("zone", "r_max", 100.0);
  const double phi = cfg.has("zone", "phi")
                         ? cfg.get_double("zone", "phi")
                         : sgsim::default_gradient_threshold(agg, fraction);
  sgsim::CsvWriter w;
  provenance(w, "zone-sweep", c);
  w.meta("agg", agg);
  w.meta("phi", phi);
  w.header({"r", "agg", "phi", "zone_radius", "median_at_zone"});
  for (double r : r_list) {
    const double radius = sgsim::zone_radius(r, agg, phi, r_max);
    const double med =
        sgsim::levy_median(sgsim::levy_scale(sgsim::q_factor(r, radius), agg));
    w.row({r, agg, phi, radius, med});
  }
  emit(w, c);
  return 0;
}

int run_validate_density(const Common& c) {
  const sgsim::Config cfg = load_config(c);
  sgsim::DensityValidationConfig dc;
  dc.chis_per_km2 = cfg.get_doubles("density", "chis", dc.chis_per_km2);
  if (cfg.has("density", "sample_counts")) {
    dc.sample_counts.clear();
    for (double v : cfg.get_doubles("density", "sample_counts"))
      dc.sample_counts.push_back(static_cast<std::uint64_t>(v));
  }
  dc.activity = cfg.get_double("density", "activity", dc.activity);
  dc.antenna_height_m = cfg.get_double("density", "antenna_height_m", dc.antenna_height_m);
  dc.block_len = static_cast<unsigned>(cfg.get_u64("density", "block_len", dc.block_len));
  dc.campaigns = cfg.get_u64("density", "campaigns", dc.campaigns);
  dc.zone_fraction = cfg.get_double("density", "zone_fraction", dc.zone_fraction);
  dc.window_margin = cfg.get_double("density", "window_margin", dc.window_margin);
  const auto rows = sgsim::run_density_validation(dc, c.seed, c.workers);
  sgsim::CsvWriter w;
  provenance(w, "validate-density", c);
  w.meta("campaigns", dc.campaigns);
  w.meta("activity", dc.activity);
  w.meta("block_len", static_cast<std::uint64_t>(dc.block_len));
  w.meta("zone_fraction", dc.zone_fraction);
  w.header({"chi_per_km2", "n_samples", "lambda_true", "lambda_inferred", "accuracy"});
  for (const auto& r : rows)
    w.row({r.chi_per_km2, static_cast<double>(r.n_samples), r.lambda_true, r.lambda_hat,
           r.accuracy});
  emit(w, c);
  return 0;
}

int run_throughput_sweep(const Common& c) {
  const sgsim::Config cfg = load_config(c);
  sgsim::ThroughputConfig tc;
  tc.activities = cfg.get_doubles("throughput", "activities", tc.activities);
  tc.drops = cfg.get_u64("throughput", "drops", tc.drops);
  tc.eps_db = cfg.get_double("throughput", "eps_db", tc.eps_db);
  tc.noise = cfg.get_double("throughput", "noise", tc.noise);
  tc.meas_samples = cfg.get_u64("throughput", "meas_samples", tc.meas_samples);
  tc.meas_block_len =
      static_cast<unsigned>(cfg.get_u64("throughput", "meas_block_len", tc.meas_block_len));
  tc.eval_instants =
      static_cast<unsigned>(cfg.get_u64("throughput", "eval_instants", tc.eval_instants));
  tc.mean_cells = cfg.get_double("throughput", "mean_cells", tc.mean_cells);
  tc.ues_per_cell = cfg.get_double("throughput", "ues_per_cell", tc.ues_per_cell);
  tc.n_rrb = static_cast<unsigned>(cfg.get_u64("throughput", "n_rrb", tc.n_rrb));
  tc.rrb_bandwidth_hz =
      cfg.get_double("throughput", "rrb_bandwidth_hz", tc.rrb_bandwidth_hz);
  tc.antenna_height_m =
      cfg.get_double("throughput", "antenna_height_m", tc.antenna_height_m);
  tc.chi_per_km2 = cfg.get_double("throughput", "chi_per_km2", tc.chi_per_km2);
  tc.zone_fraction = cfg.get_double("throughput", "zone_fraction", tc.zone_fraction);
  const std::string mcs_path = cfg.get_string("throughput", "mcs_table", "");
  sgsim::McsTable table = mcs_path.empty() ? sgsim::McsTable::default_table()
                                           : sgsim::McsTable::load(mcs_path);
  tc.mcs = &table;
  const auto pts = sgsim::run_throughput_sweep(tc, c.seed, c.workers);
  sgsim::CsvWriter w;
  provenance(w, "throughput-sweep", c);
  w.meta("drops", tc.drops);
  w.meta("eps_db", tc.eps_db);
  w.meta("meas_samples", tc.meas_samples);
  w.meta("eval_instants", static_cast<std::uint64_t>(tc.eval_instants));
  w.meta("mean_cells", tc.mean_cells);
  w.meta("ues_per_cell", tc.ues_per_cell);
  w.meta("mcs", mcs_path.empty() ? "builtin" : mcs_path);
  w.header({"activity", "thr_hfr1_mbps", "thr_proposed_mbps", "thr_served_mbps", "muted_share",
            "ratio", "ratio_served", "diff_mean_mbps", "diff_se_mbps", "diff_served_mbps",
            "diff_served_se_mbps"});
  for (const auto& p : pts)
    w.row({p.activity, p.thr_baseline_mbps, p.thr_proposed_mbps, p.thr_served_mbps,
           p.muted_share, p.ratio, p.ratio_served, p.diff_mean_mbps, p.diff_se_mbps,
           p.diff_served_mbps, p.diff_served_se_mbps});
  emit(w, c);
  return 0;
}

struct AnalyticArgs {
  std::map<std::string, double> value;
  std::map<std::string, CLI::Option*> opt;

  bool has(const std::string& name) const { return opt.at(name)->count() > 0; }
  double req(const std::string& op, const std::string& name) const {
    if (!has(name))
      throw std::runtime_error("analytic op '" + op + "' requires --" + name);
    return value.at(name);
  }
  double get(const std::string& name, double fallback) const {
    return has(name) ? value.at(name) : fallback;
  }
};

int run_analytic(const Common& c, const std::string& op, const AnalyticArgs& a) {
  double value = 0.0;
  if (op == "q-factor") {
    value = sgsim::q_factor(a.req(op, "r"), a.req(op, "outer"), a.get("alpha", 4.0));
  } else if (op == "scale") {
    value = sgsim::levy_scale(a.req(op, "q"), a.req(op, "agg"));
  } else if (op == "pdf") {
    value = sgsim::levy_pdf(a.req(op, "x"), a.req(op, "c"));
  } else if (op == "cdf") {
    value = sgsim::levy_cdf(a.req(op, "x"), a.req(op, "c"));
  } else if (op == "quantile") {
    value = sgsim::levy_quantile(a.req(op, "p"), a.req(op, "c"));
  } else if (op == "median") {
    value = sgsim::levy_median(a.req(op, "c"));
  } else if (op == "mgf") {
    value = sgsim::mgf(a.req(op, "s"), a.req(op, "q"), a.req(op, "agg"));
  } else if (op == "mean-truncated") {
    value = sgsim::mean_truncated(a.req(op, "c"), a.req(op, "bound"));
  } else if (op == "zone-radius") {
    const double agg = a.get("agg", 1.0);
    const double phi = a.has("phi")
                           ? a.value.at("phi")
                           : sgsim::default_gradient_threshold(agg, a.get("fraction", 0.01));
    value = sgsim::zone_radius(a.req(op, "r"), agg, phi, a.get("r-max", 100.0));
  } else if (op == "zone-gradient") {
    value = sgsim::zone_gradient(a.req(op, "outer"), a.req(op, "r"), a.req(op, "agg"));
  } else if (op == "zone-peak") {
    value = sgsim::zone_peak_radius(a.req(op, "r"));
  } else if (op == "infer-aggregate") {
    value = sgsim::infer_aggregate(a.req(op, "median"), a.req(op, "q"));
  } else if (op == "infer-density") {
    value = sgsim::infer_density(a.req(op, "median"), a.req(op, "q"), a.get("beta", 1.0));
  } else if (op == "predict-median") {
    value = sgsim::predict_median_at(a.req(op, "r"), a.req(op, "median"), a.req(op, "d"),
                                     a.req(op, "outer"), a.get("alpha", 4.0));
  } else if (op == "decision") {
    value = sgsim::transmit_decision(a.req(op, "r"), a.req(op, "predicted"),
                                     a.get("noise", 0.0),
                                     sgsim::db_to_linear(a.req(op, "eps-db")),
                                     a.get("beta", 1.0), a.get("alpha", 4.0))
                ? 1.0
                : 0.0;
  } else if (op == "erfc-inv") {
    value = sgsim::erfc_inv(a.req(op, "x"));
  } else if (op == "db-to-linear") {
    value = sgsim::db_to_linear(a.req(op, "x"));
  } else if (op == "linear-to-db") {
    value = sgsim::linear_to_db(a.req(op, "x"));
  } else {
    throw std::runtime_error("unknown analytic op '" + op + "'");
  }
  sgsim::CsvWriter w;
  provenance(w, "analytic", c);
  w.meta("op", op);
  for (const auto& [name, o] : a.opt)
    if (o->count() > 0) w.meta(name, a.value.at(name));
  w.header({"value"});
  w.row({value});
  emit(w, c);
  return 0;
}

int run_verify(const std::string& path) {
  const std::string bytes = sgsim::read_text_file(path);
  const std::string sum = sgsim::verify_table(bytes);
  std::cout << "ok " << path << " fnv1a64:" << sum << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(sgsim::kToolName) +
               " - interference field engine and cellular Monte Carlo"};
  app.require_subcommand(1);

  Common c_zone, c_density, c_thr, c_analytic;
  CLI::App* zone = app.add_subcommand(
      "zone-sweep", "solve observation-zone radii over a range of exclusion radii");
  add_common(zone, c_zone);
  CLI::App* density = app.add_subcommand(
      "validate-density", "active-density inference accuracy experiment");
  add_common(density, c_density);
  CLI::App* thr = app.add_subcommand(
      "throughput-sweep", "cell throughput of avoidance vs reuse-1 across activity");
  add_common(thr, c_thr);
  CLI::App* analytic = app.add_subcommand(
      "analytic", "evaluate one closed form at given arguments");
  add_common(analytic, c_analytic);
  std::string op;
  analytic->add_option("op", op, "one of: q-factor scale pdf cdf quantile median mgf "
                                 "mean-truncated zone-radius zone-gradient zone-peak "
                                 "infer-aggregate infer-density predict-median decision "
                                 "erfc-inv db-to-linear linear-to-db")
      ->required();
  AnalyticArgs args;
  for (const char* name : {"x", "s", "c", "q", "agg", "r", "d", "outer", "alpha", "beta", "p",
                           "median", "bound", "phi", "fraction", "r-max", "noise", "eps-db",
                           "predicted"}) {
    args.value[name] = 0.0;
    args.opt[name] = analytic->add_option("--" + std::string(name), args.value[name]);
  }
  CLI::App* verify = app.add_subcommand(
      "verify", "re-hash an emitted CSV and confirm its provenance checksum");
  std::string verify_path;
  verify->add_option("path", verify_path, "CSV file to check")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(zone)) return run_zone_sweep(c_zone);
    if (app.got_subcommand(density)) return run_validate_density(c_density);
    if (app.got_subcommand(thr)) return run_throughput_sweep(c_thr);
    if (app.got_subcommand(analytic)) return run_analytic(c_analytic, op, args);
    if (app.got_subcommand(verify)) return run_verify(verify_path);
    throw std::runtime_error("no subcommand selected");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
