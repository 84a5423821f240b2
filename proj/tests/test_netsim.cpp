#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sgsim/analytic.hpp"
#include "sgsim/netsim.hpp"

using namespace sgsim;

TEST_CASE("station decisions read only the station's own measurement") {
  const std::vector<double> ranges = {0.05, 2.0, 10.0, 25.0};
  std::vector<double> meas = {0.8, 0.2, 3.1e-2, 5e3};
  const double d = 0.0396332729760601101;
  const double outer = 18.9177301633483418;
  const double eps = db_to_linear(6.0);

  const auto base = station_decisions(meas, 1, ranges, d, outer, 0.0, eps);
  REQUIRE(base.size() == ranges.size());

  for (double poison : {0.0, 1e308, 1e-300, std::nan("")}) {
    std::vector<double> tampered = meas;
    tampered[0] = poison;
    tampered[2] = poison;
    tampered[3] = poison;
    CHECK(station_decisions(tampered, 1, ranges, d, outer, 0.0, eps) == base);
  }

  std::vector<double> own = meas;
  own[1] = 1e9;  // drown the channel: everything goes silent
  const auto silent = station_decisions(own, 1, ranges, d, outer, 0.0, eps);
  bool any_on = false;
  for (char f : silent) any_on |= (f != 0);
  CHECK_FALSE(any_on);
}

TEST_CASE("near users transmit, far users mute") {
  const std::vector<double> meas = {5.0};
  const std::vector<double> ranges = {0.2, 0.5, 1.5, 4.0, 12.0, 40.0};
  const double d = 0.0396332729760601101;
  const double outer = 18.9177301633483418;
  const auto dec =
      station_decisions(meas, 0, ranges, d, outer, 0.0, db_to_linear(-6.0));
  const std::vector<char> expect = {1, 1, 1, 0, 0, 0};
  CHECK(dec == expect);
}

TEST_CASE("rising measured interference never unmutes a user") {
  const std::vector<double> ranges = {0.3, 1.0, 3.0, 9.0};
  const double d = 0.0250662827463100050;
  const double outer = 19.0121051957234512;
  const double eps = db_to_linear(-6.0);
  std::vector<char> prev(ranges.size(), 1);
  for (double m : {1e-6, 1e-4, 1e-2, 1.0, 1e2, 1e4}) {
    const std::vector<double> meas = {m};
    const auto dec = station_decisions(meas, 0, ranges, d, outer, 0.0, eps);
    for (std::size_t i = 0; i < dec.size(); ++i) {
      CHECK(dec[i] <= prev[i]);
    }
    prev = dec;
  }
}

TEST_CASE("decision inputs are validated") {
  const std::vector<double> meas = {0.1};
  const std::vector<double> ranges = {1.0};
  CHECK_THROWS_AS(station_decisions(meas, 1, ranges, 0.03, 19.0, 0.0, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(station_decisions(meas, 0, ranges, -0.1, 19.0, 0.0, 1.0),
                  std::domain_error);
  const std::vector<double> bad_meas = {std::nan("")};
  CHECK_THROWS_AS(station_decisions(bad_meas, 0, ranges, 0.03, 19.0, 0.0, 1.0),
                  std::domain_error);
  const std::vector<double> bad_range = {-2.0};
  CHECK_THROWS_AS(station_decisions(meas, 0, bad_range, 0.03, 19.0, 0.0, 1.0),
                  std::domain_error);
}

TEST_CASE("throughput sweep: shape, bounds and worker invariance") {
  ThroughputConfig cfg;
  cfg.activities = {0.3, 0.9};
  cfg.drops = 3;
  cfg.meas_samples = 240;
  cfg.eval_instants = 2;
  const auto a = run_throughput_sweep(cfg, 17, 1);
  REQUIRE(a.size() == 2);
  // hard ceiling: every block at peak efficiency
  const double cap = cfg.n_rrb * cfg.rrb_bandwidth_hz *
                     McsTable::default_table().peak_efficiency() * 1e-6;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].activity == cfg.activities[i]);
    CHECK(a[i].thr_baseline_mbps >= 0.0);
    CHECK(a[i].thr_proposed_mbps >= 0.0);
    CHECK(a[i].thr_baseline_mbps <= cap);
    CHECK(a[i].thr_proposed_mbps <= cap);
    CHECK(a[i].thr_served_mbps >= a[i].thr_proposed_mbps);
    CHECK(a[i].thr_served_mbps <= cap);
    CHECK(a[i].muted_share >= 0.0);
    CHECK(a[i].muted_share <= 1.0);
    CHECK(std::isfinite(a[i].ratio));
    CHECK(std::isfinite(a[i].ratio_served));
    CHECK(std::isfinite(a[i].diff_se_mbps));
    CHECK(std::isfinite(a[i].diff_served_se_mbps));
  }
  const auto b = run_throughput_sweep(cfg, 17, 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].thr_baseline_mbps == b[i].thr_baseline_mbps);
    CHECK(a[i].thr_proposed_mbps == b[i].thr_proposed_mbps);
    CHECK(a[i].thr_served_mbps == b[i].thr_served_mbps);
    CHECK(a[i].muted_share == b[i].muted_share);
    CHECK(a[i].diff_mean_mbps == b[i].diff_mean_mbps);
    CHECK(a[i].diff_se_mbps == b[i].diff_se_mbps);
  }
}

TEST_CASE("throughput sweep validates its configuration") {
  ThroughputConfig cfg;
  cfg.activities = {};
  CHECK_THROWS_AS(run_throughput_sweep(cfg, 1, 1), std::domain_error);
  cfg = ThroughputConfig{};
  cfg.drops = 0;
  CHECK_THROWS_AS(run_throughput_sweep(cfg, 1, 1), std::domain_error);
  cfg = ThroughputConfig{};
  cfg.activities = {1.5};
  CHECK_THROWS_AS(run_throughput_sweep(cfg, 1, 1), std::domain_error);
}
