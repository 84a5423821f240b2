#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "sgsim/analytic.hpp"
#include "sgsim/field.hpp"
#include "sgsim/mcs.hpp"
#include "sgsim/measure.hpp"
#include "sgsim/netsim.hpp"
#include "sgsim/special.hpp"
#include "sgsim/version.hpp"
#include "sgsim/zone.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_sgsim, m) {
  using namespace sgsim;

  m.doc() = "interference field engine: closed forms, zone solver, Monte Carlo experiments";
  m.attr("__version__") = kToolVersion;

  // closed forms
  m.def("q_factor", &q_factor, py::arg("r"), py::arg("outer"), py::arg("alpha") = kAlphaDefault);
  m.def("levy_scale", &levy_scale, py::arg("q"), py::arg("agg"));
  m.def("levy_pdf", &levy_pdf, py::arg("x"), py::arg("c"));
  m.def("levy_cdf", &levy_cdf, py::arg("x"), py::arg("c"));
  m.def("levy_quantile", &levy_quantile, py::arg("p"), py::arg("c"));
  m.def("levy_median", &levy_median, py::arg("c"));
  m.def("mgf", &mgf, py::arg("s"), py::arg("q"), py::arg("agg"));
  m.def("mean_truncated", &mean_truncated, py::arg("c"), py::arg("bound"));
  m.def("infer_aggregate", &infer_aggregate, py::arg("median"), py::arg("q"));
  m.def("infer_density", &infer_density, py::arg("median"), py::arg("q"), py::arg("beta"));
  m.def("predict_median_at", &predict_median_at, py::arg("r"), py::arg("measured_median"),
        py::arg("d"), py::arg("outer"), py::arg("alpha") = kAlphaDefault);
  m.def("transmit_decision", &transmit_decision, py::arg("r"), py::arg("predicted_median"),
        py::arg("noise"), py::arg("eps_linear"), py::arg("beta"),
        py::arg("alpha") = kAlphaDefault);
  m.def("db_to_linear", &db_to_linear, py::arg("db"));
  m.def("linear_to_db", &linear_to_db, py::arg("x"));
  m.def("erfc_inv", &erfc_inv, py::arg("y"));

  py::class_<Tier>(m, "Tier")
      .def(py::init([](double density, double power, double gain) {
             return Tier{density, power, gain};
           }),
           py::arg("density"), py::arg("power"), py::arg("gain"))
      .def_readwrite("density", &Tier::density)
      .def_readwrite("power", &Tier::power)
      .def_readwrite("gain", &Tier::gain);
  m.def("tier_aggregate",
        [](const std::vector<Tier>& tiers) { return tier_aggregate(tiers); },
        py::arg("tiers"));
  m.def("mgf_tiers",
        [](double s, double q, const std::vector<Tier>& tiers) {
          return mgf_tiers(s, q, tiers);
        },
        py::arg("s"), py::arg("q"), py::arg("tiers"));

  // zone solver
  m.def("zone_peak_radius", &zone_peak_radius, py::arg("r"));
  m.def("zone_gradient", &zone_gradient, py::arg("outer"), py::arg("r"), py::arg("agg"));
  m.def("zone_peak_constant", &zone_peak_constant);
  m.def("default_gradient_threshold", &default_gradient_threshold, py::arg("agg"),
        py::arg("fraction") = 0.01);
  m.def("zone_radius", &zone_radius, py::arg("r"), py::arg("agg"), py::arg("phi"),
        py::arg("r_max") = 100.0, py::arg("tol") = 1e-9);
  m.def("zone_radius_default", &zone_radius_default, py::arg("r"), py::arg("fraction") = 0.01,
        py::arg("r_max") = 100.0);

  // link adaptation
  py::class_<McsRow>(m, "McsRow")
      .def_readonly("sir_db", &McsRow::sir_db)
      .def_readonly("efficiency", &McsRow::efficiency);
  py::class_<McsTable>(m, "McsTable")
      .def_static("default_table", []() { return McsTable::default_table(); })
      .def_static("parse", &McsTable::parse, py::arg("text"))
      .def_static("load", &McsTable::load, py::arg("path"))
      .def("efficiency_at_db", &McsTable::efficiency_at_db, py::arg("sir_db"))
      .def("efficiency_at", &McsTable::efficiency_at, py::arg("sir_linear"))
      .def_property_readonly("rows", &McsTable::rows)
      .def_property_readonly("floor_db", &McsTable::floor_db)
      .def_property_readonly("peak_efficiency", &McsTable::peak_efficiency);

  // Monte Carlo experiments
  py::class_<MedianValidationConfig>(m, "MedianValidationConfig")
      .def(py::init<>())
      .def_readwrite("density", &MedianValidationConfig::density)
      .def_readwrite("outer", &MedianValidationConfig::outer)
      .def_readwrite("inner_radii", &MedianValidationConfig::inner_radii)
      .def_readwrite("drops", &MedianValidationConfig::drops)
      .def_readwrite("redraws", &MedianValidationConfig::redraws)
      .def_readwrite("activity", &MedianValidationConfig::activity);
  py::class_<MedianValidationPoint>(m, "MedianValidationPoint")
      .def_readonly("r", &MedianValidationPoint::r)
      .def_readonly("sim_median", &MedianValidationPoint::sim_median)
      .def_readonly("model_median", &MedianValidationPoint::model_median)
      .def_readonly("rel_error", &MedianValidationPoint::rel_error);
  m.def("run_median_validation", &run_median_validation, py::arg("config"), py::arg("seed"),
        py::arg("workers") = 0);

  py::class_<MgfValidationConfig>(m, "MgfValidationConfig")
      .def(py::init<>())
      .def_readwrite("density", &MgfValidationConfig::density)
      .def_readwrite("inner", &MgfValidationConfig::inner)
      .def_readwrite("outer", &MgfValidationConfig::outer)
      .def_readwrite("s_values", &MgfValidationConfig::s_values)
      .def_readwrite("drops", &MgfValidationConfig::drops);
  py::class_<MgfValidationPoint>(m, "MgfValidationPoint")
      .def_readonly("s", &MgfValidationPoint::s)
      .def_readonly("sim_mgf", &MgfValidationPoint::sim_mgf)
      .def_readonly("model_mgf", &MgfValidationPoint::model_mgf)
      .def_readonly("rel_error", &MgfValidationPoint::rel_error);
  m.def("run_mgf_validation", &run_mgf_validation, py::arg("config"), py::arg("seed"),
        py::arg("workers") = 0);

  py::class_<DensityValidationConfig>(m, "DensityValidationConfig")
      .def(py::init<>())
      .def_readwrite("chis_per_km2", &DensityValidationConfig::chis_per_km2)
      .def_readwrite("sample_counts", &DensityValidationConfig::sample_counts)
      .def_readwrite("activity", &DensityValidationConfig::activity)
      .def_readwrite("antenna_height_m", &DensityValidationConfig::antenna_height_m)
      .def_readwrite("block_len", &DensityValidationConfig::block_len)
      .def_readwrite("campaigns", &DensityValidationConfig::campaigns)
      .def_readwrite("zone_fraction", &DensityValidationConfig::zone_fraction)
      .def_readwrite("window_margin", &DensityValidationConfig::window_margin);
  py::class_<DensityValidationRow>(m, "DensityValidationRow")
      .def_readonly("chi_per_km2", &DensityValidationRow::chi_per_km2)
      .def_readonly("n_samples", &DensityValidationRow::n_samples)
      .def_readonly("lambda_true", &DensityValidationRow::lambda_true)
      .def_readonly("lambda_hat", &DensityValidationRow::lambda_hat)
      .def_readonly("accuracy", &DensityValidationRow::accuracy);
  m.def("run_density_validation", &run_density_validation, py::arg("config"), py::arg("seed"),
        py::arg("workers") = 0);

  py::class_<ThroughputConfig>(m, "ThroughputConfig")
      .def(py::init<>())
      .def_readwrite("mean_cells", &ThroughputConfig::mean_cells)
      .def_readwrite("ues_per_cell", &ThroughputConfig::ues_per_cell)
      .def_readwrite("n_rrb", &ThroughputConfig::n_rrb)
      .def_readwrite("rrb_bandwidth_hz", &ThroughputConfig::rrb_bandwidth_hz)
      .def_readwrite("activities", &ThroughputConfig::activities)
      .def_readwrite("eps_db", &ThroughputConfig::eps_db)
      .def_readwrite("noise", &ThroughputConfig::noise)
      .def_readwrite("meas_samples", &ThroughputConfig::meas_samples)
      .def_readwrite("meas_block_len", &ThroughputConfig::meas_block_len)
      .def_readwrite("eval_instants", &ThroughputConfig::eval_instants)
      .def_readwrite("drops", &ThroughputConfig::drops)
      .def_readwrite("antenna_height_m", &ThroughputConfig::antenna_height_m)
      .def_readwrite("chi_per_km2", &ThroughputConfig::chi_per_km2)
      .def_readwrite("zone_fraction", &ThroughputConfig::zone_fraction);
  py::class_<ThroughputPoint>(m, "ThroughputPoint")
      .def_readonly("activity", &ThroughputPoint::activity)
      .def_readonly("thr_baseline_mbps", &ThroughputPoint::thr_baseline_mbps)
      .def_readonly("thr_proposed_mbps", &ThroughputPoint::thr_proposed_mbps)
      .def_readonly("thr_served_mbps", &ThroughputPoint::thr_served_mbps)
      .def_readonly("muted_share", &ThroughputPoint::muted_share)
      .def_readonly("ratio", &ThroughputPoint::ratio)
      .def_readonly("ratio_served", &ThroughputPoint::ratio_served)
      .def_readonly("diff_mean_mbps", &ThroughputPoint::diff_mean_mbps)
      .def_readonly("diff_se_mbps", &ThroughputPoint::diff_se_mbps)
      .def_readonly("diff_served_mbps", &ThroughputPoint::diff_served_mbps)
      .def_readonly("diff_served_se_mbps", &ThroughputPoint::diff_served_se_mbps);
  m.def("run_throughput_sweep", &run_throughput_sweep, py::arg("config"), py::arg("seed"),
        py::arg("workers") = 0);

  m.def("station_decisions",
        [](const std::vector<double>& measurements, std::size_t station,
           const std::vector<double>& ue_ranges, double d, double zone_outer, double noise,
           double eps_linear) {
          const auto dec =
              station_decisions(measurements, station, ue_ranges, d, zone_outer, noise,
                                eps_linear);
          return std::vector<bool>(dec.begin(), dec.end());
        },
        py::arg("measurements"), py::arg("station"), py::arg("ue_ranges"), py::arg("d"),
        py::arg("zone_outer"), py::arg("noise"), py::arg("eps_linear"));
}
