#pragma once

#include <span>
#include <vector>

namespace sgsim {

// Closed-form interference model for a planar Poisson field of transmitters
// observed over an annular zone [r, R], path-loss exponent alpha (exact
// closed forms at alpha = 4), Rayleigh fading, per-transmitter power P and
// system gain Lambda.
//
// Unit conventions: distances may be in any consistent unit; the engine
// normalizes by the mean cell radius d_ref = 1/sqrt(pi*chi). Power is in
// watts. The "aggregate strength" of a set of tiers,
//     agg = sum_k lambda_k * sqrt(P_k * Lambda_k),
// carries all density and power dependence; for one tier agg = lambda/sqrt(beta)
// with beta = 1/(P*Lambda). The aggregate interference over the zone then
// follows a one-sided 1/2-stable (Levy-type) law with scale c = pi*q*agg,
// where q = q_factor(r, R, alpha).

struct Tier {
  double density;  // lambda_k, transmitters per unit area
  double power;    // P_k, watts
  double gain;     // Lambda_k, dimensionless link budget constant
};

inline constexpr double kAlphaDefault = 4.0;

// q_factor: int_r^R du / (1 + u^(alpha/2)). Closed form arctan(R) - arctan(r)
// at alpha = 4, numeric quadrature otherwise.
double q_factor(double r, double R, double alpha = kAlphaDefault);

// Sum over tiers of lambda_k * sqrt(P_k * Lambda_k).
double tier_aggregate(std::span<const Tier> tiers);

// Levy scale parameter c = pi * q * agg.
double levy_scale(double q, double agg);

// Density, CDF, quantiles of the Levy-type law with scale c (power units
// follow the units baked into agg).
double levy_pdf(double x, double c);
double levy_cdf(double x, double c);
double levy_quantile(double p, double c);
double levy_median(double c);

// Laplace transform E[exp(-s I)] of the zone-aggregate interference.
double mgf(double s, double q, double agg);
// Product form across tiers; identical to mgf(s, q, tier_aggregate(tiers)).
double mgf_tiers(double s, double q, std::span<const Tier> tiers);

// Mean of the law restricted to [0, bound]: int_0^bound x f(x) dx, closed form.
double mean_truncated(double c, double bound);

// Inverse of the median map: recovers agg from an observed median over a
// zone with factor q. infer_density additionally resolves a single tier's
// lambda given its beta = 1/(P*Lambda).
double infer_aggregate(double median, double q);
double infer_density(double median, double q, double beta);

// Median interference predicted at range r from a median measured at range d,
// both against outer radius R: scales by (q(r,R)/q(d,R))^2.
double predict_median_at(double r, double measured_median, double d, double R,
                         double alpha = kAlphaDefault);

// Opportunistic transmit rule: serve a user at range r when the predicted
// mean-signal to noise-plus-predicted-interference ratio clears the
// threshold. Inputs are strictly local to the deciding station.
bool transmit_decision(double r, double predicted_median, double noise,
                       double eps_linear, double beta,
                       double alpha = kAlphaDefault);

double db_to_linear(double db);
double linear_to_db(double x);

}  // namespace sgsim
