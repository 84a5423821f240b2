#include "sgsim/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sgsim/special.hpp"

namespace sgsim {

namespace {
constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

void check_zone(double r, double R) {
  if (!(r >= 0.0) || !(R > 0.0) || !(R >= r)) {
    throw std::domain_error("zone: need 0 <= r <= R, R > 0");
  }
}
}  // namespace

double q_factor(double r, double R, double alpha) {
  check_zone(r, R);
  if (!(alpha > 2.0)) {
    throw std::domain_error("q_factor: alpha must exceed 2");
  }
  if (alpha == 4.0) {
    return std::atan(R) - std::atan(r);
  }
  double half = 0.5 * alpha;
  return integrate([half](double u) { return 1.0 / (1.0 + std::pow(u, half)); },
                   r, R, 1e-12);
}

double tier_aggregate(std::span<const Tier> tiers) {
  double agg = 0.0;
  for (const Tier& t : tiers) {
    if (t.density < 0.0 || t.power < 0.0 || t.gain < 0.0) {
      throw std::domain_error("tier_aggregate: negative tier parameter");
    }
    agg += t.density * std::sqrt(t.power * t.gain);
  }
  return agg;
}

double levy_scale(double q, double agg) {
  if (q < 0.0 || agg < 0.0) {
    throw std::domain_error("levy_scale: q and agg must be nonnegative");
  }
  return kPi * q * agg;
}

double levy_pdf(double x, double c) {
  if (c <= 0.0) throw std::domain_error("levy_pdf: scale must be positive");
  if (x <= 0.0) return 0.0;
  double t = c * c / (4.0 * x);
  // Underflow cutoff; without it x^{-3/2} * exp(-t) evaluates as inf * 0.
  if (t > 700.0) return 0.0;
  return c / (2.0 * kSqrtPi) * std::pow(x, -1.5) * std::exp(-t);
}

double levy_cdf(double x, double c) {
  if (c <= 0.0) throw std::domain_error("levy_cdf: scale must be positive");
  if (x <= 0.0) return 0.0;
  return std::erfc(c / (2.0 * std::sqrt(x)));
}

double levy_quantile(double p, double c) {
  if (c <= 0.0) throw std::domain_error("levy_quantile: scale must be positive");
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("levy_quantile: p must be in (0, 1)");
  }
  double t = erfc_inv(p);
  return c * c / (4.0 * t * t);
}

double levy_median(double c) { return levy_quantile(0.5, c); }

double mgf(double s, double q, double agg) {
  if (s < 0.0) throw std::domain_error("mgf: s must be nonnegative");
  return std::exp(-kPi * q * agg * std::sqrt(s));
}

double mgf_tiers(double s, double q, std::span<const Tier> tiers) {
  double m = 1.0;
  for (const Tier& t : tiers) {
    m *= mgf(s, q, tier_aggregate(std::span<const Tier>(&t, 1)));
  }
  return m;
}

double mean_truncated(double c, double bound) {
  if (c <= 0.0) throw std::domain_error("mean_truncated: scale must be positive");
  if (bound < 0.0) throw std::domain_error("mean_truncated: bound must be >= 0");
  if (bound == 0.0) return 0.0;
  double root = std::sqrt(bound);
  return kSqrtPi * root * (c / kPi) * std::exp(-c * c / (4.0 * bound)) -
         0.5 * c * c * std::erfc(c / (2.0 * root));
}

double infer_aggregate(double median, double q) {
  if (median < 0.0) throw std::domain_error("infer_aggregate: negative median");
  if (q <= 0.0) throw std::domain_error("infer_aggregate: q must be positive");
  static const double ustar = erfc_inv(0.5);
  return 2.0 * ustar * std::sqrt(median) / (kPi * q);
}

double infer_density(double median, double q, double beta) {
  if (beta <= 0.0) throw std::domain_error("infer_density: beta must be positive");
  return infer_aggregate(median, q) * std::sqrt(beta);
}

double predict_median_at(double r, double measured_median, double d, double R,
                         double alpha) {
  if (measured_median < 0.0) {
    throw std::domain_error("predict_median_at: negative median");
  }
  double qd = q_factor(d, R, alpha);
  double qr = q_factor(r, R, alpha);
  if (qd <= 0.0) throw std::domain_error("predict_median_at: empty measurement zone");
  double ratio = qr / qd;
  return measured_median * ratio * ratio;
}

bool transmit_decision(double r, double predicted_median, double noise,
                       double eps_linear, double beta, double alpha) {
  if (r <= 0.0) throw std::domain_error("transmit_decision: range must be positive");
  double signal = std::pow(r, -alpha) / beta;
  double denom = noise + predicted_median;
  if (denom <= 0.0) return true;
  return signal / denom > eps_linear;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double x) { return 10.0 * std::log10(x); }

}  // namespace sgsim
