#include "sgsim/zone.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sgsim/special.hpp"

namespace sgsim {

namespace {
constexpr double kPi = std::numbers::pi;

double c_squared(double agg) {
  static const double ustar = erfc_inv(0.5);
  double c = kPi * agg / (2.0 * ustar);
  return c * c;
}
}  // namespace

double zone_peak_radius(double r) {
  if (r < 0.0) throw std::domain_error("zone_peak_radius: r must be >= 0");
  // 2 R q(r,R) - 1 is -1 at R = r and strictly increasing.
  double lo = r, hi = (r > 1.0 ? 2.0 * r : 2.0);
  auto g = [r](double R) { return 2.0 * R * q_factor(r, R) - 1.0; };
  while (g(hi) < 0.0) {
    hi *= 2.0;
    if (hi > 1e12) throw std::runtime_error("zone_peak_radius: no bracket");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
    if (hi - lo < 1e-14 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

double zone_gradient(double R, double r, double agg) {
  return 2.0 * c_squared(agg) * q_factor(r, R) / (1.0 + R * R);
}

double zone_peak_constant() {
  static const double k0 = [] {
    double r0 = zone_peak_radius(0.0);
    return std::atan(r0) / (1.0 + r0 * r0);
  }();
  return k0;
}

double default_gradient_threshold(double agg, double fraction) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::domain_error("default_gradient_threshold: fraction in (0,1)");
  }
  return fraction * 2.0 * c_squared(agg) * zone_peak_constant();
}

double zone_radius(double r, double agg, double phi, double r_max, double tol) {
  if (phi <= 0.0) throw std::domain_error("zone_radius: phi must be positive");
  if (agg <= 0.0) throw std::domain_error("zone_radius: agg must be positive");
  double peak_r = zone_peak_radius(r);
  if (zone_gradient(peak_r, r, agg) <= phi) {
    return r;  // budget already covers the whole profile
  }
  if (r_max <= peak_r || zone_gradient(r_max, r, agg) > phi) {
    throw std::domain_error("zone_radius: gradient above phi at r_max");
  }
  double lo = peak_r, hi = r_max;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (zone_gradient(mid, r, agg) > phi ? lo : hi) = mid;
    if (hi - lo < tol) break;
  }
  return 0.5 * (lo + hi);
}

double zone_radius_default(double r, double fraction, double r_max) {
  return zone_radius(r, 1.0, default_gradient_threshold(1.0, fraction), r_max);
}

}  // namespace sgsim
