#pragma once

#include "sgsim/analytic.hpp"

namespace sgsim {

// Interference observation zone solver.
//
// The mean zone-truncated interference, as a function of the outer radius R,
// has derivative
//     dE/dR = 2 C^2 q_factor(r, R) / (1 + R^2),   C = pi * agg / (2 erfc_inv(1/2)),
// which is zero at R = r, rises to a single peak, then decays. The zone
// radius for a gradient budget phi is the radius past the peak where the
// gradient falls back to phi: beyond it, widening the zone adds less than
// phi of expected interference per unit radius.

// Peak location of q_factor(r, R)/(1+R^2) in R: root of 2 R q_factor(r,R) = 1.
double zone_peak_radius(double r);

// dE/dR at R for a zone starting at r (alpha = 4).
double zone_gradient(double R, double r, double agg);

// Universal peak constant K0 = max_R arctan(R)/(1+R^2) (the r = 0 profile).
double zone_peak_constant();

// Default gradient budget: fraction of the r = 0 profile's peak gradient,
// 2 C^2 K0. Scale-free: the resulting radius depends only on r.
double default_gradient_threshold(double agg, double fraction = 0.01);

// Smallest R past the gradient peak with zone_gradient(R) <= phi.
// Returns r when phi already covers the peak gradient (degenerate zone).
// Throws if the gradient still exceeds phi at r_max.
double zone_radius(double r, double agg, double phi, double r_max = 100.0,
                   double tol = 1e-9);

// zone_radius under the default scale-free budget.
double zone_radius_default(double r, double fraction = 0.01, double r_max = 100.0);

}  // namespace sgsim
