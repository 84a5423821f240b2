#pragma once

#include <functional>

namespace sgsim {

// Inverse complementary error function on (0, 2).
// Newton iterations on std::erfc from a rational initial guess;
// accurate to ~1e-15 over the full domain.
double erfc_inv(double y);

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10);

}  // namespace sgsim
