#pragma once

#include <stdexcept>

namespace amalgam {

struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// int_0^infty sin(c x)/x dx = (pi/2) sgn(c), evaluated by half-period
// partition of the oscillation and Euler acceleration of the resulting
// alternating series. Throws convergence_error past the half-period cap.
double sine_integral_infinite(double c, double tol);

// int_0^infty sin(a x) cos(y x) / x dx for a > 0, y >= 0: pi/2 for y < a,
// 0 for y > a, and the convention pi/4 at y = a (returned directly).
double dirichlet_integral(double a, double y, double tol);

}  // namespace amalgam
