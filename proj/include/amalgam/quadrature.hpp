#pragma once

#include <functional>
#include <span>
#include <vector>

namespace amalgam {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    bool converged = true;
};

// Globally adaptive Gauss-Kronrod (G7,K15) integration of f over [a, b].
// Interior nodes only, so integrable endpoint singularities (|log| blowups)
// are handled by refinement. split_points are honored exactly: the domain is
// partitioned there before adaptation, which is how known kinks and interior
// log singularities are isolated.
QuadratureResult adaptive_integrate(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    std::span<const double> split_points = {},
                                    int max_intervals = 400000);

// Single non-adaptive K15 panel (used for half-period slices).
double gk15_panel(const std::function<double(double)>& f, double a, double b,
                  double* error_estimate = nullptr);

}  // namespace amalgam
