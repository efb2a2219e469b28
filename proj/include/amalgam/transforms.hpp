#pragma once

#include <complex>

#include "amalgam/function_model.hpp"

namespace amalgam {

// gamma = 0 selects the cosine transform, gamma = 1 the sine transform.
enum class TransformKind : int { cosine = 0, sine = 1 };

inline TransformKind transform_kind(int gamma) {
    if (gamma != 0 && gamma != 1)
        throw validation_error("gamma must be 0 or 1");
    return static_cast<TransformKind>(gamma);
}

// Exact int_0^infty f(t) cos(xt - pi gamma / 2) dt via the closed-form
// antiderivative on each linear piece (power series per piece when x t is
// small enough for the closed form to cancel).
double fourier_transform(const FunctionModel& f, TransformKind kind, double x);
double fourier_transform(std::span<const LinearPiece> pieces, TransformKind kind,
                         double x);

// int over [u, v] (clipped to the support) of g(t) sin(xt) dt, or cos when
// sine is false; closed form per piece.
double windowed_trig_integral(std::span<const LinearPiece> pieces, double u,
                              double v, double x, bool sine);

// int_{max(from, support)}^{sup} g(t) e^{-ixt} dt, closed form per piece.
std::complex<double> complex_fourier_from(std::span<const LinearPiece> pieces,
                                          double x, double from);

// Cauchy principal value of int g(s)/(t-s) ds over [w_lo, w_hi] clipped to
// the support. Throws std::domain_error when g jumps at s = t (the pointwise
// value has a non-integrable log divergence there).
double pv_kernel_integral(std::span<const LinearPiece> pieces, double w_lo,
                          double w_hi, double t);

// T-transform: PV of int_{t/2}^{3t/2} g(s)/(t-s) ds.
double t_transform(const FunctionModel& g, double t);

// Half-line Hilbert transform: PV of int_0^infty g(s)/(t-s) ds.
double hilbert_transform(const FunctionModel& g, double t);

// Hilbert transform of the odd extension of g, evaluated at t > 0:
// PV int_0^infty g(s) [1/(t-s) - 1/(t+s)] ds.
double hilbert_transform_odd(const FunctionModel& g, double t);

// int_0^{x_max} |Tg(t)| dt to absolute accuracy tol.
double t_transform_l1_norm(const FunctionModel& g, double x_max, double tol);

// int_0^X |Hg(t)| dt, finite for every X although the full norm may diverge.
double hilbert_l1_truncated(const FunctionModel& g, double X, double tol = 1e-7);

struct HtComparisonReport {
    double window_l1 = 0.0;   // int_0^X |H_odd g - Tg|
    double window_end = 0.0;  // X, past every singular window
    double tail_bound = 0.0;  // analytic bound on the omitted t > X part
    double g_mass = 0.0;      // int |g|
    double ratio = 0.0;       // (window_l1 + tail_bound) / g_mass
};

// Compares the Hilbert transform (odd-extension convention) against the
// T-transform in L^1, reporting the ratio to ||g||_1. Jump models rejected.
HtComparisonReport ht_comparison_defect(const FunctionModel& g, double tol);

}  // namespace amalgam
