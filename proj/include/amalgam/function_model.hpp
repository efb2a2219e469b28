#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace amalgam {

// One linear segment a + b*t on [lo, hi].
struct LinearPiece {
    double lo = 0, hi = 0, a = 0, b = 0;
    double at(double t) const { return a + b * t; }
    double length() const { return hi - lo; }
};

struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Compactly supported piecewise-linear function on [0, inf).
// Linear between consecutive breakpoints, identically zero outside
// [t0, tK]. Nonzero boundary values are allowed and represent jumps
// at the support edges (indicator-like models).
class FunctionModel {
public:
    FunctionModel() = default;
    FunctionModel(std::vector<double> breakpoints, std::vector<double> values);

    double evaluate(double t) const;
    double operator()(double t) const { return evaluate(t); }

    const std::vector<double>& breakpoints() const { return bp_; }
    const std::vector<double>& values() const { return val_; }
    double support_lo() const { return bp_.front(); }
    double support_hi() const { return bp_.back(); }
    bool is_zero() const;

    // Jump sizes seen from inside [0, inf).
    double jump_at_support_start() const {
        return (bp_.front() > 0.0) ? val_.front() : 0.0;
    }
    double jump_at_support_end() const { return val_.back(); }

    // Continuous as a function on the half line: no jump where the model
    // meets zero. A nonzero value at t0 = 0 is not a jump on [0, inf).
    bool continuous_on_half_line() const {
        return jump_at_support_start() == 0.0 && jump_at_support_end() == 0.0;
    }

    std::vector<LinearPiece> pieces() const;

private:
    std::vector<double> bp_{0.0, 1.0};
    std::vector<double> val_{0.0, 0.0};
};

// Piecewise-constant function: one slope value per interval, zero outside
// [t0, tK]. The result of differentiating a FunctionModel piece by piece
// (boundary jumps of the source are not represented here).
class PiecewiseConstant {
public:
    PiecewiseConstant() = default;
    PiecewiseConstant(std::vector<double> breakpoints, std::vector<double> interval_values);

    double evaluate(double t) const;
    const std::vector<double>& breakpoints() const { return bp_; }
    const std::vector<double>& interval_values() const { return c_; }
    double support_lo() const { return bp_.front(); }
    double support_hi() const { return bp_.back(); }

    std::vector<LinearPiece> pieces() const;

private:
    std::vector<double> bp_{0.0, 1.0};
    std::vector<double> c_{0.0};
};

FunctionModel make_piecewise_linear(std::vector<double> breakpoints,
                                    std::vector<double> values);

PiecewiseConstant derivative(const FunctionModel& f);

// Sum of |slope|*length over the pieces plus the edge jumps |v0| + |vK|.
double total_variation(const FunctionModel& f);

// Exact integral of |f| over [a, b], pieces split at sign changes.
double abs_integral(std::span<const LinearPiece> pieces, double a, double b);
double abs_integral(const FunctionModel& f, double a, double b);
double abs_integral(const PiecewiseConstant& f, double a, double b);

double l1_norm(std::span<const LinearPiece> pieces);
double sup_abs(std::span<const LinearPiece> pieces);

// Exact signed integral of f over the whole support.
double integral(std::span<const LinearPiece> pieces);

// The dilate 2^m * g(2^m t): breakpoints scaled by 2^-m, values by 2^m.
FunctionModel dyadic_dilate(const FunctionModel& g, int m);

// Sign-definite segments of |f|: each returned piece satisfies
// a + b*t >= 0 on [lo, hi] and equals |f| there. Covers the support.
std::vector<LinearPiece> abs_segments(std::span<const LinearPiece> pieces);

}  // namespace amalgam
