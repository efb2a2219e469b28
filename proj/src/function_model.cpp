#include "amalgam/function_model.hpp"

#include <algorithm>
#include <cmath>

namespace amalgam {

namespace {

void check_breakpoints(const std::vector<double>& bp, size_t nvals) {
    if (bp.size() != nvals)
        throw validation_error("breakpoints and values must have equal length");
    if (bp.size() < 2)
        throw validation_error("need at least two breakpoints");
    if (bp.front() < 0.0)
        throw validation_error("breakpoints must be non-negative");
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        if (!(bp[i] < bp[i + 1]))
            throw validation_error("breakpoints must be strictly increasing");
    }
    for (double t : bp)
        if (!std::isfinite(t)) throw validation_error("non-finite breakpoint");
}

// integral of |a + b t| over [u, v], u <= v, splitting at the zero crossing
double abs_linear_integral(double a, double b, double u, double v) {
    auto prim = [&](double lo, double hi) {
        // | a + b t | has constant sign here; integrate the signed line and flip
        double mid = 0.5 * (lo + hi);
        double s = (a + b * mid) < 0.0 ? -1.0 : 1.0;
        return s * (a * (hi - lo) + 0.5 * b * (hi * hi - lo * lo));
    };
    if (b != 0.0) {
        double z = -a / b;
        if (z > u && z < v) return prim(u, z) + prim(z, v);
    }
    return prim(u, v);
}

}  // namespace

FunctionModel::FunctionModel(std::vector<double> breakpoints, std::vector<double> values)
    : bp_(std::move(breakpoints)), val_(std::move(values)) {
    check_breakpoints(bp_, val_.size());
    for (double v : val_)
        if (!std::isfinite(v)) throw validation_error("non-finite value");
}

double FunctionModel::evaluate(double t) const {
    if (t < bp_.front() || t > bp_.back()) return 0.0;
    auto it = std::upper_bound(bp_.begin(), bp_.end(), t);
    if (it == bp_.end()) return val_.back();
    size_t k = static_cast<size_t>(it - bp_.begin());
    if (k == 0) return val_.front();
    double u = bp_[k - 1], v = bp_[k];
    double w = (t - u) / (v - u);
    return val_[k - 1] + w * (val_[k] - val_[k - 1]);
}

bool FunctionModel::is_zero() const {
    return std::all_of(val_.begin(), val_.end(), [](double v) { return v == 0.0; });
}

std::vector<LinearPiece> FunctionModel::pieces() const {
    std::vector<LinearPiece> out;
    out.reserve(bp_.size() - 1);
    for (size_t k = 0; k + 1 < bp_.size(); ++k) {
        double u = bp_[k], v = bp_[k + 1];
        double b = (val_[k + 1] - val_[k]) / (v - u);
        double a = val_[k] - b * u;
        out.push_back({u, v, a, b});
    }
    return out;
}

PiecewiseConstant::PiecewiseConstant(std::vector<double> breakpoints,
                                     std::vector<double> interval_values)
    : bp_(std::move(breakpoints)), c_(std::move(interval_values)) {
    check_breakpoints(bp_, c_.size() + 1);
}

double PiecewiseConstant::evaluate(double t) const {
    if (t < bp_.front() || t >= bp_.back()) return 0.0;
    auto it = std::upper_bound(bp_.begin(), bp_.end(), t);
    size_t k = static_cast<size_t>(it - bp_.begin());
    if (k == 0) return c_.front();
    return c_[std::min(k - 1, c_.size() - 1)];
}

std::vector<LinearPiece> PiecewiseConstant::pieces() const {
    std::vector<LinearPiece> out;
    out.reserve(c_.size());
    for (size_t k = 0; k < c_.size(); ++k)
        out.push_back({bp_[k], bp_[k + 1], c_[k], 0.0});
    return out;
}

FunctionModel make_piecewise_linear(std::vector<double> breakpoints,
                                    std::vector<double> values) {
    return FunctionModel(std::move(breakpoints), std::move(values));
}

PiecewiseConstant derivative(const FunctionModel& f) {
    const auto& bp = f.breakpoints();
    const auto& v = f.values();
    std::vector<double> slopes(bp.size() - 1);
    for (size_t k = 0; k + 1 < bp.size(); ++k)
        slopes[k] = (v[k + 1] - v[k]) / (bp[k + 1] - bp[k]);
    return PiecewiseConstant(bp, slopes);
}

double total_variation(const FunctionModel& f) {
    const auto& v = f.values();
    double tv = std::abs(v.front()) + std::abs(v.back());
    for (size_t k = 0; k + 1 < v.size(); ++k) tv += std::abs(v[k + 1] - v[k]);
    return tv;
}

double abs_integral(std::span<const LinearPiece> pieces, double a, double b) {
    if (a > b) throw validation_error("abs_integral: a > b");
    double acc = 0.0;
    for (const auto& p : pieces) {
        double u = std::max(a, p.lo), v = std::min(b, p.hi);
        if (u < v) acc += abs_linear_integral(p.a, p.b, u, v);
    }
    return acc;
}

double abs_integral(const FunctionModel& f, double a, double b) {
    auto ps = f.pieces();
    return abs_integral(std::span<const LinearPiece>(ps), a, b);
}

double abs_integral(const PiecewiseConstant& f, double a, double b) {
    auto ps = f.pieces();
    return abs_integral(std::span<const LinearPiece>(ps), a, b);
}

double l1_norm(std::span<const LinearPiece> pieces) {
    double acc = 0.0;
    for (const auto& p : pieces) acc += abs_linear_integral(p.a, p.b, p.lo, p.hi);
    return acc;
}

double sup_abs(std::span<const LinearPiece> pieces) {
    double m = 0.0;
    for (const auto& p : pieces) {
        m = std::max(m, std::abs(p.at(p.lo)));
        m = std::max(m, std::abs(p.at(p.hi)));
    }
    return m;
}

double integral(std::span<const LinearPiece> pieces) {
    double acc = 0.0;
    for (const auto& p : pieces)
        acc += p.a * (p.hi - p.lo) + 0.5 * p.b * (p.hi * p.hi - p.lo * p.lo);
    return acc;
}

FunctionModel dyadic_dilate(const FunctionModel& g, int m) {
    double s = std::ldexp(1.0, m);
    std::vector<double> bp = g.breakpoints();
    std::vector<double> val = g.values();
    for (auto& t : bp) t /= s;
    for (auto& v : val) v *= s;
    return FunctionModel(std::move(bp), std::move(val));
}

std::vector<LinearPiece> abs_segments(std::span<const LinearPiece> pieces) {
    std::vector<LinearPiece> out;
    out.reserve(pieces.size());
    for (const auto& p : pieces) {
        auto push = [&](double u, double v) {
            if (!(u < v)) return;
            double mid = 0.5 * (u + v);
            double s = (p.at(mid) < 0.0) ? -1.0 : 1.0;
            out.push_back({u, v, s * p.a, s * p.b});
        };
        if (p.b != 0.0) {
            double z = -p.a / p.b;
            if (z > p.lo && z < p.hi) {
                push(p.lo, z);
                push(z, p.hi);
                continue;
            }
        }
        push(p.lo, p.hi);
    }
    return out;
}

}  // namespace amalgam
