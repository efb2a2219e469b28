#include "amalgam/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "amalgam/quadrature.hpp"

namespace amalgam {

namespace {

// moment int_u^v (a + b t) t^p dt
double piece_moment(const LinearPiece& p, double u, double v, int power) {
    double pu = std::pow(u, power + 1), pv = std::pow(v, power + 1);
    double acc = p.a * (pv - pu) / (power + 1);
    acc += p.b * (pv * v - pu * u) / (power + 2);
    return acc;
}

// int_u^v (a + b t) trig(x t) dt; trig = cos for the cosine kind.
double piece_trig_integral(const LinearPiece& p, double u, double v, double x,
                           bool sine) {
    if (x * std::max(std::abs(u), std::abs(v)) < 0.25) {
        // series in x: cancellation in the closed form outweighs the cost
        double acc = 0.0, xpow = sine ? x : 1.0;
        for (int k = 0; k < 24; ++k) {
            int power = sine ? 2 * k + 1 : 2 * k;
            double term = xpow * piece_moment(p, u, v, power);
            acc += (k % 2 == 0) ? term : -term;
            xpow *= x * x / ((power + 1.0) * (power + 2.0));
            if (std::abs(xpow) * std::pow(std::max(std::abs(u), std::abs(v)),
                                          power + 2) < 1e-300)
                break;
        }
        return acc;
    }
    auto prim = [&](double t) {
        double s = std::sin(x * t), c = std::cos(x * t);
        double val = p.at(t);
        if (sine) return -val * c / x + p.b * s / (x * x);
        return val * s / x + p.b * c / (x * x);
    };
    return prim(v) - prim(u);
}

std::vector<double> singular_points(const FunctionModel& g) {
    // t values where |Tg| or |Hg| has a log singularity: jumps of g
    std::vector<double> out;
    if (g.jump_at_support_start() != 0.0) out.push_back(g.support_lo());
    if (g.jump_at_support_end() != 0.0) out.push_back(g.support_hi());
    return out;
}

}  // namespace

double windowed_trig_integral(std::span<const LinearPiece> pieces, double u,
                              double v, double x, bool sine) {
    double acc = 0.0;
    for (const auto& p : pieces) {
        double lo = std::max(p.lo, u), hi = std::min(p.hi, v);
        if (lo < hi) acc += piece_trig_integral(p, lo, hi, x, sine);
    }
    return acc;
}

double fourier_transform(std::span<const LinearPiece> pieces, TransformKind kind,
                         double x) {
    if (!(x > 0.0)) throw validation_error("frequency x must be positive");
    const bool sine = (kind == TransformKind::sine);
    double acc = 0.0;
    for (const auto& p : pieces)
        acc += piece_trig_integral(p, p.lo, p.hi, x, sine);
    return acc;
}

double fourier_transform(const FunctionModel& f, TransformKind kind, double x) {
    auto ps = f.pieces();
    return fourier_transform(std::span<const LinearPiece>(ps), kind, x);
}

std::complex<double> complex_fourier_from(std::span<const LinearPiece> pieces,
                                          double x, double from) {
    using cd = std::complex<double>;
    const cd ix(0.0, x);
    cd acc(0.0, 0.0);
    for (const auto& p : pieces) {
        double u = std::max(p.lo, from), v = p.hi;
        if (!(u < v)) continue;
        // antiderivative e^{-ixt} (A + B t) of (a + b t) e^{-ixt}
        cd B = cd(p.b, 0.0) / (-ix);
        cd A = (B - cd(p.a, 0.0)) / ix;
        cd eu = std::exp(-ix * u), ev = std::exp(-ix * v);
        acc += ev * (A + B * v) - eu * (A + B * u);
    }
    return acc;
}

double pv_kernel_integral(std::span<const LinearPiece> pieces, double w_lo,
                          double w_hi, double t) {
    double acc = 0.0;
    double coef_at_t = 0.0;
    double scale = 0.0;
    const double node_eps = 1e-14 * std::max(1.0, std::abs(t));
    auto log_term = [&](double endpoint, double coef) {
        scale = std::max(scale, std::abs(coef));
        if (std::abs(t - endpoint) <= node_eps) {
            coef_at_t += coef;
            return;
        }
        acc += coef * std::log(std::abs(t - endpoint));
    };
    for (const auto& p : pieces) {
        double u = std::max(p.lo, w_lo), v = std::min(p.hi, w_hi);
        if (!(u < v)) continue;
        double w = p.at(t);  // the line through this piece, taken at s = t
        acc += -p.b * (v - u);
        log_term(u, w);
        log_term(v, -w);
    }
    // Log terms exactly at s = t cancel when g is continuous there (the PV
    // symmetric limit); a leftover coefficient is a jump of g at t.
    if (std::abs(coef_at_t) > 1e-12 * std::max(1.0, scale))
        throw std::domain_error("principal value diverges: g jumps at s = t");
    return acc;
}

double t_transform(const FunctionModel& g, double t) {
    if (!(t > 0.0)) throw validation_error("t must be positive");
    auto ps = g.pieces();
    return pv_kernel_integral(ps, 0.5 * t, 1.5 * t, t);
}

double hilbert_transform(const FunctionModel& g, double t) {
    if (!(t > 0.0)) throw validation_error("t must be positive");
    auto ps = g.pieces();
    return pv_kernel_integral(ps, 0.0, g.support_hi(), t);
}

double hilbert_transform_odd(const FunctionModel& g, double t) {
    if (!(t > 0.0)) throw validation_error("t must be positive");
    auto ps = g.pieces();
    double direct = pv_kernel_integral(ps, 0.0, g.support_hi(), t);
    // reflected part: int g(s)/(t+s) ds, no singularity for t > 0
    double refl = 0.0;
    for (const auto& p : ps) {
        // (a + b s)/(t + s) = b + (a - b t)/(t + s)
        refl += p.b * (p.hi - p.lo) +
                (p.a - p.b * t) * (std::log(t + p.hi) - std::log(t + p.lo));
    }
    return direct - refl;
}

double t_transform_l1_norm(const FunctionModel& g, double x_max, double tol) {
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
    if (g.is_zero()) return 0.0;
    if (!(x_max >= 1.5 * g.support_hi()))
        throw validation_error("x_max must reach past 1.5x the support");
    const double lo = std::max(0.0, 2.0 * g.support_lo() / 3.0);
    const double hi = std::min(x_max, 2.0 * g.support_hi());
    std::vector<double> splits;
    for (double b : g.breakpoints()) {
        splits.push_back(2.0 * b / 3.0);
        splits.push_back(b);
        splits.push_back(2.0 * b);
    }
    auto res = adaptive_integrate(
        [&](double t) { return std::abs(t_transform(g, t)); }, lo, hi, tol,
        splits);
    return res.value;
}

double hilbert_l1_truncated(const FunctionModel& g, double X, double tol) {
    if (g.is_zero()) return 0.0;
    if (!(X > g.support_hi()))
        throw validation_error("X must lie past the support");
    std::vector<double> splits(g.breakpoints());
    for (double d = 2.0 * g.support_hi(); d < X; d *= 4.0) splits.push_back(d);
    auto res = adaptive_integrate(
        [&](double t) { return std::abs(hilbert_transform(g, t)); }, 0.0, X,
        tol, splits);
    return res.value;
}

HtComparisonReport ht_comparison_defect(const FunctionModel& g, double tol) {
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
    if (!singular_points(g).empty() ||
        (g.support_lo() == 0.0 && g.values().front() != 0.0))
        throw validation_error(
            "ht_comparison_defect requires a continuous model (odd extension)");
    HtComparisonReport rep;
    auto ps = g.pieces();
    rep.g_mass = l1_norm(std::span<const LinearPiece>(ps));
    if (rep.g_mass == 0.0) return rep;
    const double tk = g.support_hi();
    const double X = 4.0 * tk;
    std::vector<double> splits;
    for (double b : g.breakpoints()) {
        splits.push_back(2.0 * b / 3.0);
        splits.push_back(b);
        splits.push_back(2.0 * b);
    }
    auto res = adaptive_integrate(
        [&](double t) {
            return std::abs(hilbert_transform_odd(g, t) - t_transform(g, t));
        },
        0.0, X, tol, splits);
    rep.window_l1 = res.value;
    rep.window_end = X;
    // for t > X: Tg = 0 and |H_odd g(t)| <= 2 tk ||g||_1 / (t^2 - tk^2)
    rep.tail_bound = rep.g_mass * std::log((X + tk) / (X - tk));
    rep.ratio = (rep.window_l1 + rep.tail_bound) / rep.g_mass;
    return rep;
}

}  // namespace amalgam
