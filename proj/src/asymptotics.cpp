#include "amalgam/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "amalgam/quadrature.hpp"

namespace amalgam {

namespace {

constexpr double kPi = std::numbers::pi;

void require_gamma(int gamma) {
    if (gamma != 0 && gamma != 1) throw validation_error("gamma must be 0 or 1");
}

void require_admissible(const FunctionModel& f) {
    if (!admissible_for_decomposition(f))
        throw std::domain_error(
            "model has a jump at a support edge; the decomposition requires a "
            "locally absolutely continuous function");
}

}  // namespace

bool admissible_for_decomposition(const FunctionModel& f) {
    return f.continuous_on_half_line();
}

double main_term(const FunctionModel& f, int gamma, double x) {
    require_gamma(gamma);
    if (!(x > 0.0)) throw validation_error("x must be positive");
    if (gamma == 0) return 0.0;
    return f.evaluate(kPi / (2.0 * x)) / x;
}

DecompositionSample decompose(const FunctionModel& f, int gamma, double x) {
    require_gamma(gamma);
    if (!(x > 0.0)) throw validation_error("x must be positive");
    require_admissible(f);
    DecompositionSample s;
    s.x = x;
    s.gamma = gamma;
    s.transform_value = fourier_transform(f, transform_kind(gamma), x);
    s.main_term = main_term(f, gamma, x);
    s.remainder = s.transform_value - s.main_term;
    return s;
}

RemainderEstimate remainder_l1(const FunctionModel& f, int gamma, double x_lo,
                               double x_hi, double tol) {
    require_gamma(gamma);
    if (!(0.0 < x_lo && x_lo < x_hi)) throw validation_error("bad window");
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
    require_admissible(f);

    RemainderEstimate est;
    est.x_lo = x_lo;
    est.x_hi = x_hi;

    auto ps = f.pieces();
    std::span<const LinearPiece> pieces(ps);
    const TransformKind kind = transform_kind(gamma);
    std::vector<double> splits;
    for (double b : f.breakpoints())
        if (b > 0.0) splits.push_back(kPi / (2.0 * b));  // kinks of the main term
    for (double d = x_lo * 4.0; d < x_hi; d *= 4.0) splits.push_back(d);

    auto gamma_abs = [&](double x) {
        double v = fourier_transform(pieces, kind, x);
        if (gamma == 1) v -= f.evaluate(kPi / (2.0 * x)) / x;
        return std::abs(v);
    };
    auto res = adaptive_integrate(gamma_abs, x_lo, x_hi, tol, splits);
    est.l1_value = res.value;

    auto dps = derivative(f).pieces();
    double mass = l1_norm(std::span<const LinearPiece>(dps));
    if (mass == 0.0) {
        est.f_prime_norm = 0.0;
        est.ratio = est.l1_value > 10.0 * tol
                        ? std::numeric_limits<double>::infinity()
                        : 0.0;
        return est;
    }
    est.f_prime_norm =
        function_amalgam_norm(std::span<const LinearPiece>(dps), 1e-9 * mass)
            .value;
    est.ratio = est.l1_value / est.f_prime_norm;
    return est;
}

double fubini_identity_defect(const FunctionModel& f) {
    // Both sides reduce in closed form: substituting u = pi/(2x) turns the
    // left side into (pi/2) int_0^inf h(u)/u^2 du with h(u) = int_0^u s|f'|.
    auto dps = derivative(f).pieces();
    double lhs = 0.0, h = 0.0, mass = 0.0;
    for (const auto& p : dps) {
        double c = std::abs(p.a);  // |f'| constant on the piece
        double ppos = p.lo, q = p.hi;
        if (ppos > 0.0)
            lhs += (h - 0.5 * c * ppos * ppos) * (1.0 / ppos - 1.0 / q);
        lhs += 0.5 * c * (q - ppos);
        h += 0.5 * c * (q * q - ppos * ppos);
        mass += c * (q - ppos);
    }
    double hi = dps.empty() ? 0.0 : dps.back().hi;
    if (hi > 0.0) lhs += h / hi;  // constant h beyond the support
    lhs *= 0.5 * kPi;
    double rhs = 0.5 * kPi * mass;
    return std::abs(lhs - rhs);
}

std::pair<double, double> bale_check(const FunctionModel& g, int m, double tol) {
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
    auto ps = g.pieces();
    std::span<const LinearPiece> pieces(ps);
    const double cut = std::ldexp(1.0, -m);
    const double x0 = std::ldexp(1.0, m), x1 = std::ldexp(1.0, m + 1);
    auto res = adaptive_integrate(
        [&](double x) {
            return std::abs(complex_fourier_from(pieces, x, cut)) / x;
        },
        x0, x1, tol);
    auto segs = abs_segments(pieces);
    double rhs = scale_contribution(segs, -m);
    return {res.value, rhs};
}

double tail_reduction_defect(const FunctionModel& f, int gamma) {
    require_gamma(gamma);
    auto dps = derivative(f).pieces();
    std::span<const LinearPiece> pieces(dps);
    double mass = l1_norm(pieces);
    if (mass == 0.0) return 0.0;
    const double t_hi = f.support_hi();
    const double sup = sup_abs(pieces);

    // inner window [2^{-m}, pi/(2x)] is nonempty only for x < pi 2^{m-1};
    // its reach shrinks like 2^{-m}, so large m contribute geometrically less
    int m_min = static_cast<int>(std::ceil(-std::log2(t_hi)));
    double total = 0.0;
    const bool sine = (gamma == 0);  // sin(xt - pi gamma/2) = sin or -cos
    for (int m = m_min; m < m_min + 80; ++m) {
        double cut = std::ldexp(1.0, -m);
        double band_hi = kPi * std::ldexp(1.0, m - 1);
        double band_lo = std::ldexp(1.0, m);
        if (band_hi <= band_lo) continue;
        double bound = sup * kPi * cut * 0.5 * std::log(band_hi / band_lo);
        if (bound < 1e-13 && m > m_min + 4) break;
        auto res = adaptive_integrate(
            [&](double x) {
                double upper = kPi / (2.0 * x);
                if (upper <= cut) return 0.0;
                double inner = windowed_trig_integral(pieces, cut, upper,
                                                      x, sine);
                return std::abs(inner) / x;
            },
            band_lo, band_hi, 1e-9);
        total += res.value;
    }
    return total - mass;
}

}  // namespace amalgam
