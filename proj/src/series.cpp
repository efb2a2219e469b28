#include "amalgam/series.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "amalgam/quadrature.hpp"
#include "amalgam/transforms.hpp"

namespace amalgam {

namespace {
constexpr double kPi = std::numbers::pi;
}

FunctionModel interpolate(const CoefficientSequence& c) {
    if (c.entries.empty()) throw validation_error("empty sequence");
    const size_t n = c.entries.size();
    std::vector<double> bp(n + 2), val(n + 2);
    for (size_t i = 0; i < n + 2; ++i) bp[i] = static_cast<double>(i);
    val[0] = 0.0;
    for (size_t i = 0; i < n; ++i) val[i + 1] = c.entries[i];
    val[n + 1] = 0.0;
    return FunctionModel(std::move(bp), std::move(val));
}

CoefficientSequence difference_sequence(const CoefficientSequence& c) {
    CoefficientSequence d;
    d.entries.resize(c.entries.size());
    for (size_t n = 1; n <= c.entries.size(); ++n)
        d.entries[n - 1] = c.at(n) - c.at(n + 1);
    return d;
}

double partial_sum(const CoefficientSequence& c, SeriesKind kind, double x,
                   size_t n_terms) {
    if (n_terms < 1 || n_terms > c.entries.size())
        throw validation_error("partial sum length out of range");
    double sum = 0.0, comp = 0.0;  // Kahan
    for (size_t n = 1; n <= n_terms; ++n) {
        double term = c.at(n) * (kind == SeriesKind::sine ? std::sin(n * x)
                                                          : std::cos(n * x));
        double y = term - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double condsin_sum(const CoefficientSequence& b) {
    double sum = 0.0, comp = 0.0;
    for (size_t n = 1; n <= b.entries.size(); ++n) {
        double y = std::abs(b.at(n)) / static_cast<double>(n) - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

RemainderEstimate sine_asymptotic_check(const CoefficientSequence& b, int grid,
                                        double tol) {
    if (grid < 16) throw validation_error("grid must have at least 16 panels");
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
    const size_t n = b.entries.size();
    if (n == 0) throw validation_error("empty sequence");
    FunctionModel interp = interpolate(b);

    RemainderEstimate est;
    est.x_lo = kPi / (2.0 * static_cast<double>(n));
    est.x_hi = kPi;
    std::vector<double> splits;
    for (size_t k = 1; k <= n + 1; ++k)
        splits.push_back(kPi / (2.0 * static_cast<double>(k)));  // kinks of B(pi/2x)
    for (int i = 1; i < grid; ++i)
        splits.push_back(est.x_lo + (est.x_hi - est.x_lo) * i / grid);
    auto res = adaptive_integrate(
        [&](double x) {
            double series = partial_sum(b, SeriesKind::sine, x, n);
            double main = interp.evaluate(kPi / (2.0 * x)) / x;
            return std::abs(series - main);
        },
        est.x_lo, est.x_hi, tol, splits);
    est.l1_value = res.value;
    est.f_prime_norm = sequence_amalgam_norm(difference_sequence(b));
    est.ratio = est.f_prime_norm > 0.0 ? est.l1_value / est.f_prime_norm : 0.0;
    return est;
}

std::pair<double, double> condsin_equivalence_ratio(const CoefficientSequence& b,
                                                    size_t n_limit) {
    if (n_limit < 1 || n_limit > b.entries.size())
        throw validation_error("N out of range");
    double sum = 0.0;
    for (size_t n = 1; n <= n_limit; ++n)
        sum += std::abs(b.at(n)) / static_cast<double>(n);
    if (sum == 0.0) throw validation_error("sum is zero on [1, N]");

    // int_1^N (1/x)|B(pi/(2x))| dx = int_{pi/(2N)}^{pi/2} |B(t)|/t dt, exact
    // per sign-definite segment: int (a+bt)/t dt = a ln t + b t.
    const double lo = kPi / (2.0 * static_cast<double>(n_limit));
    const double hi = kPi / 2.0;
    auto ps = interpolate(b).pieces();
    auto segs = abs_segments(std::span<const LinearPiece>(ps));
    double integral_value = 0.0;
    for (const auto& s : segs) {
        double u = std::max(s.lo, lo), v = std::min(s.hi, hi);
        if (!(u < v)) continue;
        integral_value += s.a * std::log(v / u) + s.b * (v - u);
    }
    return {integral_value / sum, sum / integral_value};
}

std::pair<double, double> trigub_discrepancy(const FunctionModel& phi, int grid) {
    if (grid < 64) throw validation_error("grid must have at least 64 points");
    auto ps = phi.pieces();
    std::span<const LinearPiece> pieces(ps);
    const int k_max = static_cast<int>(std::floor(phi.support_hi()));

    std::vector<double> xs;
    xs.reserve(grid + 14);
    for (int i = 1; i <= grid; ++i) xs.push_back(kPi * i / grid);
    for (int i = 1; i <= 14; ++i) xs.push_back(kPi * std::ldexp(1.0, -i));

    std::vector<double> defects(xs.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(xs.size()); ++i) {
        double x = xs[static_cast<size_t>(i)];
        std::complex<double> integral_side(
            fourier_transform(pieces, TransformKind::cosine, x),
            -fourier_transform(pieces, TransformKind::sine, x));
        std::complex<double> sum_side(0.0, 0.0);
        for (int k = 0; k <= k_max; ++k)
            sum_side += phi.evaluate(k) *
                        std::complex<double>(std::cos(k * x), -std::sin(k * x));
        defects[static_cast<size_t>(i)] = std::abs(integral_side - sum_side);
    }
    double sup = 0.0;
    for (double d : defects) sup = std::max(sup, d);
    return {sup, total_variation(phi)};
}

}  // namespace amalgam
