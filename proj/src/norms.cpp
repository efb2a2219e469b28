#include "amalgam/norms.hpp"

#include <algorithm>
#include <cmath>

namespace amalgam {

namespace {

constexpr double kGeomTailFactor = 3.4142135623730951;  // 1/(1 - 2^{-1/2})

// Largest m with 2^m strictly below the support end.
int top_scale(double hi) {
    int m = static_cast<int>(std::floor(std::log2(hi))) + 1;
    while (std::ldexp(1.0, m) >= hi) --m;
    return m;
}

struct ScaleSummary {
    double value = 0.0;
    std::vector<std::pair<int, double>> per_scale;
    std::int64_t block_cap = 0;
};

NormReport assemble(int m_lo, int m_hi, double tail,
                    const std::vector<double>& s,
                    const std::vector<std::int64_t>& caps) {
    NormReport rep;
    rep.m_lo = m_lo;
    rep.m_hi = m_hi;
    rep.tail_bound = tail;
    double acc = 0.0;
    for (int m = m_hi; m >= m_lo; --m) {
        size_t i = static_cast<size_t>(m_hi - m);
        acc += s[i];
        rep.per_scale.emplace_back(m, s[i]);
        rep.block_cap = std::max(rep.block_cap, caps[i]);
    }
    rep.value = acc;
    return rep;
}

}  // namespace

NormReport sequence_amalgam_norm_report(const CoefficientSequence& d) {
    NormReport rep;
    rep.value = 0.0;
    const std::int64_t n_max = static_cast<std::int64_t>(d.entries.size());
    int m_top = 0;
    while ((std::int64_t(1) << (m_top + 1)) <= n_max) ++m_top;
    rep.m_lo = 0;
    rep.m_hi = m_top;
    for (int m = m_top; m >= 0; --m) {
        const std::int64_t w = std::int64_t(1) << m;
        double s2 = 0.0;
        std::int64_t j = 1;
        for (; j * w <= n_max; ++j) {
            double block = 0.0;
            std::int64_t n1 = std::min((j + 1) * w - 1, n_max);
            for (std::int64_t n = j * w; n <= n1; ++n)
                block += std::abs(d.at(static_cast<size_t>(n)));
            s2 += block * block;
        }
        rep.block_cap = std::max(rep.block_cap, j - 1);
        rep.per_scale.emplace_back(m, std::sqrt(s2));
    }
    for (const auto& [m, s] : rep.per_scale) rep.value += s;
    return rep;
}

double sequence_amalgam_norm(const CoefficientSequence& d) {
    if (d.entries.empty()) throw validation_error("empty sequence");
    return sequence_amalgam_norm_report(d).value;
}

double block_integral(const FunctionModel& g, int m, std::int64_t j) {
    if (j < 1) throw validation_error("block index j must be >= 1");
    double h = std::ldexp(1.0, m);
    return abs_integral(g, double(j) * h, double(j + 1) * h);
}

double block_integral(const PiecewiseConstant& g, int m, std::int64_t j) {
    if (j < 1) throw validation_error("block index j must be >= 1");
    double h = std::ldexp(1.0, m);
    return abs_integral(g, double(j) * h, double(j + 1) * h);
}

double scale_contribution(std::span<const LinearPiece> segs, int m,
                          std::int64_t* block_cap) {
    if (segs.empty()) return 0.0;
    const double h = std::ldexp(1.0, m);
    const double lo = segs.front().lo, hi = segs.back().hi;
    if (h >= hi) {
        if (block_cap) *block_cap = 0;
        return 0.0;
    }
    const double jmin = std::max(1.0, std::floor(lo / h));
    const double jmax = std::ceil(hi / h) - 1.0;
    if (block_cap)
        *block_cap = static_cast<std::int64_t>(std::min(jmax, 9.0e18));
    double s2 = 0.0;
    if (jmax - jmin < 4096.0) {
        for (std::int64_t j = static_cast<std::int64_t>(jmin);
             j <= static_cast<std::int64_t>(jmax); ++j) {
            double bi = abs_integral(segs, double(j) * h, double(j + 1) * h);
            s2 += bi * bi;
        }
        return std::sqrt(s2);
    }
    // Fine scales: blocks vastly outnumber segments. Blocks fully inside one
    // sign-definite segment have integral h * |g|(midpoint); their squared sum
    // is a closed form over the arithmetic progression of midpoints. Only the
    // few blocks containing a segment boundary are integrated individually.
    for (const auto& seg : segs) {
        double j0 = std::max(1.0, std::ceil(seg.lo / h));
        double j1 = std::floor(seg.hi / h) - 1.0;
        if (j1 < j0) continue;
        double n = j1 - j0 + 1.0;
        double u = seg.a + seg.b * ((j0 + 0.5) * h);  // |g| at first midpoint
        double d = seg.b * h;                          // midpoint-to-midpoint step
        double sumsq = n * u * u + u * d * n * (n - 1.0) +
                       d * d * (n - 1.0) * n * (2.0 * n - 1.0) / 6.0;
        s2 += h * h * sumsq;
    }
    std::vector<double> specials;
    auto add_boundary = [&](double s) {
        double j = std::floor(s / h);
        if (j < 1.0) return;
        if (j * h < s && s < (j + 1.0) * h) specials.push_back(j);
    };
    for (const auto& seg : segs) {
        add_boundary(seg.lo);
        add_boundary(seg.hi);
    }
    std::sort(specials.begin(), specials.end());
    specials.erase(std::unique(specials.begin(), specials.end()), specials.end());
    for (double j : specials) {
        double bi = abs_integral(segs, j * h, (j + 1.0) * h);
        s2 += bi * bi;
    }
    return std::sqrt(s2);
}

NormReport function_amalgam_norm_serial(std::span<const LinearPiece> pieces,
                                        double tol) {
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
    auto segs = abs_segments(pieces);
    const double mass = l1_norm(pieces);
    if (segs.empty() || mass == 0.0) {
        if (pieces.empty()) throw validation_error("empty support");
        return NormReport{};
    }
    const double cbound = std::sqrt(sup_abs(pieces) * mass);
    const int m_hi = top_scale(segs.back().hi);
    int m_lo = m_hi;
    while (m_lo > -1060 &&
           cbound * kGeomTailFactor * std::exp2(0.5 * (m_lo - 1)) >= tol)
        --m_lo;
    const size_t n = static_cast<size_t>(m_hi - m_lo + 1);
    std::vector<double> s(n);
    std::vector<std::int64_t> caps(n);
    for (size_t i = 0; i < n; ++i)
        s[i] = scale_contribution(segs, m_hi - static_cast<int>(i), &caps[i]);
    double tail = cbound * kGeomTailFactor * std::exp2(0.5 * (m_lo - 1));
    return assemble(m_lo, m_hi, tail, s, caps);
}

NormReport function_amalgam_norm(std::span<const LinearPiece> pieces, double tol) {
    if (!(tol > 0.0)) throw validation_error("tolerance must be positive");
    auto segs = abs_segments(pieces);
    const double mass = l1_norm(pieces);
    if (segs.empty() || mass == 0.0) {
        if (pieces.empty()) throw validation_error("empty support");
        return NormReport{};
    }
    const double cbound = std::sqrt(sup_abs(pieces) * mass);
    const int m_hi = top_scale(segs.back().hi);
    int m_lo = m_hi;
    while (m_lo > -1060 &&
           cbound * kGeomTailFactor * std::exp2(0.5 * (m_lo - 1)) >= tol)
        --m_lo;
    const size_t n = static_cast<size_t>(m_hi - m_lo + 1);
    std::vector<double> s(n);
    std::vector<std::int64_t> caps(n);
    // independent scales; summed afterwards in fixed m order so the result
    // does not depend on the worker count
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i)
        s[i] = scale_contribution(segs, m_hi - static_cast<int>(i),
                                  &caps[static_cast<size_t>(i)]);
    double tail = cbound * kGeomTailFactor * std::exp2(0.5 * (m_lo - 1));
    return assemble(m_lo, m_hi, tail, s, caps);
}

NormReport function_amalgam_norm(const FunctionModel& g, double tol) {
    auto ps = g.pieces();
    return function_amalgam_norm(std::span<const LinearPiece>(ps), tol);
}

NormReport function_amalgam_norm(const PiecewiseConstant& g, double tol) {
    auto ps = g.pieces();
    return function_amalgam_norm(std::span<const LinearPiece>(ps), tol);
}

double wiener_amalgam_norm(const FunctionModel& g) {
    auto ps = g.pieces();
    std::span<const LinearPiece> pieces(ps);
    double s2 = 0.0;
    for (std::int64_t j = 1; double(j) < g.support_hi(); ++j) {
        double bi = abs_integral(pieces, double(j), double(j + 1));
        s2 += bi * bi;
    }
    return std::sqrt(s2);
}

double rescaled_norm_identity_defect(const FunctionModel& g, int m_lo, int m_hi) {
    if (m_lo > m_hi) throw validation_error("empty scale window");
    double lhs = 0.0;
    for (int m = m_hi; m >= m_lo; --m)
        lhs += wiener_amalgam_norm(dyadic_dilate(g, m));
    auto ps = g.pieces();
    auto segs = abs_segments(std::span<const LinearPiece>(ps));
    double rhs = 0.0;
    for (int m = m_hi; m >= m_lo; --m) rhs += scale_contribution(segs, m);
    return std::abs(lhs - rhs);
}

double embedding_ratio(const FunctionModel& g) {
    auto ps = g.pieces();
    double mass = l1_norm(std::span<const LinearPiece>(ps));
    if (mass == 0.0) throw validation_error("embedding ratio undefined for zero function");
    auto rep = function_amalgam_norm(g, 1e-8 * mass);
    return mass / rep.value;
}

}  // namespace amalgam
