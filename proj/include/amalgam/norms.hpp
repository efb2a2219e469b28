#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "amalgam/function_model.hpp"

namespace amalgam {

// Finitely supported real sequence {a_n}, n = 1..N. Index 0 is reserved
// (a_0 = 0 convention for cosine series); entries beyond N are treated as 0.
struct CoefficientSequence {
    std::vector<double> entries;  // entries[i] holds a_{i+1}

    size_t size() const { return entries.size(); }
    // 1-based access, zero outside 1..N
    double at(size_t n) const {
        return (n >= 1 && n <= entries.size()) ? entries[n - 1] : 0.0;
    }
};

// A computed norm value together with the dyadic window actually summed,
// the per-scale contributions and a certified bound on the omitted tail.
// value is a lower bound for the true norm, value + tail_bound an upper bound.
struct NormReport {
    double value = 0.0;
    int m_lo = 0, m_hi = 0;
    std::vector<std::pair<int, double>> per_scale;  // (m, S_m), descending m
    double tail_bound = 0.0;
    std::int64_t block_cap = 0;  // max j index enumerated at any scale
};

// Discrete amalgam norm: sum over m >= 0 of the l2 norm of block sums of
// |d_n| over [j 2^m, (j+1) 2^m - 1], j >= 1. Exact for finite sequences.
double sequence_amalgam_norm(const CoefficientSequence& d);

// Same computation with the per-scale breakdown (exact, tail_bound 0).
NormReport sequence_amalgam_norm_report(const CoefficientSequence& d);

// Exact integral of |g| over the dyadic block [j 2^m, (j+1) 2^m].
double block_integral(const FunctionModel& g, int m, std::int64_t j);
double block_integral(const PiecewiseConstant& g, int m, std::int64_t j);

// Per-scale contribution S_m = { sum_j [ block integral ]^2 }^{1/2}, exact
// at every scale (closed-form batching once blocks outnumber segments).
double scale_contribution(std::span<const LinearPiece> abs_segs, int m,
                          std::int64_t* block_cap = nullptr);

// Bilateral dyadic norm sum_m S_m. Scales above the support contribute 0
// exactly; the m -> -inf tail is cut by the certified geometric bound
// S_m <= sqrt(2^m sup|g| ||g||_1) once the remaining tail is below tol.
NormReport function_amalgam_norm(const FunctionModel& g, double tol);
NormReport function_amalgam_norm(const PiecewiseConstant& g, double tol);
NormReport function_amalgam_norm(std::span<const LinearPiece> pieces, double tol);

// Serial reference of the same computation (no OpenMP), kept for testing;
// results are bit-identical to the parallel path.
NormReport function_amalgam_norm_serial(std::span<const LinearPiece> pieces, double tol);

// Wiener amalgam W(L^1, l^2) norm: { sum_{j>=1} [ int_j^{j+1} |g| ]^2 }^{1/2}.
double wiener_amalgam_norm(const FunctionModel& g);

// | sum_{m in [m_lo, m_hi]} ||2^m g(2^m .)||_W  -  (same-window part of the
// dyadic norm) |, both sides built independently.
double rescaled_norm_identity_defect(const FunctionModel& g, int m_lo, int m_hi);

// int |g| / ||g||_{A_{1,2}}, certified to about 1e-6.
double embedding_ratio(const FunctionModel& g);

// Upper bound for the embedding ratio assembled from the proof chain:
// 3 ln2 sqrt(pi^2/6) / ln(3/2).
inline constexpr double kEmbeddingConstant = 6.5776002491477922;

}  // namespace amalgam
