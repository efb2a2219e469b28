#pragma once

#include <utility>

#include "amalgam/asymptotics.hpp"
#include "amalgam/function_model.hpp"
#include "amalgam/norms.hpp"

namespace amalgam {

enum class SeriesKind { cosine, sine };

// Linear interpolation of the coefficients: breakpoints 0, 1, ..., N+1 with
// values 0, c_1, ..., c_N, 0 (a_0 = 0 convention, zero beyond N+1).
FunctionModel interpolate(const CoefficientSequence& c);

// (Delta c)_n = c_n - c_{n+1}, n = 1..N, with c_{N+1} = 0.
CoefficientSequence difference_sequence(const CoefficientSequence& c);

// sum_{n=1}^{N} c_n trig(nx), compensated summation; the cosine a_0/2 term
// is 0 by convention.
double partial_sum(const CoefficientSequence& c, SeriesKind kind, double x,
                   size_t n_terms);

// sum |b_n| / n
double condsin_sum(const CoefficientSequence& b);

// Integrates |Gamma(x)| = |sum b_n sin(nx) - (1/x) B(pi/(2x))| over
// [pi/(2N), pi] and reports the ratio against ||{Delta b}||_{a_{1,2}}.
RemainderEstimate sine_asymptotic_check(const CoefficientSequence& b,
                                        int grid, double tol);

// Mutual domination constants between int_1^N (1/x)|B(pi/(2x))| dx (exact,
// closed form) and sum_{n<=N} |b_n|/n: returns (I/S, S/I).
std::pair<double, double> condsin_equivalence_ratio(const CoefficientSequence& b,
                                                    size_t n_limit);

// sup over a grid on (0, pi] (refined geometrically near 0) of the gap
// between the Fourier integral of phi and its integer sample sum, paired
// with ||phi||_BV.
std::pair<double, double> trigub_discrepancy(const FunctionModel& phi, int grid);

}  // namespace amalgam
