#pragma once

#include <utility>

#include "amalgam/function_model.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/transforms.hpp"

namespace amalgam {

// One frequency sample of the asymptotic decomposition
// f^_gamma(x) = (1/x) f(pi/(2x)) sin(pi gamma / 2) + Gamma(x).
// remainder is defined by subtraction, so the identity is exact.
struct DecompositionSample {
    double x = 0.0;
    double transform_value = 0.0;
    double main_term = 0.0;
    double remainder = 0.0;
    int gamma = 0;
};

struct RemainderEstimate {
    double x_lo = 0.0, x_hi = 0.0;
    double l1_value = 0.0;       // int over the window of |Gamma|
    double f_prime_norm = 0.0;   // ||f'||_{A_{1,2}}
    double ratio = 0.0;          // l1_value / f_prime_norm (inf sentinel if 0/+)
};

// True when f satisfies the local-absolute-continuity side conditions the
// decomposition needs (no jump where the model meets zero; a nonzero value
// at t = 0 is allowed).
bool admissible_for_decomposition(const FunctionModel& f);

double main_term(const FunctionModel& f, int gamma, double x);

DecompositionSample decompose(const FunctionModel& f, int gamma, double x);

RemainderEstimate remainder_l1(const FunctionModel& f, int gamma, double x_lo,
                               double x_hi, double tol);

// | int_0^inf int_0^{pi/(2x)} s |f'(s)| ds dx  -  (pi/2) int |f'| |,
// both sides in closed form.
double fubini_identity_defect(const FunctionModel& f);

// Two sides of the per-scale inequality: lhs is the weighted L^1 of the
// truncated complex Fourier integral over the dyadic band [2^m, 2^{m+1}],
// rhs the l2 sum of block masses at scale -m.
std::pair<double, double> bale_check(const FunctionModel& g, int m, double tol);

// L - int |f'| for the dyadic-band reduction with inner window
// [2^{-m}, pi/(2x)]; non-positive up to quadrature slack.
double tail_reduction_defect(const FunctionModel& f, int gamma);

}  // namespace amalgam
