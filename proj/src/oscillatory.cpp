#include "amalgam/oscillatory.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "amalgam/quadrature.hpp"

namespace amalgam {

namespace {

// Euler transformation of an alternating series, terms fed one at a time.
class EulerAccumulator {
public:
    double add(double term) {
        if (wksp_.empty()) {
            wksp_.push_back(term);
            sum_ = 0.5 * term;
            return sum_;
        }
        double tmp = wksp_[0];
        wksp_[0] = term;
        for (size_t j = 0; j + 1 < wksp_.size(); ++j) {
            double dum = wksp_[j + 1];
            wksp_[j + 1] = 0.5 * (wksp_[j] + tmp);
            tmp = dum;
        }
        double next = 0.5 * (wksp_.back() + tmp);
        if (std::abs(next) <= std::abs(wksp_.back())) {
            wksp_.push_back(next);
            sum_ += 0.5 * next;
        } else {
            sum_ += next;
        }
        return sum_;
    }
    double sum() const { return sum_; }

private:
    std::vector<double> wksp_;
    double sum_ = 0.0;
};

double sinc(double u) {
    return (std::abs(u) < 1e-8) ? 1.0 - u * u / 6.0 : std::sin(u) / u;
}

}  // namespace

double sine_integral_infinite(double c, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (c == 0.0) return 0.0;
    const double sign = c > 0.0 ? 1.0 : -1.0;
    const double pi = std::numbers::pi;
    constexpr int kHalfPeriodCap = 10000;

    EulerAccumulator acc;
    double prev = 0.0;
    int quiet = 0;
    for (int k = 0; k < kHalfPeriodCap; ++k) {
        double term = gk15_panel([](double u) { return sinc(u); }, k * pi,
                                 (k + 1) * pi);
        double cur = acc.add(term);
        if (k >= 4) {
            if (std::abs(cur - prev) < 0.1 * tol) {
                if (++quiet >= 2) return sign * cur;
            } else {
                quiet = 0;
            }
        }
        prev = cur;
    }
    throw convergence_error("sine integral did not converge within the half-period cap");
}

double dirichlet_integral(double a, double y, double tol) {
    if (!(a > 0.0)) throw std::invalid_argument("a must be positive");
    if (y < 0.0) throw std::invalid_argument("y must be non-negative");
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (y == a) return std::numbers::pi / 4.0;  // convention, no quadrature
    // sin(ax)cos(yx) = [sin((a+y)x) + sin((a-y)x)] / 2
    return 0.5 * (sine_integral_infinite(a + y, tol) +
                  sine_integral_infinite(a - y, tol));
}

}  // namespace amalgam
