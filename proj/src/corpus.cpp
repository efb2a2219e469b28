#include "amalgam/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace amalgam {

FunctionModel random_model(std::mt19937_64& rng, bool continuous_edges) {
    std::uniform_int_distribution<int> count_dist(3, 12);
    std::uniform_real_distribution<double> point_dist(0.0, 8.0);
    std::uniform_real_distribution<double> value_dist(-2.0, 2.0);
    for (;;) {
        int n = count_dist(rng);
        std::vector<double> bp(static_cast<size_t>(n));
        for (auto& t : bp) t = point_dist(rng);
        std::sort(bp.begin(), bp.end());
        bool spaced = true;
        for (size_t i = 0; i + 1 < bp.size(); ++i)
            if (bp[i + 1] - bp[i] < 0.05) spaced = false;
        if (!spaced) continue;
        std::vector<double> val(bp.size());
        for (auto& v : val) v = value_dist(rng);
        if (continuous_edges) {
            val.front() = 0.0;
            val.back() = 0.0;
        }
        bool nonzero = std::any_of(val.begin(), val.end(),
                                   [](double v) { return v != 0.0; });
        if (!nonzero) continue;
        return FunctionModel(std::move(bp), std::move(val));
    }
}

CoefficientSequence random_sequence(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count_dist(3, 40);
    std::uniform_real_distribution<double> value_dist(-2.0, 2.0);
    for (;;) {
        CoefficientSequence c;
        c.entries.resize(static_cast<size_t>(count_dist(rng)));
        for (auto& v : c.entries) v = value_dist(rng);
        if (std::any_of(c.entries.begin(), c.entries.end(),
                        [](double v) { return v != 0.0; }))
            return c;
    }
}

}  // namespace amalgam
