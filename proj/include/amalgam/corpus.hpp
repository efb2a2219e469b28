#pragma once

#include <cstdint>
#include <random>

#include "amalgam/function_model.hpp"
#include "amalgam/norms.hpp"

namespace amalgam {

// Seeded generators for the verification corpora: random piecewise-linear
// models with 3-12 breakpoints in [0, 8] and values in [-2, 2]. With
// continuous_edges the model vanishes at both support edges, which is what
// the decomposition suites require.
FunctionModel random_model(std::mt19937_64& rng, bool continuous_edges);

// Random finitely supported sequence, 3-40 entries in [-2, 2].
CoefficientSequence random_sequence(std::mt19937_64& rng);

}  // namespace amalgam
