#pragma once

#include <string>

#include <json.hpp>

#include "amalgam/asymptotics.hpp"
#include "amalgam/function_model.hpp"
#include "amalgam/norms.hpp"

namespace amalgam {

// Model spec: {"breakpoints":[...], "values":[...]}
FunctionModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const FunctionModel& f);

// Sequence spec: {"entries":[...]} or a generator descriptor such as
// {"gen":"power","p":2,"N":1000}   (b_n = n^-p),
// {"gen":"log-power","q":1,"N":1000} (b_n = 1/(n log^q(n+2))),
// {"gen":"single-spike","n":4}.
CoefficientSequence sequence_from_json(const nlohmann::json& j);

nlohmann::json norm_report_to_json(const NormReport& r);
nlohmann::json remainder_estimate_to_json(const RemainderEstimate& r);

// Reads the argument either as inline JSON (leading '{') or as a file path.
nlohmann::json load_spec(const std::string& arg);

}  // namespace amalgam
