#include "amalgam/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace amalgam {

using nlohmann::json;

FunctionModel model_from_json(const json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values"))
        throw validation_error("model spec needs 'breakpoints' and 'values'");
    return FunctionModel(j.at("breakpoints").get<std::vector<double>>(),
                         j.at("values").get<std::vector<double>>());
}

json model_to_json(const FunctionModel& f) {
    return json{{"breakpoints", f.breakpoints()}, {"values", f.values()}};
}

CoefficientSequence sequence_from_json(const json& j) {
    if (!j.is_object()) throw validation_error("sequence spec must be an object");
    CoefficientSequence c;
    if (j.contains("entries")) {
        c.entries = j.at("entries").get<std::vector<double>>();
    } else if (j.contains("gen")) {
        std::string gen = j.at("gen").get<std::string>();
        if (gen == "single-spike") {
            auto n = j.at("n").get<size_t>();
            if (n < 1) throw validation_error("single-spike index must be >= 1");
            c.entries.assign(n, 0.0);
            c.entries.back() = 1.0;
        } else if (gen == "power") {
            double p = j.at("p").get<double>();
            auto n = j.at("N").get<size_t>();
            c.entries.resize(n);
            for (size_t i = 0; i < n; ++i)
                c.entries[i] = std::pow(double(i + 1), -p);
        } else if (gen == "log-power") {
            double q = j.at("q").get<double>();
            auto n = j.at("N").get<size_t>();
            c.entries.resize(n);
            for (size_t i = 0; i < n; ++i)
                c.entries[i] =
                    1.0 / (double(i + 1) * std::pow(std::log(double(i + 3)), q));
        } else {
            throw validation_error("unknown generator: " + gen);
        }
    } else {
        throw validation_error("sequence spec needs 'entries' or 'gen'");
    }
    if (c.entries.empty()) throw validation_error("empty sequence");
    for (double v : c.entries)
        if (!std::isfinite(v)) throw validation_error("non-finite entry");
    return c;
}

json norm_report_to_json(const NormReport& r) {
    json per = json::array();
    for (const auto& [m, s] : r.per_scale) per.push_back(json::array({m, s}));
    return json{{"value", r.value},     {"tail_bound", r.tail_bound},
                {"m_lo", r.m_lo},       {"m_hi", r.m_hi},
                {"per_scale", per},     {"block_cap", r.block_cap}};
}

json remainder_estimate_to_json(const RemainderEstimate& r) {
    return json{{"window", json::array({r.x_lo, r.x_hi})},
                {"l1_value", r.l1_value},
                {"f_prime_norm", r.f_prime_norm},
                {"ratio", r.ratio}};
}

json load_spec(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw validation_error("cannot open spec file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    return json::parse(buf.str());
}

}  // namespace amalgam
