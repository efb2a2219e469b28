#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace amalgam {

// One checked paper claim: the two numerically computed sides, the
// ratio/defect between them and pass/fail at the stated tolerance.
struct VerificationReport {
    std::string claim_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio_or_defect = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::int64_t runtime_ms = 0;
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    int corpus_size = 20;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& id);

std::vector<VerificationReport> run_suite(const std::string& id,
                                          const VerifyOptions& opt);
std::vector<VerificationReport> run_all_suites(const VerifyOptions& opt);

nlohmann::json report_to_json(const VerificationReport& r);

}  // namespace amalgam
