// End-to-end acceptance gate: one pass/fail line per criterion, nonzero exit
// if any fails. Uses the same verification suites as the CLI plus a
// determinism double-run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "amalgam/verify.hpp"

namespace {

int failures = 0;

void line(int idx, const char* what, bool ok, const std::string& detail) {
    std::printf("[%s] %2d %-28s %s\n", ok ? "PASS" : "FAIL", idx, what,
                detail.c_str());
    if (!ok) ++failures;
}

bool suites_pass(const std::vector<amalgam::VerificationReport>& reps,
                 std::string* detail = nullptr) {
    bool ok = true;
    for (const auto& r : reps) {
        if (!r.passed) {
            ok = false;
            if (detail) *detail += r.claim_id + " ";
        }
    }
    return ok;
}

std::string worst_defect(const std::vector<amalgam::VerificationReport>& reps) {
    double worst = 0.0;
    for (const auto& r : reps) worst = std::max(worst, r.ratio_or_defect);
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst defect/ratio %.3g", worst);
    return buf;
}

nlohmann::json stripped(const std::vector<amalgam::VerificationReport>& reps) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reps) {
        auto j = amalgam::report_to_json(r);
        j.erase("runtime_ms");
        arr.push_back(j);
    }
    return arr;
}

}  // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    amalgam::VerifyOptions opt;  // seed 42, corpus 20

    struct Item {
        int idx;
        const char* suite;
        const char* what;
    };
    const std::vector<Item> items = {
        {1, "tchi-l1-ln3", "t-transform exact L1"},
        {2, "hilbert-divergence", "hilbert log divergence"},
        {3, "eq-f2-dirichlet", "dirichlet integral"},
        {4, "lemma-2.1-embedding", "embedding constant"},
        {5, "norm-exact-values", "norm exact values"},
        {6, "eq-near0-fubini", "fubini identity"},
        {7, "thm-3.1-ratio", "decomposition suite"},
        {8, "lemma-3.2-bale", "per-scale constant"},
    };

    for (const auto& it : items) {
        auto reps = amalgam::run_suite(it.suite, opt);
        std::string failed;
        bool ok = suites_pass(reps, &failed);
        line(it.idx, it.what, ok,
             ok ? worst_defect(reps) : "failed: " + failed);
    }

    {
        std::string failed;
        auto reps = amalgam::run_suite("s4-bridge", opt);
        auto trig = amalgam::run_suite("eq-insevar-trigub", opt);
        auto sine = amalgam::run_suite("thm-4.1-sine", opt);
        reps.insert(reps.end(), trig.begin(), trig.end());
        reps.insert(reps.end(), sine.begin(), sine.end());
        bool ok = suites_pass(reps, &failed);
        line(9, "series bridge + pins", ok,
             ok ? worst_defect(reps) : "failed: " + failed);
    }

    {
        auto t0 = Clock::now();
        auto first = amalgam::run_all_suites(opt);
        auto second = amalgam::run_all_suites(opt);
        double secs =
            std::chrono::duration<double>(Clock::now() - t0).count() / 2.0;
        bool identical = stripped(first) == stripped(second);
        bool fast = secs < 120.0;
        char buf[96];
        std::snprintf(buf, sizeof buf, "identical=%s, %.1f s per full run",
                      identical ? "yes" : "no", secs);
        line(10, "determinism + runtime", identical && fast, buf);
    }

    return failures == 0 ? 0 : 1;
}
