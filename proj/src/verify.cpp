#include "amalgam/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "amalgam/asymptotics.hpp"
#include "amalgam/corpus.hpp"
#include "amalgam/function_model.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/oscillatory.hpp"
#include "amalgam/pinned.hpp"
#include "amalgam/series.hpp"
#include "amalgam/transforms.hpp"

namespace amalgam {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn3 = 1.0986122886681098;
constexpr double kLn10 = 2.302585092994046;

using Clock = std::chrono::steady_clock;

class Timer {
public:
    Timer() : start_(Clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   Clock::now() - start_)
            .count();
    }

private:
    Clock::time_point start_;
};

FunctionModel indicator(double delta) {
    return FunctionModel({0.0, delta}, {1.0, 1.0});
}

std::vector<FunctionModel> build_corpus(std::uint64_t seed, int size,
                                        bool continuous_edges) {
    std::mt19937_64 rng(seed);
    std::vector<FunctionModel> out;
    out.reserve(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i)
        out.push_back(random_model(rng, continuous_edges));
    return out;
}

std::vector<CoefficientSequence> build_sequences(std::uint64_t seed, int size) {
    std::mt19937_64 rng(seed ^ 0x5eedbeef);
    std::vector<CoefficientSequence> out;
    out.reserve(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) out.push_back(random_sequence(rng));
    return out;
}

VerificationReport make_report(std::string id, double lhs, double rhs,
                               double defect, double tol, bool passed,
                               const Timer& t) {
    return VerificationReport{std::move(id), lhs, rhs, defect, tol, passed,
                              t.ms()};
}

bool default_corpus(const VerifyOptions& o) {
    return o.seed == 42 && o.corpus_size == 20;
}

// --- suites -------------------------------------------------------------

std::vector<VerificationReport> suite_tchi(const VerifyOptions&) {
    std::vector<VerificationReport> out;
    for (double delta : {0.5, 1.0, 2.0}) {
        Timer t;
        double lhs = t_transform_l1_norm(indicator(delta), 2.5 * delta, 1e-7);
        double rhs = delta * kLn3;
        double defect = std::abs(lhs - rhs);
        out.push_back(make_report("tchi-l1-ln3/delta-" + std::to_string(delta),
                                  lhs, rhs, defect, 1e-6, defect <= 1e-6, t));
    }
    return out;
}

std::vector<VerificationReport> suite_hilbert_divergence(const VerifyOptions&) {
    std::vector<VerificationReport> out;
    FunctionModel chi = indicator(1.0);
    Timer total;
    std::vector<double> vals;
    for (int k = 1; k <= 4; ++k)
        vals.push_back(hilbert_l1_truncated(chi, std::pow(10.0, k), 1e-5));
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
        Timer t;
        double inc = vals[i + 1] - vals[i];
        double defect = std::abs(inc / kLn10 - 1.0);
        out.push_back(make_report(
            "hilbert-divergence/decade-" + std::to_string(i + 2), inc, kLn10,
            defect, 0.15, defect <= 0.15, i == 0 ? total : t));
    }
    return out;
}

std::vector<VerificationReport> suite_dirichlet(const VerifyOptions&) {
    std::vector<VerificationReport> out;
    struct Case {
        double a, y, expected;
        const char* tag;
    };
    for (auto c : {Case{1.0, 0.5, kPi / 2.0, "y-lt-a"},
                   Case{1.0, 2.0, 0.0, "y-gt-a"},
                   Case{1.0, 1.0, kPi / 4.0, "y-eq-a"}}) {
        Timer t;
        double lhs = dirichlet_integral(c.a, c.y, 1e-6);
        double defect = std::abs(lhs - c.expected);
        out.push_back(make_report(std::string("eq-f2-dirichlet/") + c.tag, lhs,
                                  c.expected, defect, 1e-4, defect <= 1e-4, t));
    }
    return out;
}

std::vector<VerificationReport> suite_embedding(const VerifyOptions& opt) {
    Timer t;
    auto corpus = build_corpus(opt.seed, opt.corpus_size, false);
    std::vector<double> ratios(corpus.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(corpus.size()); ++i)
        ratios[static_cast<size_t>(i)] =
            embedding_ratio(corpus[static_cast<size_t>(i)]);
    double max_ratio = 0.0;
    bool all_strict = true;
    for (double r : ratios) {
        max_ratio = std::max(max_ratio, r);
        if (!(r < kEmbeddingConstant)) all_strict = false;
    }
    return {make_report("lemma-2.1-embedding", max_ratio, kEmbeddingConstant,
                        max_ratio / kEmbeddingConstant, kEmbeddingConstant,
                        all_strict, t)};
}

std::vector<VerificationReport> suite_norm_exact(const VerifyOptions&) {
    std::vector<VerificationReport> out;
    {
        Timer t;
        double worst = 0.0;
        for (size_t n : {1u, 2u, 3u, 4u, 7u, 8u, 1000u}) {
            CoefficientSequence e;
            e.entries.assign(n, 0.0);
            e.entries.back() = 1.0;
            double got = sequence_amalgam_norm(e);
            double want = std::floor(std::log2(double(n))) + 1.0;
            worst = std::max(worst, std::abs(got - want));
        }
        out.push_back(make_report("norm-exact-values/spikes", worst, 0.0, worst,
                                  1e-12, worst <= 1e-12, t));
    }
    {
        Timer t;
        // oracle: sum_k 2^-k sqrt(2^k - 1), summed far past the tolerance
        double oracle = 0.0;
        for (int k = 150; k >= 1; --k)
            oracle += std::exp2(-k) * std::sqrt(std::exp2(k) - 1.0);
        auto rep = function_amalgam_norm(indicator(1.0), 1e-10);
        double defect = std::abs(rep.value - oracle);
        out.push_back(make_report("norm-exact-values/chi01", rep.value, oracle,
                                  defect, 1e-8, defect <= 1e-8, t));
    }
    return out;
}

std::vector<VerificationReport> suite_fubini(const VerifyOptions& opt) {
    Timer t;
    auto corpus = build_corpus(opt.seed, opt.corpus_size, true);
    corpus.push_back(FunctionModel({0.0, 1.0}, {1.0, 0.0}));       // hat
    corpus.push_back(FunctionModel({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}));  // tent
    double worst = 0.0;
    for (const auto& f : corpus)
        worst = std::max(worst, fubini_identity_defect(f));
    return {make_report("eq-near0-fubini", worst, 0.0, worst, 1e-9,
                        worst <= 1e-9, t)};
}

std::vector<VerificationReport> suite_thm31(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    auto corpus = build_corpus(opt.seed, opt.corpus_size, true);

    Timer t_id;
    bool identity_ok = true;
    double identity_worst = 0.0;
    for (const auto& f : corpus) {
        for (int gamma : {0, 1}) {
            for (double x : {0.1, 1.0, kPi, 10.0}) {
                auto s = decompose(f, gamma, x);
                double defect =
                    std::abs(s.transform_value - s.main_term - s.remainder);
                identity_worst = std::max(identity_worst, defect);
                if (defect != 0.0) identity_ok = false;
                if (gamma == 0 && s.main_term != 0.0) identity_ok = false;
            }
        }
    }
    out.push_back(make_report("thm-3.1-ratio/identity", identity_worst, 0.0,
                              identity_worst, 0.0, identity_ok, t_id));

    Timer t_ratio;
    const size_t jobs = corpus.size() * 2;
    std::vector<double> ratio_a(jobs), ratio_b(jobs);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs); ++i) {
        const auto& f = corpus[static_cast<size_t>(i) / 2];
        int gamma = static_cast<int>(i % 2);
        ratio_a[static_cast<size_t>(i)] =
            remainder_l1(f, gamma, 0.01, 1000.0, 1e-5).ratio;
        ratio_b[static_cast<size_t>(i)] =
            remainder_l1(f, gamma, 0.001, 10000.0, 1e-5).ratio;
    }
    double max_ratio = 0.0, worst_drift = 0.0;
    for (size_t i = 0; i < jobs; ++i) {
        max_ratio = std::max(max_ratio, ratio_b[i]);
        worst_drift = std::max(worst_drift,
                               std::abs(ratio_b[i] / ratio_a[i] - 1.0));
    }
    bool finite = std::isfinite(max_ratio);
    out.push_back(make_report("thm-3.1-ratio/window-stability", worst_drift,
                              0.0, worst_drift, 0.02,
                              finite && worst_drift < 0.02, t_ratio));

    Timer t_pin;
    if (default_corpus(opt)) {
        double drift = std::abs(max_ratio / kPinnedThm31MaxRatio - 1.0);
        out.push_back(make_report("thm-3.1-ratio/max-ratio-pin", max_ratio,
                                  kPinnedThm31MaxRatio, drift, 0.05,
                                  drift <= 0.05, t_pin));
    } else {
        out.push_back(make_report("thm-3.1-ratio/max-ratio-pin", max_ratio,
                                  kPinnedThm31MaxRatio, 0.0, 0.05, finite,
                                  t_pin));
    }
    return out;
}

double bale_corpus_constant(std::uint64_t seed, int size) {
    auto corpus = build_corpus(seed, size, false);
    const int m_lo = -6, m_hi = 6;
    const size_t jobs = corpus.size() * static_cast<size_t>(m_hi - m_lo + 1);
    std::vector<double> ratios(jobs, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs); ++i) {
        const auto& g = corpus[static_cast<size_t>(i) / 13];
        int m = m_lo + static_cast<int>(i % 13);
        auto [lhs, rhs] = bale_check(g, m, 1e-8);
        if (rhs > 1e-12) ratios[static_cast<size_t>(i)] = lhs / rhs;
    }
    double k = 0.0;
    for (double r : ratios) k = std::max(k, r);
    return k;
}

std::vector<VerificationReport> suite_bale(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    Timer t;
    double k0 = bale_corpus_constant(opt.seed, opt.corpus_size);
    double k1 = bale_corpus_constant(opt.seed + 1, opt.corpus_size);
    double drift = std::abs(k1 / k0 - 1.0);
    out.push_back(make_report("lemma-3.2-bale/reseed-drift", k1, k0, drift,
                              0.10, drift < 0.10, t));
    Timer t_pin;
    if (default_corpus(opt)) {
        double pin_drift = std::abs(k0 / kPinnedBaleConstant - 1.0);
        out.push_back(make_report("lemma-3.2-bale/constant-pin", k0,
                                  kPinnedBaleConstant, pin_drift, 0.10,
                                  pin_drift <= 0.10, t_pin));
    } else {
        out.push_back(make_report("lemma-3.2-bale/constant-pin", k0,
                                  kPinnedBaleConstant, 0.0, 0.10,
                                  std::isfinite(k0) && k0 > 0.0, t_pin));
    }
    return out;
}

std::vector<VerificationReport> suite_bridge(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    {
        Timer t;
        auto seqs = build_sequences(opt.seed, 10);
        double worst = 0.0;
        for (const auto& c : seqs) {
            double seq_side = sequence_amalgam_norm(difference_sequence(c));
            auto rep =
                function_amalgam_norm(derivative(interpolate(c)), 1e-6);
            double fun_side = 0.0;
            for (const auto& [m, s] : rep.per_scale)
                if (m >= 0) fun_side += s;
            worst = std::max(worst, std::abs(seq_side - fun_side));
        }
        out.push_back(make_report("s4-bridge/amfun1-exact", worst, 0.0, worst,
                                  1e-12, worst <= 1e-12, t));
    }
    {
        Timer t;
        CoefficientSequence harmonic;
        harmonic.entries.resize(2000);
        for (size_t i = 0; i < 2000; ++i)
            harmonic.entries[i] = 1.0 / double(i + 1);
        double prev = 0.0, worst_step = 0.0, lo = 1e300, hi = 0.0;
        for (size_t n : {250u, 500u, 1000u, 2000u}) {
            auto [ratio, inv] = condsin_equivalence_ratio(harmonic, n);
            (void)inv;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
            if (prev > 0.0)
                worst_step = std::max(worst_step, std::abs(ratio / prev - 1.0));
            prev = ratio;
        }
        bool in_bracket = lo >= 0.25 && hi <= 4.0 && worst_step < 0.10;
        out.push_back(make_report("s4-bridge/condsin-equivalence", lo, hi,
                                  worst_step, 0.10, in_bracket, t));
    }
    return out;
}

std::vector<VerificationReport> suite_trigub(const VerifyOptions& opt) {
    Timer t;
    auto seqs = build_sequences(opt.seed, opt.corpus_size);
    std::vector<FunctionModel> phis;
    for (const auto& c : seqs) phis.push_back(interpolate(c));
    phis.push_back(FunctionModel({0.0, 1.0, 2.0}, {0.0, 1.0, 0.0}));  // tent
    std::vector<double> ratios(phis.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(phis.size()); ++i) {
        auto [sup, bv] = trigub_discrepancy(phis[static_cast<size_t>(i)], 256);
        ratios[static_cast<size_t>(i)] = bv > 0.0 ? sup / bv : 0.0;
    }
    double max_ratio = 0.0;
    for (double r : ratios) max_ratio = std::max(max_ratio, r);
    bool ok = default_corpus(opt) ? max_ratio <= kPinnedTrigubRatio
                                  : std::isfinite(max_ratio);
    return {make_report("eq-insevar-trigub", max_ratio, kPinnedTrigubRatio,
                        max_ratio / kPinnedTrigubRatio, kPinnedTrigubRatio, ok,
                        t)};
}

std::vector<VerificationReport> suite_sine(const VerifyOptions& opt) {
    Timer t;
    auto seqs = build_sequences(opt.seed + 1, opt.corpus_size);
    std::vector<double> ratios(seqs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(seqs.size()); ++i)
        ratios[static_cast<size_t>(i)] =
            sine_asymptotic_check(seqs[static_cast<size_t>(i)], 64, 1e-6).ratio;
    double max_ratio = 0.0;
    for (double r : ratios) max_ratio = std::max(max_ratio, r);
    bool ok = default_corpus(opt) ? max_ratio <= kPinnedSineAsymptoticRatio
                                  : std::isfinite(max_ratio);
    return {make_report("thm-4.1-sine", max_ratio, kPinnedSineAsymptoticRatio,
                        max_ratio / kPinnedSineAsymptoticRatio,
                        kPinnedSineAsymptoticRatio, ok, t)};
}

using SuiteFn =
    std::function<std::vector<VerificationReport>(const VerifyOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"tchi-l1-ln3", suite_tchi},
        {"hilbert-divergence", suite_hilbert_divergence},
        {"eq-f2-dirichlet", suite_dirichlet},
        {"lemma-2.1-embedding", suite_embedding},
        {"norm-exact-values", suite_norm_exact},
        {"eq-near0-fubini", suite_fubini},
        {"thm-3.1-ratio", suite_thm31},
        {"lemma-3.2-bale", suite_bale},
        {"s4-bridge", suite_bridge},
        {"eq-insevar-trigub", suite_trigub},
        {"thm-4.1-sine", suite_sine},
    };
    return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

bool is_suite(const std::string& id) {
    for (const auto& [name, fn] : registry())
        if (name == id) return true;
    return false;
}

std::vector<VerificationReport> run_suite(const std::string& id,
                                          const VerifyOptions& opt) {
    for (const auto& [name, fn] : registry())
        if (name == id) return fn(opt);
    throw std::invalid_argument("unknown suite: " + id);
}

std::vector<VerificationReport> run_all_suites(const VerifyOptions& opt) {
    std::vector<VerificationReport> out;
    for (const auto& [name, fn] : registry()) {
        auto reports = fn(opt);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    return nlohmann::json{{"claim_id", r.claim_id},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"ratio_or_defect", r.ratio_or_defect},
                          {"tolerance", r.tolerance},
                          {"passed", r.passed},
                          {"runtime_ms", r.runtime_ms}};
}

}  // namespace amalgam
