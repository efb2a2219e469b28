#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "amalgam/asymptotics.hpp"
#include "amalgam/json_io.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/oscillatory.hpp"
#include "amalgam/series.hpp"
#include "amalgam/transforms.hpp"
#include "amalgam/verify.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct Grid {
    double lo = 0, hi = 0;
    int n = 0;
};

Grid parse_grid(const std::string& s) {
    Grid g;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> g.lo >> c1 >> g.hi >> c2 >> g.n) || c1 != ':' || c2 != ':' ||
        g.n < 2 || !(g.lo < g.hi))
        throw amalgam::validation_error("bad grid spec, expected lo:hi:n");
    return g;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

void apply_workers(int workers) {
#ifdef _OPENMP
    if (workers <= 0) {
        if (const char* env = std::getenv("AMALGAM_WORKERS"))
            workers = std::atoi(env);
    }
    if (workers > 0) omp_set_num_threads(workers);
#else
    (void)workers;
#endif
}

int cmd_norm(const std::string& kind, const std::string& spec, double tol,
             const std::string& out_path) {
    json j = amalgam::load_spec(spec);
    amalgam::NormReport rep;
    if (kind == "seq") {
        auto c = amalgam::sequence_from_json(j);
        rep = amalgam::sequence_amalgam_norm_report(c);
    } else if (kind == "fun") {
        auto f = amalgam::model_from_json(j);
        rep = amalgam::function_amalgam_norm(f, tol);
    } else if (kind == "wiener") {
        auto f = amalgam::model_from_json(j);
        rep.value = amalgam::wiener_amalgam_norm(f);
    } else {
        throw amalgam::validation_error("unknown norm kind: " + kind);
    }
    emit(amalgam::norm_report_to_json(rep).dump(2) + "\n", out_path);
    return kExitOk;
}

int cmd_transform(const std::string& kind, const std::string& spec,
                  std::optional<double> at, const std::string& grid_spec,
                  const std::string& out_path) {
    auto f = amalgam::model_from_json(amalgam::load_spec(spec));
    auto eval = [&](double x) {
        if (kind == "cos")
            return amalgam::fourier_transform(f, amalgam::TransformKind::cosine, x);
        if (kind == "sin")
            return amalgam::fourier_transform(f, amalgam::TransformKind::sine, x);
        if (kind == "t") return amalgam::t_transform(f, x);
        if (kind == "hilbert") return amalgam::hilbert_transform(f, x);
        throw amalgam::validation_error("unknown transform kind: " + kind);
    };
    if (at) {
        if (!(*at > 0.0))
            throw amalgam::validation_error("evaluation point must be positive");
        json j{{"kind", kind}, {"x", *at}, {"value", eval(*at)}};
        emit(j.dump(2) + "\n", out_path);
        return kExitOk;
    }
    Grid g = parse_grid(grid_spec);
    if (!(g.lo > 0.0))
        throw amalgam::validation_error("grid must start at a positive x");
    std::vector<double> xs(static_cast<size_t>(g.n)), vals(xs.size());
    for (int i = 0; i < g.n; ++i)
        xs[static_cast<size_t>(i)] = g.lo + (g.hi - g.lo) * i / (g.n - 1);
    std::exception_ptr failure;  // exceptions cannot cross the parallel region
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(xs.size()); ++i) {
        try {
            vals[static_cast<size_t>(i)] = eval(xs[static_cast<size_t>(i)]);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::ostringstream csv;
    csv << "x,value\n";
    csv.precision(17);
    for (size_t i = 0; i < xs.size(); ++i)
        csv << xs[i] << "," << vals[i] << "\n";
    emit(csv.str(), out_path);
    return kExitOk;
}

int cmd_decompose(const std::string& spec, int gamma,
                  const std::string& grid_spec, const std::string& l1_window,
                  double tol, const std::string& out_path) {
    auto f = amalgam::model_from_json(amalgam::load_spec(spec));
    if (!amalgam::admissible_for_decomposition(f)) {
        std::cerr << "error: the model jumps at a support edge; the "
                     "decomposition requires a locally absolutely continuous "
                     "function vanishing at infinity\n";
        return kExitPrecondition;
    }
    Grid g = parse_grid(grid_spec);
    if (!(g.lo > 0.0))
        throw amalgam::validation_error("grid must start at a positive x");
    std::vector<amalgam::DecompositionSample> samples(static_cast<size_t>(g.n));
    std::exception_ptr failure;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < g.n; ++i) {
        try {
            double x = g.lo + (g.hi - g.lo) * double(i) / (g.n - 1);
            samples[static_cast<size_t>(i)] = amalgam::decompose(f, gamma, x);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    std::ostringstream csv;
    csv << "x,transform,main,remainder\n";
    csv.precision(17);
    for (const auto& s : samples)
        csv << s.x << "," << s.transform_value << "," << s.main_term << ","
            << s.remainder << "\n";
    emit(csv.str(), out_path);
    if (!l1_window.empty()) {
        double lo = 0, hi = 0;
        char c = 0;
        std::istringstream in(l1_window);
        if (!(in >> lo >> c >> hi) || c != ':' || !(0 < lo && lo < hi))
            throw amalgam::validation_error("bad window spec, expected lo:hi");
        auto est = amalgam::remainder_l1(f, gamma, lo, hi, tol);
        std::cout << amalgam::remainder_estimate_to_json(est).dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, int corpus_size,
               const std::string& out_path) {
    amalgam::VerifyOptions opt;
    opt.seed = seed;
    opt.corpus_size = corpus_size;
    std::vector<amalgam::VerificationReport> reports;
    if (suite == "all") {
        reports = amalgam::run_all_suites(opt);
    } else if (amalgam::is_suite(suite)) {
        reports = amalgam::run_suite(suite, opt);
    } else {
        std::cerr << "error: unknown claim id '" << suite << "'; known:";
        for (const auto& n : amalgam::suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return kExitUsage;
    }
    json arr = json::array();
    bool all_passed = true;
    for (const auto& r : reports) {
        arr.push_back(amalgam::report_to_json(r));
        all_passed = all_passed && r.passed;
        std::cerr << (r.passed ? "[PASS] " : "[FAIL] ") << r.claim_id << "\n";
    }
    emit(arr.dump(2) + "\n", out_path);
    return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"amalgam-space norms, exact transforms and a verification "
                 "harness for their quantitative properties"};
    app.require_subcommand(1);
    int workers = 0;
    app.add_option("--workers", workers, "worker thread count (default: all)");

    std::string kind, spec, grid_spec, out_path, l1_window, suite = "all";
    std::string de_grid = "0.1:100:200";
    double tol = 1e-8;
    std::optional<double> at;
    int gamma = 0, corpus_size = 20;
    std::uint64_t seed = 42;

    auto* norm = app.add_subcommand("norm", "sequence/function/Wiener amalgam norms");
    norm->add_option("--kind", kind, "seq | fun | wiener")->required();
    norm->add_option("--spec", spec, "inline JSON or file path")->required();
    norm->add_option("--tol", tol, "certified tail tolerance (fun)");
    norm->add_option("--out", out_path, "output file (default stdout)");

    auto* tr = app.add_subcommand("transform", "cos/sin Fourier, T- and Hilbert transforms");
    tr->add_option("--kind", kind, "cos | sin | t | hilbert")->required();
    tr->add_option("--spec", spec, "inline JSON or file path")->required();
    tr->add_option("--at", at, "single evaluation point");
    tr->add_option("--grid", grid_spec, "lo:hi:n sample grid (CSV output)");
    tr->add_option("--out", out_path, "output file (default stdout)");

    auto* de = app.add_subcommand("decompose", "main-term/remainder decomposition");
    de->add_option("--spec", spec, "inline JSON or file path")->required();
    de->add_option("--gamma", gamma, "0 = cosine, 1 = sine")->required();
    de->add_option("--grid", de_grid, "lo:hi:n sample grid");
    de->add_option("--l1-window", l1_window, "lo:hi window for the remainder L1");
    de->add_option("--tol", tol, "quadrature tolerance");
    de->add_option("--out", out_path, "output file (default stdout)");

    auto* ve = app.add_subcommand("verify", "run the verification suites");
    ve->add_option("--suite", suite, "all or one claim id");
    ve->add_option("--seed", seed, "corpus seed");
    ve->add_option("--corpus-size", corpus_size, "models per corpus");
    ve->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        apply_workers(workers);
        if (norm->parsed()) return cmd_norm(kind, spec, tol, out_path);
        if (tr->parsed()) {
            if (!at && grid_spec.empty())
                throw amalgam::validation_error("need --at or --grid");
            return cmd_transform(kind, spec, at, grid_spec, out_path);
        }
        if (de->parsed())
            return cmd_decompose(spec, gamma, de_grid, l1_window, tol, out_path);
        if (ve->parsed()) return cmd_verify(suite, seed, corpus_size, out_path);
        return kExitUsage;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const amalgam::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
}
