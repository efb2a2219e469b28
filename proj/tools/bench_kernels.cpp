// Timing comparison between the serial reference kernels and their OpenMP
// counterparts on representative workloads.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "amalgam/corpus.hpp"
#include "amalgam/norms.hpp"
#include "amalgam/transforms.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0)
        .count();
}

struct Timing {
    double serial_ms = 0.0;
    double parallel_ms = 0.0;
    double checksum_serial = 0.0;
    double checksum_parallel = 0.0;
};

void report(const char* name, const Timing& t) {
    std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n",
                name, t.serial_ms, t.parallel_ms,
                t.parallel_ms > 0 ? t.serial_ms / t.parallel_ms : 0.0,
                t.checksum_serial == t.checksum_parallel ? "bit-identical"
                                                         : "MISMATCH");
}

Timing bench_norm(const std::vector<amalgam::FunctionModel>& corpus, double tol) {
    Timing t;
    auto t0 = clock_type::now();
    for (const auto& f : corpus) {
        auto ps = f.pieces();
        t.checksum_serial +=
            amalgam::function_amalgam_norm_serial(
                std::span<const amalgam::LinearPiece>(ps), tol)
                .value;
    }
    t.serial_ms = ms_since(t0);
    t0 = clock_type::now();
    for (const auto& f : corpus)
        t.checksum_parallel += amalgam::function_amalgam_norm(f, tol).value;
    t.parallel_ms = ms_since(t0);
    return t;
}

Timing bench_transform_grid(const amalgam::FunctionModel& f, int n) {
    Timing t;
    std::vector<double> vals(static_cast<size_t>(n));
    auto sample_x = [&](int i) { return 0.01 + 500.0 * i / (n - 1); };
    auto t0 = clock_type::now();
    for (int i = 0; i < n; ++i)
        vals[static_cast<size_t>(i)] = amalgam::hilbert_transform(f, sample_x(i));
    for (double v : vals) t.checksum_serial += v;
    t.serial_ms = ms_since(t0);
    t0 = clock_type::now();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
        vals[static_cast<size_t>(i)] = amalgam::hilbert_transform(f, sample_x(i));
    for (double v : vals) t.checksum_parallel += v;
    t.parallel_ms = ms_since(t0);
    return t;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run serially\n\n");
#endif

    std::mt19937_64 rng(7);
    std::vector<amalgam::FunctionModel> corpus;
    for (int i = 0; i < 32; ++i)
        corpus.push_back(amalgam::random_model(rng, false));

    report("dyadic norm, tol 1e-8", bench_norm(corpus, 1e-8));
    report("dyadic norm, tol 1e-12", bench_norm(corpus, 1e-12));
    report("hilbert grid, 2000 pts", bench_transform_grid(corpus.front(), 2000));
    return 0;
}
