// Serial reference kernels against their OpenMP counterparts.

#include "rigidity/charmat.hpp"
#include "rigidity/cohomology.hpp"
#include "rigidity/gale.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

namespace {

using namespace rigidity;

gale::FaceStructure faces_of(const gale::Weights& w) {
    const gale::GaleDiagram d(w);
    return gale::face_structure(d, gale::default_labeling(d));
}

std::vector<cohomology::GradedQuotient> quotients_of(const gale::Weights& w) {
    const auto faces = faces_of(w);
    std::vector<cohomology::GradedQuotient> out;
    for (const auto& b : charmat::enumerate_charmats_serial(faces)) {
        out.push_back(
            cohomology::quotient_presentation(faces, charmat::CharMatrixZ2::with_identity_prefix(faces.n, b)));
    }
    return out;
}

const gale::Weights kP = {3, 1, 2, 1, 1};
const gale::Weights kQ = {2, 2, 2, 1, 1};
// Larger diagram so the enumeration has enough branches to split.
const gale::Weights kWide = {3, 2, 2, 2, 1};

void BM_EnumerateSerial(benchmark::State& state) {
    const auto faces = faces_of(state.range(0) == 0 ? kP : kWide);
    for (auto _ : state) {
        benchmark::DoNotOptimize(charmat::enumerate_charmats_serial(faces));
    }
}

void BM_EnumerateParallel(benchmark::State& state) {
    const auto faces = faces_of(state.range(0) == 0 ? kP : kWide);
    const int jobs = omp_get_max_threads();
    for (auto _ : state) {
        benchmark::DoNotOptimize(charmat::enumerate_charmats(faces, jobs));
    }
    state.counters["threads"] = jobs;
}

void BM_IsoMatrixSerial(benchmark::State& state) {
    const auto a = quotients_of(kP);
    const auto b = quotients_of(kQ);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cohomology::pairwise_iso_matrix_serial(a, b));
    }
}

void BM_IsoMatrixParallel(benchmark::State& state) {
    const auto a = quotients_of(kP);
    const auto b = quotients_of(kQ);
    const int jobs = omp_get_max_threads();
    for (auto _ : state) {
        benchmark::DoNotOptimize(cohomology::pairwise_iso_matrix(a, b, jobs));
    }
    state.counters["threads"] = jobs;
}

} // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsoMatrixSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IsoMatrixParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
