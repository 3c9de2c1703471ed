#include <benchmark/benchmark.h>

#include "tricone/angles.hpp"
#include "tricone/curvature.hpp"
#include "tricone/fixtures.hpp"
#include "tricone/geometry.hpp"
#include "tricone/peripheral.hpp"
#include "tricone/random_gen.hpp"
#include "tricone/skeleton.hpp"
#include "tricone/solver.hpp"

using namespace tricone;

namespace {

const fixtures::Fixture& fx() { return fixtures::fixture("table2"); }

Shapes reference_shapes() {
    Shapes s;
    s.convention = fx().convention;
    s.base = fx().z0;
    return s;
}

void bm_parse_and_skeleton(benchmark::State& state) {
    const std::string text = fx().triangulation_text;
    for (auto _ : state) {
        Skeleton skel(Triangulation::parse(text));
        benchmark::DoNotOptimize(skel.genus_sum());
    }
}
BENCHMARK(bm_parse_and_skeleton);

void bm_log_curvature(benchmark::State& state) {
    Skeleton skel(Triangulation::parse(fx().triangulation_text));
    QuadIncidence inc(skel);
    Shapes s = reference_shapes();
    for (auto _ : state) benchmark::DoNotOptimize(log_curvature(inc, s));
}
BENCHMARK(bm_log_curvature);

void bm_curvature_jacobian(benchmark::State& state) {
    Skeleton skel(Triangulation::parse(fx().triangulation_text));
    QuadIncidence inc(skel);
    Shapes s = reference_shapes();
    for (auto _ : state) benchmark::DoNotOptimize(log_curvature_jacobian(inc, s));
}
BENCHMARK(bm_curvature_jacobian);

void bm_tangential_basis(benchmark::State& state) {
    Skeleton skel(Triangulation::parse(fx().triangulation_text));
    QuadIncidence inc(skel);
    for (auto _ : state) benchmark::DoNotOptimize(tangential_basis(inc));
}
BENCHMARK(bm_tangential_basis);

void bm_solve(benchmark::State& state) {
    Skeleton skel(Triangulation::parse(fx().triangulation_text));
    QuadIncidence inc(skel);
    CurvatureTarget target;
    target.u.resize(fx().u0.size());
    for (std::size_t k = 0; k < fx().u0.size(); ++k)
        target.u[fx().edge_label_to_class[k]] = fx().u0[k];
    target.curves = fx().longitudes;
    target.t = fx().t0;
    Shapes start = reference_shapes();
    for (auto& w : start.base) w += Complex(0.05, 0.05);
    for (auto _ : state) {
        SolveResult res = solve_curvature(inc, target, start);
        benchmark::DoNotOptimize(res.residual);
    }
}
BENCHMARK(bm_solve);

void bm_lobachevsky(benchmark::State& state) {
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lobachevsky(x));
        x += 1e-4;
        if (x > 3.0) x = 0.1;
    }
}
BENCHMARK(bm_lobachevsky);

void bm_intersection_number(benchmark::State& state) {
    Rng rng(421);
    Triangulation tri = random_triangulation(5, rng);
    Skeleton skel(tri);
    int vc = 0;
    Path a = random_closed_curve(tri, skel, vc, rng);
    Path b = random_closed_curve(tri, skel, vc, rng);
    for (auto _ : state) benchmark::DoNotOptimize(intersection_number(skel, a, b));
}
BENCHMARK(bm_intersection_number);

}  // namespace

BENCHMARK_MAIN();
