#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tricone/curvature.hpp"
#include "tricone/fixtures.hpp"
#include "tricone/random_gen.hpp"
#include "tricone/skeleton.hpp"
#include "tricone/solver.hpp"

using namespace tricone;

namespace {

struct Setup {
    const fixtures::Fixture& f;
    Triangulation tri;
    Skeleton skel;
    QuadIncidence inc;
    Setup()
        : f(fixtures::fixture("table2")),
          tri(Triangulation::parse(f.triangulation_text)),
          skel(tri),
          inc(skel) {}

    CurvatureTarget target0() const {
        CurvatureTarget t;
        t.u.resize(f.u0.size());
        for (std::size_t k = 0; k < f.u0.size(); ++k) t.u[f.edge_label_to_class[k]] = f.u0[k];
        t.curves = f.longitudes;
        t.t = f.t0;
        return t;
    }

    Shapes reference() const {
        Shapes s;
        s.convention = f.convention;
        s.base = f.z0;
        return s;
    }
};

}  // namespace

TEST_CASE("recovery from perturbed starts") {
    Setup su;
    CurvatureTarget target = su.target0();
    Rng rng(79);
    for (int trial = 0; trial < 5; ++trial) {
        Shapes start = su.reference();
        for (auto& w : start.base)
            w += Complex(uniform_real(rng, -0.1, 0.1), uniform_real(rng, -0.1, 0.1));
        start.validate();
        SolveResult res = solve_curvature(su.inc, target, start);
        REQUIRE(res.status == SolveStatus::Converged);
        CHECK(res.iterations <= 30);
        CHECK(res.residual < 1e-12);
        CHECK(testutil::sup_dev(res.shapes.base, su.f.z0) < 1e-8);

        // Quadratic tail: once the residual is small it squares.
        const auto& h = res.residual_history;
        for (std::size_t k = 0; k + 1 < h.size(); ++k)
            if (h[k] < 1e-3) CHECK(h[k + 1] <= std::max(10 * h[k] * h[k], 1e-13));
    }
}

TEST_CASE("under-determined problem is reported") {
    Setup su;
    CurvatureTarget target = su.target0();
    target.curves.clear();
    target.t.clear();
    // Without holonomy rows the Jacobian has rank T - genus sum < T,
    // which the first iteration detects (a start at the exact solution
    // would converge without ever assembling the Jacobian).
    Shapes start = su.reference();
    for (auto& w : start.base) w += Complex(0.05, 0.05);
    SolveResult res = solve_curvature(su.inc, target, start);
    CHECK(res.status == SolveStatus::RankDeficientJacobian);
}

TEST_CASE("infeasible total curvature is rejected up front") {
    Setup su;
    CurvatureTarget target = su.target0();
    target.u[0] += Complex(0.0, 0.1);
    SolveResult res = solve_curvature(su.inc, target, su.reference());
    CHECK(res.status == SolveStatus::InfeasibleTarget);
    CHECK(res.iterations == 0);
}

TEST_CASE("iteration budget is respected") {
    Setup su;
    CurvatureTarget target = su.target0();
    // A target the iteration cannot reach in one step.
    for (auto& t : target.t) t += Complex(0.4, 0.0);
    SolveOptions opt;
    opt.max_iterations = 1;
    SolveResult res = solve_curvature(su.inc, target, su.reference(), opt);
    CHECK((res.status == SolveStatus::MaxIterations || res.status == SolveStatus::LeftDomain));
    CHECK(res.iterations <= 1);
}

TEST_CASE("gauge independence of the solution") {
    // Solving in a different quad convention yields the same shapes
    // after rebasing.
    Setup su;
    CurvatureTarget target = su.target0();

    Shapes start1 = su.reference();
    for (auto& w : start1.base) w += Complex(0.03, 0.02);
    SolveResult res1 = solve_curvature(su.inc, target, start1);
    REQUIRE(res1.status == SolveStatus::Converged);

    Shapes start2 = rebase(start1, Convention::standard(5));
    SolveResult res2 = solve_curvature(su.inc, target, start2);
    REQUIRE(res2.status == SolveStatus::Converged);

    Shapes back = rebase(res2.shapes, su.f.convention);
    CHECK(testutil::sup_dev(res1.shapes.base, back.base) < 1e-9);
}

TEST_CASE("holonomy continuation loop returns to the start") {
    Setup su;
    std::vector<CurvatureTarget> legs;
    const int steps = 16;
    for (int k = 1; k <= steps; ++k) {
        double phi = 2 * PI * k / steps;
        CurvatureTarget t = su.target0();
        t.t[0] = Complex(0.1 * std::sin(phi), 0.1 * (1 - std::cos(phi)));
        legs.push_back(t);
    }
    TraceResult res = trace_curvature(su.inc, legs, su.reference());
    REQUIRE(res.status == SolveStatus::Converged);
    REQUIRE(res.points.size() == static_cast<std::size_t>(steps));
    CHECK(testutil::sup_dev(res.points.back().base, su.f.z0) < 1e-8);
}

TEST_CASE("continuation failure reports the failed leg") {
    Setup su;
    std::vector<CurvatureTarget> legs;
    CurvatureTarget bad = su.target0();
    bad.u[0] += Complex(0.0, 1.0);  // infeasible leg
    legs.push_back(su.target0());
    legs.push_back(bad);
    TraceResult res = trace_curvature(su.inc, legs, su.reference());
    CHECK(res.status != SolveStatus::Converged);
    CHECK(res.failed_index == 1);
    CHECK(res.points.size() == 1);
}
