#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tricone/curvature.hpp"
#include "tricone/errors.hpp"
#include "tricone/fixtures.hpp"
#include "tricone/phi0.hpp"
#include "tricone/random_gen.hpp"
#include "tricone/skeleton.hpp"

using namespace tricone;

TEST_CASE("curve value at u = i is the regular reference point") {
    GaussianRational i(0, 1);
    auto values = curve_values_exact(i);
    REQUIRE(values.size() == 7);

    // Known exact values of the seven components.
    std::vector<GaussianRational> expected = {
        {0, 1},
        {Rational(1, 2), Rational(1, 2)},
        {0, 1},
        {1, Rational(1, 2)},
        {Rational(3, 5), Rational(1, 5)},
        {0, 1},
        {Rational(-1, 2), Rational(1, 2)},
    };
    for (int k = 0; k < 7; ++k) CHECK(values[k] == expected[k]);

    // They coincide with the stored reference shapes of the
    // 7-tetrahedron example.
    const auto& f = fixtures::fixture("table1");
    for (int k = 0; k < 7; ++k) CHECK(std::abs(values[k].to_complex() - f.z0[k]) < 1e-15);
}

TEST_CASE("exact and floating evaluation agree") {
    Rng rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        // Random rational points in the upper half plane.
        long a = static_cast<long>(uniform_below(rng, 41)) - 20;
        long b = static_cast<long>(uniform_below(rng, 20)) + 1;
        GaussianRational u(Rational(a, 10), Rational(b, 10));
        Complex uc = u.to_complex();
        for (const auto& comp : curve_components()) {
            GaussianRational exact_val;
            Complex approx;
            bool exact_pole = false, approx_pole = false;
            try {
                exact_val = eval(comp, u);
            } catch (const PoleError&) {
                exact_pole = true;
            }
            try {
                approx = eval(comp, uc);
            } catch (const PoleError&) {
                approx_pole = true;
            }
            REQUIRE(exact_pole == approx_pole);
            if (!exact_pole) CHECK(std::abs(exact_val.to_complex() - approx) < 1e-9);
        }
    }
}

TEST_CASE("conjugate companion mirrors the curve") {
    // The companion has conjugated coefficients, so its value at
    // conj(u) is the conjugate of the curve's value at u.
    GaussianRational u(Rational(1, 3), Rational(5, 7));
    auto main_vals = curve_values_exact(u);
    const auto& companion = conjugate_curve_components();
    for (int k = 0; k < 7; ++k) {
        GaussianRational mirrored = eval(companion[k], u.conj()).conj();
        CHECK(mirrored == main_vals[k]);
    }
}

TEST_CASE("poles raise an error") {
    // Exact pole locations of individual components.
    CHECK_THROWS_AS(curve_values_exact(GaussianRational(0, 0)), PoleError);
    CHECK_THROWS_AS(curve_values_exact(GaussianRational(1, 0)), PoleError);
    CHECK_THROWS_AS(curve_values_exact(GaussianRational(1, 1)), PoleError);
    CHECK_THROWS_AS(curve_values_exact(GaussianRational(Rational(1, 2), Rational(1, 2))),
                    PoleError);
    CHECK_THROWS_AS(eval(curve_components()[1], Complex(1.0, 1.0)), PoleError);
    // Near but not at a pole evaluation is fine.
    CHECK_NOTHROW(curve_values_exact(GaussianRational(Rational(999, 1000), Rational(1, 1000))));
}

TEST_CASE("positive orientation at reference, violated far away") {
    CHECK(positively_oriented_at(GaussianRational(0, 1)));
    CHECK(positively_oriented_at(Complex(0.0, 1.0)));
    // Lower half plane input produces some non-positive component.
    CHECK(!positively_oriented_at(Complex(0.0, -1.0)));
    // Far on the real axis everything degenerates.
    CHECK(!positively_oriented_at(Complex(50.0, 0.0)));
}

TEST_CASE("positivity region census") {
    RegionScan scan = scan_positive_region();
    CHECK(scan.nx == 20);
    CHECK(scan.ny == 10);
    CHECK(scan.inside_count == 90);
    CHECK(scan.components == 1);
    CHECK(scan.holes == 0);
    CHECK(scan.simply_connected());
    REQUIRE(scan.samples.size() == static_cast<std::size_t>(scan.inside_count));
    // Every reported sample is in the open upper half strip and
    // genuinely positively oriented.
    for (auto [x, y] : scan.samples) {
        CHECK(y > 0);
        CHECK(positively_oriented_at(Complex(x, y)));
    }
}

TEST_CASE("curve points satisfy the gluing equations") {
    const auto& f = fixtures::fixture("table1");
    Triangulation tri = Triangulation::parse(f.triangulation_text);
    Skeleton skel(tri);
    QuadIncidence inc(skel);

    RegionScan scan = scan_positive_region();
    REQUIRE(scan.samples.size() >= 20);
    int used = 0;
    for (std::size_t k = 0; k < scan.samples.size() && used < 20; k += 4, ++used) {
        auto [x, y] = scan.samples[k];
        Shapes s;
        s.convention = f.convention;
        s.base = curve_values(Complex(x, y));
        s.validate();
        auto c = complex_curvature(inc, s);
        for (const auto& ck : c) CHECK(std::abs(ck - 1.0) < 1e-10);
        auto g = log_curvature(inc, s);
        for (const auto& gk : g) CHECK(std::abs(gk - Complex(0.0, 2 * PI)) < 1e-9);
    }
}
