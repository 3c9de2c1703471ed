#include <doctest.h>

#include <cmath>
#include <functional>

#include "helpers.hpp"
#include "tricone/angles.hpp"
#include "tricone/curvature.hpp"
#include "tricone/fixtures.hpp"
#include "tricone/geometry.hpp"
#include "tricone/random_gen.hpp"
#include "tricone/skeleton.hpp"

using namespace tricone;

namespace {

// Adaptive Simpson quadrature, a deliberately independent reference.
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6 * (fa + 4 * flm + fm);
    double right = (b - m) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15 * tol)
        return left + right + (left + right - whole) / 15;
    return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
           simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    double m = 0.5 * (a + b);
    double fa = f(a), fm = f(m), fb = f(b);
    double whole = (b - a) / 6 * (fa + 4 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

// L(t) = -int_0^t log|2 sin u| du with the logarithmic singularity
// integrated in closed form:  -int log(2u) du = t(1 - log 2t), and the
// remainder -int log(sin u / u) du is smooth.
double lob_reference(double t) {
    if (t == 0) return 0;
    auto smooth = [](double u) {
        if (std::abs(u) < 1e-8) return u * u / 6;  // log(u/sin u) ~ u^2/6
        return std::log(u / std::sin(u));
    };
    return t * (1 - std::log(2 * t)) + integrate(smooth, 0, t, 1e-14);
}

constexpr double V3 = 1.0149416064096536;  // regular ideal tetrahedron

}  // namespace

TEST_CASE("Lobachevsky function against quadrature") {
    CHECK(std::abs(lobachevsky(PI / 6) - lob_reference(PI / 6)) < 1e-11);
    for (double t : {0.05, 0.3, 0.7, 1.0, 1.4, 1.55}) {
        CHECK(std::abs(lobachevsky(t) - lob_reference(t)) < 1e-11);
    }
    CHECK(lobachevsky(PI / 6) == doctest::Approx(V3 / 2).epsilon(1e-12));
}

TEST_CASE("Lobachevsky symmetry, periodicity, duplication") {
    Rng rng(61);
    for (int k = 0; k < 40; ++k) {
        double t = uniform_real(rng, -6.0, 6.0);
        CHECK(std::abs(lobachevsky(-t) + lobachevsky(t)) < 1e-11);
        CHECK(std::abs(lobachevsky(t + PI) - lobachevsky(t)) < 1e-11);
        CHECK(std::abs(lobachevsky(2 * t) - 2 * lobachevsky(t) - 2 * lobachevsky(t + PI / 2)) <
              1e-11);
    }
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(PI / 2)) < 1e-13);  // odd and pi-periodic forces L(pi/2)=0
}

TEST_CASE("angles of shapes and back") {
    Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        int tets = 1 + static_cast<int>(uniform_below(rng, 5));
        Convention conv{std::vector<int>(tets, static_cast<int>(uniform_below(rng, 3))),
                        uniform_below(rng, 2) ? 1 : -1};
        Shapes s = random_shapes(tets, conv, rng);
        auto x = angles_of(s);
        REQUIRE(static_cast<int>(x.size()) == 3 * tets);
        for (int t = 0; t < tets; ++t) {
            CHECK(x[quad_id(t, 0)] + x[quad_id(t, 1)] + x[quad_id(t, 2)] ==
                  doctest::Approx(PI).epsilon(1e-12));
            for (int slot = 0; slot < 3; ++slot) {
                CHECK(x[quad_id(t, slot)] > 0);
                CHECK(x[quad_id(t, slot)] < PI);
            }
        }
        Shapes back = shapes_from_angles(x, conv);
        for (int t = 0; t < tets; ++t) CHECK(std::abs(back.base[t] - s.base[t]) < 1e-12);
    }
}

TEST_CASE("volume of the regular reference shapes") {
    const auto& f = fixtures::fixture("table2");
    Shapes s;
    s.convention = f.convention;
    s.base = f.z0;  // all parameters exp(i pi/3)
    CHECK(volume(angles_of(s)) == doctest::Approx(5 * V3).epsilon(1e-12));
}

TEST_CASE("volume derivative along tangential directions") {
    Triangulation tri = testutil::fixture_tri("table2");
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    RatMatrix tas = tangential_basis(inc);
    Rng rng(71);
    for (int trial = 0; trial < 5; ++trial) {
        Shapes s = random_shapes(5, Convention::standard(5), rng);
        auto x = angles_of(s);
        for (const auto& row : tas) {
            std::vector<double> w(row.size());
            for (std::size_t i = 0; i < row.size(); ++i) w[i] = row[i].get_d();
            double analytic = volume_derivative(x, w);
            const double h = 1e-6;
            auto xp = x, xm = x;
            for (std::size_t i = 0; i < x.size(); ++i) {
                xp[i] += h * w[i];
                xm[i] -= h * w[i];
            }
            double fd = (volume(xp) - volume(xm)) / (2 * h);
            CHECK(std::abs(fd - analytic) < 1e-6);
        }
    }
}

TEST_CASE("volume is concave along tangential directions") {
    for (const char* name : {"table1", "table2"}) {
        Triangulation tri = testutil::fixture_tri(name);
        Skeleton skel(tri);
        QuadIncidence inc(skel);
        RatMatrix tas = tangential_basis(inc);
        Rng rng(73);
        for (int trial = 0; trial < 20; ++trial) {
            Shapes s = random_shapes(skel.tet_count(), Convention::standard(skel.tet_count()), rng);
            auto x = angles_of(s);
            auto hess = volume_hessian_diag(x);
            for (std::size_t i = 0; i < x.size(); ++i)
                CHECK(hess[i] == doctest::Approx(-1.0 / std::tan(x[i])).epsilon(1e-12));
            for (const auto& row : tas) {
                std::vector<double> w(row.size());
                double norm = 0;
                for (std::size_t i = 0; i < row.size(); ++i) {
                    w[i] = row[i].get_d();
                    norm += w[i] * w[i];
                }
                REQUIRE(norm > 0);
                CHECK(volume_second_derivative(x, w) < 0);
            }
        }
    }
}
