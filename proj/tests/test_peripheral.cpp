#include <doctest.h>

#include "helpers.hpp"
#include "tricone/angles.hpp"
#include "tricone/curvature.hpp"
#include "tricone/errors.hpp"
#include "tricone/peripheral.hpp"
#include "tricone/random_gen.hpp"
#include "tricone/skeleton.hpp"

using namespace tricone;

TEST_CASE("path validation") {
    Triangulation tri = testutil::fixture_tri("table2");
    Skeleton skel(tri);

    CHECK_THROWS_AS(validate_path(skel, {}), InvalidPath);
    // Face indices out of range.
    CHECK_THROWS_AS(validate_path(skel, {{0, 0, 7, 1}}), InvalidPath);
    // face_in does not contain the corner vertex, so it is not a side
    // of that corner's link triangle.
    CHECK_THROWS_AS(validate_path(skel, {{0, 3, 0, 1}}), InvalidPath);

    // A legitimate loop validates and stays on one link.
    Path loop = edge_endpoint_loop(skel, 0, true);
    validate_path(skel, loop);
    CHECK(path_vertex_class(skel, loop) >= 0);
}

TEST_CASE("edge endpoint loops realize incidence columns") {
    Rng rng(41);
    for (int trial = 0; trial < 6; ++trial) {
        Triangulation tri = random_triangulation(1 + static_cast<int>(uniform_below(rng, 5)), rng);
        Skeleton skel(tri);
        QuadIncidence inc(skel);
        for (int e = 0; e < skel.edge_count(); ++e) {
            for (bool tail : {true, false}) {
                Path loop = edge_endpoint_loop(skel, e, tail);
                auto ind = index_vector(skel, loop);
                for (int t = 0; t < skel.tet_count(); ++t)
                    for (int slot = 0; slot < 3; ++slot)
                        CHECK(ind[quad_id(t, slot)] == inc(t, slot, e));
            }
        }
    }
}

TEST_CASE("reversal negates the index vector") {
    Rng rng(43);
    Triangulation tri = random_triangulation(4, rng);
    Skeleton skel(tri);
    for (int trial = 0; trial < 10; ++trial) {
        Path p = random_closed_curve(tri, rng);
        auto ind = index_vector(skel, p);
        auto rev = index_vector(skel, reversed_path(p));
        REQUIRE(ind.size() == rev.size());
        for (std::size_t i = 0; i < ind.size(); ++i) CHECK(rev[i] == -ind[i]);
    }
}

TEST_CASE("intersection numbers are antisymmetric") {
    Rng rng(47);
    for (int trial = 0; trial < 10; ++trial) {
        Triangulation tri = random_triangulation(1 + static_cast<int>(uniform_below(rng, 4)), rng);
        Skeleton skel(tri);
        int vc = static_cast<int>(uniform_below(rng, skel.vertex_count()));
        Path a = random_closed_curve(tri, skel, vc, rng);
        Path b = random_closed_curve(tri, skel, vc, rng);
        CHECK(intersection_number(skel, a, b) == -intersection_number(skel, b, a));
        CHECK(intersection_number(skel, a, a) == 0);
    }
}

TEST_CASE("curves on different links refuse to intersect") {
    Triangulation tri = testutil::fixture_tri("table2");
    Skeleton skel(tri);
    REQUIRE(skel.vertex_count() == 2);
    Rng rng(53);
    Path a = random_closed_curve(tri, skel, 0, rng);
    Path b = random_closed_curve(tri, skel, 1, rng);
    CHECK_THROWS_AS(intersection_number(skel, a, b), NotSameLink);
}

TEST_CASE("pairing with deformation vectors doubles the intersection number") {
    Rng rng(59);
    int checked = 0;
    for (int trial = 0; trial < 12; ++trial) {
        Triangulation tri = random_triangulation(1 + static_cast<int>(uniform_below(rng, 5)), rng);
        Skeleton skel(tri);
        for (int k = 0; k < 6; ++k) {
            int vc = static_cast<int>(uniform_below(rng, skel.vertex_count()));
            Path a = random_closed_curve(tri, skel, vc, rng);
            Path b = random_closed_curve(tri, skel, vc, rng);
            long iota = intersection_number(skel, a, b);
            Rational p =
                pairing(index_vector(skel, a), leading_trailing_curve(index_vector(skel, b)));
            CHECK(p == Rational(2 * iota));
            ++checked;
        }
    }
    CHECK(checked >= 50);
}

TEST_CASE("longitude holonomies at the reference point") {
    const auto& f = fixtures::fixture("table2");
    Triangulation tri = Triangulation::parse(f.triangulation_text);
    Skeleton skel(tri);
    Shapes s;
    s.convention = f.convention;
    s.base = f.z0;

    std::vector<Complex> h;
    for (const auto& ind : f.longitudes) h.push_back(log_holonomy(ind, s));
    CHECK(testutil::sup_dev(h, f.t0) < 1e-10);
}
