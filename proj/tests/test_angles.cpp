#include <doctest.h>

#include "helpers.hpp"
#include "tricone/angles.hpp"
#include "tricone/curvature.hpp"
#include "tricone/fixtures.hpp"
#include "tricone/skeleton.hpp"

using namespace tricone;

namespace {

struct Setup {
    Triangulation tri;
    Skeleton skel;
    QuadIncidence inc;
    explicit Setup(const char* name)
        : tri(testutil::fixture_tri(name)), skel(tri), inc(skel) {}
};

}  // namespace

TEST_CASE("tangential structure dimension") {
    for (const char* name : {"table1", "table2"}) {
        Setup s(name);
        const int T = s.skel.tet_count(), E = s.skel.edge_count(), V = s.skel.vertex_count();
        RatMatrix tas = tangential_basis(s.inc);
        CHECK(static_cast<int>(tas.size()) == V - E + 2 * T);
        CHECK(static_cast<int>(tas.size()) == 8);

        // Every basis vector kills the per-tet sums and edge sums.
        for (const auto& w : tas) {
            for (int t = 0; t < T; ++t)
                CHECK(w[quad_id(t, 0)] + w[quad_id(t, 1)] + w[quad_id(t, 2)] == 0);
            for (int e = 0; e < E; ++e) {
                Rational sum = 0;
                for (int t = 0; t < T; ++t)
                    for (int slot = 0; slot < 3; ++slot)
                        sum += Rational(s.inc(t, slot, e)) * w[quad_id(t, slot)];
                CHECK(sum == 0);
            }
        }
    }
}

TEST_CASE("edge deformation vectors") {
    for (const char* name : {"table1", "table2"}) {
        Setup s(name);
        const int T = s.skel.tet_count(), E = s.skel.edge_count();
        RatMatrix tas = tangential_basis(s.inc);
        RatMatrix qe;
        for (int e = 0; e < E; ++e) {
            qe.push_back(leading_trailing_edge(s.inc, e));
            CHECK(in_row_span(tas, qe.back()));
        }
        CHECK(rank_rational(qe) == T - s.skel.genus_sum());
    }
}

TEST_CASE("strong structure of the 5-tetrahedron example") {
    Setup s("table2");
    const auto& f = fixtures::fixture("table2");
    RatMatrix tas = tangential_basis(s.inc);
    RatMatrix stas = strong_tangential_basis(s.inc, f.longitudes);
    CHECK(static_cast<int>(stas.size()) == 5);

    // Q_e and Q_curve all lie in the strong structure, and together
    // they span it.
    RatMatrix q;
    for (int e = 0; e < s.skel.edge_count(); ++e)
        q.push_back(leading_trailing_edge(s.inc, e));
    for (const auto& ind : f.longitudes) q.push_back(leading_trailing_curve(ind));
    for (const auto& v : q) {
        CHECK(in_row_span(tas, v));
        CHECK(in_row_span(stas, v));
    }
    CHECK(rank_rational(q) == 5);

    RatMatrix joined = stas;
    for (const auto& v : q) joined.push_back(v);
    CHECK(rank_rational(joined) == 5);  // span{Q} = STAS

    // The pairing of each curve with each curve deformation vanishes.
    for (const auto& a : f.longitudes)
        for (const auto& b : f.longitudes)
            CHECK(pairing(a, leading_trailing_curve(b)) == 0);
}

TEST_CASE("pairing is linear in the deformation argument") {
    Setup s("table2");
    const auto& f = fixtures::fixture("table2");
    const auto& a = f.longitudes[0];
    auto q1 = leading_trailing_edge(s.inc, 0);
    auto q2 = leading_trailing_edge(s.inc, 1);
    std::vector<Rational> sum(q1.size());
    for (std::size_t i = 0; i < q1.size(); ++i) sum[i] = q1[i] + 2 * q2[i];
    CHECK(pairing(a, sum) == pairing(a, q1) + 2 * pairing(a, q2));
}
