#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "tricone/skeleton.hpp"

using namespace tricone;

TEST_CASE("five-tetrahedron example counts") {
    Skeleton skel(testutil::fixture_tri("table2"));
    CHECK(skel.tet_count() == 5);
    CHECK(skel.edge_count() == 4);
    CHECK(skel.vertex_count() == 2);

    std::vector<int> genera;
    for (const auto& v : skel.vertices()) genera.push_back(v.link.genus());
    std::sort(genera.begin(), genera.end());
    CHECK(genera == std::vector<int>{1, 2});
    CHECK(skel.genus_sum() == 3);
    // T - E + V equals the total link genus.
    CHECK(skel.tet_count() - skel.edge_count() + skel.vertex_count() == skel.genus_sum());

    std::vector<int> valences;
    for (const auto& e : skel.edges()) valences.push_back(e.valence());
    std::sort(valences.begin(), valences.end());
    CHECK(valences == std::vector<int>{1, 5, 6, 18});
    // Edge valences sum to 6T: each tetrahedron carries six edges.
    CHECK(1 + 5 + 6 + 18 == 6 * skel.tet_count());
}

TEST_CASE("seven-tetrahedron example counts") {
    Skeleton skel(testutil::fixture_tri("table1"));
    CHECK(skel.tet_count() == 7);
    CHECK(skel.edge_count() == 7);
    CHECK(skel.vertex_count() == 1);
    CHECK(skel.vertices()[0].link.genus() == 1);
    CHECK(skel.tet_count() - skel.edge_count() + skel.vertex_count() == 1);

    int valence_sum = 0;
    for (const auto& e : skel.edges()) valence_sum += e.valence();
    CHECK(valence_sum == 6 * 7);
}

TEST_CASE("edge classes partition the 6T oriented edge representatives") {
    for (const char* name : {"table1", "table2"}) {
        Skeleton skel(testutil::fixture_tri(name));
        int total = 0;
        for (const auto& e : skel.edges()) total += e.valence();
        CHECK(total == 6 * skel.tet_count());
        // Every (tet, pair) appears in exactly one class.
        for (int t = 0; t < skel.tet_count(); ++t)
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b) CHECK(skel.edge_class_of(t, a, b) >= 0);
    }
}

TEST_CASE("vertex classes partition the 4T corners") {
    for (const char* name : {"table1", "table2"}) {
        Skeleton skel(testutil::fixture_tri(name));
        int total = 0;
        for (const auto& v : skel.vertices()) total += static_cast<int>(v.members.size());
        CHECK(total == 4 * skel.tet_count());
    }
}

TEST_CASE("link vertices are edge-class ends") {
    Skeleton skel(testutil::fixture_tri("table2"));
    CHECK(skel.link_vertex_count() == 2 * skel.edge_count());
    // Both ends of every edge class land on the links of its endpoint
    // vertex classes, and each end's multiplicity is positive.
    for (int e = 0; e < skel.edge_count(); ++e) {
        const auto& m = skel.edges()[e].members.front();
        CHECK(skel.vertex_class_of(m.tet, m.tail) >= 0);
        CHECK(skel.vertex_class_of(m.tet, m.head) >= 0);
    }
}

TEST_CASE("link surfaces are closed: 3F = 2E") {
    for (const char* name : {"table1", "table2"}) {
        Skeleton skel(testutil::fixture_tri(name));
        for (const auto& v : skel.vertices()) {
            // Each link is a triangulated closed surface, so Euler
            // characteristic is even and at most 2.
            int chi = v.link.euler();
            CHECK(chi % 2 == 0);
            CHECK(chi <= 2);
        }
    }
}
