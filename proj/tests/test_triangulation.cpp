#include <doctest.h>

#include "helpers.hpp"
#include "tricone/errors.hpp"
#include "tricone/triangulation.hpp"

using namespace tricone;
using testutil::replace_first;

TEST_CASE("parse and serialize round-trip") {
    for (const char* name : {"table1", "table2"}) {
        Triangulation tri = testutil::fixture_tri(name);
        Triangulation again = Triangulation::parse(tri.serialize());
        CHECK(again == tri);
        CHECK(again.serialize() == tri.serialize());
    }
}

TEST_CASE("parser accepts comments and blank lines") {
    std::string text = "# heading\n\n" + fixtures::fixture("table2").triangulation_text + "\n\n";
    CHECK(Triangulation::parse(text).tet_count() == 5);
}

TEST_CASE("parse errors") {
    const std::string good = fixtures::fixture("table2").triangulation_text;

    CHECK_THROWS_AS(Triangulation::parse(""), ParseError);
    CHECK_THROWS_AS(Triangulation::parse("nonsense"), ParseError);
    // Missing a field.
    CHECK_THROWS_AS(Triangulation::parse("0 | 0 (123) | 0 (032)"), ParseError);
    // Repeated vertex label inside a gluing entry.
    CHECK_THROWS_AS(Triangulation::parse(replace_first(good, "(032)", "(033)")), ParseError);
    // Vertex label out of range.
    CHECK_THROWS_AS(Triangulation::parse(replace_first(good, "(032)", "(045)")), ParseError);
    // Duplicate row index.
    CHECK_THROWS_AS(Triangulation::parse(replace_first(good, "\n1 |", "\n0 |")), ParseError);
    // Row index out of range.
    CHECK_THROWS_AS(Triangulation::parse(replace_first(good, "\n4 |", "\n9 |")), ParseError);
}

TEST_CASE("gluing validation taxonomy") {
    const std::string good = fixtures::fixture("table2").triangulation_text;

    // Even vertex map: orientation cannot be preserved.
    CHECK_THROWS_AS(Triangulation::parse(replace_first(good, "2 (032)", "2 (031)")), NotOrientable);
    // Reference to a tetrahedron that does not exist.
    CHECK_THROWS_AS(Triangulation::parse(replace_first(good, "2 (032)", "9 (032)")), UnpairedFace);
    // Redirected gluing: the partner face no longer points back.
    CHECK_THROWS_AS(Triangulation::parse(replace_first(good, "2 (032)", "3 (032)")),
                    NotInvolutive);
}

TEST_CASE("gluing accessors") {
    Triangulation tri = testutil::fixture_tri("table2");
    CHECK(tri.tet_count() == 5);
    for (int t = 0; t < tri.tet_count(); ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(t, f);
            // The partner of the partner is the original face.
            const Gluing& back = tri.gluing(g.tet, g.target_face(f));
            CHECK(back.tet == t);
            CHECK(back.target_face(g.target_face(f)) == f);
            for (int v = 0; v < 4; ++v) CHECK(back.perm[g.perm[v]] == v);
        }
}
