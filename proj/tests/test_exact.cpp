#include <doctest.h>

#include "tricone/exact.hpp"

using namespace tricone;

TEST_CASE("rational rank and kernel") {
    // rank 2 matrix with a 1-dimensional kernel in 3 columns.
    RatMatrix m = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(rank_rational(m) == 2);
    RatMatrix k = kernel_basis(m, 3);
    REQUIRE(k.size() == 1);
    // Kernel vector satisfies m v = 0.
    for (const auto& row : m) {
        Rational dot = 0;
        for (std::size_t i = 0; i < row.size(); ++i) dot += row[i] * k[0][i];
        CHECK(dot == 0);
    }
}

TEST_CASE("integer rank") {
    IntMatrix id = {{1, 0}, {0, 1}};
    CHECK(rank_exact(id) == 2);
    IntMatrix z = {{0, 0}, {0, 0}};
    CHECK(rank_exact(z) == 0);
    IntMatrix wide = {{2, 4, 6}, {1, 2, 3}};
    CHECK(rank_exact(wide) == 1);
}

TEST_CASE("row span membership") {
    RatMatrix basis = {{1, 0, 1}, {0, 1, 1}};
    CHECK(in_row_span(basis, {1, 1, 2}));
    CHECK(in_row_span(basis, {Rational(1, 2), 0, Rational(1, 2)}));
    CHECK(!in_row_span(basis, {1, 0, 0}));
    CHECK(same_row_span(basis, RatMatrix{{1, 1, 2}, {1, -1, 0}}));
    CHECK(!same_row_span(basis, RatMatrix{{1, 0, 1}}));
}

TEST_CASE("matrix conversions") {
    std::vector<std::vector<int>> m = {{1, -2}, {3, 4}};
    IntMatrix im = to_int_matrix(m);
    CHECK(im[0][1] == -2);
    RatMatrix rm = to_rat_matrix(m);
    CHECK(rm[1][0] == 3);
}

TEST_CASE("exact arithmetic has no rounding") {
    // A matrix that defeats double-precision rank detection: rows
    // nearly parallel with denominators of very different size.
    Rational tiny(1, 1000000000);
    RatMatrix m = {{1, 1}, {1, 1 + tiny}};
    CHECK(rank_rational(m) == 2);
    RatMatrix m2 = {{1, 1}, {1, 1}};
    CHECK(rank_rational(m2) == 1);
}
