#pragma once

#include <gmpxx.h>

#include <vector>

namespace tricone {

using Rational = mpq_class;
using Integer = mpz_class;
using RatMatrix = std::vector<std::vector<Rational>>;  // row-major
using IntMatrix = std::vector<std::vector<Integer>>;

// Reduce m to reduced row echelon form in place; returns the rank.
int rref(RatMatrix& m);

int rank_rational(RatMatrix m);

// Basis (as rows) of the right kernel {x : m x = 0}, with m given by
// rows of length `cols`.  Deterministic: one basis vector per free
// column in increasing column order, with a 1 in that column.
RatMatrix kernel_basis(RatMatrix m, int cols);

// Exact rank of an integer matrix by fraction-free (Bareiss)
// elimination.
int rank_exact(IntMatrix m);

template <typename T>
IntMatrix to_int_matrix(const std::vector<std::vector<T>>& m) {
    IntMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<Integer> r;
        r.reserve(row.size());
        for (const T& x : row) r.emplace_back(static_cast<long>(x));
        out.push_back(std::move(r));
    }
    return out;
}

template <typename T>
RatMatrix to_rat_matrix(const std::vector<std::vector<T>>& m) {
    RatMatrix out;
    out.reserve(m.size());
    for (const auto& row : m) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const T& x : row) r.emplace_back(static_cast<long>(x));
        out.push_back(std::move(r));
    }
    return out;
}

// Whether v lies in the row span (over the rationals) of m.
bool in_row_span(const RatMatrix& m, const std::vector<Rational>& v);

// Whether the row spans of a and b coincide.
bool same_row_span(const RatMatrix& a, const RatMatrix& b);

}  // namespace tricone
