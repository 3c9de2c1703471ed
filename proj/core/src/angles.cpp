#include "tricone/angles.hpp"

namespace tricone {

namespace {

RatMatrix constraint_rows(const QuadIncidence& inc) {
    const int t = inc.tet_count();
    const int e = inc.edge_count();
    const int q = 3 * t;
    RatMatrix m;
    m.reserve(static_cast<size_t>(t + e));
    for (int i = 0; i < t; ++i) {
        std::vector<Rational> row(q, Rational(0));
        for (int slot = 0; slot < 3; ++slot) row[quad_id(i, slot)] = 1;
        m.push_back(std::move(row));
    }
    for (int j = 0; j < e; ++j) {
        std::vector<Rational> row(q, Rational(0));
        for (int i = 0; i < t; ++i)
            for (int slot = 0; slot < 3; ++slot) row[quad_id(i, slot)] = inc(i, slot, j);
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace

RatMatrix tangential_basis(const QuadIncidence& inc) {
    return kernel_basis(constraint_rows(inc), 3 * inc.tet_count());
}

RatMatrix strong_tangential_basis(const QuadIncidence& inc,
                                  const std::vector<std::vector<int>>& curves) {
    RatMatrix m = constraint_rows(inc);
    const int q = 3 * inc.tet_count();
    for (const auto& ind : curves) {
        std::vector<Rational> row(q, Rational(0));
        for (int k = 0; k < q; ++k) row[k] = ind[k];
        m.push_back(std::move(row));
    }
    return kernel_basis(std::move(m), q);
}

std::vector<Rational> leading_trailing_edge(const QuadIncidence& inc, int e) {
    const int q = 3 * inc.tet_count();
    std::vector<Rational> w(q, Rational(0));
    for (int t = 0; t < inc.tet_count(); ++t)
        for (int slot = 0; slot < 3; ++slot)
            w[quad_id(t, slot)] = inc(t, (slot + 2) % 3, e) - inc(t, (slot + 1) % 3, e);
    return w;
}

std::vector<Rational> leading_trailing_curve(const std::vector<int>& ind) {
    const int q = static_cast<int>(ind.size());
    std::vector<Rational> w(q, Rational(0));
    for (int t = 0; 3 * t < q; ++t)
        for (int slot = 0; slot < 3; ++slot)
            w[quad_id(t, slot)] =
                ind[quad_id(t, (slot + 2) % 3)] - ind[quad_id(t, (slot + 1) % 3)];
    return w;
}

Rational pairing(const std::vector<int>& ind, const std::vector<Rational>& w) {
    Rational s(0);
    for (size_t q = 0; q < ind.size(); ++q)
        if (ind[q] != 0) s += Rational(ind[q]) * w[q];
    return s;
}

}  // namespace tricone
