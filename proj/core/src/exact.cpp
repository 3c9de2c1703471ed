#include "tricone/exact.hpp"

#include <algorithm>

namespace tricone {

int rref(RatMatrix& m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = 1 / m[rank][col];
        for (int c = col; c < cols; ++c) m[rank][c] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (int c = col; c < cols; ++c) m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

int rank_rational(RatMatrix m) { return rref(m); }

RatMatrix kernel_basis(RatMatrix m, int cols) {
    int rank = rref(m);
    // pivot_col[r] = column of the pivot in row r
    std::vector<int> pivot_col(rank, -1);
    std::vector<bool> is_pivot(cols, false);
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (m[r][c] != 0) {
                pivot_col[r] = c;
                is_pivot[c] = true;
                break;
            }
        }
    }
    RatMatrix basis;
    for (int j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rational> v(cols, Rational(0));
        v[j] = 1;
        for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_exact(IntMatrix m) {
    if (m.empty() || m[0].empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    Integer prev(1);
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int c = col + 1; c < cols; ++c) {
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

bool in_row_span(const RatMatrix& m, const std::vector<Rational>& v) {
    RatMatrix a = m;
    int r1 = rref(a);
    RatMatrix b = m;
    b.push_back(v);
    return rank_rational(std::move(b)) == r1;
}

bool same_row_span(const RatMatrix& a, const RatMatrix& b) {
    int ra = rank_rational(a);
    int rb = rank_rational(b);
    if (ra != rb) return false;
    RatMatrix both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank_rational(std::move(both)) == ra;
}

}  // namespace tricone
