#pragma once

#include <array>
#include <cstdint>

namespace tricone {

// A permutation of {0,1,2,3}; p[i] is the image of i.
using Perm4 = std::array<int, 4>;

// Vertices of each face, in increasing order.  Face f is the face
// opposite vertex FACE_OPPOSITE[f].
inline constexpr std::array<std::array<int, 3>, 4> FACE_VERTS = {{
    {0, 1, 2},
    {0, 1, 3},
    {0, 2, 3},
    {1, 2, 3},
}};
inline constexpr std::array<int, 4> FACE_OPPOSITE = {3, 2, 1, 0};

// The six edges of a tetrahedron in lexicographic order.
inline constexpr std::array<std::array<int, 2>, 6> EDGE_VERTS = {{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

// Quad slot separating each edge from its opposite:
// slot 0 <-> {01|23}, slot 1 <-> {02|13}, slot 2 <-> {03|12}.
inline constexpr std::array<int, 6> EDGE_TO_SLOT = {0, 1, 2, 2, 1, 0};

// Edge pairs carried by each quad slot (the edge and its opposite).
inline constexpr std::array<std::array<int, 2>, 3> SLOT_EDGES = {{
    {0, 5},  // 01 | 23
    {1, 4},  // 02 | 13
    {2, 3},  // 03 | 12
}};

constexpr int edge_index(int a, int b) {
    if (a > b) { int t = a; a = b; b = t; }
    for (int i = 0; i < 6; ++i)
        if (EDGE_VERTS[i][0] == a && EDGE_VERTS[i][1] == b) return i;
    return -1;
}

constexpr int slot_of_edge(int a, int b) { return EDGE_TO_SLOT[edge_index(a, b)]; }

constexpr bool is_perm4(const Perm4& p) {
    int seen = 0;
    for (int v : p) {
        if (v < 0 || v > 3) return false;
        seen |= 1 << v;
    }
    return seen == 0xF;
}

// True if p is an even permutation.
constexpr bool is_even(const Perm4& p) {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

constexpr Perm4 inverse(const Perm4& p) {
    Perm4 q{};
    for (int i = 0; i < 4; ++i) q[p[i]] = i;
    return q;
}

// (a ∘ b)[i] = a[b[i]]
constexpr Perm4 compose(const Perm4& a, const Perm4& b) {
    Perm4 c{};
    for (int i = 0; i < 4; ++i) c[i] = a[b[i]];
    return c;
}

constexpr Perm4 identity_perm() { return {0, 1, 2, 3}; }

// Parity of an arbitrary-length permutation given as images (used for
// small ad-hoc tuples elsewhere); true if even.
template <std::size_t N>
constexpr bool is_even_seq(const std::array<int, N>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
}

}  // namespace tricone
