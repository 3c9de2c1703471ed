#include "tricone/random_gen.hpp"

#include <algorithm>
#include <complex>
#include <limits>
#include <utility>

#include "tricone/errors.hpp"

namespace tricone {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
    if (n == 0) throw Error("uniform_below: empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / n * n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

double uniform_real(Rng& rng, double lo, double hi) {
    // 53 uniform bits, as in generate_canonical but fixed across
    // library implementations.
    const double unit = static_cast<double>(rng() >> 11) * 0x1p-53;
    return lo + (hi - lo) * unit;
}

Triangulation random_triangulation(int tet_count, Rng& rng) {
    if (tet_count <= 0) throw Error("random_triangulation: tet_count must be positive");
    std::vector<std::pair<int, int>> faces;
    faces.reserve(4 * static_cast<std::size_t>(tet_count));
    for (int t = 0; t < tet_count; ++t)
        for (int f = 0; f < 4; ++f) faces.emplace_back(t, f);
    for (std::size_t k = faces.size(); k > 1; --k)
        std::swap(faces[k - 1], faces[uniform_below(rng, k)]);

    std::vector<std::array<Gluing, 4>> gluings(tet_count);
    for (std::size_t k = 0; k + 1 < faces.size(); k += 2) {
        auto [t1, f1] = faces[k];
        auto [t2, f2] = faces[k + 1];
        // The three odd extended permutations sending face f1 of t1
        // onto face f2 of t2.
        std::array<Perm4, 3> odd{};
        int found = 0;
        std::array<int, 3> images = FACE_VERTS[f2];
        std::sort(images.begin(), images.end());
        do {
            Perm4 p{};
            for (int i = 0; i < 3; ++i) p[FACE_VERTS[f1][i]] = images[i];
            p[FACE_OPPOSITE[f1]] = FACE_OPPOSITE[f2];
            if (!is_even(p)) odd[found++] = p;
        } while (std::next_permutation(images.begin(), images.end()));
        Perm4 p = odd[uniform_below(rng, found)];
        gluings[t1][f1] = Gluing{t2, p};
        gluings[t2][f2] = Gluing{t1, inverse(p)};
    }
    return Triangulation(std::move(gluings));
}

Path random_closed_curve(const Triangulation& tri, const Skeleton& skel, int vertex_class,
                         Rng& rng) {
    const auto& members = skel.vertices().at(vertex_class).members;
    Corner start = members[uniform_below(rng, members.size())];

    struct State {
        int tet, vertex, face_in;
        bool operator==(const State&) const = default;
    };
    std::array<int, 3> fs = faces_containing_vertex(start.vertex);
    State cur{start.tet, start.vertex, fs[uniform_below(rng, 3)]};

    std::vector<State> seen{cur};
    std::vector<int> outs;
    for (;;) {
        std::array<int, 2> choices{};
        int n = 0;
        for (int f : faces_containing_vertex(cur.vertex))
            if (f != cur.face_in) choices[n++] = f;
        int fout = choices[uniform_below(rng, 2)];
        outs.push_back(fout);
        const Gluing& g = tri.gluing(cur.tet, fout);
        cur = State{g.tet, g.perm[cur.vertex], g.target_face(fout)};
        auto it = std::find(seen.begin(), seen.end(), cur);
        if (it != seen.end()) {
            std::size_t first = static_cast<std::size_t>(it - seen.begin());
            Path path;
            for (std::size_t k = first; k < outs.size(); ++k)
                path.push_back(Step{seen[k].tet, seen[k].vertex, seen[k].face_in, outs[k]});
            return path;
        }
        seen.push_back(cur);
    }
}

Path random_closed_curve(const Triangulation& tri, Rng& rng) {
    Skeleton skel(tri);
    int vc = static_cast<int>(uniform_below(rng, skel.vertex_count()));
    return random_closed_curve(tri, skel, vc, rng);
}

Shapes random_shapes(int tet_count, const Convention& convention, Rng& rng, double margin) {
    std::vector<Complex> base;
    base.reserve(tet_count);
    while (static_cast<int>(base.size()) < tet_count) {
        Complex w(uniform_real(rng, -2.0, 3.0), uniform_real(rng, margin, 2.0));
        if (std::abs(w) < margin || std::abs(w - 1.0) < margin) continue;
        base.push_back(w);
    }
    return Shapes{convention, std::move(base)};
}

}  // namespace tricone
