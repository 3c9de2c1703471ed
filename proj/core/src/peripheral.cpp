#include "tricone/peripheral.hpp"

#include <algorithm>

#include "tricone/shapes.hpp"
#include <map>
#include <string>
#include <tuple>
#include <utility>

namespace tricone {

namespace {

bool face_contains(int f, int v) { return FACE_OPPOSITE[f] != v; }

using Pt = std::pair<Rational, Rational>;

// Coordinates of the link-triangle corners at a corner with vertex v:
// the far labels (l0,l1,l2), ordered so that (v,l0,l1,l2) is an even
// permutation, sit at (0,0), (1,0), (0,1).
std::array<Pt, 4> frame_at(int v) {
    std::array<int, 3> far{};
    int k = 0;
    for (int w = 0; w < 4; ++w)
        if (w != v) far[k++] = w;
    std::array<int, 4> seq = {v, far[0], far[1], far[2]};
    if (!is_even_seq(seq)) std::swap(far[1], far[2]);
    std::array<Pt, 4> pt{};
    pt[far[0]] = {Rational(0), Rational(0)};
    pt[far[1]] = {Rational(1), Rational(0)};
    pt[far[2]] = {Rational(0), Rational(1)};
    return pt;
}

int orient2d(const Pt& p, const Pt& q, const Pt& r) {
    Rational det = (q.first - p.first) * (r.second - p.second) -
                   (q.second - p.second) * (r.first - p.first);
    return sgn(det);
}

struct SideRef {
    int tet, vertex, face;
    auto operator<=>(const SideRef&) const = default;
};

}  // namespace

void validate_path(const Skeleton& skel, const Path& path) {
    if (path.empty()) throw InvalidPath("empty step sequence");
    const Triangulation& tri = skel.triangulation();
    const int n = tri.tet_count();
    for (size_t i = 0; i < path.size(); ++i) {
        const Step& s = path[i];
        if (s.tet < 0 || s.tet >= n || s.vertex < 0 || s.vertex > 3 || s.face_in < 0 ||
            s.face_in > 3 || s.face_out < 0 || s.face_out > 3)
            throw InvalidPath("step " + std::to_string(i) + " is out of range");
        if (s.face_in == s.face_out)
            throw InvalidPath("step " + std::to_string(i) +
                              " enters and leaves through the same face");
        if (!face_contains(s.face_in, s.vertex) || !face_contains(s.face_out, s.vertex))
            throw InvalidPath("step " + std::to_string(i) +
                              " uses a face not containing its vertex");
    }
    for (size_t i = 0; i < path.size(); ++i) {
        const Step& s = path[i];
        const Step& nxt = path[(i + 1) % path.size()];
        const Gluing& g = tri.gluing(s.tet, s.face_out);
        if (nxt.tet != g.tet || nxt.vertex != g.perm[s.vertex] ||
            nxt.face_in != g.target_face(s.face_out))
            throw InvalidPath("steps " + std::to_string(i) + " and " +
                              std::to_string((i + 1) % path.size()) + " are not glued");
    }
}

int path_vertex_class(const Skeleton& skel, const Path& path) {
    return skel.vertex_class_of(path.front().tet, path.front().vertex);
}

int step_far_vertex(const Step& s) {
    return 6 - FACE_OPPOSITE[s.face_in] - FACE_OPPOSITE[s.face_out] - s.vertex;
}

int step_sign(const Step& s) {
    // (v, w, y, x): w the shared far vertex, y the third vertex of the
    // outgoing face, x the third vertex of the incoming face.
    std::array<int, 4> seq = {s.vertex, step_far_vertex(s), FACE_OPPOSITE[s.face_in],
                              FACE_OPPOSITE[s.face_out]};
    return is_even_seq(seq) ? 1 : -1;
}

std::vector<int> index_vector(const Skeleton& skel, const Path& path) {
    std::vector<int> ind(static_cast<size_t>(3 * skel.tet_count()), 0);
    for (const Step& s : path) {
        int slot = slot_of_edge(s.vertex, step_far_vertex(s));
        ind[quad_id(s.tet, slot)] += step_sign(s);
    }
    return ind;
}

Path reversed_path(const Path& path) {
    Path out;
    out.reserve(path.size());
    for (auto it = path.rbegin(); it != path.rend(); ++it)
        out.push_back({it->tet, it->vertex, it->face_out, it->face_in});
    return out;
}

Path edge_endpoint_loop(const Skeleton& skel, int e, bool tail_end) {
    const Triangulation& tri = skel.triangulation();
    const OrientedEdge& m = skel.edges()[e].members.front();
    const int x0 = tail_end ? m.tail : m.head;
    const int y0 = tail_end ? m.head : m.tail;
    const auto fs0 = faces_containing_edge(x0, y0);
    int t = m.tet, x = x0, y = y0, fin = fs0[0], fout = fs0[1];
    Path path;
    while (true) {
        path.push_back({t, x, fin, fout});
        const Gluing& g = tri.gluing(t, fout);
        int fin2 = g.target_face(fout);
        int t2 = g.tet, x2 = g.perm[x], y2 = g.perm[y];
        auto fs = faces_containing_edge(x2, y2);
        int fout2 = (fs[0] == fin2) ? fs[1] : fs[0];
        t = t2; x = x2; y = y2; fin = fin2; fout = fout2;
        if (t == m.tet && x == x0 && y == y0 && fin == fs0[0]) break;
        if (path.size() > 6 * static_cast<size_t>(tri.tet_count()))
            throw InvalidPath("loop around an edge end failed to close");
    }
    // Normalise the orientation: the loop's index vector is plus or
    // minus the incidence column of e; make it the positive one.
    for (int v : index_vector(skel, path)) {
        if (v > 0) return path;
        if (v < 0) return reversed_path(path);
    }
    return path;
}

long intersection_number(const Skeleton& skel, const Path& a, const Path& b) {
    validate_path(skel, a);
    validate_path(skel, b);
    if (path_vertex_class(skel, a) != path_vertex_class(skel, b))
        throw NotSameLink("curves lie on links of different vertex classes");
    const Triangulation& tri = skel.triangulation();

    // A transition is the crossing of a glued pair of link-triangle
    // sides between consecutive steps.  All crossings on one side pair
    // receive distinct interior positions; the algebraic count does
    // not depend on the choice of positions.
    struct Transition {
        SideRef canon;
        bool source_is_canon;
        Rational pos;
    };
    auto transitions_of = [&](const Path& p) {
        std::vector<Transition> out;
        out.reserve(p.size());
        for (size_t i = 0; i < p.size(); ++i) {
            const Step& s1 = p[i];
            const Step& s2 = p[(i + 1) % p.size()];
            SideRef src{s1.tet, s1.vertex, s1.face_out};
            SideRef dst{s2.tet, s2.vertex, s2.face_in};
            SideRef canon = std::min(src, dst);
            out.push_back({canon, canon == src, Rational(0)});
        }
        return out;
    };
    std::vector<Transition> ta = transitions_of(a), tb = transitions_of(b);
    std::map<SideRef, int> total;
    for (const auto& tr : ta) ++total[tr.canon];
    for (const auto& tr : tb) ++total[tr.canon];
    std::map<SideRef, int> next_index;
    auto assign_positions = [&](std::vector<Transition>& ts) {
        for (auto& tr : ts) {
            int k = next_index[tr.canon]++;
            tr.pos = Rational(k + 1) / Rational(total[tr.canon] + 1);
        }
    };
    assign_positions(ta);
    assign_positions(tb);

    // Crossing point of a transition in the source and target corner
    // coordinates.  The point is parametrised along the canonical
    // copy of the side from its smaller far label to its larger one;
    // the other copy sees the same point through the gluing map.
    auto points_of = [&](const Transition& tr) -> std::pair<Pt, Pt> {
        const int vc = tr.canon.vertex, fc = tr.canon.face;
        int e1 = -1, e2 = -1;
        for (int w : FACE_VERTS[fc]) {
            if (w == vc) continue;
            (e1 < 0 ? e1 : e2) = w;
        }
        auto frc = frame_at(vc);
        Pt pc = {frc[e1].first + tr.pos * (frc[e2].first - frc[e1].first),
                 frc[e1].second + tr.pos * (frc[e2].second - frc[e1].second)};
        const Gluing& g = tri.gluing(tr.canon.tet, fc);
        auto fro = frame_at(g.perm[vc]);
        int i1 = g.perm[e1], i2 = g.perm[e2];
        Pt po = {fro[i1].first + tr.pos * (fro[i2].first - fro[i1].first),
                 fro[i1].second + tr.pos * (fro[i2].second - fro[i1].second)};
        if (tr.source_is_canon) return {pc, po};
        return {po, pc};
    };

    struct Chord {
        int tet, vertex;
        Pt p1, p2;  // directed: entry -> exit
    };
    auto chords_of = [&](const Path& p, const std::vector<Transition>& ts) {
        std::vector<std::pair<Pt, Pt>> pts;
        pts.reserve(ts.size());
        for (const auto& tr : ts) pts.push_back(points_of(tr));
        std::vector<Chord> out;
        out.reserve(p.size());
        const size_t m = p.size();
        for (size_t i = 0; i < m; ++i)
            out.push_back({p[i].tet, p[i].vertex, pts[(i + m - 1) % m].second, pts[i].first});
        return out;
    };
    std::vector<Chord> ca = chords_of(a, ta), cb = chords_of(b, tb);

    long count = 0;
    for (const Chord& x : ca) {
        for (const Chord& y : cb) {
            if (x.tet != y.tet || x.vertex != y.vertex) continue;
            int d1 = orient2d(x.p1, x.p2, y.p1);
            int d2 = orient2d(x.p1, x.p2, y.p2);
            int d3 = orient2d(y.p1, y.p2, x.p1);
            int d4 = orient2d(y.p1, y.p2, x.p2);
            if (d1 * d2 < 0 && d3 * d4 < 0) {
                // Positive crossing: (direction of b, direction of a)
                // is a positively oriented frame.
                Rational dax = x.p2.first - x.p1.first, day = x.p2.second - x.p1.second;
                Rational dbx = y.p2.first - y.p1.first, dby = y.p2.second - y.p1.second;
                count += (sgn(Rational(dbx * day - dby * dax)) > 0) ? 1 : -1;
            }
        }
    }
    return count;
}

}  // namespace tricone
