#include "tricone/skeleton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace tricone {

namespace {

// Cyclic successor of the far labels around corner (tet,u), ordered so
// that the cycle is positive for the tetrahedron orientation: the far
// labels (x0,x1,x2) are arranged with (u,x0,x1,x2) an even permutation.
std::array<int, 4> positive_cycle_at_corner(int u) {
    std::array<int, 3> far{};
    int k = 0;
    for (int w = 0; w < 4; ++w)
        if (w != u) far[k++] = w;
    std::array<int, 4> seq = {u, far[0], far[1], far[2]};
    if (!is_even_seq(seq)) std::swap(far[1], far[2]);
    std::array<int, 4> next{};
    next.fill(-1);
    next[far[0]] = far[1];
    next[far[1]] = far[2];
    next[far[2]] = far[0];
    return next;  // next[x] = successor of far label x
}

}  // namespace

Skeleton::Skeleton(Triangulation tri) : tri_(std::move(tri)) {
    const int n = tri_.tet_count();
    edge_class_.assign(n, {-1, -1, -1, -1, -1, -1});
    edge_sign_.assign(n, {0, 0, 0, 0, 0, 0});
    vertex_class_.assign(n, {-1, -1, -1, -1});

    // Edge classes: orbits of oriented edges under the face pairings.
    for (int t0 = 0; t0 < n; ++t0) {
        for (int ei = 0; ei < 6; ++ei) {
            if (edge_class_[t0][ei] >= 0) continue;
            const int id = static_cast<int>(edges_.size());
            EdgeClass cls;
            std::deque<OrientedEdge> queue{{t0, EDGE_VERTS[ei][0], EDGE_VERTS[ei][1]}};
            edge_class_[t0][ei] = id;
            edge_sign_[t0][ei] = 1;
            while (!queue.empty()) {
                OrientedEdge cur = queue.front();
                queue.pop_front();
                cls.members.push_back(cur);
                for (int f : faces_containing_edge(cur.tail, cur.head)) {
                    const Gluing& g = tri_.gluing(cur.tet, f);
                    OrientedEdge nxt{g.tet, g.perm[cur.tail], g.perm[cur.head]};
                    int nei = edge_index(nxt.tail, nxt.head);
                    int sign = (nxt.tail < nxt.head) ? 1 : -1;
                    if (edge_class_[nxt.tet][nei] < 0) {
                        edge_class_[nxt.tet][nei] = id;
                        edge_sign_[nxt.tet][nei] = sign;
                        queue.push_back(nxt);
                    } else if (edge_class_[nxt.tet][nei] != id ||
                               edge_sign_[nxt.tet][nei] != sign) {
                        throw NotOrientable(
                            "edge of tetrahedron " + std::to_string(nxt.tet) +
                            " is identified with itself reversed");
                    }
                }
            }
            std::sort(cls.members.begin(), cls.members.end(),
                      [](const OrientedEdge& a, const OrientedEdge& b) {
                          if (a.tet != b.tet) return a.tet < b.tet;
                          return edge_index(a.tail, a.head) < edge_index(b.tail, b.head);
                      });
            edges_.push_back(std::move(cls));
        }
    }

    // Vertex classes: orbits of corners.
    for (int t0 = 0; t0 < n; ++t0) {
        for (int v0 = 0; v0 < 4; ++v0) {
            if (vertex_class_[t0][v0] >= 0) continue;
            const int id = static_cast<int>(vertices_.size());
            VertexClass cls;
            std::deque<Corner> queue{{t0, v0}};
            vertex_class_[t0][v0] = id;
            while (!queue.empty()) {
                Corner cur = queue.front();
                queue.pop_front();
                cls.members.push_back(cur);
                for (int f : faces_containing_vertex(cur.vertex)) {
                    const Gluing& g = tri_.gluing(cur.tet, f);
                    Corner nxt{g.tet, g.perm[cur.vertex]};
                    if (vertex_class_[nxt.tet][nxt.vertex] < 0) {
                        vertex_class_[nxt.tet][nxt.vertex] = id;
                        queue.push_back(nxt);
                    }
                }
            }
            std::sort(cls.members.begin(), cls.members.end(),
                      [](const Corner& a, const Corner& b) {
                          if (a.tet != b.tet) return a.tet < b.tet;
                          return a.vertex < b.vertex;
                      });
            vertices_.push_back(std::move(cls));
        }
    }

    // Edge ends.
    for (auto& e : edges_) {
        const OrientedEdge& m = e.members.front();
        e.tail.vertex_class = vertex_class_of(m.tet, m.tail);
        e.head.vertex_class = vertex_class_of(m.tet, m.head);
        int c = edge_class_of(m.tet, m.tail, m.head);
        e.tail.link_vertex = 2 * c;
        e.head.link_vertex = 2 * c + 1;
    }

    // Vertex links.  Sides (tet,v,f) are glued in pairs; a coherent
    // orientation requires every pairing to reverse the positive
    // boundary direction of the link triangles.
    std::vector<int> link_vertex_count(vertices_.size(), 0);
    for (const auto& e : edges_) {
        ++link_vertex_count[e.tail.vertex_class];
        ++link_vertex_count[e.head.vertex_class];
    }
    std::vector<int> side_count(vertices_.size(), 0);
    for (int t = 0; t < n; ++t) {
        for (int v = 0; v < 4; ++v) {
            auto next = positive_cycle_at_corner(v);
            for (int f : faces_containing_vertex(v)) {
                const Gluing& g = tri_.gluing(t, f);
                int tf = g.target_face(f);
                if (g.tet == t && g.perm[v] == v && tf == f)
                    throw NonOrientableLink(
                        "link side of corner (" + std::to_string(t) + "," +
                        std::to_string(v) + ") is glued to itself");
                // Far labels of the side: the two vertices of f other
                // than v, taken in the positive direction.
                int x = -1, y = -1;
                for (int w : FACE_VERTS[f]) {
                    if (w == v) continue;
                    if (x < 0) x = w; else y = w;
                }
                if (next[x] != y) std::swap(x, y);
                auto next2 = positive_cycle_at_corner(g.perm[v]);
                if (next2[g.perm[x]] == g.perm[y])
                    throw NonOrientableLink(
                        "link triangles of corners (" + std::to_string(t) + "," +
                        std::to_string(v) + ") and (" + std::to_string(g.tet) + "," +
                        std::to_string(g.perm[v]) + ") are glued preserving orientation");
                ++side_count[vertex_class_of(t, v)];
            }
        }
    }
    for (size_t vc = 0; vc < vertices_.size(); ++vc) {
        LinkSurface& link = vertices_[vc].link;
        link.triangles = static_cast<int>(vertices_[vc].members.size());
        link.sides = side_count[vc] / 2;
        link.vertices = link_vertex_count[vc];
        if (link.euler() % 2 != 0 || link.euler() > 2)
            throw NonOrientableLink("link of vertex class " + std::to_string(vc) +
                                    " has Euler characteristic " +
                                    std::to_string(link.euler()));
    }
}

std::vector<std::vector<int>> Skeleton::end_multiplicities() const {
    std::vector<std::vector<int>> mult(vertex_count(), std::vector<int>(edge_count(), 0));
    for (int e = 0; e < edge_count(); ++e) {
        ++mult[edges_[e].tail.vertex_class][e];
        ++mult[edges_[e].head.vertex_class][e];
    }
    return mult;
}

}  // namespace tricone
