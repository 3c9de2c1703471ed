#pragma once

#include <array>
#include <vector>

#include "tricone/triangulation.hpp"

namespace tricone {

// An edge of a single tetrahedron with a chosen direction.
struct OrientedEdge {
    int tet, tail, head;
    bool operator==(const OrientedEdge&) const = default;
};

struct Corner {
    int tet, vertex;
    bool operator==(const Corner&) const = default;
};

// One of the two ends of an edge class.
struct EdgeEnd {
    int vertex_class = -1;  // class of the corners at this end
    int link_vertex = -1;   // id of the link vertex this end meets
};

// Combinatorial data of the boundary surface of a small neighbourhood
// of a vertex class.
struct LinkSurface {
    int triangles = 0;  // one per corner in the class
    int sides = 0;
    int vertices = 0;   // link vertices = edge ends meeting this class
    int euler() const { return vertices - sides + triangles; }
    int genus() const { return (2 - euler()) / 2; }
};

// Orbit of oriented tetrahedron edges under the face pairings.  The
// stored orientation of every member is induced from the seed member
// by the pairings.
struct EdgeClass {
    std::vector<OrientedEdge> members;
    EdgeEnd tail, head;
    int valence() const { return static_cast<int>(members.size()); }
};

// Orbit of corners under the face pairings.
struct VertexClass {
    std::vector<Corner> members;
    LinkSurface link;
};

// Edge and vertex identifications of a triangulation, with vertex
// links.  Classes are numbered in order of first appearance when
// scanning tetrahedra in index order and edges/vertices of each
// tetrahedron in lexicographic order.  Construction throws
// NotOrientable if an edge is identified with itself reversed and
// NonOrientableLink if a vertex link fails to be a closed oriented
// surface.
class Skeleton {
public:
    explicit Skeleton(Triangulation tri);

    const Triangulation& triangulation() const { return tri_; }
    int tet_count() const { return tri_.tet_count(); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const std::vector<EdgeClass>& edges() const { return edges_; }
    const std::vector<VertexClass>& vertices() const { return vertices_; }

    // Class of the (unordered) edge {a,b} of tetrahedron t.
    int edge_class_of(int tet, int a, int b) const {
        return edge_class_[tet][edge_index(a, b)];
    }

    // +1 if the direction a->b agrees with the stored orientation of
    // the class member on this tetrahedron edge, -1 otherwise.
    int edge_orientation(int tet, int a, int b) const {
        int s = edge_sign_[tet][edge_index(a, b)];
        return (a < b) ? s : -s;
    }

    int vertex_class_of(int tet, int v) const { return vertex_class_[tet][v]; }

    // Link vertices are the ends of edge classes: id 2c for the tail
    // end of class c, 2c+1 for its head end.  (tet,v,w) names the
    // direction from corner v toward w, i.e. the point where edge
    // {v,w} meets the link triangle of (tet,v).
    int link_vertex_of(int tet, int v, int w) const {
        int c = edge_class_of(tet, v, w);
        return edge_orientation(tet, v, w) > 0 ? 2 * c : 2 * c + 1;
    }

    int link_vertex_count() const { return 2 * edge_count(); }

    int vertex_class_of_link_vertex(int lv) const {
        const EdgeClass& e = edges_[lv / 2];
        return (lv % 2 == 0) ? e.tail.vertex_class : e.head.vertex_class;
    }

    int genus_sum() const {
        int s = 0;
        for (const auto& v : vertices_) s += v.link.genus();
        return s;
    }

    // mult[v][e] = number of ends of edge class e lying at vertex
    // class v (0, 1 or 2).
    std::vector<std::vector<int>> end_multiplicities() const;

private:
    Triangulation tri_;
    std::vector<EdgeClass> edges_;
    std::vector<VertexClass> vertices_;
    std::vector<std::array<int, 6>> edge_class_;
    std::vector<std::array<int, 6>> edge_sign_;  // +1 when stored member runs min->max
    std::vector<std::array<int, 4>> vertex_class_;
};

// The two faces of a tetrahedron containing both a and b.
inline std::array<int, 2> faces_containing_edge(int a, int b) {
    std::array<int, 2> out{};
    int k = 0;
    for (int f = 0; f < 4; ++f)
        if (FACE_OPPOSITE[f] != a && FACE_OPPOSITE[f] != b) out[k++] = f;
    return out;
}

// The three faces of a tetrahedron containing vertex v.
inline std::array<int, 3> faces_containing_vertex(int v) {
    std::array<int, 3> out{};
    int k = 0;
    for (int f = 0; f < 4; ++f)
        if (FACE_OPPOSITE[f] != v) out[k++] = f;
    return out;
}

}  // namespace tricone
