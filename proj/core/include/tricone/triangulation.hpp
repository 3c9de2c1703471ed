#pragma once

#include <array>
#include <string>
#include <vector>

#include "tricone/errors.hpp"
#include "tricone/permutations.hpp"

namespace tricone {

// One face pairing: face f of some tetrahedron is glued to tetrahedron
// `tet` by the extended vertex map `perm` (all four vertices; the
// vertex opposite f maps to the vertex opposite the target face).
struct Gluing {
    int tet = -1;
    Perm4 perm = {0, 1, 2, 3};

    // Index of the target face (the face spanned by the images of the
    // source face's vertices).
    int target_face(int source_face) const {
        int s = 0;
        for (int v : FACE_VERTS[source_face]) s += perm[v];
        return s - 3;
    }

    bool operator==(const Gluing&) const = default;
};

// An oriented closed 3-dimensional pseudo-manifold given as a face
// pairing of tetrahedra.  All faces are paired, the pairing is an
// involution, and every pairing map is orientation-reversing on faces
// (odd as an extended permutation), so the tetrahedra orient
// coherently.
class Triangulation {
public:
    // Validates involution / pairing / orientation and throws
    // NotInvolutive / UnpairedFace / NotOrientable accordingly.
    explicit Triangulation(std::vector<std::array<Gluing, 4>> gluings);

    int tet_count() const { return static_cast<int>(gluings_.size()); }

    const Gluing& gluing(int tet, int face) const { return gluings_[tet][face]; }

    // Parse the tabular text format: one row per tetrahedron,
    //   i | t (abc) | t (abc) | t (abc) | t (abc)
    // with columns in face order 0..3 and (abc) the images of the
    // face's vertices listed in increasing order.  '#' starts a
    // comment.  Rows may appear in any order but indices must be
    // exactly 0..n-1.
    static Triangulation parse(const std::string& text);

    // Inverse of parse: one canonical row per tetrahedron.
    std::string serialize() const;

    bool operator==(const Triangulation& other) const { return gluings_ == other.gluings_; }

private:
    std::vector<std::array<Gluing, 4>> gluings_;
};

}  // namespace tricone
