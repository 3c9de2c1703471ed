#pragma once

#include <vector>

#include "tricone/exact.hpp"
#include "tricone/skeleton.hpp"

namespace tricone {

// One arc of a normal curve in a vertex link: inside the link triangle
// of corner (tet, vertex), entering across the side on face_in and
// leaving across the side on face_out.
struct Step {
    int tet, vertex, face_in, face_out;
    bool operator==(const Step&) const = default;
};

// A closed normal curve as a cyclic sequence of steps; consecutive
// steps (cyclically) are related by the face pairing of the outgoing
// face.
using Path = std::vector<Step>;

// Throws InvalidPath unless the steps form a closed normal curve.
void validate_path(const Skeleton& skel, const Path& path);

// Vertex class whose link carries the curve.
int path_vertex_class(const Skeleton& skel, const Path& path);

// The vertex shared by both faces of the step besides the step's
// corner vertex; the arc cuts off the direction toward it, so the
// step's quad slot is the one separating edge {vertex, w}.
int step_far_vertex(const Step& s);

// +1 when the arc passes the isolated corner on its right (viewed
// from the vertex), -1 on its left.
int step_sign(const Step& s);

// Index vector of the curve: ind[quad_id(t,slot)] accumulates the
// signs of all steps with that quad.  These are the coefficients of
// the curve's log-holonomy in the quad logarithms.
std::vector<int> index_vector(const Skeleton& skel, const Path& path);

// The same curve traversed backwards.
Path reversed_path(const Path& path);

// The normal curve bounding a small disk around the point where the
// chosen end of edge class e meets the link, oriented so that its
// index vector equals +i(.,e).
Path edge_endpoint_loop(const Skeleton& skel, int e, bool tail_end);

// Algebraic intersection number of two closed normal curves on the
// same vertex link, computed from an exact piecewise-linear
// realization with all crossings transverse.  Positive crossings are
// those where (direction of b, direction of a) is a positively
// oriented frame.  Throws NotSameLink when the curves live on links
// of different vertex classes.
long intersection_number(const Skeleton& skel, const Path& a, const Path& b);

}  // namespace tricone
