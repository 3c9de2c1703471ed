#pragma once

#include <cstdint>
#include <random>

#include "tricone/peripheral.hpp"
#include "tricone/shapes.hpp"
#include "tricone/skeleton.hpp"
#include "tricone/triangulation.hpp"

namespace tricone {

using Rng = std::mt19937_64;

// Uniform integer in [0, n), independent of standard-library
// distribution internals so streams are stable across toolchains.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

// Uniform double in [lo, hi).
double uniform_real(Rng& rng, double lo, double hi);

// Random closed oriented triangulation: pairs the 4*tet_count faces
// uniformly and glues each pair by a uniformly chosen odd extended
// permutation.  All gluings are orientation-compatible, so the result
// always validates.
Triangulation random_triangulation(int tet_count, Rng& rng);

// Random closed normal curve in the link of the given vertex class
// (or of a random class), found by a random walk over corner states.
Path random_closed_curve(const Triangulation& tri, const Skeleton& skel, int vertex_class,
                         Rng& rng);
Path random_closed_curve(const Triangulation& tri, Rng& rng);

// Random positively oriented shapes: every base parameter has
// imaginary part >= margin and distance >= margin from 0 and 1.
Shapes random_shapes(int tet_count, const Convention& convention, Rng& rng,
                     double margin = 0.05);

}  // namespace tricone
