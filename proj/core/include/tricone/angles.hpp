#pragma once

#include <vector>

#include "tricone/curvature.hpp"
#include "tricone/exact.hpp"

namespace tricone {

// Tangential angle structures: assignments w of a rational to each
// quad with zero sum inside every tetrahedron and zero weighted sum
// sum_q i(q,e) w(q) around every edge class.  Vectors are indexed by
// quad_id.  Basis returned as rows; dimension is V - E + 2T.
RatMatrix tangential_basis(const QuadIncidence& inc);

// Strong tangential angle structures also annihilate the given curve
// index vectors: sum_q ind(q) w(q) = 0.
RatMatrix strong_tangential_basis(const QuadIncidence& inc,
                                  const std::vector<std::vector<int>>& curves);

// Leading-trailing deformation vector of an edge class:
// Q_e(p) = i(pred p, e) - i(succ p, e) with pred/succ the quads two
// and one slots after p inside its tetrahedron.
std::vector<Rational> leading_trailing_edge(const QuadIncidence& inc, int e);

// Leading-trailing deformation vector of a normal curve given by its
// index vector.
std::vector<Rational> leading_trailing_curve(const std::vector<int>& ind);

// sum_q ind(q) w(q): pairing of a curve with a deformation vector.
// Equals twice the algebraic intersection number when w is the
// leading-trailing vector of another curve.
Rational pairing(const std::vector<int>& ind, const std::vector<Rational>& w);

}  // namespace tricone
