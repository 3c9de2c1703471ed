#pragma once

#include <vector>

#include "tricone/shapes.hpp"

namespace tricone {

// Dihedral angles x(q) = arg z(q) of a positively oriented shape
// assignment, indexed by quad_id; all lie in (0, pi) and sum to pi
// inside each tetrahedron.
std::vector<double> angles_of(const Shapes& s);

// Shape assignment with the given corner angles:
//   z(q) = (sin x(q') / sin x(q'')) e^{i x(q)}
// where q', q'' follow q in slot order inside its tetrahedron.
// Angles must lie in (0, pi) and sum to pi per tetrahedron.
Shapes shapes_from_angles(const std::vector<double>& angles, const Convention& conv);

// The Lobachevsky function L(t) = -int_0^t log|2 sin u| du
// (odd, pi-periodic), evaluated to near machine accuracy.
double lobachevsky(double theta);

// Hyperbolic volume of the angle assignment: sum_q L(x(q)).
double volume(const std::vector<double>& angles);

// Diagonal of the Hessian of the volume as a function of the angles:
// d^2/dx^2 L(x) = -cot(x).
std::vector<double> volume_hessian_diag(const std::vector<double>& angles);

// Second derivative of the volume along direction w:
// sum_q w(q)^2 * (-cot x(q)).
double volume_second_derivative(const std::vector<double>& angles,
                                const std::vector<double>& w);

// First derivative of the volume along direction w:
// -sum_q w(q) log|2 sin x(q)|.
double volume_derivative(const std::vector<double>& angles, const std::vector<double>& w);

}  // namespace tricone
