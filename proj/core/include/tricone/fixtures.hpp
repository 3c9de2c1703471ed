#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tricone/curvature.hpp"
#include "tricone/shapes.hpp"

namespace tricone::fixtures {

// Reference data for one of the worked examples.  Edge-dependent data
// (targets, monomials) is listed by the example's own edge labels; the
// permutation edge_label_to_class connects those labels to canonical
// skeleton classes.
struct Fixture {
    std::string name;
    std::string triangulation_text;
    Convention convention;
    std::vector<int> edge_label_to_class;

    std::vector<Complex> z0, z1;          // reference base shapes
    std::vector<Complex> u0, u1;          // curvature targets by edge label
    std::vector<Complex> t0, t1;          // holonomy targets for the curves
    std::vector<std::string> curve_names;
    std::vector<std::vector<int>> longitudes;  // index vectors by quad_id

    // Expected monomial exponents by edge label / curve: key (tet,
    // level) with level 0 the plain parameter, 1 primed, 2 double
    // primed.
    std::vector<std::map<std::pair<int, int>, int>> curvature_monomials;
    std::vector<std::map<std::pair<int, int>, int>> holonomy_monomials;
};

// "table1" or "table2"; throws ParseError for unknown names.
const Fixture& fixture(const std::string& name);

// All shipped fixture names, including "phi0".
std::vector<std::string> fixture_names();

// Closed forms displayed for the 5-tetrahedron example, as functions
// of its five base parameters.
std::vector<Complex> displayed_log_curvature(const std::vector<Complex>& z);
Eigen::MatrixXcd displayed_curvature_jacobian(const std::vector<Complex>& z);
std::vector<Complex> displayed_log_holonomy(const std::vector<Complex>& z);
Eigen::MatrixXcd displayed_holonomy_jacobian(const std::vector<Complex>& z);

// Determinant of the 5x5 minor of the stacked (4+3) x 5 Jacobian that
// deletes the two dependent curvature rows (labels 2 and 3).
Complex displayed_minor_determinant(const std::vector<Complex>& z);

// Canonical rendering of an exponent map, e.g. "z0 z1'^2 z2''^-1".
std::string monomial_string(const std::map<std::pair<int, int>, int>& exponents);

// Monomial of edge class e assembled from the incidence matrix, with
// quads named by convention levels.
std::map<std::pair<int, int>, int> assembled_curvature_monomial(const QuadIncidence& inc,
                                                                const Convention& conv, int e);

// Monomial of a curve's holonomy assembled from its index vector.
std::map<std::pair<int, int>, int> assembled_holonomy_monomial(const std::vector<int>& ind,
                                                               const Convention& conv);

}  // namespace tricone::fixtures
