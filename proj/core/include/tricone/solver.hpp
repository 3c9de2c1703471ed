#pragma once

#include <cmath>
#include <vector>

#include "tricone/curvature.hpp"

namespace tricone {

struct SolveOptions {
    int max_iterations = 100;
    double tol = 1e-12;             // sup norm of the residual
    double feasibility_tol = 1e-9;  // on |sum_e u(e) - 2 pi i T|
    double rank_tol = 1e-8;         // Jacobian rank threshold
    double min_step = std::ldexp(1.0, -40);
};

// Prescribed log-curvatures u (one per edge class, in class order) and
// prescribed log-holonomies t along the given curve index vectors.
struct CurvatureTarget {
    std::vector<Complex> u;
    std::vector<std::vector<int>> curves;
    std::vector<Complex> t;
};

struct SolveResult {
    SolveStatus status = SolveStatus::MaxIterations;
    Shapes shapes;
    int iterations = 0;
    double residual = 0.0;  // final sup norm
    std::vector<double> residual_history;
};

// Gauss-Newton iteration for G(z) = u, H(z) = t from the given start,
// with step halving keeping all shapes in the upper half plane.
SolveResult solve_curvature(const QuadIncidence& inc, const CurvatureTarget& target,
                            const Shapes& start, const SolveOptions& opt = {});

struct TraceResult {
    SolveStatus status = SolveStatus::Converged;
    std::vector<Shapes> points;  // one accepted solution per reached target
    std::vector<int> iterations;
    int failed_index = -1;  // first target that could not be reached
};

// Follow a family of targets: each solution seeds the next solve.
TraceResult trace_curvature(const QuadIncidence& inc,
                            const std::vector<CurvatureTarget>& targets, const Shapes& start,
                            const SolveOptions& opt = {});

}  // namespace tricone
