#include "tricone/solver.hpp"

namespace tricone {

namespace {

Eigen::VectorXcd residual_vector(const QuadIncidence& inc, const CurvatureTarget& target,
                                 const Shapes& s) {
    const int e = inc.edge_count();
    const int c = static_cast<int>(target.curves.size());
    Eigen::VectorXcd r(e + c);
    std::vector<Complex> g = log_curvature(inc, s);
    for (int i = 0; i < e; ++i) r(i) = g[i] - target.u[i];
    for (int i = 0; i < c; ++i) r(e + i) = log_holonomy(target.curves[i], s) - target.t[i];
    return r;
}

Eigen::MatrixXcd jacobian_matrix(const QuadIncidence& inc, const CurvatureTarget& target,
                                 const Shapes& s) {
    const int e = inc.edge_count();
    const int c = static_cast<int>(target.curves.size());
    const int t = inc.tet_count();
    Eigen::MatrixXcd j(e + c, t);
    j.topRows(e) = log_curvature_jacobian(inc, s);
    for (int i = 0; i < c; ++i) j.row(e + i) = log_holonomy_gradient(target.curves[i], s);
    return j;
}

double sup_norm(const Eigen::VectorXcd& v) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v(i)));
    return m;
}

bool upper_half(const std::vector<Complex>& base) {
    for (const Complex& w : base)
        if (!(w.imag() > 0.0) || !std::isfinite(w.real()) || !std::isfinite(w.imag()))
            return false;
    return true;
}

}  // namespace

SolveResult solve_curvature(const QuadIncidence& inc, const CurvatureTarget& target,
                            const Shapes& start, const SolveOptions& opt) {
    SolveResult res;
    res.shapes = start;

    Complex usum(0.0);
    for (const Complex& u : target.u) usum += u;
    Complex expected(0.0, 2.0 * PI * inc.tet_count());
    if (std::abs(usum - expected) > opt.feasibility_tol) {
        res.status = SolveStatus::InfeasibleTarget;
        return res;
    }

    Eigen::VectorXcd r = residual_vector(inc, target, res.shapes);
    res.residual = sup_norm(r);
    res.residual_history.push_back(res.residual);
    if (res.residual < opt.tol) {
        res.status = SolveStatus::Converged;
        return res;
    }

    for (int iter = 1; iter <= opt.max_iterations; ++iter) {
        Eigen::MatrixXcd j = jacobian_matrix(inc, target, res.shapes);
        Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(j);
        qr.setThreshold(opt.rank_tol);
        if (qr.rank() < inc.tet_count()) {
            res.status = SolveStatus::RankDeficientJacobian;
            return res;
        }
        Eigen::VectorXcd delta = qr.solve(-r);

        double alpha = 1.0;
        Shapes cand = res.shapes;
        Eigen::VectorXcd rc;
        const double r2 = r.squaredNorm();
        while (true) {
            for (int t = 0; t < res.shapes.tet_count(); ++t)
                cand.base[t] = res.shapes.base[t] + alpha * delta(t);
            if (upper_half(cand.base)) {
                rc = residual_vector(inc, target, cand);
                if (rc.squaredNorm() < r2) break;
            }
            alpha *= 0.5;
            if (alpha < opt.min_step) {
                res.status = SolveStatus::LeftDomain;
                return res;
            }
        }
        res.shapes = cand;
        r = rc;
        res.iterations = iter;
        res.residual = sup_norm(r);
        res.residual_history.push_back(res.residual);
        if (res.residual < opt.tol) {
            res.status = SolveStatus::Converged;
            return res;
        }
    }
    res.status = SolveStatus::MaxIterations;
    return res;
}

TraceResult trace_curvature(const QuadIncidence& inc,
                            const std::vector<CurvatureTarget>& targets, const Shapes& start,
                            const SolveOptions& opt) {
    TraceResult out;
    Shapes current = start;
    for (size_t k = 0; k < targets.size(); ++k) {
        SolveResult step = solve_curvature(inc, targets[k], current, opt);
        if (step.status != SolveStatus::Converged) {
            out.status = (step.status == SolveStatus::InfeasibleTarget)
                             ? SolveStatus::InfeasibleTarget
                             : SolveStatus::StepTooLarge;
            out.failed_index = static_cast<int>(k);
            return out;
        }
        current = step.shapes;
        out.points.push_back(current);
        out.iterations.push_back(step.iterations);
    }
    out.status = SolveStatus::Converged;
    return out;
}

}  // namespace tricone
