#include "tricone/curvature.hpp"

#include <algorithm>
#include <cmath>

namespace tricone {

QuadIncidence::QuadIncidence(const Skeleton& skel)
    : tets_(skel.tet_count()), edges_(skel.edge_count()) {
    m_.assign(static_cast<size_t>(3 * tets_) * edges_, 0);
    for (int e = 0; e < edges_; ++e) {
        for (const OrientedEdge& m : skel.edges()[e].members) {
            int slot = slot_of_edge(m.tail, m.head);
            ++m_[static_cast<size_t>(quad_id(m.tet, slot)) * edges_ + e];
        }
    }
}

std::vector<Complex> log_curvature(const QuadIncidence& inc, const Shapes& s) {
    std::vector<Complex> g(inc.edge_count(), Complex(0.0));
    for (int t = 0; t < inc.tet_count(); ++t) {
        for (int slot = 0; slot < 3; ++slot) {
            Complex lz = s.log_quad(t, slot);
            for (int e = 0; e < inc.edge_count(); ++e) {
                int k = inc(t, slot, e);
                if (k != 0) g[e] += static_cast<double>(k) * lz;
            }
        }
    }
    return g;
}

std::vector<Complex> complex_curvature(const QuadIncidence& inc, const Shapes& s) {
    std::vector<Complex> c(inc.edge_count(), Complex(1.0));
    for (int t = 0; t < inc.tet_count(); ++t) {
        for (int slot = 0; slot < 3; ++slot) {
            Complex z = s.quad(t, slot);
            for (int e = 0; e < inc.edge_count(); ++e) {
                for (int k = 0; k < inc(t, slot, e); ++k) c[e] *= z;
            }
        }
    }
    return c;
}

Eigen::MatrixXcd log_curvature_jacobian(const QuadIncidence& inc, const Shapes& s) {
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(inc.edge_count(), inc.tet_count());
    for (int t = 0; t < inc.tet_count(); ++t) {
        for (int level = 0; level < 3; ++level) {
            int slot = s.convention.slot(t, level);
            Complex d = s.dlog_at_level(t, level);
            for (int e = 0; e < inc.edge_count(); ++e) {
                int k = inc(t, slot, e);
                if (k != 0) j(e, t) += static_cast<double>(k) * d;
            }
        }
    }
    return j;
}

Complex log_holonomy(const std::vector<int>& weights, const Shapes& s) {
    Complex h(0.0);
    for (int t = 0; t < s.tet_count(); ++t)
        for (int slot = 0; slot < 3; ++slot) {
            int k = weights[quad_id(t, slot)];
            if (k != 0) h += static_cast<double>(k) * s.log_quad(t, slot);
        }
    return h;
}

Complex multiplicative_holonomy(const std::vector<int>& weights, const Shapes& s) {
    Complex h(1.0);
    for (int t = 0; t < s.tet_count(); ++t)
        for (int slot = 0; slot < 3; ++slot) {
            int k = weights[quad_id(t, slot)];
            if (k == 0) continue;
            Complex z = s.quad(t, slot);
            Complex p = (k > 0) ? z : 1.0 / z;
            for (int i = 0; i < std::abs(k); ++i) h *= p;
        }
    return h;
}

Eigen::RowVectorXcd log_holonomy_gradient(const std::vector<int>& weights, const Shapes& s) {
    Eigen::RowVectorXcd grad = Eigen::RowVectorXcd::Zero(s.tet_count());
    for (int t = 0; t < s.tet_count(); ++t)
        for (int level = 0; level < 3; ++level) {
            int k = weights[quad_id(t, s.convention.slot(t, level))];
            if (k != 0) grad(t) += static_cast<double>(k) * s.dlog_at_level(t, level);
        }
    return grad;
}

std::vector<std::vector<long>> curvature_difference_matrix(const QuadIncidence& inc) {
    std::vector<std::vector<long>> rows;
    rows.reserve(static_cast<size_t>(2 * inc.tet_count()));
    for (int t = 0; t < inc.tet_count(); ++t) {
        for (int r = 0; r < 2; ++r) {
            std::vector<long> row(inc.edge_count());
            for (int e = 0; e < inc.edge_count(); ++e)
                row[e] = inc(t, r, e) - inc(t, r + 1, e);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

int rank_numeric(const std::vector<std::vector<long>>& m, double rel_tol) {
    if (m.empty() || m[0].empty()) return 0;
    Eigen::MatrixXd a(m.size(), m[0].size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[0].size(); ++j)
            a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                static_cast<double>(m[i][j]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    // Floor the scale at 1 so an analytically-zero matrix that arrives as
    // rounding noise counts as rank 0; a purely relative cut can never do that.
    const double cut = rel_tol * std::max(sv(0), 1.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    return rank;
}

Complex total_log_curvature(const std::vector<Complex>& g) {
    Complex s(0.0);
    for (const Complex& v : g) s += v;
    return s;
}

std::vector<Complex> vertex_log_curvature(const Skeleton& skel, const std::vector<Complex>& g) {
    std::vector<Complex> out(skel.vertex_count(), Complex(0.0));
    for (int e = 0; e < skel.edge_count(); ++e) {
        out[skel.edges()[e].tail.vertex_class] += g[e];
        out[skel.edges()[e].head.vertex_class] += g[e];
    }
    return out;
}

int rank_numeric(const Eigen::MatrixXcd& m, double rel_tol) {
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    // Same scale floor as above: entries are integer combinations of shape
    // log-derivatives, so a genuinely nonzero matrix has sv(0) well above
    // rel_tol while an identically-zero one computes to rounding noise.
    const double cut = rel_tol * std::max(sv(0), 1.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    return rank;
}

}  // namespace tricone
