#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tricone/shapes.hpp"
#include "tricone/skeleton.hpp"

namespace tricone {

// i(q,e): how many of the two tetrahedron edges carried by quad q lie
// in edge class e.  Row sums over e equal 2 for every quad.
class QuadIncidence {
public:
    explicit QuadIncidence(const Skeleton& skel);

    int tet_count() const { return tets_; }
    int edge_count() const { return edges_; }

    int operator()(int tet, int slot, int e) const {
        return m_[static_cast<size_t>(quad_id(tet, slot)) * edges_ + e];
    }

private:
    int tets_, edges_;
    std::vector<int> m_;
};

// Log-curvature G(e) = sum_q i(q,e) Log z(q), one value per edge class.
std::vector<Complex> log_curvature(const QuadIncidence& inc, const Shapes& s);

// Multiplicative curvature c(e) = prod_q z(q)^{i(q,e)}.
std::vector<Complex> complex_curvature(const QuadIncidence& inc, const Shapes& s);

// Derivative of G with respect to the base shape values (E x T).
Eigen::MatrixXcd log_curvature_jacobian(const QuadIncidence& inc, const Shapes& s);

// Weighted sums over quads for arbitrary integer weight vectors
// (weights.size() == 3*T, indexed by quad_id).
Complex log_holonomy(const std::vector<int>& weights, const Shapes& s);
Complex multiplicative_holonomy(const std::vector<int>& weights, const Shapes& s);
Eigen::RowVectorXcd log_holonomy_gradient(const std::vector<int>& weights, const Shapes& s);

// Integer matrix (2T x E) whose rows are i(q,.)-i(q',.) and
// i(q',.)-i(q'',.) for the three quads q,q',q'' of each tetrahedron in
// slot order.  Its row space is independent of slot conventions; its
// rank equals T minus the total link genus.
std::vector<std::vector<long>> curvature_difference_matrix(const QuadIncidence& inc);

// Rank of an integer matrix by singular values, counting those above
// rel_tol times the largest.
int rank_numeric(const std::vector<std::vector<long>>& m, double rel_tol = 1e-8);

// The same for a complex matrix.
int rank_numeric(const Eigen::MatrixXcd& m, double rel_tol = 1e-8);

// sum_e G(e); equals 2*pi*i*T identically.
Complex total_log_curvature(const std::vector<Complex>& g);

// Per vertex class: sum of G over the edge ends at that vertex
// (with multiplicity); equals i*pi times the corner count.
std::vector<Complex> vertex_log_curvature(const Skeleton& skel, const std::vector<Complex>& g);

}  // namespace tricone
