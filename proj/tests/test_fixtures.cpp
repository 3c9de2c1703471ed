#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "tricone/curvature.hpp"
#include "tricone/data_files.hpp"
#include "tricone/fixtures.hpp"
#include "tricone/random_gen.hpp"
#include "tricone/skeleton.hpp"

using namespace tricone;

namespace {

// Stack the curvature Jacobian (by edge label) over the holonomy
// gradients of the three longitudes, as displayed: a 7x5 matrix.
Eigen::MatrixXcd stacked_jacobian(const fixtures::Fixture& f, const QuadIncidence& inc,
                                  const Shapes& s) {
    Eigen::MatrixXcd dg = log_curvature_jacobian(inc, s);
    Eigen::MatrixXcd out(dg.rows() + 3, dg.cols());
    for (int k = 0; k < dg.rows(); ++k) out.row(k) = dg.row(f.edge_label_to_class[k]);
    for (int k = 0; k < 3; ++k) out.row(dg.rows() + k) = log_holonomy_gradient(f.longitudes[k], s);
    return out;
}

}  // namespace

TEST_CASE("fixture registry") {
    auto names = fixtures::fixture_names();
    CHECK(names.size() == 3);
    CHECK_THROWS_AS(fixtures::fixture("nonsense"), ParseError);
    const auto& f2 = fixtures::fixture("table2");
    CHECK(f2.z0.size() == 5);
    CHECK(f2.longitudes.size() == 3);
    const auto& f1 = fixtures::fixture("table1");
    CHECK(f1.z0.size() == 7);
}

TEST_CASE("displayed Jacobians match the computed ones") {
    const auto& f = fixtures::fixture("table2");
    Triangulation tri = Triangulation::parse(f.triangulation_text);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    Rng rng(107);

    for (int trial = 0; trial < 20; ++trial) {
        Shapes s = random_shapes(5, f.convention, rng);
        Eigen::MatrixXcd dg = log_curvature_jacobian(inc, s);
        Eigen::MatrixXcd dg_displayed = fixtures::displayed_curvature_jacobian(s.base);
        for (int k = 0; k < 4; ++k)
            for (int t = 0; t < 5; ++t)
                CHECK(std::abs(dg(f.edge_label_to_class[k], t) - dg_displayed(k, t)) < 1e-10);

        Eigen::MatrixXcd dh_displayed = fixtures::displayed_holonomy_jacobian(s.base);
        for (int k = 0; k < 3; ++k) {
            Eigen::RowVectorXcd grad = log_holonomy_gradient(f.longitudes[k], s);
            for (int t = 0; t < 5; ++t) CHECK(std::abs(grad(t) - dh_displayed(k, t)) < 1e-10);
        }
    }
}

TEST_CASE("minor determinant closed form") {
    const auto& f = fixtures::fixture("table2");
    Triangulation tri = Triangulation::parse(f.triangulation_text);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    Rng rng(109);

    for (int trial = 0; trial < 20; ++trial) {
        Shapes s = random_shapes(5, f.convention, rng);
        Eigen::MatrixXcd full = stacked_jacobian(f, inc, s);
        // Remove the second and third rows (the two redundant
        // curvature rows) to obtain a square minor.
        Eigen::MatrixXcd minor(5, 5);
        minor.row(0) = full.row(0);
        minor.row(1) = full.row(3);
        minor.row(2) = full.row(4);
        minor.row(3) = full.row(5);
        minor.row(4) = full.row(6);
        Complex det = minor.determinant();
        Complex closed = fixtures::displayed_minor_determinant(s.base);
        CHECK(std::abs(det - closed) < 1e-9 * std::max(1.0, std::abs(closed)));
    }
}

TEST_CASE("stacked Jacobian has full rank at reference points") {
    const auto& f = fixtures::fixture("table2");
    Triangulation tri = Triangulation::parse(f.triangulation_text);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    for (const auto& base : {f.z0, f.z1}) {
        Shapes s;
        s.convention = f.convention;
        s.base = base;
        CHECK(rank_numeric(stacked_jacobian(f, inc, s), 1e-8) == 5);
    }
}

TEST_CASE("holonomy targets at the second reference point") {
    const auto& f = fixtures::fixture("table2");
    // The displayed closed forms at z1 give the stored t1, and the
    // curvature targets differ from u0 in two slots by 2 pi i.
    auto h = fixtures::displayed_log_holonomy(f.z1);
    CHECK(testutil::sup_dev(h, f.t1) == 0);  // t1 is defined that way
    // The two reference targets differ by opposite 2 pi i shifts in two
    // labels, so the total curvature is preserved.
    const Complex two_pi_i(0.0, 2 * PI);
    CHECK(std::abs(f.u1[0] - f.u0[0]) < 1e-12);
    CHECK(std::abs(f.u1[1] - f.u0[1] - two_pi_i) < 1e-12);
    CHECK(std::abs(f.u1[2] - f.u0[2]) < 1e-12);
    CHECK(std::abs(f.u1[3] - f.u0[3] + two_pi_i) < 1e-12);
}

TEST_CASE("all data files are listed and non-empty") {
    auto names = fixtures::data_file_names();
    CHECK(names.size() == 9);
    for (const auto& n : names) CHECK(!fixtures::data_file_content(n).empty());
    CHECK_THROWS_AS(fixtures::data_file_content("missing.bin"), ParseError);
}
