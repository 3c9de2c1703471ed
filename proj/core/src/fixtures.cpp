#include "tricone/fixtures.hpp"

#include <cmath>

#include "tricone/errors.hpp"
#include "tricone/phi0.hpp"

namespace tricone::fixtures {

namespace {

const char* TABLE2_TEXT =
    "0 | 2 (032) | 4 (012) | 2 (123) | 2 (120)\n"
    "1 | 2 (013) | 1 (213) | 3 (013) | 1 (103)\n"
    "2 | 0 (312) | 1 (012) | 0 (021) | 0 (023)\n"
    "3 | 4 (013) | 1 (023) | 4 (312) | 4 (230)\n"
    "4 | 0 (013) | 3 (012) | 3 (312) | 3 (230)\n";

const char* TABLE1_TEXT =
    "0 | 4 (203) | 2 (321) | 6 (032) | 5 (120)\n"
    "1 | 3 (312) | 2 (012) | 4 (013) | 6 (031)\n"
    "2 | 1 (013) | 4 (213) | 5 (123) | 0 (310)\n"
    "3 | 6 (312) | 4 (012) | 5 (203) | 1 (120)\n"
    "4 | 3 (013) | 1 (023) | 0 (102) | 2 (103)\n"
    "5 | 0 (312) | 6 (012) | 3 (203) | 2 (023)\n"
    "6 | 5 (013) | 1 (132) | 0 (032) | 3 (120)\n";

using Monomial = std::map<std::pair<int, int>, int>;

Fixture make_table2() {
    Fixture f;
    f.name = "table2";
    f.triangulation_text = TABLE2_TEXT;
    // The printed parameters sit at the {03|12} quad of every
    // tetrahedron, with the primed parameters one slot backwards.
    f.convention = Convention{std::vector<int>(5, 2), -1};
    f.edge_label_to_class = {3, 0, 1, 2};

    const Complex i(0.0, 1.0);
    const Complex z_reg = std::polar(1.0, PI / 3.0);
    f.z0.assign(5, z_reg);
    const Complex w = 1.0 / (1.0 - std::polar(1.0, 5.0 * PI / 6.0));
    f.z1 = {w, z_reg, std::polar(1.0, 5.0 * PI / 6.0), w, w};

    f.u0 = {i * (PI / 3.0), i * (5.0 * PI / 3.0), i * (2.0 * PI), i * (6.0 * PI)};
    f.u1 = {i * (PI / 3.0), i * (11.0 * PI / 3.0), i * (2.0 * PI), i * (4.0 * PI)};
    f.t0 = {Complex(0.0), Complex(0.0), i * PI};
    f.t1 = displayed_log_holonomy(f.z1);

    f.curve_names = {"lambda1", "lambda2", "lambda3"};
    std::vector<int> l1(15, 0), l2(15, 0), l3(15, 0);
    l1[quad_id(0, 1)] = 1;
    l1[quad_id(2, 0)] = -1;
    l2[quad_id(3, 2)] = 1;
    l2[quad_id(4, 2)] = -1;
    l3[quad_id(0, 2)] = 1;
    l3[quad_id(1, 1)] = -1;
    l3[quad_id(2, 1)] = 1;
    l3[quad_id(3, 1)] = 1;
    l3[quad_id(4, 1)] = 1;
    f.longitudes = {l1, l2, l3};

    f.curvature_monomials = {
        Monomial{{{1, 1}, 1}},
        Monomial{{{0, 2}, 1}, {{1, 1}, 1}, {{2, 0}, 1}, {{3, 2}, 1}, {{4, 2}, 1}},
        Monomial{{{0, 0}, 1}, {{0, 1}, 1}, {{0, 2}, 1}, {{2, 0}, 1}, {{2, 1}, 1}, {{2, 2}, 1}},
        Monomial{{{0, 0}, 1},
                 {{0, 1}, 1},
                 {{1, 0}, 2},
                 {{1, 2}, 2},
                 {{2, 1}, 1},
                 {{2, 2}, 1},
                 {{3, 0}, 2},
                 {{3, 1}, 2},
                 {{3, 2}, 1},
                 {{4, 0}, 2},
                 {{4, 1}, 2},
                 {{4, 2}, 1}},
    };
    f.holonomy_monomials = {
        Monomial{{{0, 1}, 1}, {{2, 2}, -1}},
        Monomial{{{3, 0}, 1}, {{4, 0}, -1}},
        Monomial{{{0, 0}, 1}, {{1, 1}, -1}, {{2, 1}, 1}, {{3, 1}, 1}, {{4, 1}, 1}},
    };
    return f;
}

Fixture make_table1() {
    Fixture f;
    f.name = "table1";
    f.triangulation_text = TABLE1_TEXT;
    // Parameters at the {01|23} quads, primes one slot forwards.
    f.convention = Convention{std::vector<int>(7, 0), 1};
    const GaussianRational i_exact{Rational(0), Rational(1)};
    for (const GaussianRational& v : curve_values_exact(i_exact))
        f.z0.push_back(v.to_complex());
    return f;
}

}  // namespace

const Fixture& fixture(const std::string& name) {
    static const Fixture table1 = make_table1();
    static const Fixture table2 = make_table2();
    if (name == "table1") return table1;
    if (name == "table2") return table2;
    throw ParseError("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() { return {"table1", "table2", "phi0"}; }

std::vector<Complex> displayed_log_curvature(const std::vector<Complex>& z) {
    const Complex ipi(0.0, PI);
    auto lg = [](Complex v) { return std::log(v); };
    Complex g0 = -lg(1.0 - z[1]);
    Complex g1 = lg(z[0] - 1.0) - lg(z[0]) - lg(1.0 - z[1]) + lg(z[2]) + lg(z[3] - 1.0) -
                 lg(z[3]) + lg(z[4] - 1.0) - lg(z[4]);
    Complex g2 = 2.0 * ipi;
    Complex g3 = lg(z[0]) - lg(z[0] - 1.0) + 2.0 * lg(1.0 - z[1]) - lg(z[2]) + lg(z[3]) -
                 lg(z[3] - 1.0) + lg(z[4]) - lg(z[4] - 1.0) + 8.0 * ipi;
    return {g0, g1, g2, g3};
}

Eigen::MatrixXcd displayed_curvature_jacobian(const std::vector<Complex>& z) {
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(4, 5);
    j(0, 1) = -1.0 / (z[1] - 1.0);
    j(1, 0) = 1.0 / (z[0] * (z[0] - 1.0));
    j(1, 1) = -1.0 / (z[1] - 1.0);
    j(1, 2) = 1.0 / z[2];
    j(1, 3) = 1.0 / (z[3] * (z[3] - 1.0));
    j(1, 4) = 1.0 / (z[4] * (z[4] - 1.0));
    j.row(3) = -j.row(0) - j.row(1);
    return j;
}

std::vector<Complex> displayed_log_holonomy(const std::vector<Complex>& z) {
    auto lg = [](Complex v) { return std::log(v); };
    Complex h1 = -lg(1.0 - z[0]) + lg(z[2]) - lg(z[2] - 1.0);
    Complex h2 = lg(z[3]) - lg(z[4]);
    Complex h3 = lg(z[0]) + lg(1.0 - z[1]) - lg(1.0 - z[2]) - lg(1.0 - z[3]) - lg(1.0 - z[4]);
    return {h1, h2, h3};
}

Eigen::MatrixXcd displayed_holonomy_jacobian(const std::vector<Complex>& z) {
    Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(3, 5);
    j(0, 0) = 1.0 / (1.0 - z[0]);
    j(0, 2) = 1.0 / (z[2] * (1.0 - z[2]));
    j(1, 3) = 1.0 / z[3];
    j(1, 4) = -1.0 / z[4];
    j(2, 0) = 1.0 / z[0];
    j(2, 1) = -1.0 / (1.0 - z[1]);
    j(2, 2) = 1.0 / (1.0 - z[2]);
    j(2, 3) = 1.0 / (1.0 - z[3]);
    j(2, 4) = 1.0 / (1.0 - z[4]);
    return j;
}

Complex displayed_minor_determinant(const std::vector<Complex>& z) {
    Complex n = -1.0 + z[0] + z[3] + z[4] + z[0] * z[2] - z[0] * z[2] * z[3] -
                z[0] * z[2] * z[4] - z[3] * z[4] - z[0] * z[3] * z[4] +
                z[0] * z[2] * z[3] * z[4];
    Complex d = z[0] * z[2] * z[3] * z[4] * (1.0 - z[0]) * (1.0 - z[1]) * (1.0 - z[2]) *
                (1.0 - z[3]) * (1.0 - z[4]);
    return -2.0 * n / d;
}

std::string monomial_string(const Monomial& exponents) {
    static const char* MARK[3] = {"", "'", "''"};
    std::string out;
    for (const auto& [key, exp] : exponents) {
        if (exp == 0) continue;
        if (!out.empty()) out += ' ';
        out += 'z' + std::to_string(key.first) + MARK[key.second];
        if (exp != 1) out += '^' + std::to_string(exp);
    }
    return out.empty() ? "1" : out;
}

Monomial assembled_curvature_monomial(const QuadIncidence& inc, const Convention& conv, int e) {
    Monomial m;
    for (int t = 0; t < inc.tet_count(); ++t)
        for (int level = 0; level < 3; ++level) {
            int k = inc(t, conv.slot(t, level), e);
            if (k != 0) m[{t, level}] = k;
        }
    return m;
}

Monomial assembled_holonomy_monomial(const std::vector<int>& ind, const Convention& conv) {
    Monomial m;
    const int tets = static_cast<int>(ind.size()) / 3;
    for (int t = 0; t < tets; ++t)
        for (int level = 0; level < 3; ++level) {
            int k = ind[quad_id(t, conv.slot(t, level))];
            if (k != 0) m[{t, level}] = k;
        }
    return m;
}

}  // namespace tricone::fixtures
