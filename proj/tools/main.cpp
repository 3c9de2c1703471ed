// Command-line interface: analysis reports, verification suite,
// evaluation, solving, tracing, and data-file replay for ideal
// triangulations of oriented closed 3-dimensional pseudo-manifolds.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricone/angles.hpp"
#include "tricone/curvature.hpp"
#include "tricone/data_files.hpp"
#include "tricone/errors.hpp"
#include "tricone/exact.hpp"
#include "tricone/fixtures.hpp"
#include "tricone/geometry.hpp"
#include "tricone/json_io.hpp"
#include "tricone/peripheral.hpp"
#include "tricone/phi0.hpp"
#include "tricone/random_gen.hpp"
#include "tricone/shapes.hpp"
#include "tricone/skeleton.hpp"
#include "tricone/solver.hpp"
#include "tricone/triangulation.hpp"

namespace {

using namespace tricone;
using jsonio::JValue;

constexpr int EXIT_FAIL = 1;       // failed checks / non-convergence
constexpr int EXIT_IO = 2;         // unreadable or unparsable input
constexpr int EXIT_INFEASIBLE = 3; // target violates the sum constraint

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string hum(double x) { return jsonio::format_double(x, 12); }

std::string hum(Complex z) {
    std::string s = hum(z.real());
    s += (z.imag() < 0 || std::signbit(z.imag())) ? " - " : " + ";
    s += hum(std::abs(z.imag()));
    s += "i";
    return s;
}

std::string hum_list(const std::vector<Complex>& zs) {
    std::string s = "[";
    for (std::size_t i = 0; i < zs.size(); ++i) {
        if (i) s += ", ";
        s += hum(zs[i]);
    }
    return s + "]";
}

std::string rational_str(const Rational& r) {
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

// ---------------------------------------------------------------
// Shared options and loaders

struct Options {
    bool json = false;
    double tol = 1e-10;
    bool tol_set = false;
    double rank_tol = 1e-8;
    unsigned long long seed = 0;
    int count = 25;
    std::string curves_path, target_path, start_path, shapes_path;
    std::string base_edge;
};

Triangulation load_triangulation(const std::string& path) {
    return Triangulation::parse(read_file(path));
}

// "ab" or "ab,+1" / "ab,-1": quad convention with base slot carrying
// the quad that separates edge {a,b}.
Convention parse_base_edge(const std::string& text, int tets) {
    if (text.empty()) return Convention::standard(tets);
    std::string edge = text;
    int dir = 1;
    if (auto comma = text.find(','); comma != std::string::npos) {
        edge = text.substr(0, comma);
        std::string d = text.substr(comma + 1);
        if (d == "-1" || d == "-")
            dir = -1;
        else if (d == "+1" || d == "1" || d == "+")
            dir = 1;
        else
            throw ParseError("base-edge direction must be +1 or -1");
    }
    if (edge.size() != 2 || edge[0] < '0' || edge[0] > '3' || edge[1] < '0' || edge[1] > '3' ||
        edge[0] == edge[1])
        throw ParseError("base-edge must name two distinct vertices in 0..3, e.g. \"03,-1\"");
    return convention_from_edge(tets, edge[0] - '0', edge[1] - '0', dir);
}

std::vector<std::vector<int>> load_curves(const Options& opt, const Skeleton& skel,
                                          std::vector<std::string>* names = nullptr) {
    if (opt.curves_path.empty()) return {};
    jsonio::CurvesFile file = jsonio::read_curves(read_file(opt.curves_path));
    if (names)
        for (const auto& c : file.curves) names->push_back(c.name);
    auto vectors = jsonio::curve_index_vectors(file, skel);
    for (const auto& c : file.curves)
        if (c.from_steps) validate_path(skel, c.steps);
    return vectors;
}

// ---------------------------------------------------------------
// Check list used by `verify`

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

struct CheckList {
    std::vector<Check> checks;
    std::vector<std::string> notices;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
    void notice(const std::string& text) { notices.push_back(text); }
    int failures() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
};

// Largest relative deviation between a computed and an expected list.
double sup_dev(const std::vector<Complex>& got, const std::vector<Complex>& want) {
    double worst = 0;
    for (std::size_t i = 0; i < got.size(); ++i)
        worst = std::max(worst, std::abs(got[i] - want[i]));
    return worst;
}

void universal_checks(const Triangulation& tri, const Options& opt, Rng& rng, CheckList& out,
                      int shape_samples) {
    Skeleton skel(tri);
    const int T = skel.tet_count(), E = skel.edge_count(), V = skel.vertex_count();
    const int genus_sum = skel.genus_sum();

    out.add("euler-lemma", T - E + V == genus_sum,
            "T-E+V=" + std::to_string(T - E + V) + " sum_genus=" + std::to_string(genus_sum));

    out.add("parse-roundtrip", Triangulation::parse(tri.serialize()) == tri);

    QuadIncidence inc(skel);
    bool rows_ok = true;
    for (int t = 0; t < T; ++t)
        for (int s = 0; s < 3; ++s) {
            int sum = 0;
            for (int e = 0; e < E; ++e) sum += inc(t, s, e);
            rows_ok = rows_ok && sum == 2;
        }
    out.add("incidence-rows", rows_ok, "every quad meets 2 edge-class slots");

    int nrank = rank_exact(to_int_matrix(curvature_difference_matrix(inc)));
    out.add("difference-rank", nrank == T - genus_sum,
            "rank=" + std::to_string(nrank) + " T-sum_genus=" + std::to_string(T - genus_sum));

    RatMatrix tas = tangential_basis(inc);
    out.add("tas-dim", static_cast<int>(tas.size()) == V - E + 2 * T,
            "dim=" + std::to_string(tas.size()) + " V-E+2T=" + std::to_string(V - E + 2 * T));

    RatMatrix qe;
    bool qe_in_tas = true;
    for (int e = 0; e < E; ++e) {
        qe.push_back(leading_trailing_edge(inc, e));
        qe_in_tas = qe_in_tas && in_row_span(tas, qe.back());
    }
    out.add("edge-deformations-in-tas", qe_in_tas);
    int qe_rank = rank_rational(qe);
    out.add("edge-deformation-span", qe_rank == T - genus_sum,
            "dim span{Q_e}=" + std::to_string(qe_rank));

    bool loops_ok = true;
    for (int e = 0; e < E && loops_ok; ++e) {
        for (bool tail : {true, false}) {
            Path loop = edge_endpoint_loop(skel, e, tail);
            validate_path(skel, loop);
            auto ind = index_vector(skel, loop);
            for (int t = 0; t < T; ++t)
                for (int s = 0; s < 3; ++s)
                    if (ind[quad_id(t, s)] != inc(t, s, e)) loops_ok = false;
        }
    }
    out.add("edge-endpoint-loops", loops_ok, "loop index vectors equal incidence columns");

    // Randomized curve pairing identities on each vertex link.
    bool pairing_ok = true, antisym_ok = true;
    for (int vc = 0; vc < V; ++vc) {
        Path a = random_closed_curve(tri, skel, vc, rng);
        Path b = random_closed_curve(tri, skel, vc, rng);
        long iab = intersection_number(skel, a, b);
        long iba = intersection_number(skel, b, a);
        antisym_ok = antisym_ok && iab == -iba;
        Rational p = pairing(index_vector(skel, a), leading_trailing_curve(index_vector(skel, b)));
        pairing_ok = pairing_ok && p == Rational(2 * iab);
    }
    out.add("intersection-antisymmetry", antisym_ok);
    out.add("pairing-identity", pairing_ok, "pairing(a, Q_b) = 2 iota(a,b)");

    // Sampled shape checks.
    Convention conv = Convention::standard(T);
    double worst_total = 0, worst_gb = 0, worst_exp = 0, worst_fd = 0, worst_angles = 0;
    bool rank_const = true;
    const Complex ipi(0.0, PI);
    for (int k = 0; k < shape_samples; ++k) {
        Shapes s = random_shapes(T, conv, rng);
        auto g = log_curvature(inc, s);
        worst_total =
            std::max(worst_total, std::abs(total_log_curvature(g) - 2.0 * ipi * double(T)));
        auto vg = vertex_log_curvature(skel, g);
        for (int vc = 0; vc < V; ++vc) {
            double corners = static_cast<double>(skel.vertices()[vc].members.size());
            worst_gb = std::max(worst_gb, std::abs(vg[vc] - ipi * corners));
        }
        auto c = complex_curvature(inc, s);
        for (int e = 0; e < E; ++e)
            worst_exp = std::max(worst_exp, std::abs(std::exp(g[e]) - c[e]) /
                                                std::max(1.0, std::abs(c[e])));
        Eigen::MatrixXcd j = log_curvature_jacobian(inc, s);
        rank_const = rank_const && rank_numeric(j, opt.rank_tol) == T - genus_sum;
        const double h = 1e-6;
        for (int t = 0; t < T; ++t) {
            Shapes sp = s, sm = s;
            sp.base[t] += h;
            sm.base[t] -= h;
            auto gp = log_curvature(inc, sp), gm = log_curvature(inc, sm);
            for (int e = 0; e < E; ++e) {
                Complex fd = (gp[e] - gm[e]) / (2 * h);
                worst_fd = std::max(worst_fd,
                                    std::abs(fd - j(e, t)) / std::max(1.0, std::abs(j(e, t))));
            }
        }
        Shapes back = shapes_from_angles(angles_of(s), conv);
        for (int t = 0; t < T; ++t)
            worst_angles = std::max(worst_angles, std::abs(back.base[t] - s.base[t]));
    }
    out.add("total-curvature", worst_total < opt.tol,
            "sup |sum G - 2 pi i T| = " + hum(worst_total));
    out.add("gauss-bonnet", worst_gb < opt.tol,
            "sup |sum_v G - i pi corners| = " + hum(worst_gb));
    out.add("exp-curvature", worst_exp < opt.tol, "sup |exp(G) - c| = " + hum(worst_exp));
    out.add("jacobian-rank-constancy", rank_const,
            "numeric rank dG = T - sum_genus at all samples");
    out.add("jacobian-fd", worst_fd < 1e-6, "sup rel dev vs central differences = " + hum(worst_fd));
    out.add("angle-chart-inverse", worst_angles < 1e-12, "sup dev = " + hum(worst_angles));

    // Volume concavity along tangential directions.
    bool concave = true;
    double grad_dev = 0;
    for (int k = 0; k < 3; ++k) {
        Shapes s = random_shapes(T, conv, rng);
        auto x = angles_of(s);
        auto hess = volume_hessian_diag(x);
        for (const auto& row : tas) {
            double q = 0, norm = 0;
            for (std::size_t i = 0; i < row.size(); ++i) {
                double w = row[i].get_d();
                q += w * w * hess[i];
                norm += w * w;
            }
            if (norm > 0 && !(q < 0)) concave = false;
        }
        if (!tas.empty()) {
            std::vector<double> w(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                w[i] = tas[k % tas.size()][i].get_d();
            double analytic = volume_derivative(x, w);
            const double h = 1e-6;
            auto xp = x, xm = x;
            for (std::size_t i = 0; i < x.size(); ++i) {
                xp[i] += h * w[i];
                xm[i] -= h * w[i];
            }
            double fd = (volume(xp) - volume(xm)) / (2 * h);
            grad_dev = std::max(grad_dev, std::abs(fd - analytic));
        }
    }
    out.add("volume-concavity", concave, "w^T Hess w < 0 for nonzero tangential directions");
    out.add("volume-gradient", grad_dev < 1e-6, "sup dev vs central differences = " + hum(grad_dev));
}

void curve_checks(const Triangulation& tri, const Options& opt, CheckList& out) {
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    jsonio::CurvesFile file = jsonio::read_curves(read_file(opt.curves_path));
    auto curves = jsonio::curve_index_vectors(file, skel);
    const int E = skel.edge_count();

    bool steps_valid = true;
    for (const auto& c : file.curves)
        if (c.from_steps) validate_path(skel, c.steps);
    out.add("curve-paths", steps_valid);

    RatMatrix tas = tangential_basis(inc);
    RatMatrix stas = strong_tangential_basis(inc, curves);
    out.add("stas-dim", static_cast<int>(stas.size()) <= static_cast<int>(tas.size()),
            "dim STAS=" + std::to_string(stas.size()) + ", dim TAS=" + std::to_string(tas.size()));

    bool q_in_tas = true, q_in_stas = true;
    RatMatrix all_q;
    for (int e = 0; e < E; ++e) all_q.push_back(leading_trailing_edge(inc, e));
    for (const auto& ind : curves) all_q.push_back(leading_trailing_curve(ind));
    for (const auto& q : all_q) {
        q_in_tas = q_in_tas && in_row_span(tas, q);
        q_in_stas = q_in_stas && in_row_span(stas, q);
    }
    out.add("deformations-in-tas", q_in_tas, "all Q_e and Q_curve lie in TAS");
    out.add("deformations-in-stas", q_in_stas, "all Q_e and Q_curve lie in STAS");

    int span_dim = rank_rational(all_q);
    bool spans = span_dim == static_cast<int>(stas.size()) && q_in_stas;
    out.notice(std::string("span{Q_e, Q_curve} ") + (spans ? "equals" : "is a proper subspace of") +
               " STAS (dim " + std::to_string(span_dim) + " of " + std::to_string(stas.size()) +
               ")");

    bool antisym = true;
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = 0; j < curves.size(); ++j) {
            Rational pij = pairing(curves[i], leading_trailing_curve(curves[j]));
            Rational pji = pairing(curves[j], leading_trailing_curve(curves[i]));
            if (pij != -pji) antisym = false;
            if (i == j && pij != 0) antisym = false;
        }
    out.add("curve-pairing-antisymmetry", antisym,
            "pairing(a, Q_b) = -pairing(b, Q_a), zero diagonal");
}

// ---------------------------------------------------------------
// Subcommands

int report_checks(const CheckList& list, const Options& opt, const std::string& subject) {
    if (opt.json) {
        JValue root = JValue::object();
        root["subject"] = subject;
        JValue checks = JValue::array();
        for (const auto& c : list.checks) {
            JValue jc = JValue::object();
            jc["name"] = c.name;
            jc["pass"] = c.pass;
            if (!c.detail.empty()) jc["detail"] = c.detail;
            checks.push(jc);
        }
        root["checks"] = checks;
        JValue notes = JValue::array();
        for (const auto& n : list.notices) notes.push(n);
        root["notices"] = notes;
        root["failures"] = list.failures();
        std::fputs(jsonio::dump(root).c_str(), stdout);
    } else {
        for (const auto& c : list.checks)
            std::printf("%s %-28s %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                        c.detail.c_str());
        for (const auto& n : list.notices) std::printf("note %s\n", n.c_str());
        int f = list.failures();
        if (f == 0)
            std::printf("all %zu checks passed (%s)\n", list.checks.size(), subject.c_str());
        else
            std::printf("%d of %zu checks FAILED (%s)\n", f, list.checks.size(), subject.c_str());
    }
    return list.failures() == 0 ? 0 : EXIT_FAIL;
}

int cmd_analyze(const std::string& tri_path, const Options& opt) {
    Triangulation tri = load_triangulation(tri_path);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    const int T = skel.tet_count(), E = skel.edge_count(), V = skel.vertex_count();
    std::vector<int> genera;
    for (const auto& v : skel.vertices()) genera.push_back(v.link.genus());
    std::sort(genera.begin(), genera.end());
    int genus_sum = skel.genus_sum();
    int nrank = rank_exact(to_int_matrix(curvature_difference_matrix(inc)));
    int tas_dim = static_cast<int>(tangential_basis(inc).size());
    std::vector<int> valences;
    for (const auto& e : skel.edges()) valences.push_back(e.valence());

    if (opt.json) {
        JValue root = JValue::object();
        root["tets"] = T;
        root["edges"] = E;
        root["vertices"] = V;
        root["genera"] = jsonio::int_list(genera);
        root["edge_valences"] = jsonio::int_list(valences);
        root["euler_lemma"] = (T - E + V == genus_sum);
        root["difference_rank"] = nrank;
        root["tas_dim"] = tas_dim;
        std::fputs(jsonio::dump(root).c_str(), stdout);
    } else {
        std::printf("|T|=%d |E|=%d |V|=%d genera=[", T, E, V);
        for (std::size_t i = 0; i < genera.size(); ++i)
            std::printf("%s%d", i ? "," : "", genera[i]);
        std::printf("] rank(B)=%d dimTAS=%d\n", nrank, tas_dim);
        std::printf("edge valences: [");
        for (std::size_t i = 0; i < valences.size(); ++i)
            std::printf("%s%d", i ? "," : "", valences[i]);
        std::printf("]\n");
        std::printf("|T|-|E|+|V| = %d = sum of link genera = %d (%s)\n", T - E + V, genus_sum,
                    T - E + V == genus_sum ? "ok" : "VIOLATED");
        std::printf("|T| - sum genera = %d\n", T - genus_sum);
    }
    return 0;
}

int cmd_equations(const std::string& tri_path, const Options& opt) {
    Triangulation tri = load_triangulation(tri_path);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    Convention conv = parse_base_edge(opt.base_edge, skel.tet_count());

    if (opt.json) {
        JValue root = JValue::object();
        JValue cv = JValue::object();
        cv["base_slot"] = jsonio::int_list(conv.base_slot);
        cv["direction"] = conv.direction;
        root["convention"] = cv;
        JValue edges = JValue::array();
        for (int e = 0; e < skel.edge_count(); ++e) {
            JValue je = JValue::object();
            je["class"] = e;
            je["valence"] = skel.edges()[e].valence();
            je["monomial"] = fixtures::monomial_string(
                fixtures::assembled_curvature_monomial(inc, conv, e));
            edges.push(je);
        }
        root["edges"] = edges;
        root["total"] = "2 pi i |T|";
        std::fputs(jsonio::dump(root).c_str(), stdout);
    } else {
        std::printf("convention: base slots [");
        for (std::size_t i = 0; i < conv.base_slot.size(); ++i)
            std::printf("%s%d", i ? "," : "", conv.base_slot[i]);
        std::printf("], direction %+d\n", conv.direction);
        for (int e = 0; e < skel.edge_count(); ++e)
            std::printf("c(e%d) = %s   (valence %d)\n", e,
                        fixtures::monomial_string(
                            fixtures::assembled_curvature_monomial(inc, conv, e))
                            .c_str(),
                        skel.edges()[e].valence());
        std::printf("product over e of c(e) = exp(2 pi i |T|) = 1; sum of G(e) = 2 pi i |T|\n");
    }
    return 0;
}

int cmd_tas(const std::string& tri_path, const Options& opt) {
    Triangulation tri = load_triangulation(tri_path);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    RatMatrix tas = tangential_basis(inc);
    std::vector<std::string> names;
    auto curves = load_curves(opt, skel, &names);

    auto matrix_value = [](const RatMatrix& m) {
        JValue rows = JValue::array();
        for (const auto& r : m) {
            JValue row = JValue::array();
            for (const auto& x : r) row.push(rational_str(x));
            rows.push(row);
        }
        return rows;
    };

    if (opt.json) {
        JValue root = JValue::object();
        root["tas_dim"] = static_cast<int>(tas.size());
        root["tas_basis"] = matrix_value(tas);
        if (!curves.empty()) {
            RatMatrix stas = strong_tangential_basis(inc, curves);
            root["stas_dim"] = static_cast<int>(stas.size());
            root["stas_basis"] = matrix_value(stas);
            JValue pm = JValue::array();
            for (const auto& a : curves) {
                JValue row = JValue::array();
                for (const auto& b : curves)
                    row.push(rational_str(pairing(a, leading_trailing_curve(b))));
                pm.push(row);
            }
            root["curve_pairing_matrix"] = pm;
        }
        std::fputs(jsonio::dump(root).c_str(), stdout);
    } else {
        std::printf("dim TAS = %zu\n", tas.size());
        for (const auto& r : tas) {
            std::printf("  [");
            for (std::size_t i = 0; i < r.size(); ++i)
                std::printf("%s%s", i ? " " : "", rational_str(r[i]).c_str());
            std::printf("]\n");
        }
        if (!curves.empty()) {
            RatMatrix stas = strong_tangential_basis(inc, curves);
            std::printf("dim STAS = %zu (with %zu curves)\n", stas.size(), curves.size());
            std::printf("pairing(curve_i, Q_curve_j):\n");
            for (const auto& a : curves) {
                std::printf("  [");
                for (std::size_t j = 0; j < curves.size(); ++j)
                    std::printf("%s%s", j ? " " : "",
                                rational_str(pairing(a, leading_trailing_curve(curves[j])))
                                    .c_str());
                std::printf("]\n");
            }
        }
    }
    return 0;
}

int cmd_eval(const std::string& tri_path, const Options& opt) {
    Triangulation tri = load_triangulation(tri_path);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    if (opt.shapes_path.empty()) throw ParseError("eval requires --shapes");
    Shapes s = jsonio::read_shapes(read_file(opt.shapes_path));
    if (s.tet_count() != skel.tet_count())
        throw ParseError("shapes file has wrong tetrahedron count");
    s.validate();
    std::vector<std::string> names;
    auto curves = load_curves(opt, skel, &names);

    auto g = log_curvature(inc, s);
    auto c = complex_curvature(inc, s);
    Complex total = total_log_curvature(g);
    auto vg = vertex_log_curvature(skel, g);
    std::vector<Complex> hol;
    for (const auto& ind : curves) hol.push_back(log_holonomy(ind, s));
    double vol = volume(angles_of(s));
    const Complex ipi(0.0, PI);
    double gb_dev = 0;
    for (int vc = 0; vc < skel.vertex_count(); ++vc)
        gb_dev = std::max(gb_dev,
                          std::abs(vg[vc] - ipi * double(skel.vertices()[vc].members.size())));

    if (opt.json) {
        JValue root = JValue::object();
        root["log_curvature"] = jsonio::complex_list(g);
        root["curvature"] = jsonio::complex_list(c);
        root["total_log_curvature"] = jsonio::complex_value(total);
        root["vertex_log_curvature"] = jsonio::complex_list(vg);
        root["gauss_bonnet_deviation"] = gb_dev;
        if (!hol.empty()) root["log_holonomy"] = jsonio::complex_list(hol);
        root["volume"] = vol;
        std::fputs(jsonio::dump(root).c_str(), stdout);
    } else {
        std::printf("G = %s\n", hum_list(g).c_str());
        std::printf("c = %s\n", hum_list(c).c_str());
        std::printf("sum G = %s (2 pi i |T| = %s)\n", hum(total).c_str(),
                    hum(Complex(0, 2 * PI * skel.tet_count())).c_str());
        std::printf("per-vertex G sums = %s\n", hum_list(vg).c_str());
        std::printf("Gauss-Bonnet deviation = %s\n", hum(gb_dev).c_str());
        if (!hol.empty()) {
            std::printf("H = %s", hum_list(hol).c_str());
            if (!names.empty()) {
                std::printf("  (");
                for (std::size_t i = 0; i < names.size(); ++i)
                    std::printf("%s%s", i ? ", " : "", names[i].c_str());
                std::printf(")");
            }
            std::printf("\n");
        }
        std::printf("volume = %s\n", hum(vol).c_str());
    }
    return 0;
}

JValue solve_result_value(const SolveResult& res) {
    JValue root = JValue::object();
    root["status"] = to_string(res.status);
    root["iterations"] = res.iterations;
    root["residual"] = res.residual;
    JValue hist = JValue::array();
    for (double h : res.residual_history) hist.push(h);
    root["residual_history"] = hist;
    if (res.status == SolveStatus::Converged) {
        JValue cv = JValue::object();
        cv["base_slot"] = jsonio::int_list(res.shapes.convention.base_slot);
        cv["direction"] = res.shapes.convention.direction;
        root["convention"] = cv;
        root["base"] = jsonio::complex_list(res.shapes.base);
    }
    return root;
}

int status_exit(SolveStatus s) {
    if (s == SolveStatus::Converged) return 0;
    if (s == SolveStatus::InfeasibleTarget) return EXIT_INFEASIBLE;
    return EXIT_FAIL;
}

int cmd_solve(const std::string& tri_path, const Options& opt) {
    Triangulation tri = load_triangulation(tri_path);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    if (opt.target_path.empty()) throw ParseError("solve requires --target");
    jsonio::TargetFile tf = jsonio::read_target(read_file(opt.target_path));
    CurvatureTarget target;
    target.u = tf.u;
    target.t = tf.t;
    target.curves = load_curves(opt, skel);
    if (target.u.size() != static_cast<std::size_t>(skel.edge_count()))
        throw ParseError("target u has wrong edge count");
    if (target.t.size() != target.curves.size())
        throw ParseError("target t and curve list differ in length");

    Shapes start;
    if (!opt.start_path.empty()) {
        start = jsonio::read_shapes(read_file(opt.start_path));
    } else {
        start.convention = parse_base_edge(opt.base_edge, skel.tet_count());
        start.base.assign(skel.tet_count(), std::polar(1.0, PI / 3.0));
    }
    if (start.tet_count() != skel.tet_count())
        throw ParseError("start shapes have wrong tetrahedron count");
    start.validate();

    SolveOptions sopt;
    if (opt.tol_set) sopt.tol = opt.tol;
    sopt.rank_tol = opt.rank_tol;
    SolveResult res = solve_curvature(inc, target, start, sopt);
    std::fputs(jsonio::dump(solve_result_value(res)).c_str(), stdout);
    return status_exit(res.status);
}

int cmd_trace(const std::string& tri_path, const Options& opt) {
    Triangulation tri = load_triangulation(tri_path);
    Skeleton skel(tri);
    QuadIncidence inc(skel);
    if (opt.target_path.empty()) throw ParseError("trace requires --target");
    auto curves = load_curves(opt, skel);

    // {"targets": [{"u": ..., "t": ...}, ...]}
    std::vector<CurvatureTarget> targets;
    {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_file(opt.target_path));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object() || !j.contains("targets"))
            throw ParseError("trace target file needs a targets array");
        for (const auto& jt : j.at("targets")) {
            jsonio::TargetFile tf = jsonio::read_target(jt.dump());
            CurvatureTarget t;
            t.u = tf.u;
            t.t = tf.t;
            t.curves = curves;
            if (t.u.size() != static_cast<std::size_t>(skel.edge_count()))
                throw ParseError("target u has wrong edge count");
            if (t.t.size() != curves.size())
                throw ParseError("target t and curve list differ in length");
            targets.push_back(std::move(t));
        }
    }
    if (opt.start_path.empty()) throw ParseError("trace requires --start");
    Shapes start = jsonio::read_shapes(read_file(opt.start_path));
    start.validate();

    SolveOptions sopt;
    if (opt.tol_set) sopt.tol = opt.tol;
    sopt.rank_tol = opt.rank_tol;
    TraceResult res = trace_curvature(inc, targets, start, sopt);

    JValue root = JValue::object();
    root["status"] = to_string(res.status);
    root["reached"] = static_cast<int>(res.points.size());
    root["failed_index"] = res.failed_index;
    JValue iters = JValue::array();
    for (int i : res.iterations) iters.push(i);
    root["iterations"] = iters;
    JValue pts = JValue::array();
    for (const auto& s : res.points) pts.push(jsonio::complex_list(s.base));
    root["points"] = pts;
    std::fputs(jsonio::dump(root).c_str(), stdout);
    return status_exit(res.status);
}

int cmd_verify(const std::string& subject, const Options& opt) {
    CheckList list;
    if (subject == "random") {
        Rng rng(opt.seed);
        for (int k = 0; k < opt.count; ++k) {
            int tets = 1 + static_cast<int>(uniform_below(rng, 6));
            Triangulation tri = random_triangulation(tets, rng);
            CheckList one;
            universal_checks(tri, opt, rng, one, 3);
            for (auto& c : one.checks) {
                c.name = "t" + std::to_string(k) + "/" + c.name;
                if (!c.pass) list.checks.push_back(c);
            }
            if (one.failures() == 0)
                list.add("triangulation-" + std::to_string(k), true,
                         std::to_string(tets) + " tets, all universal checks");
        }
    } else {
        Triangulation tri = load_triangulation(subject);
        Rng rng(opt.seed);
        universal_checks(tri, opt, rng, list, opt.count);
        if (!opt.curves_path.empty())
            curve_checks(tri, opt, list);
        else
            list.notice("no --curves given: curve-dependent checks skipped");
    }
    return report_checks(list, opt, subject);
}

int cmd_fixtures(const std::string& action, const std::string& name, const std::string& out_dir) {
    if (action.empty() || action == "list") {
        for (const auto& n : fixtures::data_file_names()) std::printf("%s\n", n.c_str());
        return 0;
    }
    if (action == "show") {
        if (name.empty()) throw ParseError("fixtures show requires a file name");
        std::fputs(fixtures::data_file_content(name).c_str(), stdout);
        return 0;
    }
    if (action == "dump") {
        for (const auto& n : fixtures::data_file_names()) {
            std::string path = out_dir.empty() ? n : out_dir + "/" + n;
            std::ofstream out(path, std::ios::binary);
            if (!out) throw ParseError("cannot write '" + path + "'");
            out << fixtures::data_file_content(n);
        }
        return 0;
    }
    throw ParseError("unknown fixtures action '" + action + "' (list, show, dump)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideal triangulations of closed oriented 3-dimensional pseudo-manifolds: "
                 "gluing equations, curvature maps, angle structures, peripheral curves"};
    app.require_subcommand(1);

    Options opt;
    std::string tri_path, verify_subject;
    std::string fx_action, fx_name, fx_out;

    auto add_common = [&](CLI::App* sub, bool with_tri = true) {
        if (with_tri)
            sub->add_option("triangulation", tri_path, "triangulation file")->required();
        sub->add_flag("--json", opt.json, "machine-readable output");
        sub->add_option("--tol", opt.tol, "numeric tolerance")
            ->each([&opt](const std::string&) { opt.tol_set = true; });
        sub->add_option("--rank-tol", opt.rank_tol, "relative singular-value threshold");
        sub->add_option("--seed", opt.seed, "random seed");
        sub->add_option("--count", opt.count, "sample count");
        sub->add_option("--curves", opt.curves_path, "curves file (JSON)");
        sub->add_option("--target", opt.target_path, "target file (JSON)");
        sub->add_option("--start", opt.start_path, "start shapes file (JSON)");
        sub->add_option("--shapes", opt.shapes_path, "shapes file (JSON)");
        sub->add_option("--base-edge", opt.base_edge,
                        "per-tet quad convention, e.g. \"03,-1\" (default \"01,+1\")");
    };

    auto* a_analyze = app.add_subcommand("analyze", "combinatorial report");
    add_common(a_analyze);
    auto* a_equations = app.add_subcommand("equations", "gluing-equation monomials");
    add_common(a_equations);
    auto* a_tas = app.add_subcommand("tas", "tangential angle structures");
    add_common(a_tas);
    auto* a_eval = app.add_subcommand("eval", "evaluate curvature maps at shapes");
    add_common(a_eval);
    auto* a_solve = app.add_subcommand("solve", "Gauss-Newton solve for target curvatures");
    add_common(a_solve);
    auto* a_trace = app.add_subcommand("trace", "follow a family of targets");
    add_common(a_trace);
    auto* a_verify = app.add_subcommand("verify", "run the invariant suite");
    a_verify->add_option("subject", verify_subject, "triangulation file or 'random'")->required();
    add_common(a_verify, false);
    auto* a_fixtures = app.add_subcommand("fixtures", "list/show/dump shipped data files");
    a_fixtures->add_option("action", fx_action, "list | show | dump");
    a_fixtures->add_option("name", fx_name, "data file name (for show)");
    a_fixtures->add_option("--out", fx_out, "output directory (for dump)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep --help's exit 0, but fold usage errors into the malformed-input code.
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_IO;
    }

    try {
        if (*a_analyze) return cmd_analyze(tri_path, opt);
        if (*a_equations) return cmd_equations(tri_path, opt);
        if (*a_tas) return cmd_tas(tri_path, opt);
        if (*a_eval) return cmd_eval(tri_path, opt);
        if (*a_solve) return cmd_solve(tri_path, opt);
        if (*a_trace) return cmd_trace(tri_path, opt);
        if (*a_verify) return cmd_verify(verify_subject, opt);
        if (*a_fixtures) return cmd_fixtures(fx_action, fx_name, fx_out);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return EXIT_IO;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return EXIT_IO;
    }
    return 0;
}
