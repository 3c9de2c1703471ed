#include "tricone/data_files.hpp"

#include "tricone/errors.hpp"
#include "tricone/fixtures.hpp"
#include "tricone/json_io.hpp"
#include "tricone/phi0.hpp"

namespace tricone::fixtures {

namespace {

// u indexed by edge class from the fixture's label-ordered list.
std::vector<Complex> to_class_order(const Fixture& f, const std::vector<Complex>& by_label) {
    std::vector<Complex> u(by_label.size());
    for (std::size_t k = 0; k < by_label.size(); ++k) u[f.edge_label_to_class[k]] = by_label[k];
    return u;
}

jsonio::JValue gaussian_value(const GaussianRational& g) {
    jsonio::JValue v = jsonio::JValue::array();
    v.push(g.re.get_str());
    v.push(g.im.get_str());
    return v;
}

jsonio::JValue poly_value(const GPoly& p) {
    jsonio::JValue v = jsonio::JValue::array();
    for (const GaussianRational& c : p) v.push(gaussian_value(c));
    return v;
}

std::string phi0_content() {
    jsonio::JValue root = jsonio::JValue::object();
    jsonio::JValue comps = jsonio::JValue::array();
    for (const RationalMap& f : curve_components()) {
        jsonio::JValue c = jsonio::JValue::object();
        c["num"] = poly_value(f.num);
        c["den"] = poly_value(f.den);
        comps.push(c);
    }
    root["components"] = comps;
    return jsonio::dump(root);
}

std::string infeasible_content() {
    const Fixture& f = fixture("table2");
    std::vector<Complex> u = to_class_order(f, f.u0);
    u[0] += Complex(0.0, 0.1);
    return jsonio::write_target(u, f.t0);
}

}  // namespace

std::vector<std::string> data_file_names() {
    return {"table1.tri",         "table2.tri",        "table2_curves.json",
            "table2_z0.json",     "table2_z1.json",    "table2_u0_t0.json",
            "table2_u1_t1.json",  "infeasible.json",   "phi0.json"};
}

std::string data_file_content(const std::string& name) {
    if (name == "table1.tri") return fixture("table1").triangulation_text;
    if (name == "table2.tri") return fixture("table2").triangulation_text;
    const Fixture& f = fixture("table2");
    if (name == "table2_curves.json")
        return jsonio::write_curves(f.convention, f.curve_names, f.holonomy_monomials);
    if (name == "table2_z0.json") return jsonio::write_shapes(Shapes{f.convention, f.z0});
    if (name == "table2_z1.json") return jsonio::write_shapes(Shapes{f.convention, f.z1});
    if (name == "table2_u0_t0.json")
        return jsonio::write_target(to_class_order(f, f.u0), f.t0);
    if (name == "table2_u1_t1.json")
        return jsonio::write_target(to_class_order(f, f.u1), f.t1);
    if (name == "infeasible.json") return infeasible_content();
    if (name == "phi0.json") return phi0_content();
    throw ParseError("unknown data file '" + name + "'");
}

}  // namespace tricone::fixtures
