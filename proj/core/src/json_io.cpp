#include "tricone/json_io.hpp"

#include <cstdio>

#include <json.hpp>

#include "tricone/errors.hpp"

namespace tricone::jsonio {

JValue& JValue::operator[](const std::string& key) {
    if (kind_ == Kind::Null) kind_ = Kind::Object;
    for (auto& [k, v] : fields_)
        if (k == key) return v;
    fields_.emplace_back(key, JValue());
    return fields_.back().second;
}

std::string format_double(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

namespace {

void escape_to(const std::string& s, std::string& out) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void dump_to(const JValue& v, int depth, std::string& out) {
    const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<std::size_t>(depth + 1), ' ');
    switch (v.kind()) {
        case JValue::Kind::Null: out += "null"; break;
        case JValue::Kind::Bool: out += v.as_bool() ? "true" : "false"; break;
        case JValue::Kind::Int: out += std::to_string(v.as_int()); break;
        case JValue::Kind::Double: out += format_double(v.as_double()); break;
        case JValue::Kind::Str: escape_to(v.as_string(), out); break;
        case JValue::Kind::Array: {
            if (v.items().empty()) {
                out += "[]";
                break;
            }
            // Arrays of scalars stay on one line; nested structures
            // get one element per line.
            bool nested = false;
            for (const JValue& it : v.items())
                nested = nested || it.kind() == JValue::Kind::Array ||
                         it.kind() == JValue::Kind::Object;
            out += '[';
            for (std::size_t i = 0; i < v.items().size(); ++i) {
                if (nested) {
                    out += '\n';
                    out += pad_in;
                } else if (i > 0) {
                    out += ' ';
                }
                dump_to(v.items()[i], depth + 1, out);
                if (i + 1 < v.items().size()) out += ',';
            }
            if (nested) {
                out += '\n';
                out += pad;
            }
            out += ']';
            break;
        }
        case JValue::Kind::Object: {
            if (v.fields().empty()) {
                out += "{}";
                break;
            }
            out += '{';
            for (std::size_t i = 0; i < v.fields().size(); ++i) {
                out += '\n';
                out += pad_in;
                escape_to(v.fields()[i].first, out);
                out += ": ";
                dump_to(v.fields()[i].second, depth + 1, out);
                if (i + 1 < v.fields().size()) out += ',';
            }
            out += '\n';
            out += pad;
            out += '}';
            break;
        }
    }
}

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Complex read_complex(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected a complex number as [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> read_complex_list(const json& j, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<Complex> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(read_complex(e));
    return out;
}

Convention read_convention(const json& j) {
    if (!j.is_object() || !j.contains("base_slot") || !j.contains("direction"))
        throw ParseError("convention needs base_slot and direction");
    Convention conv;
    for (const auto& e : j.at("base_slot")) {
        int s = e.get<int>();
        if (s < 0 || s > 2) throw ParseError("base_slot entries must be 0, 1 or 2");
        conv.base_slot.push_back(s);
    }
    conv.direction = j.at("direction").get<int>();
    if (conv.direction != 1 && conv.direction != -1)
        throw ParseError("direction must be +1 or -1");
    return conv;
}

}  // namespace

std::string dump(const JValue& v) {
    std::string out;
    dump_to(v, 0, out);
    out += '\n';
    return out;
}

JValue complex_value(Complex z) {
    JValue v = JValue::array();
    v.push(z.real());
    v.push(z.imag());
    return v;
}

JValue complex_list(const std::vector<Complex>& zs) {
    JValue v = JValue::array();
    for (Complex z : zs) v.push(complex_value(z));
    return v;
}

JValue int_list(const std::vector<int>& ints) {
    JValue v = JValue::array();
    for (int x : ints) v.push(x);
    return v;
}

Shapes read_shapes(const std::string& text) try {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("convention") || !j.contains("base"))
        throw ParseError("shapes file needs convention and base");
    Shapes s;
    s.convention = read_convention(j.at("convention"));
    s.base = read_complex_list(j.at("base"), "base");
    if (s.convention.base_slot.size() != s.base.size())
        throw ParseError("base_slot and base must have one entry per tetrahedron");
    return s;
} catch (const json::exception& e) {
    throw ParseError(std::string("malformed shapes file: ") + e.what());
}

TargetFile read_target(const std::string& text) try {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("u")) throw ParseError("target file needs u");
    TargetFile t;
    t.u = read_complex_list(j.at("u"), "u");
    if (j.contains("t")) t.t = read_complex_list(j.at("t"), "t");
    return t;
} catch (const json::exception& e) {
    throw ParseError(std::string("malformed target file: ") + e.what());
}

CurvesFile read_curves(const std::string& text) try {
    json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("curves")) throw ParseError("curves file needs curves");
    CurvesFile file;
    if (j.contains("convention")) {
        file.convention = read_convention(j.at("convention"));
        file.has_convention = true;
    }
    for (const auto& c : j.at("curves")) {
        CurveSpec spec;
        if (c.contains("name")) spec.name = c.at("name").get<std::string>();
        if (c.contains("entries")) {
            if (!file.has_convention)
                throw ParseError("entry curves need a convention in the curves file");
            for (const auto& e : c.at("entries")) {
                if (!e.is_array() || e.size() != 3)
                    throw ParseError("curve entries must be [tet, level, coeff]");
                spec.entries.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
            }
        } else if (c.contains("steps")) {
            spec.from_steps = true;
            for (const auto& e : c.at("steps")) {
                if (!e.is_array() || e.size() != 4)
                    throw ParseError("curve steps must be [tet, vertex, face_in, face_out]");
                spec.steps.push_back(
                    Step{e[0].get<int>(), e[1].get<int>(), e[2].get<int>(), e[3].get<int>()});
            }
        } else {
            throw ParseError("each curve needs entries or steps");
        }
        file.curves.push_back(std::move(spec));
    }
    return file;
} catch (const json::exception& e) {
    throw ParseError(std::string("malformed curves file: ") + e.what());
}

std::vector<std::vector<int>> curve_index_vectors(const CurvesFile& file, const Skeleton& skel) {
    std::vector<std::vector<int>> out;
    for (const CurveSpec& spec : file.curves) {
        if (spec.from_steps) {
            out.push_back(index_vector(skel, spec.steps));
            continue;
        }
        std::vector<int> ind(3 * static_cast<std::size_t>(skel.tet_count()), 0);
        for (const auto& [tet, level, coeff] : spec.entries) {
            if (tet < 0 || tet >= skel.tet_count() || level < 0 || level > 2)
                throw ParseError("curve entry out of range");
            ind[quad_id(tet, file.convention.slot(tet, level))] += coeff;
        }
        out.push_back(std::move(ind));
    }
    return out;
}

namespace {

JValue convention_value(const Convention& conv) {
    JValue v = JValue::object();
    v["base_slot"] = int_list(conv.base_slot);
    v["direction"] = conv.direction;
    return v;
}

}  // namespace

std::string write_shapes(const Shapes& s) {
    JValue v = JValue::object();
    v["convention"] = convention_value(s.convention);
    v["base"] = complex_list(s.base);
    return dump(v);
}

std::string write_target(const std::vector<Complex>& u, const std::vector<Complex>& t) {
    JValue v = JValue::object();
    v["u"] = complex_list(u);
    if (!t.empty()) v["t"] = complex_list(t);
    return dump(v);
}

std::string write_curves(const Convention& conv, const std::vector<std::string>& names,
                         const std::vector<std::map<std::pair<int, int>, int>>& level_monomials) {
    JValue v = JValue::object();
    v["convention"] = convention_value(conv);
    JValue curves = JValue::array();
    for (std::size_t k = 0; k < level_monomials.size(); ++k) {
        JValue c = JValue::object();
        c["name"] = names.at(k);
        JValue entries = JValue::array();
        for (const auto& [key, coeff] : level_monomials[k]) {
            JValue e = JValue::array();
            e.push(key.first);
            e.push(key.second);
            e.push(coeff);
            entries.push(e);
        }
        c["entries"] = entries;
        curves.push(c);
    }
    v["curves"] = curves;
    return dump(v);
}

}  // namespace tricone::jsonio
