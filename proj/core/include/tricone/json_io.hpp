#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tricone/peripheral.hpp"
#include "tricone/shapes.hpp"
#include "tricone/solver.hpp"

namespace tricone::jsonio {

// Minimal JSON value with insertion-ordered objects and fixed
// 17-significant-digit number formatting, so serialized output is
// byte-stable run to run.
class JValue {
public:
    enum class Kind { Null, Bool, Int, Double, Str, Array, Object };

    JValue() = default;
    JValue(bool v) : kind_(Kind::Bool), bool_(v) {}
    JValue(int v) : kind_(Kind::Int), int_(v) {}
    JValue(long v) : kind_(Kind::Int), int_(v) {}
    JValue(long long v) : kind_(Kind::Int), int_(v) {}
    JValue(double v) : kind_(Kind::Double), double_(v) {}
    JValue(const char* v) : kind_(Kind::Str), str_(v) {}
    JValue(std::string v) : kind_(Kind::Str), str_(std::move(v)) {}

    static JValue array() {
        JValue v;
        v.kind_ = Kind::Array;
        return v;
    }
    static JValue object() {
        JValue v;
        v.kind_ = Kind::Object;
        return v;
    }

    void push(JValue v) { items_.push_back(std::move(v)); }

    // Insert-or-get a field, preserving insertion order.
    JValue& operator[](const std::string& key);

    Kind kind() const { return kind_; }
    const std::vector<JValue>& items() const { return items_; }
    const std::vector<std::pair<std::string, JValue>>& fields() const { return fields_; }
    bool as_bool() const { return bool_; }
    long long as_int() const { return int_; }
    double as_double() const { return double_; }
    const std::string& as_string() const { return str_; }

private:
    Kind kind_ = Kind::Null;
    bool bool_ = false;
    long long int_ = 0;
    double double_ = 0.0;
    std::string str_;
    std::vector<JValue> items_;
    std::vector<std::pair<std::string, JValue>> fields_;
};

// Serialize with two-space indentation and a trailing newline.
std::string dump(const JValue& v);

// printf %.17g / %.12g
std::string format_double(double x, int digits = 17);

JValue complex_value(Complex z);
JValue complex_list(const std::vector<Complex>& zs);
JValue int_list(const std::vector<int>& v);

// ---- file formats ----
//
// shapes:  {"convention": {"base_slot": [...], "direction": d},
//           "base": [[re, im], ...]}
// target:  {"u": [[re, im], ...], "t": [[re, im], ...]}  (t optional)
// curves:  {"convention": {...},                          (optional)
//           "curves": [{"name": n, "entries": [[tet, level, coeff], ...]}
//                      | {"name": n, "steps": [[tet, vertex, face_in, face_out], ...]}]}

Shapes read_shapes(const std::string& text);

struct TargetFile {
    std::vector<Complex> u;
    std::vector<Complex> t;
};
TargetFile read_target(const std::string& text);

struct CurveSpec {
    std::string name;
    bool from_steps = false;
    std::vector<std::array<int, 3>> entries;  // (tet, level, coeff)
    Path steps;
};

struct CurvesFile {
    bool has_convention = false;
    Convention convention;
    std::vector<CurveSpec> curves;
};
CurvesFile read_curves(const std::string& text);

// Index vectors of the listed curves (entry curves via the file's
// convention, step curves via the skeleton).
std::vector<std::vector<int>> curve_index_vectors(const CurvesFile& file, const Skeleton& skel);

std::string write_shapes(const Shapes& s);
std::string write_target(const std::vector<Complex>& u, const std::vector<Complex>& t);
std::string write_curves(const Convention& conv, const std::vector<std::string>& names,
                         const std::vector<std::map<std::pair<int, int>, int>>& level_monomials);

}  // namespace tricone::jsonio
