#include "tricone/triangulation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace tricone {

namespace {

// Split a line into fields on '|' and trim surrounding whitespace.
std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == '|') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    for (auto& f : out) {
        auto b = f.find_first_not_of(" \t");
        auto e = f.find_last_not_of(" \t");
        f = (b == std::string::npos) ? std::string{} : f.substr(b, e - b + 1);
    }
    return out;
}

int parse_int(const std::string& s, const std::string& context) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected an integer in " + context + ", got '" + s + "'");
    }
    if (pos != s.size())
        throw ParseError("trailing characters after integer in " + context + ": '" + s + "'");
    return value;
}

// Parse "t (abc)" into target tet and the three image digits.
void parse_entry(const std::string& field, int row, int face, int& target,
                 std::array<int, 3>& digits) {
    if (field == "-" || field.empty())
        throw UnpairedFace("face " + std::to_string(face) + " of tetrahedron " +
                           std::to_string(row) + " has no partner");
    auto open = field.find('(');
    auto close = field.find(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("malformed gluing entry '" + field + "' in row " + std::to_string(row));
    std::string tet_part = field.substr(0, open);
    auto e = tet_part.find_last_not_of(" \t");
    tet_part = (e == std::string::npos) ? std::string{} : tet_part.substr(0, e + 1);
    target = parse_int(tet_part, "row " + std::to_string(row));
    std::string digit_part = field.substr(open + 1, close - open - 1);
    if (digit_part.size() != 3)
        throw ParseError("expected three digits in '" + field + "' in row " + std::to_string(row));
    for (int i = 0; i < 3; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digit_part[i])))
            throw ParseError("non-digit vertex label in '" + field + "'");
        digits[i] = digit_part[i] - '0';
        if (digits[i] < 0 || digits[i] > 3)
            throw ParseError("vertex label out of range in '" + field + "'");
    }
    if (digits[0] == digits[1] || digits[0] == digits[2] || digits[1] == digits[2])
        throw ParseError("repeated vertex label in '" + field + "'");
}

}  // namespace

Triangulation::Triangulation(std::vector<std::array<Gluing, 4>> gluings)
    : gluings_(std::move(gluings)) {
    const int n = tet_count();
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluings_[t][f];
            if (g.tet < 0 || g.tet >= n)
                throw UnpairedFace("face " + std::to_string(f) + " of tetrahedron " +
                                   std::to_string(t) + " refers to missing tetrahedron " +
                                   std::to_string(g.tet));
            if (!is_perm4(g.perm))
                throw ParseError("invalid vertex map on face " + std::to_string(f) +
                                 " of tetrahedron " + std::to_string(t));
            if (is_even(g.perm))
                throw NotOrientable("face pairing on face " + std::to_string(f) +
                                    " of tetrahedron " + std::to_string(t) +
                                    " preserves orientation");
        }
    }
    // Involution: the partner entry must be the exact inverse map.
    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluings_[t][f];
            int tf = g.target_face(f);
            const Gluing& back = gluings_[g.tet][tf];
            if (back.tet != t || back.perm != inverse(g.perm))
                throw NotInvolutive("pairing of face " + std::to_string(f) +
                                    " of tetrahedron " + std::to_string(t) +
                                    " is not matched by its partner");
        }
    }
}

Triangulation Triangulation::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    struct Row {
        int index;
        std::array<std::pair<int, std::array<int, 3>>, 4> entries;
    };
    std::vector<Row> rows;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fields = split_fields(line);
        if (fields.size() != 5)
            throw ParseError("expected 5 '|'-separated fields, got " +
                             std::to_string(fields.size()) + " in line: " + line);
        Row row;
        row.index = parse_int(fields[0], "row index");
        for (int f = 0; f < 4; ++f)
            parse_entry(fields[f + 1], row.index, f, row.entries[f].first, row.entries[f].second);
        rows.push_back(row);
    }
    if (rows.empty()) throw ParseError("no tetrahedra in input");
    const int n = static_cast<int>(rows.size());
    std::vector<std::array<Gluing, 4>> gluings(n);
    std::vector<bool> seen(n, false);
    for (const Row& row : rows) {
        if (row.index < 0 || row.index >= n)
            throw ParseError("row index " + std::to_string(row.index) +
                             " out of range for " + std::to_string(n) + " rows");
        if (seen[row.index])
            throw ParseError("duplicate row for tetrahedron " + std::to_string(row.index));
        seen[row.index] = true;
        for (int f = 0; f < 4; ++f) {
            auto [target, digits] = row.entries[f];
            if (target < 0 || target >= n)
                throw UnpairedFace("face " + std::to_string(f) + " of tetrahedron " +
                                   std::to_string(row.index) + " refers to missing tetrahedron " +
                                   std::to_string(target));
            Gluing g;
            g.tet = target;
            // The digits are the images of the face's vertices in
            // increasing order; the off-face vertex maps to the vertex
            // missing from the image triple.
            g.perm = {-1, -1, -1, -1};
            int image_sum = 0;
            for (int i = 0; i < 3; ++i) {
                g.perm[FACE_VERTS[f][i]] = digits[i];
                image_sum += digits[i];
            }
            g.perm[FACE_OPPOSITE[f]] = 6 - image_sum;
            gluings[row.index][f] = g;
        }
    }
    return Triangulation(std::move(gluings));
}

std::string Triangulation::serialize() const {
    std::ostringstream out;
    for (int t = 0; t < tet_count(); ++t) {
        out << t;
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluings_[t][f];
            out << " | " << g.tet << " (";
            for (int v : FACE_VERTS[f]) out << g.perm[v];
            out << ")";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace tricone
