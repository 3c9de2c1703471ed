#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "tricone/fixtures.hpp"
#include "tricone/triangulation.hpp"

namespace testutil {

inline tricone::Triangulation fixture_tri(const std::string& name) {
    return tricone::Triangulation::parse(tricone::fixtures::fixture(name).triangulation_text);
}

// Largest absolute deviation between two complex lists.
inline double sup_dev(const std::vector<tricone::Complex>& a,
                      const std::vector<tricone::Complex>& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Replace the first occurrence of `from` in `text`.
inline std::string replace_first(std::string text, const std::string& from,
                                 const std::string& to) {
    auto pos = text.find(from);
    if (pos != std::string::npos) text.replace(pos, from.size(), to);
    return text;
}

}  // namespace testutil
