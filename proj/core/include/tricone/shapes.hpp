#pragma once

#include <complex>
#include <vector>

#include "tricone/errors.hpp"
#include "tricone/permutations.hpp"

namespace tricone {

using Complex = std::complex<double>;

inline constexpr double PI = 3.141592653589793238462643383279502884;

// Which quad slot of each tetrahedron carries the base shape
// parameter, and in which rotational direction the derived parameters
// follow it.  Symbol level 0 is the base value w, level 1 is
// w' = 1/(1-w), level 2 is w'' = (w-1)/w; level l sits in quad slot
// (base_slot + direction*l) mod 3.
struct Convention {
    std::vector<int> base_slot;  // per tetrahedron, in {0,1,2}
    int direction = 1;           // +1 or -1

    int slot(int tet, int level) const {
        int s = (base_slot[tet] + direction * level) % 3;
        return (s + 3) % 3;
    }

    int level_of_slot(int tet, int s) const {
        for (int l = 0; l < 3; ++l)
            if (slot(tet, l) == s) return l;
        return -1;
    }

    static Convention standard(int tets) { return Convention{std::vector<int>(tets, 0), 1}; }

    bool operator==(const Convention&) const = default;
};

// A positively oriented shape assignment: one base value per
// tetrahedron, all in the upper half plane, expanded to the three quad
// slots by the convention.
struct Shapes {
    Convention convention;
    std::vector<Complex> base;  // per tetrahedron

    int tet_count() const { return static_cast<int>(base.size()); }

    // Throws NotPositivelyOriented / DegenerateShape when invalid.
    void validate() const;

    Complex at_level(int tet, int level) const {
        const Complex& w = base[tet];
        switch (level) {
            case 0: return w;
            case 1: return 1.0 / (1.0 - w);
            default: return (w - 1.0) / w;
        }
    }

    Complex quad(int tet, int slot) const {
        return at_level(tet, convention.level_of_slot(tet, slot));
    }

    // Principal logarithm of the level-l parameter, written in terms
    // of principal logs of the base value (exact for Im w > 0):
    //   log w' = -log(1-w),  log w'' = log(1-w) + i*pi - log w.
    Complex log_at_level(int tet, int level) const {
        const Complex& w = base[tet];
        switch (level) {
            case 0: return std::log(w);
            case 1: return -std::log(1.0 - w);
            default: return std::log(1.0 - w) + Complex(0.0, PI) - std::log(w);
        }
    }

    Complex log_quad(int tet, int slot) const {
        return log_at_level(tet, convention.level_of_slot(tet, slot));
    }

    // Derivative of log_at_level with respect to the base value:
    // 1/w, 1/(1-w), 1/(w(w-1)) for levels 0, 1, 2.
    Complex dlog_at_level(int tet, int level) const {
        const Complex& w = base[tet];
        switch (level) {
            case 0: return 1.0 / w;
            case 1: return 1.0 / (1.0 - w);
            default: return 1.0 / (w * (w - 1.0));
        }
    }

    Complex dlog_quad(int tet, int slot) const {
        return dlog_at_level(tet, convention.level_of_slot(tet, slot));
    }
};

// Re-express the same geometric shapes in another convention.
Shapes rebase(const Shapes& s, const Convention& conv);

// Convention with every base slot carrying the quad that separates
// edge {a,b} from its opposite.
Convention convention_from_edge(int tets, int a, int b, int direction);

inline int quad_id(int tet, int slot) { return 3 * tet + slot; }

}  // namespace tricone
