#include "tricone/shapes.hpp"

#include <cmath>
#include <string>

namespace tricone {

void Shapes::validate() const {
    if (static_cast<int>(convention.base_slot.size()) != tet_count())
        throw ParseError("convention size does not match shape count");
    if (convention.direction != 1 && convention.direction != -1)
        throw ParseError("convention direction must be +1 or -1");
    for (int t = 0; t < tet_count(); ++t) {
        const Complex& w = base[t];
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) ||
            w == Complex(0.0) || w == Complex(1.0))
            throw DegenerateShape("shape of tetrahedron " + std::to_string(t) +
                                  " lies on the degenerate set");
        if (w.imag() <= 0.0)
            throw NotPositivelyOriented("shape of tetrahedron " + std::to_string(t) +
                                        " has non-positive imaginary part");
    }
}

Shapes rebase(const Shapes& s, const Convention& conv) {
    Shapes out;
    out.convention = conv;
    out.base.resize(s.tet_count());
    for (int t = 0; t < s.tet_count(); ++t)
        out.base[t] = s.quad(t, conv.slot(t, 0));
    return out;
}

Convention convention_from_edge(int tets, int a, int b, int direction) {
    Convention c;
    c.base_slot.assign(tets, slot_of_edge(a, b));
    c.direction = direction;
    return c;
}

}  // namespace tricone
