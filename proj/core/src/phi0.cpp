#include "tricone/phi0.hpp"

#include <deque>

namespace tricone {

namespace {

GaussianRational gq(long re, long im) { return {Rational(re), Rational(im)}; }

std::array<RationalMap, 7> build_curve() {
    std::array<RationalMap, 7> f;
    // (-1-i+u) / (-1+(1-i)u)
    f[0].num = {gq(-1, -1), gq(1, 0)};
    f[0].den = {gq(-1, 0), gq(1, -1)};
    // (1+i) / ((2+2i)-2u)
    f[1].num = {gq(1, 1)};
    f[1].den = {gq(2, 2), gq(-2, 0)};
    // (1+i) - i/u = ((1+i)u - i) / u
    f[2].num = {gq(0, -1), gq(1, 1)};
    f[2].den = {gq(0, 0), gq(1, 0)};
    // ((1-i)-2u+2u^2) / (2(-1+u)u)
    f[3].num = {gq(1, -1), gq(-2, 0), gq(2, 0)};
    f[3].den = {gq(0, 0), gq(-2, 0), gq(2, 0)};
    // ((-1+u)(-i+(1+i)u)) / (1-(1+i)u+(1+i)u^2)
    f[4].num = {gq(0, 1), gq(-1, -2), gq(1, 1)};
    f[4].den = {gq(1, 0), gq(-1, -1), gq(1, 1)};
    // u
    f[5].num = {gq(0, 0), gq(1, 0)};
    f[5].den = {gq(1, 0)};
    // ((1-i)+2iu) / ((2+2i)u-2u^2)
    f[6].num = {gq(1, -1), gq(0, 2)};
    f[6].den = {gq(0, 0), gq(2, 2), gq(-2, 0)};
    return f;
}

std::array<RationalMap, 7> build_conjugate() {
    std::array<RationalMap, 7> f = build_curve();
    for (auto& comp : f) {
        for (auto& c : comp.num) c = c.conj();
        for (auto& c : comp.den) c = c.conj();
    }
    return f;
}

}  // namespace

const std::array<RationalMap, 7>& curve_components() {
    static const std::array<RationalMap, 7> f = build_curve();
    return f;
}

const std::array<RationalMap, 7>& conjugate_curve_components() {
    static const std::array<RationalMap, 7> f = build_conjugate();
    return f;
}

GaussianRational eval(const GPoly& p, const GaussianRational& u) {
    GaussianRational v;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * u + *it;
    return v;
}

Complex eval(const GPoly& p, Complex u) {
    Complex v(0.0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * u + it->to_complex();
    return v;
}

GaussianRational eval(const RationalMap& f, const GaussianRational& u) {
    GaussianRational d = eval(f.den, u);
    if (d.is_zero()) throw PoleError("rational map evaluated at a pole");
    return eval(f.num, u) / d;
}

Complex eval(const RationalMap& f, Complex u) {
    Complex d = eval(f.den, u);
    if (d == Complex(0.0)) throw PoleError("rational map evaluated at a pole");
    return eval(f.num, u) / d;
}

std::vector<GaussianRational> curve_values_exact(const GaussianRational& u) {
    std::vector<GaussianRational> out;
    out.reserve(7);
    for (const auto& f : curve_components()) out.push_back(eval(f, u));
    return out;
}

std::vector<Complex> curve_values(Complex u) {
    std::vector<Complex> out;
    out.reserve(7);
    for (const auto& f : curve_components()) out.push_back(eval(f, u));
    return out;
}

bool positively_oriented_at(Complex u) {
    for (const auto& f : curve_components()) {
        Complex d = eval(f.den, u);
        if (d == Complex(0.0)) return false;
        if (!((eval(f.num, u) / d).imag() > 0.0)) return false;
    }
    return true;
}

bool positively_oriented_at(const GaussianRational& u) {
    for (const auto& f : curve_components()) {
        GaussianRational d = eval(f.den, u);
        if (d.is_zero()) return false;
        GaussianRational n = eval(f.num, u);
        // sign of Im(n/d) = sign of Im(n * conj(d))
        if (sgn(Rational(n.im * d.re - n.re * d.im)) <= 0) return false;
    }
    return true;
}

RegionScan scan_positive_region(int nx, int ny, double x0, double x1, double y0, double y1) {
    RegionScan s;
    s.nx = nx;
    s.ny = ny;
    s.x0 = x0;
    s.x1 = x1;
    s.y0 = y0;
    s.y1 = y1;
    s.inside.assign(static_cast<size_t>(nx) * ny, 0);

    // Cell centers as exact rationals (grid bounds are taken exact via
    // their double values, which are exact for the default rectangle).
    auto center = [](double lo, double hi, int n, int i) -> Rational {
        Rational a(lo), b(hi);
        return a + (b - a) * Rational(2 * i + 1) / Rational(2 * n);
    };
    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            GaussianRational u{center(x0, x1, nx, ix), center(y0, y1, ny, iy)};
            if (positively_oriented_at(u)) {
                s.inside[static_cast<size_t>(iy) * nx + ix] = 1;
                ++s.inside_count;
                s.samples.emplace_back(u.re.get_d(), u.im.get_d());
            }
        }
    }

    // 4-connected components of the inside set and of its complement;
    // complement components not touching the grid boundary are holes.
    std::vector<int> comp(static_cast<size_t>(nx) * ny, -1);
    auto flood = [&](int start, int id, std::uint8_t want) {
        std::deque<int> queue{start};
        comp[start] = id;
        bool touches_boundary = false;
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            int ix = c % nx, iy = c / nx;
            if (ix == 0 || iy == 0 || ix == nx - 1 || iy == ny - 1) touches_boundary = true;
            const int dx[4] = {1, -1, 0, 0}, dy[4] = {0, 0, 1, -1};
            for (int k = 0; k < 4; ++k) {
                int jx = ix + dx[k], jy = iy + dy[k];
                if (jx < 0 || jy < 0 || jx >= nx || jy >= ny) continue;
                int j = jy * nx + jx;
                if (comp[j] < 0 && s.inside[j] == want) {
                    comp[j] = id;
                    queue.push_back(j);
                }
            }
        }
        return touches_boundary;
    };
    int next_id = 0;
    for (int c = 0; c < nx * ny; ++c) {
        if (comp[c] >= 0) continue;
        bool boundary = flood(c, next_id++, s.inside[c]);
        if (s.inside[c])
            ++s.components;
        else if (!boundary)
            ++s.holes;
    }
    return s;
}

}  // namespace tricone
