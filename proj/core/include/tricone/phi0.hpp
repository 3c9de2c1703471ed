#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "tricone/exact.hpp"
#include "tricone/shapes.hpp"

namespace tricone {

// Exact element of Q(i).
struct GaussianRational {
    Rational re, im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool operator==(const GaussianRational&) const = default;

    GaussianRational conj() const { return {re, -im}; }
    bool is_zero() const { return re == 0 && im == 0; }

    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational operator/(const GaussianRational& o) const {
        Rational n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }

    Complex to_complex() const { return {re.get_d(), im.get_d()}; }
};

// Polynomial with Gaussian-rational coefficients, ascending powers.
using GPoly = std::vector<GaussianRational>;

struct RationalMap {
    GPoly num, den;
};

// The seven-component rational curve of shape solutions for the
// 7-tetrahedron fixture (component k is the base parameter of
// tetrahedron k), and its coefficient-conjugate companion.
const std::array<RationalMap, 7>& curve_components();
const std::array<RationalMap, 7>& conjugate_curve_components();

GaussianRational eval(const GPoly& p, const GaussianRational& u);
Complex eval(const GPoly& p, Complex u);

// Throw PoleError when the denominator vanishes.
GaussianRational eval(const RationalMap& f, const GaussianRational& u);
Complex eval(const RationalMap& f, Complex u);

// All seven components at u.
std::vector<GaussianRational> curve_values_exact(const GaussianRational& u);
std::vector<Complex> curve_values(Complex u);

// True when every component is finite with positive imaginary part.
bool positively_oriented_at(Complex u);
bool positively_oriented_at(const GaussianRational& u);

// Flood-fill census of the positively oriented set on a rectangle
// grid, sampled at cell centers with exact arithmetic.
struct RegionScan {
    int nx, ny;
    double x0, x1, y0, y1;
    std::vector<std::uint8_t> inside;  // nx*ny, index iy*nx+ix
    int inside_count = 0;
    int components = 0;  // 4-connected components of the inside set
    int holes = 0;       // bounded components of the complement
    std::vector<std::pair<double, double>> samples;  // inside cell centers

    bool simply_connected() const { return components == 1 && holes == 0; }
};

RegionScan scan_positive_region(int nx = 20, int ny = 10, double x0 = -1.0, double x1 = 2.0,
                                double y0 = 0.0, double y1 = 2.0);

}  // namespace tricone
