#include "tricone/geometry.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace tricone {

std::vector<double> angles_of(const Shapes& s) {
    std::vector<double> x(static_cast<size_t>(3 * s.tet_count()));
    for (int t = 0; t < s.tet_count(); ++t)
        for (int slot = 0; slot < 3; ++slot)
            x[quad_id(t, slot)] = std::arg(s.quad(t, slot));
    return x;
}

Shapes shapes_from_angles(const std::vector<double>& angles, const Convention& conv) {
    const int tets = static_cast<int>(angles.size()) / 3;
    for (double a : angles)
        if (!(a > 0.0 && a < PI))
            throw DegenerateShape("corner angle outside (0, pi)");
    for (int t = 0; t < tets; ++t) {
        double s = angles[quad_id(t, 0)] + angles[quad_id(t, 1)] + angles[quad_id(t, 2)];
        if (std::abs(s - PI) > 1e-8)
            throw DegenerateShape("corner angles of tetrahedron " + std::to_string(t) +
                                  " do not sum to pi");
    }
    Shapes out;
    out.convention = conv;
    out.base.resize(tets);
    for (int t = 0; t < tets; ++t) {
        // z(q) = sin(x(q')) / sin(x(q'')) * e^{i x(q)} with q', q'' the
        // quads of the next two parameter levels.
        double x0 = angles[quad_id(t, conv.slot(t, 0))];
        double x1 = angles[quad_id(t, conv.slot(t, 1))];
        double x2 = angles[quad_id(t, conv.slot(t, 2))];
        out.base[t] = (std::sin(x1) / std::sin(x2)) * std::polar(1.0, x0);
    }
    return out;
}

namespace {

constexpr double EULER_GAMMA = 0.577215664901532860606512090082402431;

// Cosine integral Ci(x) for x > 0.
double cosine_integral(double x) {
    if (x <= 4.0) {
        // Power series Ci(x) = gamma + ln x + sum (-1)^k x^{2k} / (2k (2k)!).
        double sum = 0.0, term = 1.0;
        for (int k = 1; k <= 40; ++k) {
            term *= -x * x / ((2 * k - 1) * (2 * k));  // (-1)^k x^{2k} / (2k)!
            double add = term / (2 * k);
            sum += add;
            if (std::abs(add) < 1e-20) break;
        }
        return EULER_GAMMA + std::log(x) + sum;
    }
    // Ci(x) = -Re E1(ix); E1 by modified Lentz continued fraction:
    // E1(z) = e^{-z} / (z + 1 - 1/(z + 3 - 4/(z + 5 - 9/(...)))).
    const std::complex<double> z(0.0, x);
    const double tiny = 1e-300;
    std::complex<double> b = z + 1.0;
    std::complex<double> f = (b == 0.0) ? tiny : b;
    std::complex<double> c = f, d = 0.0;
    for (int n = 1; n < 200; ++n) {
        double an = -static_cast<double>(n) * n;
        b += 2.0;
        d = b + an * d;
        if (d == 0.0) d = tiny;
        c = b + an / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        std::complex<double> delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    std::complex<double> e1 = std::exp(-z) / f;
    return -e1.real();
}

// m-th derivative of f(t) = sin(a t) / t^2.
double f_derivative(int m, double a, double t) {
    double sum = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= m; ++j) {
        // C(m,j) a^j sin(at + j pi/2) (-1)^{m-j} (m-j+1)! / t^{m-j+2}
        double fact = 1.0;
        for (int i = 2; i <= m - j + 1; ++i) fact *= i;
        double sign = ((m - j) % 2 == 0) ? 1.0 : -1.0;
        sum += binom * std::pow(a, j) * std::sin(a * t + j * PI / 2.0) * sign * fact /
               std::pow(t, m - j + 2);
        binom *= static_cast<double>(m - j) / (j + 1);
    }
    return sum;
}

// L(theta) for theta in (0, pi/2]: half the Fourier series
// sum sin(2 n theta)/n^2, with the truncated part summed directly and
// the remainder handled by Euler-Maclaurin around a cosine-integral
// antiderivative.
double lob_core(double theta) {
    constexpr int N = 10000;
    const double a = 2.0 * theta;
    double s = 0.0;
    for (int n = N; n >= 1; --n) s += std::sin(a * n) / (static_cast<double>(n) * n);

    const double m = N + 1;
    // integral_M^inf sin(a t)/t^2 dt = sin(aM)/M - a Ci(aM)
    double tail = std::sin(a * m) / m - a * cosine_integral(a * m);
    tail += 0.5 * std::sin(a * m) / (m * m);
    static constexpr double BERN[7] = {1.0 / 6,  -1.0 / 30,     1.0 / 42, -1.0 / 30,
                                       5.0 / 66, -691.0 / 2730, 7.0 / 6};
    double fact = 1.0;  // (2k)!
    for (int k = 1; k <= 7; ++k) {
        fact *= (2 * k - 1) * (2 * k);
        tail -= BERN[k - 1] / fact * f_derivative(2 * k - 1, a, m);
    }
    return 0.5 * (s + tail);
}

}  // namespace

double lobachevsky(double theta) {
    double r = std::fmod(theta, PI);
    if (r < 0.0) r += PI;
    if (r == 0.0) return 0.0;
    if (r > PI / 2.0) return -lob_core(PI - r);
    return lob_core(r);
}

double volume(const std::vector<double>& angles) {
    double v = 0.0;
    for (double x : angles) v += lobachevsky(x);
    return v;
}

std::vector<double> volume_hessian_diag(const std::vector<double>& angles) {
    std::vector<double> h(angles.size());
    for (size_t i = 0; i < angles.size(); ++i) h[i] = -1.0 / std::tan(angles[i]);
    return h;
}

double volume_second_derivative(const std::vector<double>& angles,
                                const std::vector<double>& w) {
    double s = 0.0;
    for (size_t i = 0; i < angles.size(); ++i) s += w[i] * w[i] * (-1.0 / std::tan(angles[i]));
    return s;
}

double volume_derivative(const std::vector<double>& angles, const std::vector<double>& w) {
    double s = 0.0;
    for (size_t i = 0; i < angles.size(); ++i)
        s -= w[i] * std::log(std::abs(2.0 * std::sin(angles[i])));
    return s;
}

}  // namespace tricone
