#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sixv/bigfloat.hpp"
#include "sixv/complexmath.hpp"
#include "sixv/quadrature.hpp"

namespace sixv {

// Support [alpha, beta] of the equilibrium measure for V(s) = |s| - xs.
// Satisfies (-alpha)*beta = pi^2 and beta - alpha = 2 pi / cos(pi x / 2).
struct SupportEndpoints {
    double x = 0;
    double alpha = 0;  // < 0
    double beta = 0;   // > 0
};

inline void require_open_interval(double x) {
    if (!(x > -1.0 && x < 1.0)) throw std::domain_error("equilibrium: |x| < 1 required");
}

inline SupportEndpoints endpoints(double x) {
    require_open_interval(x);
    const double pi = M_PI;
    return {x, -pi * std::tan(pi * (1 - x) / 4), pi * std::tan(pi * (1 + x) / 4)};
}

template <class T>
struct EndpointsT {
    T alpha, beta;
};

template <class T>
EndpointsT<T> endpoints_t(const T& x, const T& pi) {
    using std::tan;
    return {-pi * tan(pi * (1 - x) / 4), pi * tan(pi * (1 + x) / 4)};
}

// Density rho(z) = (2/pi^2) ln[(sqrt(beta(z-alpha)) + sqrt(-alpha(beta-z))) /
// sqrt(|z|(beta-alpha))] on (alpha, beta), with a logarithmic singularity at
// z = 0 and square-root vanishing at the edges.
inline double density(double z, double x) {
    SupportEndpoints ep = endpoints(x);
    if (!(z > ep.alpha && z < ep.beta))
        throw std::domain_error("density: z outside (alpha, beta)");
    if (z == 0.0)
        throw std::domain_error("density: logarithmic singularity at z = 0");
    const double num = std::sqrt(ep.beta * (z - ep.alpha)) + std::sqrt(-ep.alpha * (ep.beta - z));
    const double den = std::sqrt(std::abs(z) * (ep.beta - ep.alpha));
    return (2.0 / (M_PI * M_PI)) * std::log(num / den);
}

// Lagrange multiplier l = 2 ln(beta - alpha) - 2(1 + 2 ln 2).
inline double lagrange_multiplier(double x) {
    SupportEndpoints ep = endpoints(x);
    return 2 * std::log(ep.beta - ep.alpha) - 2 * (1 + 2 * std::log(2.0));
}

// g'(z) = (1-x)/2 + (2/(pi i)) Log[(sqrt(beta(z-alpha)) - i sqrt(-alpha(z-beta)))
//          / sqrt(z(beta-alpha))], principal branches.
// Valid as written for Im z >= 0 (and on the real axis it takes the limit
// from above); the lower half-plane follows by Schwarz reflection.
template <class T>
Cx<T> g_prime(Cx<T> z, const T& x) {
    using std::atan2;
    const T pi = atan2(T(0), T(-1));
    if (z.im < 0) return conj(g_prime(conj(z), x));
    EndpointsT<T> ep = endpoints_t(x, pi);
    Cx<T> i{T(0), T(1)};
    Cx<T> num = sqrt(Cx<T>(ep.beta) * (z - Cx<T>(ep.alpha))) -
                i * sqrt(Cx<T>(-ep.alpha) * (z - Cx<T>(ep.beta)));
    Cx<T> den = sqrt(z * Cx<T>(ep.beta - ep.alpha));
    return Cx<T>((1 - x) / 2) + Cx<T>(T(0), T(-2) / pi) * log(num / den);
}

// g(z) = z g'(z) + 2 ln(sqrt(z-alpha) + sqrt(z-beta)) - (1 + 2 ln 2),
// z off (-inf, beta].  Behaves like ln z + O(1/z) at infinity.
template <class T>
Cx<T> g_function(Cx<T> z, const T& x) {
    using std::atan2;
    using std::log;
    const T pi = atan2(T(0), T(-1));
    if (z.im < 0) return conj(g_function(conj(z), x));
    EndpointsT<T> ep = endpoints_t(x, pi);
    Cx<T> root_sum = sqrt(z - Cx<T>(ep.alpha)) + sqrt(z - Cx<T>(ep.beta));
    return z * g_prime(z, x) + Cx<T>(T(2)) * sixv::log(root_sum) -
           Cx<T>(T(1) + T(2) * log(T(2)));
}

// Potential V(s) = |s| - xs on the real line.
inline double potential(double s, double x) { return std::abs(s) - x * s; }

// Analytic continuation of V off the axis: z(1-x) in the right half-plane,
// -z(1+x) in the left (two-valued on the imaginary axis).
template <class T>
Cx<T> potential_continued(const Cx<T>& z, const T& x, int re_sign) {
    if (re_sign > 0) return z * Cx<T>(T(1) - x);
    return -z * Cx<T>(T(1) + x);
}

// G(z) = g_+ - g_- continued off (alpha, beta): 2g - V - l in the upper
// half-plane, -(2g - V - l) in the lower.  re_sign picks the V branch and
// must match sign(Re z) (pass explicitly for points on the imaginary axis).
template <class T>
Cx<T> G_continued(Cx<T> z, const T& x, int re_sign) {
    using std::atan2;
    using std::log;
    const T pi = atan2(T(0), T(-1));
    EndpointsT<T> ep = endpoints_t(x, pi);
    T l = 2 * log(ep.beta - ep.alpha) - 2 * (1 + 2 * log(T(2)));
    Cx<T> expr = Cx<T>(T(2)) * g_function(z, x) - potential_continued(z, x, re_sign) - Cx<T>(l);
    if (z.im < 0) return -expr;
    return expr;
}

template <class T>
Cx<T> G_continued(Cx<T> z, const T& x) {
    int re_sign = z.re >= 0 ? +1 : -1;
    if (z.re == 0)
        throw std::domain_error("G_continued: specify the branch on the imaginary axis");
    return G_continued(z, x, re_sign);
}

// --- quadrature of the density -------------------------------------------

namespace detail {

// integral of rho over [u, v] with 0 < u < v < beta or alpha < u < v < 0;
// the 0 and edge singularities must sit exactly at an endpoint if present.
inline double density_piece(double x, double u, double v) {
    SupportEndpoints ep = endpoints(x);
    auto rho = [&](double z) { return density(z, x); };
    const double tol = 1e-13;
    if (u == 0.0) {  // (0, v]: z = e^{-t}
        double t0 = std::log(1.0 / v);
        return integrate([&](double t) { return rho(std::exp(-t)) * std::exp(-t); }, t0, 80.0, tol)
            .value;
    }
    if (v == 0.0) {  // [u, 0): z = -e^{-t}
        double t0 = std::log(1.0 / (-u));
        return integrate([&](double t) { return rho(-std::exp(-t)) * std::exp(-t); }, t0, 80.0, tol)
            .value;
    }
    if (v == ep.beta) {  // [u, beta): z = beta - s^2
        double s1 = std::sqrt(ep.beta - u);
        return integrate([&](double s) { return rho(ep.beta - s * s) * 2 * s; }, 0.0, s1, tol)
            .value;
    }
    if (u == ep.alpha) {  // (alpha, v]: z = alpha + s^2
        double s1 = std::sqrt(v - ep.alpha);
        return integrate([&](double s) { return rho(ep.alpha + s * s) * 2 * s; }, 0.0, s1, tol)
            .value;
    }
    return integrate(rho, u, v, tol).value;
}

}  // namespace detail

// int_z^beta rho(w) dw for z in (alpha, beta), singularity-aware.
inline double density_integral_to_beta(double x, double z) {
    SupportEndpoints ep = endpoints(x);
    if (!(z > ep.alpha && z < ep.beta))
        throw std::domain_error("density_integral_to_beta: z outside (alpha, beta)");
    double mid = ep.beta / 2;
    double total = detail::density_piece(x, mid, ep.beta);
    if (z > 0) {
        if (z >= mid) return detail::density_piece(x, z, ep.beta);
        total += detail::density_piece(x, z, mid);
        return total;
    }
    total += detail::density_piece(x, 0.0, mid);
    total += detail::density_piece(x, z, 0.0);
    return total;
}

// int_alpha^beta rho = 1 for every |x| < 1; returns the quadrature value.
inline double density_normalization(double x) {
    SupportEndpoints ep = endpoints(x);
    double left = detail::density_piece(x, ep.alpha, ep.alpha / 2) +
                  detail::density_piece(x, ep.alpha / 2, 0.0);
    double right = detail::density_piece(x, 0.0, ep.beta / 2) +
                   detail::density_piece(x, ep.beta / 2, ep.beta);
    return left + right;
}

// --- variational conditions ------------------------------------------------

struct VariationalReport {
    double max_equality_residual = 0;  // max |g_+ + g_- - V - l| on (alpha,beta)
    double max_outside_value = 0;      // max of g_+ + g_- - V - l off [alpha,beta] (< 0)
    std::size_t grid_points = 0;
};

// Boundary values are taken with an explicit +i*1e-30 offset at 192-bit
// precision; on the real axis g_- = conj(g_+), so g_+ + g_- = 2 Re g_+.
inline VariationalReport variational_check(double x, std::size_t grid_size) {
    require_open_interval(x);
    ScopedPrecision prec(192);
    const BigFloat bx(x);
    const BigFloat pi = bf_pi();
    BigFloat alpha = -pi * tan(pi * (1 - bx) / 4);
    BigFloat beta = pi * tan(pi * (1 + bx) / 4);
    BigFloat l = 2 * log(beta - alpha) - 2 * (1 + 2 * log(BigFloat(2)));
    const BigFloat guard = BigFloat(1e-6) * (beta - alpha);
    const BigFloat delta(1e-30);

    VariationalReport rep;
    auto expr = [&](const BigFloat& z) {
        Cx<BigFloat> g = g_function(Cx<BigFloat>(z, delta), bx);
        return 2 * g.re - (abs(z) - bx * z) - l;
    };
    for (std::size_t i = 0; i < grid_size; ++i) {
        BigFloat z = alpha + (beta - alpha) * (2 * BigFloat(static_cast<unsigned>(i)) + 1) /
                                 (2 * BigFloat(static_cast<unsigned>(grid_size)));
        if (abs(z - alpha) < guard || abs(z) < guard || abs(z - beta) < guard) continue;
        double r = std::abs(static_cast<double>(expr(z)));
        rep.max_equality_residual = std::max(rep.max_equality_residual, r);
        ++rep.grid_points;
    }
    bool first = true;
    for (std::size_t i = 0; i < grid_size; ++i) {
        BigFloat s = (BigFloat(static_cast<unsigned>(i)) + 1) / (grid_size + 1) * 5;
        for (BigFloat z : {BigFloat(alpha - s), BigFloat(beta + s)}) {
            double v = static_cast<double>(expr(z));
            if (first) {
                rep.max_outside_value = v;
                first = false;
            } else {
                rep.max_outside_value = std::max(rep.max_outside_value, v);
            }
        }
    }
    return rep;
}

// Residual between the g-based continuation G(z) and 2 pi i int_z^beta rho.
inline double G_vs_integral(double z, double x) {
    require_open_interval(x);
    if (z == 0) throw std::domain_error("G_vs_integral: z = 0 is the singular point");
    ScopedPrecision prec(128);
    BigFloat bx(x);
    Cx<BigFloat> G = G_continued(Cx<BigFloat>(BigFloat(z), BigFloat(1e-30)), bx,
                                 z > 0 ? +1 : -1);
    double integral = density_integral_to_beta(x, z);
    double re = static_cast<double>(G.re);
    double im = static_cast<double>(G.im);
    return std::hypot(re, im - 2 * M_PI * integral);
}

// --- auxiliary functions of the vertical-segment analysis ------------------

// h1(y) = (4/pi) ln[(sqrt(beta(iy-alpha)) + sqrt(-alpha(beta-iy)))/sqrt(beta-alpha)]
// h2(y) = 4 ln[(sqrt(iy-alpha) + i sqrt(beta-iy))/sqrt(beta-alpha)]
// h3(y) = h1 with iy -> -iy,  h4(y) = -4 ln[(sqrt(-iy-alpha) + i sqrt(beta+iy))/sqrt(beta-alpha)]
struct AuxH {
    Cx<double> h1, h2, h3, h4;
};

inline AuxH aux_h_functions(double y, double x) {
    SupportEndpoints ep = endpoints(x);
    using C = Cx<double>;
    const C i{0, 1};
    const C iy{0, y};
    const double sq_ba = std::sqrt(ep.beta - ep.alpha);
    auto lnr = [&](C w) { return log(w / C(sq_ba)); };
    AuxH r;
    r.h1 = (4 / M_PI) * lnr(sqrt(C(ep.beta) * (iy - C(ep.alpha))) +
                            sqrt(C(-ep.alpha) * (C(ep.beta) - iy)));
    r.h2 = 4.0 * lnr(sqrt(iy - C(ep.alpha)) + i * sqrt(C(ep.beta) - iy));
    r.h3 = (4 / M_PI) * lnr(sqrt(C(ep.beta) * (-iy - C(ep.alpha))) +
                            sqrt(C(-ep.alpha) * (C(ep.beta) + iy)));
    r.h4 = -4.0 * lnr(sqrt(-iy - C(ep.alpha)) + i * sqrt(C(ep.beta) + iy));
    return r;
}

struct AuxConstants {
    double h1_0 = 0;        // (4/pi) ln(2 sqrt((-a)b) / sqrt(b-a)), real
    Cx<double> h2_0;        // 4i arg[(sqrt(-a)+i sqrt(b))/sqrt(b-a)], imaginary
    double h2_prime_0 = 0;  // 2/sqrt((-a)b)
    Cx<double> h4_0;        // -h2_0
};

inline AuxConstants aux_constants(double x) {
    SupportEndpoints ep = endpoints(x);
    AuxConstants c;
    c.h1_0 = (4 / M_PI) * std::log(2 * std::sqrt(-ep.alpha * ep.beta) /
                                   std::sqrt(ep.beta - ep.alpha));
    double a = std::atan2(std::sqrt(ep.beta), std::sqrt(-ep.alpha));
    c.h2_0 = Cx<double>(0, 4 * a);
    c.h2_prime_0 = 2 / std::sqrt(-ep.alpha * ep.beta);
    c.h4_0 = Cx<double>(0, -4 * a);
    return c;
}

// Jump exponents on the vertical segment: j1(z) = -2i e^{-N f1(z)} sin(Niz)
// on (0, i eps) and j2(z) = 2i e^{-N f2(z)} sin(Niz) on (-i eps, 0).
inline Cx<double> f1_jump(Cx<double> z, double x) {
    SupportEndpoints ep = endpoints(x);
    using C = Cx<double>;
    const C i{0, 1};
    const double sq_ba = std::sqrt(ep.beta - ep.alpha);
    C lnA = log((sqrt(C(ep.beta) * (z - C(ep.alpha))) +
                 sqrt(C(-ep.alpha) * (C(ep.beta) - z))) / C(sq_ba));
    C lnB = log((sqrt(z - C(ep.alpha)) - i * sqrt(C(ep.beta) - z)) / C(sq_ba));
    C c4_over_pii = C(4) * z / (C(M_PI) * i);
    return c4_over_pii * lnA - C(4) * lnB + z - (C(2) * z / (C(M_PI) * i)) * log(z);
}

inline Cx<double> f2_jump(Cx<double> z, double x) {
    SupportEndpoints ep = endpoints(x);
    using C = Cx<double>;
    const C i{0, 1};
    const double sq_ba = std::sqrt(ep.beta - ep.alpha);
    C lnA = log((sqrt(C(ep.beta) * (z - C(ep.alpha))) +
                 sqrt(C(-ep.alpha) * (C(ep.beta) - z))) / C(sq_ba));
    C lnB = log((sqrt(z - C(ep.alpha)) - i * sqrt(C(ep.beta) - z)) / C(sq_ba));
    return (C(4) * (-z) / (C(M_PI) * i)) * lnA + C(4) * lnB - z -
           (C(2) * (-z) / (C(M_PI) * i)) * log(-z);
}

}  // namespace sixv
