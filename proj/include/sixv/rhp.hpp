#pragma once

#include <array>
#include <stdexcept>

#include "sixv/airy.hpp"
#include "sixv/equilibrium.hpp"

namespace sixv {

using Cd = Cx<double>;

struct Mat2 {
    Cd a, b, c, d;  // [[a, b], [c, d]]

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend Mat2 operator-(const Mat2& m, const Mat2& n) {
        return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
    }
    friend Mat2 operator*(const Cd& s, const Mat2& m) {
        return {s * m.a, s * m.b, s * m.c, s * m.d};
    }
    Cd det() const { return a * d - b * c; }
    Mat2 inverse() const {
        Cd dt = det();
        return {d / dt, Cd(-1.0) * b / dt, Cd(-1.0) * c / dt, a / dt};
    }
    double max_norm() const { return std::max({abs(a), abs(b), abs(c), abs(d)}); }
    static Mat2 identity() { return {Cd(1.0), Cd(0.0), Cd(0.0), Cd(1.0)}; }
};

// delta(z) = ((z-alpha)/(z-beta))^{1/4}, principal branch, -> 1 at infinity.
inline Cd model_delta(const Cd& z, double x) {
    SupportEndpoints ep = endpoints(x);
    Cd ratio = (z - Cd(ep.alpha)) / (z - Cd(ep.beta));
    return exp(Cd(0.25) * log(ratio));
}

// Global model solution: M = (1/2) [[d+1/d, i(d-1/d)], [-i(d-1/d), d+1/d]],
// analytic off [alpha, beta], jump (0 1; -1 0) on the cut, det = 1, -> I.
inline Mat2 model_M(const Cd& z, double x) {
    SupportEndpoints ep = endpoints(x);
    if (z.im == 0 && z.re > ep.alpha && z.re < ep.beta)
        throw std::domain_error("model_M: on-cut evaluation requires a side (model_M_side)");
    Cd d = model_delta(z, x);
    Cd dinv = Cd(1.0) / d;
    Cd i{0, 1};
    return {Cd(0.5) * (d + dinv), Cd(0.5) * i * (d - dinv),
            Cd(-0.5) * i * (d - dinv), Cd(0.5) * (d + dinv)};
}

// Boundary values on (alpha, beta): the ratio (z-a)/(z-b) approaches the
// negative real axis from below as Im z -> 0+, so
// delta_+ = |r|^{1/4} e^{-i pi/4} and delta_- = |r|^{1/4} e^{+i pi/4}.
inline Mat2 model_M_side(double z, double x, int side) {
    SupportEndpoints ep = endpoints(x);
    if (!(z > ep.alpha && z < ep.beta))
        throw std::domain_error("model_M_side: z not inside (alpha, beta)");
    double r = std::pow((z - ep.alpha) / (ep.beta - z), 0.25);
    double s = side >= 0 ? -1.0 : 1.0;
    Cd d{r * std::cos(M_PI / 4), s * r * std::sin(M_PI / 4)};
    Cd dinv = Cd(1.0) / d;
    Cd i{0, 1};
    return {Cd(0.5) * (d + dinv), Cd(0.5) * i * (d - dinv),
            Cd(-0.5) * i * (d - dinv), Cd(0.5) * (d + dinv)};
}

// --- Airy model assemblies --------------------------------------------------

// A0(zeta) = [[Ai'(zeta), e^{-i pi/3} Ai'(w zeta)], [Ai(zeta), e^{i pi/3} Ai(w zeta)]]
// with w = e^{-2 pi i/3}; entire in zeta, det = -i/(2 pi).
inline Mat2 airy_A0(const Cd& zeta) {
    const Cd w{-0.5, -std::sqrt(3.0) / 2};   // e^{-2pi i/3}
    const Cd e3{0.5, std::sqrt(3.0) / 2};    // e^{+i pi/3}
    const Cd em3{0.5, -std::sqrt(3.0) / 2};  // e^{-i pi/3}
    auto v = airy(zeta);
    auto vr = airy(w * zeta);
    return {v.aip, em3 * vr.aip, v.ai, e3 * vr.ai};
}

namespace detail {

inline const std::array<Mat2, 4>& arh_sector_factors() {
    // sectors: 0: arg in (0, 2pi/3); 1: (2pi/3, pi); 2: (-2pi/3, 0); 3: (-pi, -2pi/3)
    static const std::array<Mat2, 4> f = {{
        Mat2::identity(),
        {Cd(1.0), Cd(0.0), Cd(-1.0), Cd(1.0)},
        {Cd(1.0), Cd(-1.0), Cd(0.0), Cd(1.0)},
        {Cd(0.0), Cd(-1.0), Cd(1.0), Cd(1.0)},
    }};
    return f;
}

inline int arh_sector(double a) {
    if (a > 0)
        return a < 2 * M_PI / 3 ? 0 : 1;
    return a > -2 * M_PI / 3 ? 2 : 3;
}

// tilde A0(zeta) = -(0 1; 1 0) s3 A0(e^{-i pi} zeta) s3 = [[A21, -A22], [-A11, A12]]
inline Mat2 airy_A0_tilde(const Cd& zeta) {
    Mat2 A = airy_A0(Cd(-1.0) * zeta);
    return {A.c, Cd(-1.0) * A.d, Cd(-1.0) * A.a, A.b};
}

inline const std::array<Mat2, 4>& arh_left_sector_factors() {
    // sectors by arg in (0, 2pi): 0: (0, pi/3); 1: (pi/3, pi); 2: (pi, 5pi/3); 3: (5pi/3, 2pi)
    static const std::array<Mat2, 4> f = {{
        {Cd(0.0), Cd(1.0), Cd(-1.0), Cd(1.0)},
        {Cd(1.0), Cd(1.0), Cd(0.0), Cd(1.0)},
        Mat2::identity(),
        {Cd(1.0), Cd(0.0), Cd(1.0), Cd(1.0)},
    }};
    return f;
}

inline int arh_left_sector(double a2pi) {
    if (a2pi < M_PI / 3) return 0;
    if (a2pi < M_PI) return 1;
    if (a2pi < 5 * M_PI / 3) return 2;
    return 3;
}

}  // namespace detail

// Right-edge model function: A0 times a sector-wise constant factor, giving
// the piecewise problem with jumps (1 1; 0 1) on arg=0, (1 0; -1 1) on
// arg=+-2pi/3, (0 -1; 1 0) on arg=pi.
inline Mat2 airy_ARH(const Cd& zeta) {
    return airy_A0(zeta) * detail::arh_sector_factors()[detail::arh_sector(arg(zeta))];
}

inline Mat2 airy_ARH_sector(const Cd& zeta, int sector) {
    return airy_A0(zeta) * detail::arh_sector_factors()[sector];
}

// Left-edge model function (arguments measured in (0, 2pi)).
inline Mat2 airy_ARH_left(const Cd& zeta) {
    double a = arg(zeta);
    if (a < 0) a += 2 * M_PI;
    return detail::airy_A0_tilde(zeta) * detail::arh_left_sector_factors()[detail::arh_left_sector(a)];
}

inline Mat2 airy_ARH_left_sector(const Cd& zeta, int sector) {
    return detail::airy_A0_tilde(zeta) * detail::arh_left_sector_factors()[sector];
}

// --- conformal edge maps ----------------------------------------------------

enum class EdgeSide { left, right };

inline double edge_map_radius_limit(double x) {
    SupportEndpoints ep = endpoints(x);
    return std::min({0.5, -ep.alpha / 2, ep.beta / 2});
}

// zeta(z) = (3N/4)^{2/3} (-2g + V + l)^{2/3} near beta (with the +2 pi i
// sgn(Im z) shift and an e^{i pi} prefactor near alpha), computed in the
// factored form coef * (z-edge) * s(z)^{2/3} so the 2/3 power never wraps.
template <class T>
Cx<T> edge_map_t(EdgeSide side, const Cx<T>& z, unsigned long N, const T& x) {
    using std::atan2;
    using std::log;
    using C = Cx<T>;
    const T pi = atan2(T(0), T(-1));
    EndpointsT<T> ep = endpoints_t(x, pi);
    const T l = 2 * log(ep.beta - ep.alpha) - 2 * (1 + 2 * log(T(2)));
    const T rmax = [&] {
        using std::min;
        T h(0.5);
        T a = -ep.alpha / 2, b = ep.beta / 2;
        T m = a < b ? a : b;
        return m < h ? m : h;
    }();
    const C edge = side == EdgeSide::right ? C(ep.beta) : C(ep.alpha);
    if (abs(z - edge) >= rmax)
        throw std::domain_error("edge_map: z outside the conformal disc");
    if (abs(z - edge) == 0) return C(T(0));

    C g = g_function(z, x);
    C q;
    C w;  // (edge-direction)-adapted local coordinate whose 3/2 power divides q
    if (side == EdgeSide::right) {
        q = C(T(-2)) * g + z * C(1 - x) + C(l);
        w = z - C(ep.beta);
    } else {
        T sgn = z.im >= 0 ? T(1) : T(-1);
        q = C(T(-2)) * g - z * C(1 + x) + C(l) + C{T(0), 2 * pi * sgn};
        w = C(ep.alpha) - z;
    }
    C w32 = exp(C(T(1.5)) * sixv::log(w));
    C s = q / w32;
    C coef = exp(C(T(2) / 3) * sixv::log(C(T(0.75) * T(static_cast<double>(N)))));
    C zeta = coef * w * exp(C(T(2) / 3) * sixv::log(s));
    if (side == EdgeSide::left) zeta = C(T(-1)) * zeta;  // e^{i pi} (alpha - z) = z - alpha
    return zeta;
}

inline Cd edge_map(EdgeSide side, const Cd& z, unsigned long N, double x) {
    return edge_map_t<double>(side, z, N, x);
}

// Closed-form linear coefficient of the edge map at the edge point.
inline double edge_map_coefficient(EdgeSide side, unsigned long N, double x) {
    SupportEndpoints ep = endpoints(x);
    double e = side == EdgeSide::right ? ep.beta : -ep.alpha;
    return std::pow(2.0 * static_cast<double>(N) / (e * std::sqrt(ep.beta - ep.alpha)),
                    2.0 / 3.0);
}

// --- parametrices -----------------------------------------------------------

// Right parametrix U(z) = B_r(z) (-i sqrt(pi)) A^{RH}(zeta) e^{(2/3) zeta^{3/2} s3},
// B_r = (-i i; 1 1) (zeta (z-alpha)/(z-beta))^{-s3/4}.
inline Mat2 parametrix_U(const Cd& z, unsigned long N, double x) {
    SupportEndpoints ep = endpoints(x);
    Cd zeta = edge_map(EdgeSide::right, z, N, x);
    Cd wq = zeta * (z - Cd(ep.alpha)) / (z - Cd(ep.beta));
    Cd w14 = exp(Cd(-0.25) * log(wq));
    Cd i{0, 1};
    Mat2 Br{Cd(-1.0) * i * w14, i / w14, w14, Cd(1.0) / w14};
    Cd xi = Cd(2.0 / 3.0) * exp(Cd(1.5) * log(zeta));
    Mat2 E{exp(xi), Cd(0.0), Cd(0.0), exp(Cd(-1.0) * xi)};
    Cd misqrtpi{0, -std::sqrt(M_PI)};
    return misqrtpi * (Br * (airy_ARH(zeta) * E));
}

// Left parametrix V(z) = B_l(z) (i sqrt(pi) s3) tilde A^{RH}(zeta) e^{(2/3) i zeta^{3/2} s3},
// B_l = (-i i; 1 1) (e^{-i pi} zeta (z-beta)/(z-alpha))^{+s3/4}; the 3/2 power
// of zeta uses the (0, 2pi) branch that the tilde assembly lives on.
inline Mat2 parametrix_V(const Cd& z, unsigned long N, double x) {
    SupportEndpoints ep = endpoints(x);
    Cd zeta = edge_map(EdgeSide::left, z, N, x);
    Cd wq = Cd(-1.0) * zeta * (z - Cd(ep.beta)) / (z - Cd(ep.alpha));
    Cd w14 = exp(Cd(0.25) * log(wq));
    Cd i{0, 1};
    Mat2 Bl{Cd(-1.0) * i * w14, i / w14, w14, Cd(1.0) / w14};
    double a = arg(zeta);
    if (a < 0) a += 2 * M_PI;
    Cd xi32 = exp(Cd(1.5) * Cd{std::log(abs(zeta)), a});  // zeta^{3/2}, arg in (0, 2pi)
    Cd xi = Cd(2.0 / 3.0) * i * xi32;
    Mat2 E{exp(xi), Cd(0.0), Cd(0.0), exp(Cd(-1.0) * xi)};
    Cd isqrtpi{0, std::sqrt(M_PI)};
    Mat2 s3A = airy_ARH_left(zeta);
    s3A = {isqrtpi * s3A.a, isqrtpi * s3A.b, Cd(-1.0) * isqrtpi * s3A.c,
           Cd(-1.0) * isqrtpi * s3A.d};  // i sqrt(pi) s3 * A
    return Bl * (s3A * E);
}

struct ParametrixReport {
    EdgeSide side = EdgeSide::right;
    unsigned long N = 0;
    double x = 0;
    double radius = 0;
    double max_residual = 0;  // max over circle of ||P M^{-1} - I||
};

// Samples ||U M^{-1} - I|| (or V M^{-1} - I) on the circle |z - edge| = radius.
// The matching term is O(zeta^{-3/2}) = O(1/N).
inline ParametrixReport parametrix_match(EdgeSide side, unsigned long N, double x,
                                         double radius, std::size_t samples = 48) {
    SupportEndpoints ep = endpoints(x);
    if (radius >= edge_map_radius_limit(x))
        throw std::domain_error("parametrix_match: radius outside the conformal disc");
    ParametrixReport rep{side, N, x, radius, 0};
    double edge = side == EdgeSide::right ? ep.beta : ep.alpha;
    for (std::size_t k = 0; k < samples; ++k) {
        double th = 2 * M_PI * (static_cast<double>(k) + 0.31) / static_cast<double>(samples);
        Cd z{edge + radius * std::cos(th), radius * std::sin(th)};
        Mat2 P = side == EdgeSide::right ? parametrix_U(z, N, x) : parametrix_V(z, N, x);
        Mat2 E = P * model_M(z, x).inverse() - Mat2::identity();
        rep.max_residual = std::max(rep.max_residual, E.max_norm());
    }
    return rep;
}

// A^RH(zeta) e^{(2/3) zeta^{3/2} s3} at extended precision, rounded to double.
// The recessive column cancels through ~e^{2|xi|}, which exceeds double range
// well before |zeta| = 20, so asymptotic-matching checks assemble the product
// from the padded-precision series.
inline Mat2 airy_ARH_times_exp_reference(const Cd& zeta, unsigned target_bits = 256) {
    using CB = Cx<BigFloat>;
    ScopedPrecision prec(target_bits + 64);
    CB zb{BigFloat(zeta.re), BigFloat(zeta.im)};
    auto v = airy_reference_bf(zb, target_bits);
    CB w{BigFloat(-0.5), -sqrt(BigFloat(3)) / 2};
    auto vr = airy_reference_bf(w * zb, target_bits);
    CB e3{BigFloat(0.5), sqrt(BigFloat(3)) / 2};
    CB em3 = conj(e3);
    CB A[2][2] = {{v.aip, em3 * vr.aip}, {v.ai, e3 * vr.ai}};
    const int sec = detail::arh_sector(arg(zeta));
    const int F[4][4] = {{1, 0, 0, 1}, {1, 0, -1, 1}, {1, -1, 0, 1}, {0, -1, 1, 1}};
    CB B[2][2];
    for (int i = 0; i < 2; ++i) {
        B[i][0] = A[i][0] * BigFloat(F[sec][0]) + A[i][1] * BigFloat(F[sec][2]);
        B[i][1] = A[i][0] * BigFloat(F[sec][1]) + A[i][1] * BigFloat(F[sec][3]);
    }
    CB xi = BigFloat(2) / 3 * exp(CB{BigFloat(1.5), BigFloat(0)} * log(zb));
    CB ep = exp(xi), em = exp(CB{BigFloat(-1), BigFloat(0)} * xi);
    auto dd = [](const CB& c) {
        return Cd{static_cast<double>(c.re), static_cast<double>(c.im)};
    };
    return {dd(B[0][0] * ep), dd(B[0][1] * em), dd(B[1][0] * ep), dd(B[1][1] * em)};
}

// Leading matching term of U M^{-1} - I on the right circle (used to check
// the residual's matrix structure):
//   (1/(96 zeta^{3/2})) [[7 d^-2 - 5 d^2, i(7 d^-2 + 5 d^2)],
//                        [i(7 d^-2 + 5 d^2), -(7 d^-2 - 5 d^2)]]
inline Mat2 matching_term_right(const Cd& z, unsigned long N, double x) {
    Cd zeta = edge_map(EdgeSide::right, z, N, x);
    Cd d = model_delta(z, x);
    Cd d2 = d * d, dm2 = Cd(1.0) / d2;
    Cd i{0, 1};
    Cd f = Cd(1.0) / (Cd(96.0) * exp(Cd(1.5) * log(zeta)));
    Cd p = Cd(7.0) * dm2 - Cd(5.0) * d2;
    Cd q = i * (Cd(7.0) * dm2 + Cd(5.0) * d2);
    return {f * p, f * q, f * q, Cd(-1.0) * f * p};
}

}  // namespace sixv
