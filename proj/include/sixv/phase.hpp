#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixv/bigfloat.hpp"
#include "sixv/complexmath.hpp"
#include "sixv/theta.hpp"

namespace sixv {

enum class Phase { disordered, antiferroelectric, critical };

inline const char* phase_name(Phase p) {
    switch (p) {
        case Phase::disordered: return "D";
        case Phase::antiferroelectric: return "AF";
        default: return "critical";
    }
}

// Point of the phase diagram in the (x, y) coordinates
//   a/c = (1-x)/2 + y,  b/c = (1+x)/2 + y.
// y > 0 is the disordered region, y < 0 antiferroelectric, y = 0 the
// critical line Delta = -1.
struct PhasePoint {
    double x = 0, y = 0;
    double a_over_c = 0, b_over_c = 0;
    double delta = 0;
    Phase phase = Phase::critical;
};

inline PhasePoint make_phase_point(double x, double y) {
    if (!(x > -1 && x < 1)) throw std::domain_error("phase: |x| < 1 required");
    PhasePoint p;
    p.x = x;
    p.y = y;
    p.a_over_c = (1 - x) / 2 + y;
    p.b_over_c = (1 + x) / 2 + y;
    if (p.a_over_c <= 0 || p.b_over_c <= 0)
        throw std::domain_error("phase: weights must stay positive (y too negative)");
    p.delta = (p.a_over_c * p.a_over_c + p.b_over_c * p.b_over_c - 1) /
              (2 * p.a_over_c * p.b_over_c);
    p.phase = y > 0 ? Phase::disordered : (y < 0 ? Phase::antiferroelectric : Phase::critical);
    return p;
}

// (gamma, t) parameterization: sin t = x sin gamma in (D), sinh t = x sinh
// gamma in (AF); |t| < gamma on both sides.
struct GammaT {
    double gamma = 0, t = 0;
    Phase phase = Phase::critical;
};

template <class T>
T d_side_sin_gamma(const T& x, const T& y) {
    using std::sqrt;
    return 2 * sqrt(y * (1 + y) / ((1 + 2 * y) * (1 + 2 * y) - x * x));
}

inline GammaT coords_to_gamma_t(double x, double y) {
    PhasePoint p = make_phase_point(x, y);  // validates
    if ((1 + 2 * y) * (1 + 2 * y) - x * x <= 0)
        throw std::domain_error("coords_to_gamma_t: outside parameterization neighborhood");
    GammaT g;
    g.phase = p.phase;
    if (y == 0) return g;  // gamma = t = 0 limit on the critical line
    if (y > 0) {
        double s = d_side_sin_gamma(x, y);
        if (s > 1)
            throw std::domain_error("coords_to_gamma_t: outside parameterization neighborhood");
        g.gamma = std::asin(s);
        g.t = std::asin(x * s);
    } else {
        double s = 2 * std::sqrt(-y * (1 + y) / ((1 + 2 * y) * (1 + 2 * y) - x * x));
        g.gamma = std::asinh(s);
        g.t = std::asinh(x * s);
    }
    return g;
}

// Inverse map through the weight ratios (round-trip check).
inline std::pair<double, double> gamma_t_to_coords(const GammaT& g) {
    double ac, bc;
    if (g.phase == Phase::disordered) {
        ac = std::sin(g.gamma - g.t) / std::sin(2 * g.gamma);
        bc = std::sin(g.gamma + g.t) / std::sin(2 * g.gamma);
    } else if (g.phase == Phase::antiferroelectric) {
        ac = std::sinh(g.gamma - g.t) / std::sinh(2 * g.gamma);
        bc = std::sinh(g.gamma + g.t) / std::sinh(2 * g.gamma);
    } else {
        throw std::domain_error("gamma_t_to_coords: critical point has gamma = 0");
    }
    return {bc - ac, (ac + bc - 1) / 2};
}

// gamma = f_D(x,k) = arcsin(2k sqrt((1+k^2)/((1+2k^2)^2 - x^2))), y = k^2;
// complexified for the parity identities f_D(x,-k) = -f_D(x,k) and
// f_AF(x,k) = -i f_D(x, ik).
inline Cx<double> f_D_complex(double x, Cx<double> k) {
    using C = Cx<double>;
    C k2 = k * k;
    C den = (C(1.0) + C(2.0) * k2) * (C(1.0) + C(2.0) * k2) - C(x * x);
    return asin(C(2.0) * k * sqrt((C(1.0) + k2) / den));
}

inline Cx<double> f_AF_complex(double x, Cx<double> k) {
    using C = Cx<double>;
    C k2 = k * k;
    C den = (C(1.0) - C(2.0) * k2) * (C(1.0) - C(2.0) * k2) - C(x * x);
    return asinh(C(2.0) * k * sqrt((C(1.0) - k2) / den));
}

// --- free energies (weights rescaled by c) ---------------------------------

// F_C(x) = pi (1-x^2) / (4 cos(pi x/2)): critical-line free energy.
template <class T>
T critical_free_energy(const T& x) {
    using std::atan2;
    using std::cos;
    const T pi = atan2(T(0), T(-1));
    return pi * (1 - x * x) / (4 * cos(pi * x / 2));
}

namespace detail {

template <class T>
T phase_free_energy_generic(const T& x, const T& y, bool disordered) {
    using std::asin;
    using std::asinh;
    using std::cos;
    using std::sin;
    using std::sinh;
    using std::sqrt;
    using std::atan2;
    const T pi = atan2(T(0), T(-1));
    T den = (1 + 2 * y) * (1 + 2 * y) - x * x;
    T ab = (T(1) / 2 + y) * (T(1) / 2 + y) - x * x / 4;
    T gamma, t, growth;
    if (disordered) {
        T s = 2 * sqrt(y * (1 + y) / den);
        gamma = asin(s);
        t = asin(x * s);
        growth = sin(2 * gamma);
    } else {
        T s = 2 * sqrt(-y * (1 + y) / den);
        gamma = asinh(s);
        t = asinh(x * s);
        growth = sinh(2 * gamma);
    }
    return pi * ab * growth / (2 * gamma * cos(pi * t / (2 * gamma)));
}

}  // namespace detail

// F_D(x, y) = pi (ab/c^2) sin(2 gamma) / (2 gamma cos(pi t / 2 gamma)), y > 0.
template <class T>
T free_energy_D(const T& x, const T& y) {
    if (!(y > 0)) throw std::domain_error("free_energy_D: y > 0 required");
    return detail::phase_free_energy_generic(x, y, true);
}

// Regular part in the AF region (same expression through sinh), y < 0.
template <class T>
T free_energy_AF_reg(const T& x, const T& y) {
    if (!(y < 0)) throw std::domain_error("free_energy_AF_reg: y < 0 required");
    return detail::phase_free_energy_generic(x, y, false);
}

struct SingularPart {
    double value = 0;
    bool underflow = false;  // q = e^{-pi^2/(2 gamma)} underflowed to zero
};

// F_sing = pi (ab/c^2) sinh(2 gamma)/(2 gamma) *
//          (theta1'(0)/theta1(omega) - 1/cos(pi t/(2 gamma))),
// omega = (pi/2)(1 + t/gamma), q = e^{-pi^2/(2 gamma)}.  O(e^{-pi^2/gamma}).
//
// The difference is evaluated through the cancelled series
//   theta1'(0) - theta1(omega)/sin(omega) =
//     2 q^{1/4} sum_{n>=1} (-1)^n q^{n(n+1)} [(2n+1) - sin((2n+1)omega)/sin(omega)]
// (the n = 0 terms cancel identically, and cos(pi t/(2 gamma)) = sin(omega));
// the naive subtraction hits the roundoff floor long before q^2 does.
inline SingularPart free_energy_AF_sing(double x, double y) {
    if (!(y < 0)) throw std::domain_error("free_energy_AF_sing: y < 0 required");
    GammaT g = coords_to_gamma_t(x, y);
    SingularPart out;
    double q = std::exp(-M_PI * M_PI / (2 * g.gamma));
    if (q == 0.0) {
        out.underflow = true;
        return out;
    }
    double ab = (0.5 + y) * (0.5 + y) - x * x / 4;
    double omega = (M_PI / 2) * (1 + g.t / g.gamma);
    double inv_sin = 1 / std::sin(omega);
    double qsq = q * q;
    double fac = qsq;      // q^{n(n+1)} for n = 1
    double step = qsq * qsq;
    double sum = 0, sign = -1;
    for (unsigned n = 1; n < 64; ++n) {
        sum += sign * fac * ((2 * static_cast<int>(n) + 1) -
                             std::sin((2 * n + 1) * omega) * inv_sin);
        sign = -sign;
        fac *= step;
        step *= qsq;
        if (fac * (2 * n + 5) < 1e-30 * std::max(qsq, std::abs(sum))) break;
    }
    double num = 2 * std::pow(q, 0.25) * sum;
    out.value = M_PI * ab * std::sinh(2 * g.gamma) / (2 * g.gamma) * num / theta1(omega, q);
    return out;
}

// Taylor coefficients of F_D(x, y) = sum f_j(x) y^j at y = 0.
//   f_0(x) = pi (1-x^2)/(4 cos(pi x/2))
//   f_1(x) = pi (pi x^3 sin(pi x/2) - pi x sin(pi x/2) + 4 cos(pi x/2))
//            / (12 cos^2(pi x/2))
// (f_1 follows from the parameterization sin t = x sin gamma forced by the
// coordinate change; verified against high-precision two-sided fits.)
inline double f0_closed_form(double x) { return critical_free_energy(x); }

inline double f1_closed_form(double x) {
    double s = std::sin(M_PI * x / 2), c = std::cos(M_PI * x / 2);
    return M_PI * (M_PI * x * x * x * s - M_PI * x * s + 4 * c) / (12 * c * c);
}

struct TaylorMatch {
    double f0_fit = 0, f1_fit = 0;
    double f0_closed = 0, f1_closed = 0;
    double f0_error = 0, f1_error = 0;        // |fit - closed|
    double two_sided_diff_f0 = 0;             // |D-side fit - AF-side fit|
    double two_sided_diff_f1 = 0;
    bool conditioning_ok = true;
};

namespace detail {

// least-squares polynomial fit of degree deg in the scaled variable u = y/scale
template <class T>
std::vector<T> poly_fit(const std::vector<T>& ys, const std::vector<T>& fs, int deg,
                        const T& scale) {
    const int m = deg + 1;
    std::vector<std::vector<T>> ata(m, std::vector<T>(m, T(0)));
    std::vector<T> atb(m, T(0));
    for (std::size_t i = 0; i < ys.size(); ++i) {
        T u = ys[i] / scale;
        std::vector<T> row(m);
        row[0] = T(1);
        for (int j = 1; j < m; ++j) row[j] = row[j - 1] * u;
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < m; ++c) ata[r][c] += row[r] * row[c];
            atb[r] += row[r] * fs[i];
        }
    }
    // Gaussian elimination with partial pivoting
    using std::abs;
    for (int c = 0; c < m; ++c) {
        int p = c;
        for (int r = c + 1; r < m; ++r)
            if (abs(ata[r][c]) > abs(ata[p][c])) p = r;
        std::swap(ata[p], ata[c]);
        std::swap(atb[p], atb[c]);
        for (int r = c + 1; r < m; ++r) {
            T f = ata[r][c] / ata[c][c];
            for (int cc = c; cc < m; ++cc) ata[r][cc] -= f * ata[c][cc];
            atb[r] -= f * atb[c];
        }
    }
    std::vector<T> coef(m);
    for (int r = m - 1; r >= 0; --r) {
        T v = atb[r];
        for (int c = r + 1; c < m; ++c) v -= ata[r][c] * coef[c];
        coef[r] = v / ata[r][r];
    }
    // unscale: coefficient of y^j is coef[j]/scale^j
    T sc(1);
    for (int j = 0; j < m; ++j) {
        coef[j] = coef[j] / sc;
        sc *= scale;
    }
    return coef;
}

}  // namespace detail

// Fits a single degree-4 polynomial in y through F_D on y = +j delta and
// F_AF^reg on y = -j delta (j = 1..8), plus separate one-sided fits; the
// two-sided agreement probes the analytic continuation across y = 0.
template <class T>
TaylorMatch taylor_match_t(const T& x, const T& delta) {
    std::vector<T> ys, fs, ys_d, fs_d, ys_af, fs_af;
    for (int j = 1; j <= 8; ++j) {
        T yp = delta * j, ym = -delta * j;
        T fd = free_energy_D(x, yp);
        T fa = free_energy_AF_reg(x, ym);
        ys.push_back(yp); fs.push_back(fd);
        ys.push_back(ym); fs.push_back(fa);
        ys_d.push_back(yp); fs_d.push_back(fd);
        ys_af.push_back(ym); fs_af.push_back(fa);
    }
    T scale = delta * 8;
    auto both = detail::poly_fit(ys, fs, 4, scale);
    auto dfit = detail::poly_fit(ys_d, fs_d, 4, scale);
    auto afit = detail::poly_fit(ys_af, fs_af, 4, scale);
    TaylorMatch m;
    m.f0_fit = static_cast<double>(both[0]);
    m.f1_fit = static_cast<double>(both[1]);
    m.f0_closed = f0_closed_form(static_cast<double>(x));
    m.f1_closed = f1_closed_form(static_cast<double>(x));
    m.f0_error = std::abs(m.f0_fit - m.f0_closed);
    m.f1_error = std::abs(m.f1_fit - m.f1_closed);
    m.two_sided_diff_f0 = std::abs(static_cast<double>(dfit[0] - afit[0]));
    m.two_sided_diff_f1 = std::abs(static_cast<double>(dfit[1] - afit[1]));
    return m;
}

inline TaylorMatch taylor_match(double x, double delta = 1e-3) {
    if (!(std::abs(x) <= 0.9)) throw std::domain_error("taylor_match: |x| <= 0.9 required");
    return taylor_match_t<double>(x, delta);
}

// High-precision confirmation pass of the same fit.
inline TaylorMatch taylor_match_hp(double x, double delta = 1e-3, unsigned bits = 256) {
    ScopedPrecision prec(bits);
    return taylor_match_t<BigFloat>(BigFloat(x), BigFloat(delta));
}

}  // namespace sixv
