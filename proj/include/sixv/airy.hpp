#pragma once

#include <cmath>

#include "sixv/bigfloat.hpp"
#include "sixv/complexmath.hpp"

namespace sixv {

template <class T>
struct AiryPair {
    Cx<T> ai, aip;
};

namespace detail {

// Maclaurin solution of w'' = z w:
//   Ai(z) = Ai(0) f(z) + Ai'(0) g(z)
// with f, g the standard entire solutions.  The series suffers cancellation
// of order e^{(4/3)|z|^{3/2}} in the decaying directions, so the working
// precision is padded accordingly and results are returned at BigFloat
// precision for the caller to round.
inline AiryPair<BigFloat> airy_series_bf(const Cx<BigFloat>& z) {
    using C = Cx<BigFloat>;
    const BigFloat one(1);
    C w = z * z * z;
    C f(one), fp_acc(BigFloat(0));   // fp_acc = sum a_k * 3k, f' = fp_acc / z
    C g = z, gp_acc = z;             // gp_acc = sum g_k * (3k+1), g' = gp_acc / z
    C af(one), ag = z;
    const BigFloat tiny = pow(BigFloat(2), -(static_cast<int>(BigFloat::default_precision() * 3.33) + 16));
    for (unsigned long k = 0; k < 4000; ++k) {
        af = af * w / BigFloat((3 * k + 2) * (3 * k + 3));
        ag = ag * w / BigFloat((3 * k + 3) * (3 * k + 4));
        f += af;
        g += ag;
        fp_acc += af * BigFloat(3 * (k + 1));
        gp_acc += ag * BigFloat(3 * (k + 1) + 1);
        if (abs(af) < tiny && abs(ag) < tiny) break;
    }
    // Ai(0) = 3^{-2/3}/Gamma(2/3), Ai'(0) = -3^{-1/3}/Gamma(1/3)
    BigFloat third = one / 3;
    BigFloat ai0 = pow(BigFloat(3), -BigFloat(2) / 3) / boost::multiprecision::tgamma(2 * third);
    BigFloat aip0 = -pow(BigFloat(3), -third) / boost::multiprecision::tgamma(third);
    AiryPair<BigFloat> out;
    out.ai = C(ai0) * f + C(aip0) * g;
    bool at_origin = (z.re == 0 && z.im == 0);
    out.aip = at_origin ? C(aip0) : C(ai0) * (fp_acc / z) + C(aip0) * (gp_acc / z);
    return out;
}

// u_k, v_k coefficients of the Poincare expansions (DLMF 9.7):
//   Ai(z)  ~  e^{-xi} z^{-1/4}/(2 sqrt(pi)) sum (-1)^k u_k xi^{-k}
//   Ai'(z) ~ -e^{-xi} z^{+1/4}/(2 sqrt(pi)) sum (-1)^k v_k xi^{-k}
// with xi = (2/3) z^{3/2}; adequate for |arg z| <= 2pi/3 away from zero.
inline AiryPair<double> airy_asymptotic(const Cx<double>& z) {
    using C = Cx<double>;
    C z12 = sqrt(z);
    C z14 = sqrt(z12);
    C xi = (2.0 / 3.0) * z * z12;
    C inv_xi = C(1.0) / xi;
    C su(1.0), sv(1.0), pw(1.0);
    double u = 1.0;
    double best = 1e300;
    for (int k = 1; k <= 24; ++k) {
        u *= (6.0 * k - 5) * (6.0 * k - 1) / (72.0 * k);
        double v = -u * (6.0 * k + 1) / (6.0 * k - 1);
        pw *= -inv_xi;  // (-1)^k xi^{-k}
        double mag = u * abs(pw);
        if (mag > best) break;  // divergent tail reached
        best = mag;
        su += C(u) * pw;
        sv += C(v) * pw;
        if (mag < 1e-19) break;
    }
    C pref = exp(-xi) / C(2 * std::sqrt(M_PI));
    AiryPair<double> out;
    out.ai = pref / z14 * su;
    out.aip = C(-1.0) * pref * z14 * sv;
    return out;
}

}  // namespace detail

// Reference evaluation by the integrated Maclaurin series at >= target_bits
// effective precision (the working precision absorbs the cancellation loss).
// The argument is taken at full precision; rounding it first would cap the
// achievable accuracy of the strongly cancelling recessive combinations.
inline AiryPair<BigFloat> airy_reference_bf(const Cx<BigFloat>& z, unsigned target_bits) {
    double r = static_cast<double>(hypot(z.re, z.im));
    unsigned loss = static_cast<unsigned>(2.0 * std::pow(r, 1.5) + 32);
    ScopedPrecision prec(target_bits + loss);
    // assignment copies the SOURCE precision (boost mpfr semantics), so the
    // components must be re-raised to the padded working precision explicitly
    Cx<BigFloat> zb;
    zb.re = z.re;
    zb.im = z.im;
    zb.re.precision(BigFloat::default_precision());
    zb.im.precision(BigFloat::default_precision());
    return detail::airy_series_bf(zb);
}

inline AiryPair<BigFloat> airy_reference(const Cx<double>& z, unsigned target_bits) {
    ScopedPrecision prec(target_bits + 64);
    return airy_reference_bf({BigFloat(z.re), BigFloat(z.im)}, target_bits);
}

// Complex Airy Ai and Ai' in double precision, relative accuracy ~1e-13 for
// |z| <= 30 (relative to the decaying/oscillating envelope).  Series core for
// |z| <= 9, Poincare expansion beyond, rotated through the connection formula
//   Ai(z) + e^{-2pi i/3} Ai(z e^{-2pi i/3}) + e^{+2pi i/3} Ai(z e^{+2pi i/3}) = 0
// when arg z is outside the expansion's comfortable sector.
inline AiryPair<double> airy(const Cx<double>& z) {
    using C = Cx<double>;
    const double r = std::hypot(z.re, z.im);
    if (r <= 9.0) {
        unsigned loss = static_cast<unsigned>(2.0 * std::pow(r, 1.5)) + 16;
        ScopedPrecision prec(64 + loss);
        auto hp = detail::airy_series_bf({BigFloat(z.re), BigFloat(z.im)});
        return {{static_cast<double>(hp.ai.re), static_cast<double>(hp.ai.im)},
                {static_cast<double>(hp.aip.re), static_cast<double>(hp.aip.im)}};
    }
    const double a = std::atan2(z.im, z.re);
    if (std::abs(a) <= 2 * M_PI / 3) return detail::airy_asymptotic(z);
    // rotate into |arg| <= 2pi/3; with w = e^{2pi i/3}:
    //   Ai(z)  = -[w Ai(wz) + w^2 Ai(w^2 z)]
    //   Ai'(z) = -[w^2 Ai'(wz) + w Ai'(w^2 z)]
    const double c = -0.5, s = std::sqrt(3.0) / 2;
    C wp{c, s}, wm{c, -s};
    auto ap = detail::airy_asymptotic(z * wp);
    auto am = detail::airy_asymptotic(z * wm);
    AiryPair<double> out;
    out.ai = C(-1.0) * (wp * ap.ai + wm * am.ai);
    out.aip = C(-1.0) * (wm * ap.aip + wp * am.aip);
    return out;
}

}  // namespace sixv
