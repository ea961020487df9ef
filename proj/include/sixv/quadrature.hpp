#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace sixv {

// Adaptive Gauss-Kronrod 7-15 on [a,b].  Integrands are expected smooth
// (callers substitute away singularities first).
struct QuadratureResult {
    double value = 0;
    double error_estimate = 0;
    bool converged = true;
    std::size_t evaluations = 0;
};

namespace detail {

// G7/K15 nodes and weights (positive half; node 0 included once)
inline constexpr double kKronrodNodes[8] = {
    0.0,
    0.2077849550078984676006894037732449,
    0.4058451513773971669066064120769615,
    0.5860872354676911302941448382587296,
    0.7415311855993944398638647732807884,
    0.8648644233597690727897127886409262,
    0.9491079123427585245261896840478513,
    0.9914553711208126392068546975263285,
};
inline constexpr double kKronrodWeights[8] = {
    0.2094821410847278280129991748917143,
    0.2044329400752988924141619992346491,
    0.1903505780647854099132564024210137,
    0.1690047266392679028265834265985503,
    0.1406532597155259187451895905102379,
    0.1047900103222501838398763225415180,
    0.0630920926299785532907006631892043,
    0.0229353220105292249637320080589695,
};
inline constexpr double kGaussWeights[4] = {
    0.4179591836734693877551020408163265,
    0.3818300505051189449503697754889751,
    0.2797053914892766679014677714237796,
    0.1294849661688696932706114326790820,
};

template <class F>
void gk15(const F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fk = 0, fg = 0;
    const double f0 = f(c);
    fk += kKronrodWeights[0] * f0;
    fg += kGaussWeights[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double fl = f(c - h * kKronrodNodes[i]);
        const double fr = f(c + h * kKronrodNodes[i]);
        fk += kKronrodWeights[i] * (fl + fr);
        if (i % 2 == 0) fg += kGaussWeights[i / 2] * (fl + fr);
    }
    kronrod = fk * h;
    err = std::abs((fk - fg) * h);
}

template <class F>
void adapt(const F& f, double a, double b, double tol, int depth, QuadratureResult& out) {
    double v, e;
    gk15(f, a, b, v, e);
    out.evaluations += 15;
    if (e <= tol || depth >= 48) {
        out.value += v;
        out.error_estimate += e;
        if (e > tol) out.converged = false;
        return;
    }
    const double m = 0.5 * (a + b);
    adapt(f, a, m, tol / 2, depth + 1, out);
    adapt(f, m, b, tol / 2, depth + 1, out);
}

}  // namespace detail

template <class F>
QuadratureResult integrate(const F& f, double a, double b, double tol = 1e-12) {
    QuadratureResult out;
    if (a == b) return out;
    detail::adapt(f, a, b, tol, 0, out);
    return out;
}

}  // namespace sixv
