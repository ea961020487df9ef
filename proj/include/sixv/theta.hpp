#pragma once

#include <cmath>
#include <stdexcept>

namespace sixv {

// Jacobi theta series.  Terms are dominated by q^{(n+1/2)^2}; summation stops
// once the envelope drops below 1e-30.

template <class T>
void theta_require_nome(const T& q) {
    if (!(q > 0 && q < 1)) throw std::domain_error("theta: nome q in (0,1) required");
}

// theta_1(z|q) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) z)
template <class T>
T theta1(const T& z, const T& q) {
    using std::pow;
    using std::sin;
    theta_require_nome(q);
    T q14 = pow(q, T(1) / 4);
    T qsq = q * q;
    T fac = q14;        // q^{(n+1/2)^2} = q^{1/4} * q^{n(n+1)}
    T step = qsq;       // multiply by q^{2n} each n; q^{n(n+1)} factors as prod q^{2k}
    T sum(0);
    T sign(1);
    for (unsigned n = 0; n < 64; ++n) {
        sum += sign * fac * sin((2 * static_cast<int>(n) + 1) * z);
        sign = -sign;
        fac *= step;
        step *= qsq;
        if (fac < T(1e-30)) break;
    }
    return 2 * sum;
}

// theta_1'(0|q) = 2 sum (-1)^n (2n+1) q^{(n+1/2)^2}
template <class T>
T theta1_prime0(const T& q) {
    using std::pow;
    theta_require_nome(q);
    T q14 = pow(q, T(1) / 4);
    T qsq = q * q;
    T fac = q14, step = qsq, sum(0), sign(1);
    for (unsigned n = 0; n < 64; ++n) {
        sum += sign * fac * (2 * static_cast<int>(n) + 1);
        sign = -sign;
        fac *= step;
        step *= qsq;
        if (fac * (2 * n + 3) < T(1e-30)) break;
    }
    return 2 * sum;
}

// theta_4(z|q) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2n z)
template <class T>
T theta4(const T& z, const T& q) {
    using std::cos;
    theta_require_nome(q);
    T sum(1);
    T qsq = q * q;
    T fac = q;      // q^{n^2}: multiply by q^{2n+1} each step
    T step = q * qsq;
    T sign(-1);
    for (unsigned n = 1; n < 64; ++n) {
        sum += 2 * sign * fac * cos(2 * static_cast<int>(n) * z);
        sign = -sign;
        fac *= step;
        step *= qsq;
        if (fac < T(1e-30)) break;
    }
    return sum;
}

}  // namespace sixv
