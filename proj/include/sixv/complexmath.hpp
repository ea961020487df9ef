#pragma once

#include <cmath>

namespace sixv {

// Minimal complex type over any real scalar supporting the usual elementary
// functions (double, long double, BigFloat).  All multivalued functions take
// principal branches: arg in (-pi, pi], cuts on the negative real axis.
// std::complex is avoided because it is not specified for user-defined
// scalars.
template <class T>
struct Cx {
    T re{}, im{};

    Cx() = default;
    Cx(T r) : re(std::move(r)), im(T(0)) {}
    Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const T& s, const Cx& a) { return {s * a.re, s * a.im}; }
    friend Cx operator*(const Cx& a, const T& s) { return {a.re * s, a.im * s}; }
    friend Cx operator/(const Cx& a, const T& s) { return {a.re / s, a.im / s}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        using std::abs;
        // Smith's algorithm
        if (abs(b.re) >= abs(b.im)) {
            T r = b.im / b.re;
            T d = b.re + b.im * r;
            return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
        }
        T r = b.re / b.im;
        T d = b.re * r + b.im;
        return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
    }
    Cx& operator+=(const Cx& b) { *this = *this + b; return *this; }
    Cx& operator-=(const Cx& b) { *this = *this - b; return *this; }
    Cx& operator*=(const Cx& b) { *this = *this * b; return *this; }
};

template <class T>
Cx<T> conj(const Cx<T>& z) { return {z.re, -z.im}; }

template <class T>
T abs(const Cx<T>& z) {
    using std::hypot;
    return hypot(z.re, z.im);
}

template <class T>
T arg(const Cx<T>& z) {
    using std::atan2;
    return atan2(z.im, z.re);
}

template <class T>
Cx<T> sqrt(const Cx<T>& z) {
    using std::cos;
    using std::sin;
    using std::sqrt;
    T r = abs(z);
    T th = arg(z) / 2;
    T m = sqrt(r);
    return {m * cos(th), m * sin(th)};
}

template <class T>
Cx<T> log(const Cx<T>& z) {
    using std::log;
    return {log(abs(z)), arg(z)};
}

template <class T>
Cx<T> exp(const Cx<T>& z) {
    using std::cos;
    using std::exp;
    using std::sin;
    T m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

// principal z^a for real exponent
template <class T>
Cx<T> pow(const Cx<T>& z, const T& a) {
    return exp(Cx<T>(a) * log(z));
}

template <class T>
Cx<T> sin(const Cx<T>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class T>
Cx<T> cos(const Cx<T>& z) {
    using std::cos;
    using std::cosh;
    using std::sin;
    using std::sinh;
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

// principal arcsin(z) = -i log(iz + sqrt(1 - z^2))
template <class T>
Cx<T> asin(const Cx<T>& z) {
    Cx<T> i{T(0), T(1)};
    Cx<T> w = log(i * z + sqrt(Cx<T>(T(1)) - z * z));
    return Cx<T>{w.im, -w.re};  // -i * w
}

template <class T>
Cx<T> asinh(const Cx<T>& z) {
    return log(z + sqrt(z * z + Cx<T>(T(1))));
}

}  // namespace sixv
