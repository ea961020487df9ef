#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "sixv/rational.hpp"

namespace sixv {

// Arbitrary-precision real with runtime-selectable precision (MPFR backend).
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

inline unsigned bits_to_digits10(unsigned bits) {
    return static_cast<unsigned>(bits * 0.30103) + 2;
}

// Sets the default precision for newly created BigFloats; restores on exit.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned bits)
        : saved_(BigFloat::default_precision()) {
        BigFloat::default_precision(bits_to_digits10(bits));
    }
    ~ScopedPrecision() { BigFloat::default_precision(saved_); }
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_;
};

// Exact value of q rounded to the current working precision.
inline BigFloat to_bigfloat(const Rational& q) {
    BigFloat r;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

inline BigFloat to_bigfloat(const Integer& z) {
    BigFloat r;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

inline BigFloat bf_pi() {
    BigFloat r;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

// ln n! at working precision
inline BigFloat bf_lfactorial(unsigned long n) {
    return boost::multiprecision::lgamma(BigFloat(n + 1));
}

}  // namespace sixv
