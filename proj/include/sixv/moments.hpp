#pragma once

#include <vector>

#include "sixv/rational.hpp"

namespace sixv {

// Derivatives of phi(x) = 2/(1-x^2) = 1/(1-x) + 1/(1+x), which are the
// entries of the Hankel moment matrix. Closed form:
//
//   phi^(k)(x) = k! * [ (1-x)^-(k+1) + (-1)^k (1+x)^-(k+1) ]
//
// These coincide with the moments int lambda^k e^{-|lambda|+x lambda} dlambda
// of the orthogonality measure.
inline Rational moment(unsigned long k, const RationalParameter& x) {
    Rational am = pow_rational(1 / x.weight_a(), k + 1);
    Rational bm = pow_rational(1 / x.weight_b(), k + 1);
    Rational sum = (k % 2 == 0) ? Rational(am + bm) : Rational(am - bm);
    return Rational(factorial(k)) * sum;
}

struct MomentSequence {
    RationalParameter x;
    std::vector<Rational> m;  // m[k] = phi^(k)(x), k = 0..K
};

inline MomentSequence moment_sequence(unsigned long K, const RationalParameter& x) {
    MomentSequence seq{x, {}};
    seq.m.reserve(K + 1);
    // Incremental form: m_k = k * m_{k-1} pattern does not hold; instead reuse
    // the inverse-weight powers to avoid repeated exponentiation.
    Rational ia = 1 / x.weight_a();
    Rational ib = 1 / x.weight_b();
    Rational pa = ia, pb = ib;
    Integer fact = 1;
    for (unsigned long k = 0; k <= K; ++k) {
        if (k > 0) {
            fact *= k;
            pa *= ia;
            pb *= ib;
        }
        Rational sum = (k % 2 == 0) ? Rational(pa + pb) : Rational(pa - pb);
        seq.m.push_back(Rational(fact) * sum);
    }
    return seq;
}

}  // namespace sixv
