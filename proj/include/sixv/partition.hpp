#pragma once

#include <cstddef>
#include <vector>

#include "sixv/bigfloat.hpp"
#include "sixv/hankel.hpp"

namespace sixv {

struct PartitionValue {
    std::size_t N = 0;
    RationalParameter x;
    Rational Z;  // exact partition function, positive and even in x
};

// Z_N = (ab)^{N^2} prod_{k<N} h_k/(k!)^2 with a = 1-x, b = 1+x.
inline PartitionValue partition_exact(const HankelChain& chain) {
    const std::size_t N = chain.N;
    Rational Z = pow_rational(chain.x.weight_a() * chain.x.weight_b(),
                              static_cast<unsigned long>(N) * N);
    Integer fact = 1;
    for (std::size_t k = 0; k < N; ++k) {
        if (k > 0) fact *= k;
        Z *= chain.h[k] / Rational(fact * fact);
    }
    return {N, chain.x, Z};
}

inline PartitionValue partition_exact(std::size_t N, const RationalParameter& x) {
    return partition_exact(hankel_chain(N, x));
}

struct FloatPartition {
    std::size_t N = 0;
    unsigned precision_bits = 0;
    BigFloat log_z;          // ln Z_N at the higher of the two precisions
    BigFloat z;              // Z_N itself (MPFR exponent range absorbs N^2 growth)
    BigFloat error_estimate; // |ln Z at P bits - ln Z at P+64 bits|
    bool precision_warning = false;
};

namespace detail {

// Same orthogonalization sweep as hankel_chain, in floating point.  Returns
// ln Z_N.  The raw-moment recurrence sheds accuracy as N grows, which is why
// callers run it at two precisions and difference the results.
inline BigFloat log_partition_sweep(std::size_t N, const RationalParameter& x) {
    const BigFloat one(1);
    BigFloat ia = one / to_bigfloat(x.weight_a());
    BigFloat ib = one / to_bigfloat(x.weight_b());
    std::vector<BigFloat> m(2 * N);
    BigFloat pa = ia, pb = ib, fact = one;
    for (std::size_t k = 0; k < 2 * N; ++k) {
        if (k > 0) {
            fact *= static_cast<unsigned long>(k);
            pa *= ia;
            pb *= ib;
        }
        m[k] = fact * ((k % 2 == 0) ? pa + pb : pa - pb);
    }

    BigFloat log_h_sum = log(m[0]);
    std::vector<BigFloat> sig_prev2, sig_prev = std::move(m);
    std::size_t off_prev2 = 0, off_prev = 0;
    BigFloat a_prev = sig_prev[1] / sig_prev[0];
    BigFloat b_prev(0);
    BigFloat lfact(0);
    BigFloat corr(0);  // sum of -2 ln k!
    for (std::size_t k = 1; k < N; ++k) {
        const std::size_t lo = k, hi = 2 * N - 1 - k;
        std::vector<BigFloat> row;
        row.reserve(hi - lo + 1);
        for (std::size_t l = lo; l <= hi; ++l) {
            BigFloat v = sig_prev[l + 1 - off_prev] - a_prev * sig_prev[l - off_prev];
            if (k >= 2) v -= b_prev * sig_prev2[l - off_prev2];
            row.push_back(std::move(v));
        }
        if (row[0] <= 0)
            throw std::runtime_error(
                "partition_float: precision exhausted (nonpositive pivot at k=" +
                std::to_string(k) + "); increase precision_bits");
        log_h_sum += log(row[0]);
        lfact += log(BigFloat(static_cast<unsigned long>(k)));
        corr -= 2 * lfact;
        if (k + 1 < N) {
            BigFloat a_k = row[1] / row[0] - sig_prev[k - off_prev] / sig_prev[k - 1 - off_prev];
            BigFloat b_k = row[0] / sig_prev[k - 1 - off_prev];
            sig_prev2 = std::move(sig_prev);
            off_prev2 = off_prev;
            sig_prev = std::move(row);
            off_prev = lo;
            a_prev = std::move(a_k);
            b_prev = std::move(b_k);
        }
    }
    BigFloat ln_ab = log(to_bigfloat(x.weight_a() * x.weight_b()));
    return BigFloat(static_cast<unsigned long>(N) * N) * ln_ab + log_h_sum + corr;
}

}  // namespace detail

// Floating-point route to ln Z_N for N too large for comfortable exact
// arithmetic.  Internally pads the working precision (the moment recurrence
// is ill-conditioned, losing O(N) bits) and reports the difference between
// two precisions as the error estimate.
inline FloatPartition partition_float(std::size_t N, const RationalParameter& x,
                                      unsigned precision_bits) {
    if (N < 1) throw std::invalid_argument("partition_float: N >= 1 required");
    if (precision_bits < 64) throw std::invalid_argument("partition_float: precision_bits >= 64");
    const unsigned guard = static_cast<unsigned>(2 * N) + 64;
    FloatPartition out;
    out.N = N;
    out.precision_bits = precision_bits;
    BigFloat lo, hi;
    {
        ScopedPrecision sp(precision_bits + guard);
        lo = detail::log_partition_sweep(N, x);
    }
    {
        ScopedPrecision sp(precision_bits + guard + 64);
        hi = detail::log_partition_sweep(N, x);
        out.log_z = hi;
        out.z = exp(hi);
        out.error_estimate = abs(BigFloat(hi - lo));
        BigFloat tol = pow(BigFloat(2), -static_cast<int>(precision_bits / 2));
        out.precision_warning = out.error_estimate > tol;
    }
    return out;
}

// ln Z_N from an exact chain, evaluated at the given precision.
inline BigFloat log_partition_exact(const HankelChain& chain, unsigned precision_bits) {
    ScopedPrecision sp(precision_bits);
    const std::size_t N = chain.N;
    BigFloat s = BigFloat(static_cast<unsigned long>(N) * N) *
                 log(to_bigfloat(chain.x.weight_a() * chain.x.weight_b()));
    BigFloat lfact(0);
    for (std::size_t k = 0; k < N; ++k) {
        if (k > 0) lfact += log(BigFloat(static_cast<unsigned long>(k)));
        s += log(to_bigfloat(chain.h[k])) - 2 * lfact;
    }
    return s;
}

}  // namespace sixv
