#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "sixv/equilibrium.hpp"
#include "sixv/partition.hpp"

namespace sixv {

// Euler-Mascheroni constant, 50 digits.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104215933593992;

inline void require_open_unit(double x) {
    if (!(x > -1 && x < 1)) throw std::domain_error("asymptotics: |x| < 1 required");
}

// F(x) = pi (1-x^2) / (2 cos(pi x/2)); even, positive, limit 2 at x -> +-1.
inline double free_energy_F(double x) {
    require_open_unit(x);
    return M_PI * (1 - x * x) / (2 * std::cos(M_PI * x / 2));
}

// c0(x) = 1 - 2 gamma - 4 ln 2 - 2 ln cos(pi x/2), the 1/ln N coefficient in
// the oscillatory correction.
inline double epsilon_c0(double x) {
    return 1 - 2 * kEulerGamma - 4 * std::log(2.0) - 2 * std::log(std::cos(M_PI * x / 2));
}

// A(N) = (1/(N ln^2 N)) [1 - 2 lnln N/ln N + (3 - 2g - 2 ln(2/pi)
//        - pi(h1(0) + h2'(0)))/ln N + ...], truncated as displayed.
inline double A_correction(unsigned long N, double x) {
    require_open_unit(x);
    AuxConstants c = aux_constants(x);
    double lnN = std::log(static_cast<double>(N));
    double bracket = 1 - 2 * std::log(lnN) / lnN +
                     (3 - 2 * kEulerGamma - 2 * std::log(2 / M_PI) -
                      M_PI * (c.h1_0 + c.h2_prime_0)) /
                         lnN;
    return bracket / (static_cast<double>(N) * lnN * lnN);
}

struct CorrectionPrediction {
    unsigned long N = 0;
    double x = 0;
    double ln_leading = 0;       // (2N+1) ln(pi/(2 cos(pi x/2)))
    double correction = 0;       // 1/(12N)
    double epsilon = 0;          // truncated epsilon_N
    double one_plus_terms = 0;   // 1 + 1/(12N) + epsilon_N
    bool asymptotic_regime = true;  // false when N < 16 (nested log unreliable)

    // h_N/(N!)^2 prediction on the log scale
    double ln_prediction() const { return ln_leading + std::log(one_plus_terms); }
};

// Truncated epsilon_N: [(-1)^N cos(pi x(N+1/2)) / (2N ln^2 N)] *
//                      {1 - 2 lnln N/ln N + c0(x)/ln N}.
inline double epsilon_predicted(unsigned long N, double x) {
    double lnN = std::log(static_cast<double>(N));
    double sign = (N % 2 == 0) ? 1.0 : -1.0;
    double osc = sign * std::cos(M_PI * x * (static_cast<double>(N) + 0.5));
    double brace = 1 - 2 * std::log(lnN) / lnN + epsilon_c0(x) / lnN;
    return osc * brace / (2 * static_cast<double>(N) * lnN * lnN);
}

inline CorrectionPrediction hN_ratio_predicted(unsigned long N, double x) {
    require_open_unit(x);
    if (N < 3) throw std::domain_error("hN_ratio_predicted: N >= 3 required");
    CorrectionPrediction t;
    t.N = N;
    t.x = x;
    t.ln_leading =
        (2.0 * static_cast<double>(N) + 1) * std::log(M_PI / (2 * std::cos(M_PI * x / 2)));
    t.correction = 1.0 / (12.0 * static_cast<double>(N));
    t.epsilon = epsilon_predicted(N, x);
    t.one_plus_terms = 1 + t.correction + t.epsilon;
    t.asymptotic_regime = N >= 16;
    return t;
}

struct PhaseIdentity {
    double arctan_form = 0;  // 4N arg((sqrt(-a) + i sqrt(b))/sqrt(b - a))
    double closed_form = 0;  // pi N (1 + x)
    double difference = 0;
};

inline PhaseIdentity phi_N_phase(unsigned long N, double x) {
    require_open_unit(x);
    SupportEndpoints ep = endpoints(x);
    PhaseIdentity p;
    p.arctan_form =
        4 * static_cast<double>(N) * std::atan2(std::sqrt(ep.beta), std::sqrt(-ep.alpha));
    p.closed_form = M_PI * static_cast<double>(N) * (1 + x);
    p.difference = p.arctan_form - p.closed_form;
    return p;
}

// ln of the leading-order partition prediction: N^2 ln F + (1/12) ln N
//   + (1/12) ln cos(pi x/2) + ln C0.
inline double zN_asymptotic_ln(unsigned long N, double x, double C0) {
    require_open_unit(x);
    if (C0 <= 0) throw std::domain_error("zN_asymptotic_ln: C0 > 0 required");
    double NN = static_cast<double>(N);
    return NN * NN * std::log(free_energy_F(x)) + std::log(NN) / 12 +
           std::log(std::cos(M_PI * x / 2)) / 12 + std::log(C0);
}

// Measured epsilon_N = (h_N/(N!)^2) / (pi/(2cos(pi x/2)))^{2N+1} - 1 - 1/(12N)
// from the exact chain (chain must extend through index N).
inline double epsilon_measured(const HankelChain& chain, unsigned long N,
                               unsigned precision_bits) {
    if (N < 16) throw std::domain_error("epsilon_measured: N >= 16 required");
    if (chain.h.size() <= N)
        throw std::invalid_argument("epsilon_measured: chain shorter than N");
    double lnN = std::log(static_cast<double>(N));
    unsigned required = static_cast<unsigned>(
                            std::log2(2000.0 * static_cast<double>(N) * N * lnN * lnN * lnN)) +
                        8;
    if (precision_bits < required)
        throw std::domain_error("epsilon_measured: need at least " + std::to_string(required) +
                                " precision bits to resolve 1/(N ln^2 N) at N = " +
                                std::to_string(N));
    ScopedPrecision prec(precision_bits);
    BigFloat xb = to_bigfloat(chain.x.value());
    BigFloat base = bf_pi() / (2 * cos(bf_pi() * xb / 2));
    BigFloat r = log(to_bigfloat(chain.h[N])) - 2 * bf_lfactorial(N) -
                 (2 * BigFloat(static_cast<unsigned long>(N)) + 1) * log(base);
    BigFloat eps = exp(r) - 1 - BigFloat(1) / (12 * BigFloat(static_cast<unsigned long>(N)));
    return static_cast<double>(eps);
}

struct C0Fit {
    double ln_c0 = 0;       // extrapolated constant
    double c0 = 0;          // e^{ln_c0}
    double sigma_ln_c0 = 0; // least-squares uncertainty of the constant
    double slope_d = 0;     // coefficient of 1/N in the extrapolation model
    double residual_rms = 0;
    double residual_decay_ratio = 0;  // mean |resid| second half / first half
    bool asymptotic_regime_reached = true;
};

// Per-N estimates ln C0(N) = ln Z_N - N^2 ln F - (1/12) ln N
//   - (1/12) ln cos(pi x/2), extrapolated with the model c + d/N.
inline C0Fit fit_C0(double x, const std::vector<unsigned long>& Ns,
                    const std::vector<double>& ln_c0_seq) {
    require_open_unit(x);
    if (Ns.size() != ln_c0_seq.size() || Ns.size() < 10)
        throw std::invalid_argument("fit_C0: need matching sequences of length >= 10");
    const std::size_t n = Ns.size();
    double su = 0, suu = 0, sz = 0, suz = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double u = 1.0 / static_cast<double>(Ns[i]);
        su += u;
        suu += u * u;
        sz += ln_c0_seq[i];
        suz += u * ln_c0_seq[i];
    }
    double den = static_cast<double>(n) * suu - su * su;
    C0Fit fit;
    fit.slope_d = (static_cast<double>(n) * suz - su * sz) / den;
    fit.ln_c0 = (sz * suu - su * suz) / den;
    fit.c0 = std::exp(fit.ln_c0);
    double ss = 0;
    double first = 0, second = 0;
    std::size_t nh = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        double r = ln_c0_seq[i] - fit.ln_c0 - fit.slope_d / static_cast<double>(Ns[i]);
        ss += r * r;
        (i < nh ? first : second) += std::abs(r);
    }
    double s2 = ss / static_cast<double>(n - 2);
    fit.residual_rms = std::sqrt(s2);
    fit.sigma_ln_c0 = std::sqrt(s2 * suu / den);
    first /= static_cast<double>(nh);
    second /= static_cast<double>(n - nh);
    fit.residual_decay_ratio = first > 0 ? second / first : 0;
    fit.asymptotic_regime_reached = fit.residual_decay_ratio < 1.0;
    return fit;
}

// Convenience: the per-N constant estimates from an exact chain.
inline std::vector<double> ln_c0_sequence(const HankelChain& chain,
                                          const std::vector<unsigned long>& Ns,
                                          unsigned precision_bits) {
    ScopedPrecision prec(precision_bits);
    const double x = chain.x.to_double();
    BigFloat xb = to_bigfloat(chain.x.value());
    BigFloat lnF = log(bf_pi() * (1 - xb * xb) / (2 * cos(bf_pi() * xb / 2)));
    BigFloat lncos = log(cos(bf_pi() * xb / 2));
    // running ln Z_N
    std::vector<double> out;
    BigFloat s(0), lfact(0);
    std::size_t idx = 0;
    BigFloat ln1mx2 = log(1 - xb * xb);
    for (std::size_t N = 1; N <= chain.N && idx < Ns.size(); ++N) {
        if (N > 1) lfact += log(BigFloat(static_cast<unsigned long>(N - 1)));
        s += log(to_bigfloat(chain.h[N - 1])) - 2 * lfact;
        if (N == Ns[idx]) {
            BigFloat NN(static_cast<unsigned long>(N));
            BigFloat lnZ = NN * NN * ln1mx2 + s;
            BigFloat v = lnZ - NN * NN * lnF - log(NN) / 12 - lncos / 12;
            out.push_back(static_cast<double>(v));
            ++idx;
        }
    }
    if (idx != Ns.size())
        throw std::invalid_argument("ln_c0_sequence: chain shorter than max(Ns)");
    (void)x;
    return out;
}

struct ComparisonRow {
    unsigned long N = 0;
    double x = 0;
    std::string exact;      // h_N/(N!)^2, decimal string (magnitude may be huge)
    std::string predicted;  // asymptotic prediction of the same quantity
    double ratio = 0;       // predicted / exact
    double measured_eps = 0;
    double predicted_eps = 0;
};

inline std::string bigfloat_to_string(const BigFloat& v, int digits = 17) {
    return v.str(digits, std::ios_base::scientific);
}

// One row per N: asymptotic prediction against the exact chain.
inline std::vector<ComparisonRow> comparison_table(const HankelChain& chain,
                                                   const std::vector<unsigned long>& Ns,
                                                   unsigned precision_bits) {
    ScopedPrecision prec(precision_bits);
    std::vector<ComparisonRow> rows;
    const double x = chain.x.to_double();
    BigFloat xb = to_bigfloat(chain.x.value());
    BigFloat lnbase = log(bf_pi() / (2 * cos(bf_pi() * xb / 2)));
    for (unsigned long N : Ns) {
        if (chain.h.size() <= N)
            throw std::invalid_argument("comparison_table: chain shorter than max N");
        ComparisonRow row;
        row.N = N;
        row.x = x;
        BigFloat ln_exact = log(to_bigfloat(chain.h[N])) - 2 * bf_lfactorial(N);
        CorrectionPrediction t = hN_ratio_predicted(N, x);
        BigFloat ln_pred = (2 * BigFloat(N) + 1) * lnbase + log(BigFloat(t.one_plus_terms));
        row.exact = bigfloat_to_string(exp(ln_exact));
        row.predicted = bigfloat_to_string(exp(ln_pred));
        row.ratio = static_cast<double>(exp(BigFloat(ln_pred - ln_exact)));
        row.measured_eps = epsilon_measured(chain, N, precision_bits);
        row.predicted_eps = t.epsilon;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sixv
