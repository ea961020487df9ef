#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sixv/moments.hpp"
#include "sixv/rational.hpp"

namespace sixv {

// tau_k = det(m_{i+j-2})_{i,j=1..k} and h_k = tau_{k+1}/tau_k, the squared
// norms of the monic orthogonal polynomials for e^{-|lambda|+x lambda}.
// Invariant: tau_{k+1} = tau_k * h_k with tau_1 = h_0 = m_0, all positive.
struct HankelChain {
    RationalParameter x;
    std::size_t N = 0;
    std::vector<Rational> tau;  // tau[k] = tau_{k+1}, k = 0..N-1
    std::vector<Rational> h;    // h[k]   = h_k,       k = 0..N-1

    const Rational& tau_of(std::size_t k) const {
        // tau_0 = 1 convention (empty product)
        static const Rational one(1);
        if (k == 0) return one;
        return tau.at(k - 1);
    }
};

// Computes h_0..h_{N-1} in O(N^2) exact operations by orthogonalizing the
// monomial basis against the moment functional (triangular decomposition of
// the Hankel matrix).  sig[l] holds <p_k, s^l>; the recurrence advances one
// polynomial degree per sweep and h_k = <p_k, s^k> appears as the pivot.
inline HankelChain hankel_chain(std::size_t N, const RationalParameter& x) {
    if (N < 1) throw std::invalid_argument("hankel_chain: N >= 1 required");
    MomentSequence ms = moment_sequence(2 * N - 1, x);

    HankelChain chain{x, N, {}, {}};
    chain.tau.reserve(N);
    chain.h.reserve(N);

    std::vector<Rational> sig_prev2;               // <p_{k-2}, s^l>
    std::vector<Rational> sig_prev = ms.m;         // <p_{k-1}, s^l>, starts at k-1 = 0
    std::size_t off_prev2 = 0, off_prev = 0;       // l-offset of first entry

    if (sig_prev[0] <= 0) throw std::logic_error("hankel_chain: nonpositive pivot h_0");
    chain.h.push_back(sig_prev[0]);
    chain.tau.push_back(sig_prev[0]);

    Rational a_prev = sig_prev[1] / sig_prev[0];
    Rational b_prev = 0;

    for (std::size_t k = 1; k < N; ++k) {
        const std::size_t lo = k, hi = 2 * N - 1 - k;
        std::vector<Rational> row;
        row.reserve(hi - lo + 1);
        for (std::size_t l = lo; l <= hi; ++l) {
            Rational v = sig_prev[l + 1 - off_prev] - a_prev * sig_prev[l - off_prev];
            if (k >= 2) v -= b_prev * sig_prev2[l - off_prev2];
            row.push_back(std::move(v));
        }
        if (row[0] <= 0)
            throw std::logic_error("hankel_chain: nonpositive pivot at k=" + std::to_string(k));
        chain.h.push_back(row[0]);
        chain.tau.push_back(chain.tau.back() * row[0]);

        if (k + 1 < N) {
            Rational a_k = row[1] / row[0] - sig_prev[k - off_prev] / sig_prev[k - 1 - off_prev];
            Rational b_k = row[0] / sig_prev[k - 1 - off_prev];
            sig_prev2 = std::move(sig_prev);
            off_prev2 = off_prev;
            sig_prev = std::move(row);
            off_prev = lo;
            a_prev = std::move(a_k);
            b_prev = std::move(b_k);
        }
    }
    return chain;
}

// Fraction-free determinant of an integer matrix (Bareiss), destroys a.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Integer(-a[n - 1][n - 1]);
}

// det(m_{r_i + j})_{i,j} for arbitrary row indices r_0 < r_1 < ... (entries are
// the (r_i + j)-th derivatives of phi).  Scaling row i by mu^{r_i+1} and column
// j by mu^j with mu = (q^2-p^2)/q turns every entry into the integer
//   (r_i+j)! * [ (q+p)^{r_i+j+1} + (-1)^{r_i+j} (q-p)^{r_i+j+1} ],
// so the determinant reduces to an integer Bareiss elimination divided by
// mu^(sum r_i + N + N(N-1)/2).
inline Rational hankel_minor(const std::vector<unsigned long>& rows, const RationalParameter& x) {
    const std::size_t n = rows.size();
    if (n == 0) return 1;
    const Integer p = x.value().get_num();
    const Integer q = x.value().get_den();
    const Integer qp = q + p, qm = q - p;

    unsigned long kmax = rows.back() + n - 1;
    std::vector<Integer> A(kmax + 1);  // scaled integer moments
    Integer pow_qp = qp, pow_qm = qm, fact = 1;
    for (unsigned long k = 0; k <= kmax; ++k) {
        if (k > 0) {
            fact *= k;
            pow_qp *= qp;
            pow_qm *= qm;
        }
        A[k] = fact * ((k % 2 == 0) ? Integer(pow_qp + pow_qm) : Integer(pow_qp - pow_qm));
    }

    std::vector<std::vector<Integer>> mat(n, std::vector<Integer>(n));
    unsigned long esum = n + n * (n - 1) / 2;
    for (std::size_t i = 0; i < n; ++i) {
        esum += rows[i];
        for (std::size_t j = 0; j < n; ++j) mat[i][j] = A[rows[i] + j];
    }
    Integer det = bareiss_determinant(mat);

    // divide by mu^esum, mu = (q^2 - p^2)/q = qp*qm/q
    Rational mu(qp * qm, q);
    mu.canonicalize();
    return Rational(det) / pow_rational(mu, esum);
}

// tau_N as an independent determinant evaluation (cross-checks the chain).
inline Rational hankel_tau(std::size_t N, const RationalParameter& x) {
    if (N < 1) throw std::invalid_argument("hankel_tau: N >= 1 required");
    std::vector<unsigned long> rows(N);
    for (std::size_t i = 0; i < N; ++i) rows[i] = i;
    return hankel_minor(rows, x);
}

struct TauDerivatives {
    Rational tau;   // tau_N
    Rational tau1;  // d tau_N / dx
    Rational tau2;  // d^2 tau_N / dx^2
};

// x-derivatives of tau_N via the row-bump expansion.  d/dx m_k = m_{k+1}, so
// differentiating row r replaces indices (r, ...) by (r+1, ...); any bump of a
// non-final row duplicates the following row and the term vanishes.  What
// survives:
//   tau_N'  = D(0..N-2, N)
//   tau_N'' = D(0..N-3, N-1, N) + D(0..N-2, N+1)
// where D(...) denotes the generalized Hankel determinant with those row
// indices (the first tau'' term collects the twice-bumped row N-2 and the
// doubly single-bumped pair, signs included).
inline TauDerivatives tau_derivatives(std::size_t N, const RationalParameter& x) {
    if (N < 1) throw std::invalid_argument("tau_derivatives: N >= 1 required");
    if (N == 1)
        return {moment(0, x), moment(1, x), moment(2, x)};

    std::vector<unsigned long> rows(N);
    for (std::size_t i = 0; i < N; ++i) rows[i] = i;
    TauDerivatives d;
    d.tau = hankel_minor(rows, x);

    rows[N - 1] = N;  // (0..N-2, N)
    d.tau1 = hankel_minor(rows, x);

    rows[N - 1] = N + 1;  // (0..N-2, N+1)
    d.tau2 = hankel_minor(rows, x);
    if (N >= 2) {
        rows[N - 1] = N;
        rows[N - 2] = N - 1;  // (0..N-3, N-1, N)
        d.tau2 += hankel_minor(rows, x);
    }
    return d;
}

struct TodaResult {
    Rational residual;  // tau_N tau_N'' - (tau_N')^2 - tau_{N+1} tau_{N-1}
    bool ok = false;    // residual == 0
};

// Exact verification of tau_N tau_N'' - (tau_N')^2 = tau_{N+1} tau_{N-1},
// with tau_0 = 1.
inline TodaResult toda_check(std::size_t N, const RationalParameter& x) {
    TauDerivatives d = tau_derivatives(N, x);
    Rational tau_next = hankel_tau(N + 1, x);
    Rational tau_prev = (N == 1) ? Rational(1) : hankel_tau(N - 1, x);
    TodaResult r;
    r.residual = d.tau * d.tau2 - d.tau1 * d.tau1 - tau_next * tau_prev;
    r.ok = (r.residual == 0);
    return r;
}

}  // namespace sixv
