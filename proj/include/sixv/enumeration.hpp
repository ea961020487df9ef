#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sixv/rational.hpp"

namespace sixv {

// Arrow conventions: horizontal edge true = points right, vertical edge
// true = points up.  Row 0 is the top row.  An edge is "in" at a vertex when
// it points toward it.  The six ice-rule patterns, as (left, right, top,
// bottom) edge directions, with the usual weight classes:
//
//   type 1 (a): R R U U      type 2 (a): L L D D
//   type 3 (b): R R D D      type 4 (b): L L U U
//   type 5 (c): R L U D      type 6 (c): L R D U
//
// Only the class partition {a,a,b,b,c,c} matters for the partition function;
// the specific picture-to-number assignment is a convention (swapping a and b
// corresponds to x -> -x, which the tests exercise).
enum class VertexClass : std::uint8_t { A, B, C };

struct VertexType {
    bool left, right, top, bottom;
    VertexClass cls;
};

inline const std::array<VertexType, 6>& vertex_types() {
    static const std::array<VertexType, 6> t = {{
        {true, true, true, true, VertexClass::A},      // 1
        {false, false, false, false, VertexClass::A},  // 2
        {true, true, false, false, VertexClass::B},    // 3
        {false, false, true, true, VertexClass::B},    // 4
        {true, false, true, false, VertexClass::C},    // 5
        {false, true, false, true, VertexClass::C},    // 6
    }};
    return t;
}

inline bool satisfies_ice_rule(const VertexType& v) {
    int in = (v.left ? 1 : 0) + (v.right ? 0 : 1) + (v.top ? 0 : 1) + (v.bottom ? 1 : 0);
    return in == 2;
}

struct Configuration {
    std::size_t N = 0;
    // horizontal[i][j]: edge left of vertex (i,j) for j<N, plus the right
    // boundary edge at j=N; vertical[i][j]: edge above row i, plus the bottom
    // boundary row at i=N.
    std::vector<std::vector<bool>> horizontal;  // N x (N+1)
    std::vector<std::vector<bool>> vertical;    // (N+1) x N
    std::array<std::size_t, 6> counts{};        // n_1..n_6

    std::size_t n_class(VertexClass c) const {
        switch (c) {
            case VertexClass::A: return counts[0] + counts[1];
            case VertexClass::B: return counts[2] + counts[3];
            default: return counts[4] + counts[5];
        }
    }
};

inline constexpr std::size_t kEnumerationCap = 6;

namespace detail {

// Row-by-row backtracking over vertical edge states.  At each vertex the pair
// (left edge, top edge) admits one or two types; the right boundary forces
// the horizontal edge out, the bottom boundary forces all final vertical
// edges up.
template <class Visitor>
void enumerate_dfs(std::size_t N, Visitor&& visit) {
    std::vector<std::vector<bool>> h(N, std::vector<bool>(N + 1, false));
    std::vector<std::vector<bool>> v(N + 1, std::vector<bool>(N, false));
    std::vector<std::vector<std::uint8_t>> type(N, std::vector<std::uint8_t>(N, 0));
    // DWBC: top edges point down (false); left boundary edges point left.
    for (std::size_t j = 0; j < N; ++j) v[0][j] = false;
    for (std::size_t i = 0; i < N; ++i) h[i][0] = false;

    std::array<std::size_t, 6> counts{};
    const auto& types = vertex_types();

    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (j == N) {
            if (h[i][N] != true) return;  // right boundary: arrow points out
            if (i + 1 == N) {
                for (std::size_t c = 0; c < N; ++c)
                    if (v[N][c] != true) return;  // bottom boundary: arrows point in
                visit(h, v, type, counts);
                return;
            }
            rec(i + 1, 0);
            return;
        }
        const bool left = h[i][j];
        const bool top = v[i][j];
        for (std::uint8_t t = 0; t < 6; ++t) {
            if (types[t].left != left || types[t].top != top) continue;
            h[i][j + 1] = types[t].right;
            v[i + 1][j] = types[t].bottom;
            type[i][j] = t;
            ++counts[t];
            rec(i, j + 1);
            --counts[t];
        }
    };
    rec(0, 0);
}

}  // namespace detail

inline void check_enumeration_cap(std::size_t N) {
    if (N < 1) throw std::invalid_argument("enumeration: N >= 1 required");
    if (N > kEnumerationCap)
        throw std::runtime_error("enumeration refused: N = " + std::to_string(N) +
                                 " exceeds the combinatorial cap N <= " +
                                 std::to_string(kEnumerationCap) +
                                 " (configuration count grows like the ASM numbers)");
}

inline std::vector<Configuration> enumerate_configs(std::size_t N) {
    check_enumeration_cap(N);
    std::vector<Configuration> out;
    detail::enumerate_dfs(N, [&](const auto& h, const auto& v, const auto& type,
                                 const std::array<std::size_t, 6>& counts) {
        (void)type;
        Configuration c;
        c.N = N;
        c.horizontal = h;
        c.vertical = v;
        c.counts = counts;
        out.push_back(std::move(c));
    });
    return out;
}

inline std::size_t count_configs(std::size_t N) {
    check_enumeration_cap(N);
    std::size_t n = 0;
    detail::enumerate_dfs(N, [&](const auto&, const auto&, const auto&, const auto&) { ++n; });
    return n;
}

// Z_N = sum over DWBC configurations of a^{n_a} b^{n_b} c^{n_c}, exact.
inline Rational partition_bruteforce(std::size_t N, const Rational& a, const Rational& b,
                                     const Rational& c) {
    check_enumeration_cap(N);
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::domain_error("partition_bruteforce: weights must be positive");
    // tally (n_a, n_c) multiplicities first; n_b = N^2 - n_a - n_c
    std::map<std::pair<std::size_t, std::size_t>, unsigned long> tally;
    detail::enumerate_dfs(N, [&](const auto&, const auto&, const auto&,
                                 const std::array<std::size_t, 6>& counts) {
        std::size_t na = counts[0] + counts[1];
        std::size_t nc = counts[4] + counts[5];
        ++tally[{na, nc}];
    });
    const std::size_t NN = N * N;
    Rational z = 0;
    for (const auto& [key, mult] : tally) {
        auto [na, nc] = key;
        Rational term = pow_rational(a, na) * pow_rational(b, NN - na - nc) * pow_rational(c, nc);
        z += Rational(mult) * term;
    }
    return z;
}

struct ConservationReport {
    std::size_t N = 0;
    std::size_t config_count = 0;
    long n5_minus_n6 = 0;      // common value across configurations
    bool n5_minus_n6_constant = false;
    std::size_t nc_min = 0, nc_max = 0;          // range of c-vertex counts
    std::map<std::size_t, std::size_t> nc_histogram;  // n_c -> multiplicity
    bool nc_parity_constant = false;             // all n_c share one parity
};

// Checks the prefactor (w5/w6)^{N/2} conservation law: n_5 - n_6 must be the
// same for every DWBC configuration.
inline ConservationReport conservation_report(std::size_t N) {
    check_enumeration_cap(N);
    ConservationReport r;
    r.N = N;
    bool first = true;
    bool constant = true;
    std::size_t parity = 0;
    bool parity_const = true;
    detail::enumerate_dfs(N, [&](const auto&, const auto&, const auto&,
                                 const std::array<std::size_t, 6>& counts) {
        long d = static_cast<long>(counts[4]) - static_cast<long>(counts[5]);
        std::size_t nc = counts[4] + counts[5];
        if (first) {
            r.n5_minus_n6 = d;
            r.nc_min = r.nc_max = nc;
            parity = nc % 2;
            first = false;
        } else {
            if (d != r.n5_minus_n6) constant = false;
            r.nc_min = std::min(r.nc_min, nc);
            r.nc_max = std::max(r.nc_max, nc);
            if (nc % 2 != parity) parity_const = false;
        }
        ++r.nc_histogram[nc];
        ++r.config_count;
    });
    r.n5_minus_n6_constant = constant;
    r.nc_parity_constant = parity_const;
    return r;
}

// Independent alternating-sign-matrix counter (entries {-1,0,1}, unit row and
// column sums, alternating signs).  Used to cross-check configuration counts;
// shares nothing with the six-vertex backtracking above.
inline unsigned long asm_count(std::size_t N) {
    // column state: running partial sum, always 0 or 1
    std::vector<int> col(N, 0);
    unsigned long total = 0;
    // enumerate one row: nonzeros alternate +1,-1,...,+1 (net sum 1)
    std::size_t row_index = 0;
    std::function<void(std::size_t, int)> cell_rec = [&](std::size_t j, int next_sign) {
        if (j == N) {
            if (next_sign == -1) {  // row placed odd number of nonzeros, net +1
                if (row_index + 1 == N) {
                    bool full = true;
                    for (int c : col)
                        if (c != 1) { full = false; break; }
                    if (full) ++total;
                } else {
                    ++row_index;
                    cell_rec(0, +1);
                    --row_index;
                }
            }
            return;
        }
        // zero entry
        cell_rec(j + 1, next_sign);
        // nonzero entry of the expected sign, if the column admits it
        if (next_sign == +1 && col[j] == 0) {
            col[j] = 1;
            cell_rec(j + 1, -1);
            col[j] = 0;
        } else if (next_sign == -1 && col[j] == 1) {
            col[j] = 0;
            cell_rec(j + 1, +1);
            col[j] = 1;
        }
    };
    cell_rec(0, +1);
    return total;
}

}  // namespace sixv
