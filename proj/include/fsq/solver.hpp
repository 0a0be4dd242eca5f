#pragma once

// Constructive pipeline for n = x^2+y^2+z^2+w^2 with a*x + b*y a perfect
// square: 16-power split, candidate square selection, ternary representation
// and extended-gcd reconstruction, with a brute-force oracle fallback.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsq/lattice.hpp"
#include "fsq/oracle.hpp"

namespace fsq {

struct invalid_pair : std::invalid_argument {
    std::string code;  // "not-coprime" or "shape-violation"
    invalid_pair(std::string c, const std::string& what)
        : std::invalid_argument(what), code(std::move(c)) {}
};

struct invalid_witness : std::invalid_argument {
    explicit invalid_witness(const std::string& what) : std::invalid_argument(what) {}
};

enum class PairShape { case1_odd_c, case2_even_c, c_equals_2 };

struct CoefficientPair {
    i64 a, b;      // normalized so that a <= b
    bool swapped;  // true if the input order was (b, a)
    i64 c;         // a^2 + b^2
    PairShape shape;
    i64 p;       // odd prime dividing c; 0 when c = 2
    i64 r_or_k;  // ord_p(c)

    i64 a_input() const { return swapped ? b : a; }
    i64 b_input() const { return swapped ? a : b; }
};

inline CoefficientPair validate_pair(i64 a_in, i64 b_in) {
    if (a_in < 1 || b_in < 1)
        throw invalid_pair("invalid-input", "validate_pair: coefficients must be positive");
    if (gcd(a_in, b_in) != 1)
        throw invalid_pair("not-coprime", "validate_pair: gcd(a,b) = " +
                                              std::to_string(gcd(a_in, b_in)) + " != 1");
    bool swapped = a_in > b_in;
    i64 a = swapped ? b_in : a_in;
    i64 b = swapped ? a_in : b_in;
    i64 c = checked_mul(a, a) + checked_mul(b, b);
    if (!unit_group_cyclic(c)) {
        std::string ev = "c = " + std::to_string(c) + " =";
        for (auto [p, e] : factorize(c).factors)
            ev += " " + std::to_string(p) + "^" + std::to_string(e);
        throw invalid_pair("shape-violation",
                           "validate_pair: (Z/cZ)^x is not cyclic; " + ev);
    }
    LatticeShape sh = classify_c(c);
    PairShape shape = c == 2                ? PairShape::c_equals_2
                      : sh.even_case        ? PairShape::case2_even_c
                                            : PairShape::case1_odd_c;
    return CoefficientPair{a, b, swapped, c, shape, sh.p, sh.r};
}

// n = 16^delta * n1 with 16 not dividing n1.
inline std::pair<i64, i64> split_16(i64 n) {
    if (n < 1) throw std::invalid_argument("split_16: n must be positive");
    i64 delta = 0;
    while (n % 16 == 0) { n /= 16; ++delta; }
    return {delta, n};
}

// Candidate values of m with b^2*n1 <= m^4 <= c*n1 passing the dyadic class
// condition, gcd(m,p) = 1 and ord_2(c*n1 - m^4) <= 5, largest first.
inline std::vector<i64> candidate_m_values(const CoefficientPair& pair, i64 n1) {
    if (n1 < 1 || n1 % 16 == 0)
        throw std::invalid_argument("candidate_m_values: need n1 >= 1 with ord_2(n1) <= 3");
    i64 lo = checked_mul(checked_mul(pair.b, pair.b), n1);
    i64 hi = checked_mul(pair.c, n1);
    auto fourth = [](i64 m) { return i128(m) * m * m * m; };
    i64 m_hi = isqrt(isqrt(hi));
    while (fourth(m_hi + 1) <= i128(hi)) ++m_hi;
    i64 m_lo = isqrt(isqrt(lo));
    while (fourth(m_lo) < i128(lo)) ++m_lo;
    std::vector<i64> out;
    for (i64 m = m_hi; m >= m_lo && m >= 1; --m) {
        i64 mu = checked_mul(m, m);
        if (!admissible_mu(pair.c, n1, mu)) continue;
        if (pair.p != 0 && m % pair.p == 0) continue;
        i64 l = hi - i64(fourth(m));
        if (l != 0 && ord(2, l) > 5) continue;
        out.push_back(m);
    }
    return out;
}

// Sufficient threshold for x,y >= 0 (linear form (a,b,0,0)): m^2 >= b*sqrt(n),
// compared as m_sq^2 >= b^2 * n in exact integers.
inline bool positivity_ok(i64 a, i64 b, i64 n, i64 m_sq) {
    if (a > b) throw std::invalid_argument("positivity_ok: requires a <= b");
    return i128(m_sq) * m_sq >= i128(b) * b * n;
}

// Recovers (x, y) with x^2+y^2 = n1 - z^2 - w^2 and a*x + b*y = m^2 from a
// ternary witness of c*n1 - m^4, trying both signs of u. The result does not
// depend on the Bezout pair: shifting (s0, t0) by (b, -a) shifts u' by m^2
// and leaves (x, y) unchanged.
inline std::optional<std::pair<i64, i64>> reconstruct_with_bezout(const CoefficientPair& pair,
                                                                  i64 n1, i64 m,
                                                                  const TernaryWitness& rep,
                                                                  i64 s0, i64 t0) {
    i64 mu = checked_mul(m, m);
    i64 target = checked_mul(pair.c, n1) - i64(i128(mu) * mu);
    if (checked_mul(rep.u, rep.u) +
            checked_mul(pair.c, rep.z * rep.z + rep.w * rep.w) != target)
        throw invalid_witness("reconstruct: witness does not solve the ternary equation");
    if (checked_mul(pair.a, s0) + checked_mul(pair.b, t0) != 1)
        throw std::invalid_argument("reconstruct: not a Bezout pair for (a,b)");
    i64 s = checked_mul(mu, s0);
    i64 t = checked_mul(mu, t0);
    i64 at_bs = checked_mul(pair.a, t) - checked_mul(pair.b, s);
    for (i64 eps : {i64(1), i64(-1)}) {
        i64 d = eps * rep.u - at_bs;
        if (d % pair.c != 0) continue;
        i64 uprime = d / pair.c;
        i64 x = s - checked_mul(pair.b, uprime);
        i64 y = t + checked_mul(pair.a, uprime);
        bool sum_ok = checked_mul(x, x) + checked_mul(y, y) +
                          rep.z * rep.z + rep.w * rep.w == n1;
        bool lin_ok = checked_mul(pair.a, x) + checked_mul(pair.b, y) == mu;
        if (sum_ok && lin_ok) return std::make_pair(x, y);
    }
    return std::nullopt;
}

inline std::optional<std::pair<i64, i64>> reconstruct(const CoefficientPair& pair, i64 n1,
                                                      i64 m, const TernaryWitness& rep) {
    bezout bz = ext_gcd(pair.a, pair.b);
    return reconstruct_with_bezout(pair, n1, m, rep, bz.s0, bz.t0);
}

struct Attempt {
    i64 m;
    std::string reason;
};

struct SolveOutcome {
    std::optional<Decomposition> result;
    std::vector<Attempt> attempts;
};

namespace detail {

inline i64 pow4(i64 delta) {
    i64 s = 1;
    for (i64 i = 0; i < delta; ++i) s = checked_mul(s, 4);
    return s;
}

inline Decomposition lift_and_orient(const CoefficientPair& pair, i64 n, i64 delta,
                                     i64 x, i64 y, i64 z, i64 w, i64 m, SolvePath path) {
    i64 s = pow4(delta);
    i64 ms = 1;
    for (i64 i = 0; i < delta; ++i) ms = checked_mul(ms, 2);
    Decomposition d;
    d.n = n;
    d.x = checked_mul(x, s);
    d.y = checked_mul(y, s);
    d.z = checked_mul(z, s);
    d.w = checked_mul(w, s);
    d.m = checked_mul(m, ms);
    d.delta = delta;
    d.path = path;
    if (pair.swapped) std::swap(d.x, d.y);  // report in the caller's (a,b) order
    return d;
}

}  // namespace detail

inline SolveOutcome solve_constructive(const CoefficientPair& pair, i64 n) {
    if (n < 1) throw std::invalid_argument("solve_constructive: n must be positive");
    SolveOutcome out;
    auto [delta, n1] = split_16(n);
    TernaryDiagonalLattice lat(1, pair.c, pair.c);
    i64 cn1 = checked_mul(pair.c, n1);
    for (i64 m : candidate_m_values(pair, n1)) {
        i64 mu = m * m;
        i64 l = cn1 - i64(i128(mu) * mu);
        if (!represents_everywhere_locally(lat, l)) {
            out.attempts.push_back({m, "not-locally-representable"});
            continue;
        }
        auto rep = ternary_represent(lat, l);
        if (!rep) {
            out.attempts.push_back({m, "no-ternary-representation"});
            continue;
        }
        auto xy = reconstruct(pair, n1, m, *rep);
        if (!xy) {
            out.attempts.push_back({m, "reconstruction-failed"});
            continue;
        }
        if (!positivity_ok(pair.a, pair.b, n1, mu)) {
            out.attempts.push_back({m, "below-positivity-threshold"});
            continue;
        }
        auto [x, y] = *xy;
        if (x < 0 || y < 0) {
            out.attempts.push_back({m, "negative-coordinate"});
            continue;
        }
        out.result = detail::lift_and_orient(pair, n, delta, x, y, rep->z, rep->w, m,
                                             SolvePath::constructive);
        return out;
    }
    return out;
}

// Hybrid strategy: constructive first, then the exhaustive oracle. The oracle
// fallback also runs on the 16-free part first so that witnesses for n and
// 16n stay related by the (4x, 4y, 4z, 4w), 2m scaling.
inline SolveOutcome solve(const CoefficientPair& pair, i64 n) {
    if (n < 0) throw std::invalid_argument("solve: n must be non-negative");
    if (n == 0) {
        SolveOutcome out;
        out.result = Decomposition{0, 0, 0, 0, 0, 0, 0, SolvePath::constructive};
        return out;
    }
    SolveOutcome out = solve_constructive(pair, n);
    if (out.result) return out;
    auto [delta, n1] = split_16(n);
    if (auto d = oracle::has_restricted_representation(pair.a, pair.b, n1)) {
        out.result = detail::lift_and_orient(pair, n, delta, d->x, d->y, d->z, d->w, d->m,
                                             SolvePath::oracle);
        return out;
    }
    if (delta > 0) {
        if (auto d = oracle::has_restricted_representation(pair.a_input(), pair.b_input(), n)) {
            out.result = *d;  // already in input order; no lifting applied
            return out;
        }
    }
    return out;
}

inline bool verify(const CoefficientPair& pair, const Decomposition& dec) {
    if (dec.x < 0 || dec.y < 0 || dec.z < 0 || dec.w < 0) return false;
    i64 sum = checked_mul(dec.x, dec.x) + checked_mul(dec.y, dec.y) +
              checked_mul(dec.z, dec.z) + checked_mul(dec.w, dec.w);
    if (sum != dec.n) return false;
    i64 lin = checked_mul(pair.a_input(), dec.x) + checked_mul(pair.b_input(), dec.y);
    return is_perfect_square(lin) && lin == checked_mul(dec.m, dec.m);
}

}  // namespace fsq
