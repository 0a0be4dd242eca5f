#pragma once

// Hilbert symbols, Hasse invariants and isotropy over the completions of Q.

#include <set>
#include <vector>

#include "fsq/arith.hpp"

namespace fsq {

struct Place {
    bool infinite = false;
    i64 p = 0;  // verified prime when finite

    static Place at_infinity() { return Place{true, 0}; }
    static Place finite(i64 prime) {
        if (!is_prime(prime)) throw std::invalid_argument("Place: not a prime");
        return Place{false, prime};
    }
    bool operator==(const Place& o) const { return infinite == o.infinite && p == o.p; }
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return !infinite;  // finite places first
        return p < o.p;
    }
};

// Nonzero rational in lowest terms, positive denominator.
struct Rational {
    i64 num;
    i64 den;

    Rational(i64 n, i64 d = 1) {
        if (n == 0 || d == 0) throw std::invalid_argument("Rational: zero not allowed");
        if (d < 0) { n = -n; d = -d; }
        i64 g = gcd(n, d);
        num = n / g;
        den = d / g;
    }
};

namespace detail {

inline int eps2(i64 u) {  // (u-1)/2 mod 2 for odd u
    i64 r = ((u % 4) + 4) % 4;
    return r == 3 ? 1 : 0;
}

inline int omega2(i64 u) {  // (u^2-1)/8 mod 2 for odd u
    i64 r = ((u % 8) + 8) % 8;
    return (r == 3 || r == 5) ? 1 : 0;
}

inline int hilbert_int(i64 x, i64 y, const Place& v) {
    if (v.infinite)
        return (x < 0 && y < 0) ? -1 : 1;
    i64 p = v.p;
    i64 alpha = ord(p, x), beta = ord(p, y);
    i64 u = x, w = y;
    for (i64 i = 0; i < alpha; ++i) u /= p;
    for (i64 i = 0; i < beta; ++i) w /= p;
    if (p == 2) {
        int e = eps2(u) * eps2(w) + int(alpha % 2) * omega2(w) + int(beta % 2) * omega2(u);
        return e % 2 ? -1 : 1;
    }
    int s = 1;
    if (beta % 2) {
        i64 r = u % p; if (r < 0) r += p;
        s *= legendre(r, p);
    }
    if (alpha % 2) {
        i64 r = w % p; if (r < 0) r += p;
        s *= legendre(r, p);
    }
    if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2)
        s = -s;
    return s;
}

}  // namespace detail

inline int hilbert_symbol(const Rational& x, const Rational& y, const Place& v) {
    // num*den lies in the same square class as num/den
    return detail::hilbert_int(checked_mul(x.num, x.den), checked_mul(y.num, y.den), v);
}

struct DiagonalSpace {
    Rational a1, a2, a3;
};

inline int hasse_invariant(const DiagonalSpace& u, const Place& v) {
    const Rational* e[3] = {&u.a1, &u.a2, &u.a3};
    int s = 1;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            s *= hilbert_symbol(*e[i], *e[j], v);
    return s;
}

inline bool is_isotropic(const DiagonalSpace& u, const Place& v) {
    return hasse_invariant(u, v) == hilbert_symbol(Rational(-1), Rational(-1), v);
}

// Finite places where the space is anisotropic, plus infinity when definite.
// Isotropy is automatic at odd primes not dividing 2*d(U).
inline std::set<Place> anisotropic_places(const DiagonalSpace& u) {
    if (u.a1.den != 1 || u.a2.den != 1 || u.a3.den != 1)
        throw std::invalid_argument("anisotropic_places: integer entries required");
    std::set<Place> out;
    if (!is_isotropic(u, Place::at_infinity())) out.insert(Place::at_infinity());
    if (!is_isotropic(u, Place::finite(2))) out.insert(Place::finite(2));
    i64 d = checked_mul(checked_mul(u.a1.num, u.a2.num), u.a3.num);
    if (d < 0) d = -d;
    if (d > 1)
        for (auto [p, e] : factorize(d).factors)
            if (p != 2 && !is_isotropic(u, Place::finite(p)))
                out.insert(Place::finite(p));
    return out;
}

}  // namespace fsq
