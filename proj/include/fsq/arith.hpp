#pragma once

// Exact 64-bit integer utilities: isqrt, gcd/Bezout, deterministic
// Miller-Rabin, Pollard rho factorization, Legendre symbols.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <string>
#include <vector>

namespace fsq {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// a*b with overflow check against the signed 64-bit range.
inline i64 checked_mul(i64 a, i64 b) {
    i128 r = i128(a) * i128(b);
    if (r > i128(INT64_MAX) || r < i128(INT64_MIN))
        throw capacity_error("checked_mul: product exceeds 64-bit range");
    return i64(r);
}

inline i64 isqrt(i64 n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative argument");
    if (n == 0) return 0;
    i64 r = i64(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    i64 r = isqrt(n);
    return r * r == n;
}

inline i64 ord(i64 p, i64 n) {
    if (n == 0) throw std::invalid_argument("ord: undefined for zero");
    if (p < 2) throw std::invalid_argument("ord: p must be at least 2");
    u64 m = n < 0 ? u64(-(u128)n) : u64(n);
    i64 e = 0;
    while (m % u64(p) == 0) { m /= u64(p); ++e; }
    return e;
}

struct bezout {
    i64 g;   // gcd(a,b) > 0
    i64 s0;  // a*s0 + b*t0 = g
    i64 t0;
};

inline bezout ext_gcd(i64 a, i64 b) {
    if (a == 0 && b == 0) throw std::invalid_argument("ext_gcd: both arguments zero");
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp;
        tmp = old_r - q * r; old_r = r; r = tmp;
        tmp = old_s - q * s; old_s = s; s = tmp;
        tmp = old_t - q * t; old_t = t; t = tmp;
    }
    if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
    return {old_r, old_s, old_t};
}

inline i64 gcd(i64 a, i64 b) {
    while (b != 0) { i64 t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the witness set covers all 64-bit inputs.
inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = u64(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, u64(n));
        if (x == 1 || x == u64(n - 1)) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, u64(n));
            if (x == u64(n - 1)) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    u64 c = 1;
    for (;;) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            u64 diff = x > y ? x - y : y - x;
            d = gcd(i64(diff), i64(n));
        }
        if (d != n) return d;
        ++c;  // cycle hit the factor n itself; retry with the next increment
    }
}

inline void factor_into(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(i64(n))) { out.push_back(n); return; }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

struct Factorization {
    // (prime, exponent) sorted by prime, strictly increasing.
    std::vector<std::pair<i64, i64>> factors;

    i64 value() const {
        i64 v = 1;
        for (auto [p, e] : factors)
            for (i64 i = 0; i < e; ++i) v = checked_mul(v, p);
        return v;
    }
};

inline Factorization factorize(i64 n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be at least 2");
    std::vector<u64> primes;
    u64 m = u64(n);
    // Trial division first; rho only for the large cofactor.
    for (u64 p = 2; p <= 1000000 && p * p <= m; p == 2 ? p = 3 : p += 2) {
        while (m % p == 0) { primes.push_back(p); m /= p; }
    }
    if (m > 1) detail::factor_into(m, primes);
    std::sort(primes.begin(), primes.end());
    Factorization f;
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == i64(p))
            ++f.factors.back().second;
        else
            f.factors.push_back({i64(p), 1});
    }
    return f;
}

inline int legendre(i64 a, i64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    i64 r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    u64 e = powmod(u64(r), u64((p - 1) / 2), u64(p));
    return e == 1 ? 1 : -1;
}

// (Z/lZ)^x is cyclic iff l is 2, 4, p^r or 2*p^k for an odd prime p.
inline bool unit_group_cyclic(i64 l) {
    if (l < 2) throw std::invalid_argument("unit_group_cyclic: l must be at least 2");
    if (l == 2 || l == 4) return true;
    Factorization f = factorize(l);
    if (f.factors.size() == 1)
        return f.factors[0].first != 2;
    if (f.factors.size() == 2)
        return f.factors[0].first == 2 && f.factors[0].second == 1;
    return false;
}

}  // namespace fsq
