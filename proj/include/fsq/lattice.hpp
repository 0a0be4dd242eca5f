#pragma once

// Local representation predicates, spinor norm groups and genus-level
// conclusions for the positive definite ternary lattices <1, c, c>.

#include <array>
#include <optional>
#include <tuple>

#include "fsq/localfield.hpp"

namespace fsq {

struct unsupported_shape : std::invalid_argument {
    explicit unsupported_shape(const std::string& what) : std::invalid_argument(what) {}
};

struct TernaryDiagonalLattice {
    i64 d1, d2, d3;

    TernaryDiagonalLattice(i64 a, i64 b, i64 c) : d1(a), d2(b), d3(c) {
        if (a <= 0 || b <= 0 || c <= 0)
            throw std::invalid_argument("TernaryDiagonalLattice: entries must be positive");
    }
    i64 discriminant() const { return checked_mul(checked_mul(d1, d2), d3); }
};

// Arithmetic shape of c = a^2+b^2 for coprime (a,b): either odd (c = p^r with
// p = 1 mod 4, or c = 1) or twice an odd prime power (c = 2p^k, k >= 0).
struct LatticeShape {
    i64 c;
    bool even_case;  // ord_2(c) == 1
    i64 p;           // odd prime dividing c; 0 when c is 1 or 2
    i64 r;           // ord_p(c)
};

inline LatticeShape classify_c(i64 c) {
    if (c < 1) throw unsupported_shape("classify_c: c must be positive");
    if (c == 1) return {1, false, 0, 0};
    if (c == 2) return {2, true, 0, 0};
    i64 e2 = ord(2, c);
    if (e2 > 1) throw unsupported_shape("classify_c: ord_2(c) must be 0 or 1");
    i64 odd = c >> e2;
    Factorization f = factorize(odd);
    if (f.factors.size() != 1)
        throw unsupported_shape("classify_c: odd part of c must be a prime power");
    auto [p, r] = f.factors[0];
    if (p % 4 != 1)
        throw unsupported_shape("classify_c: odd prime divisor of c must be 1 mod 4");
    return {c, e2 == 1, p, r};
}

inline LatticeShape lattice_shape(const TernaryDiagonalLattice& l) {
    if (l.d1 != 1 || l.d2 != l.d3)
        throw unsupported_shape("lattice must have shape <1, c, c>");
    return classify_c(l.d2);
}

// t = 4^delta * (8k+7), the dyadic exclusion set of <1,1,1>.
inline bool q2_excluded_case1(i64 t) {
    if (t <= 0) return false;
    while (t % 4 == 0) t /= 4;
    return t % 8 == 7;
}

namespace detail {

// Value set of x^2 + 2y^2 + 2z^2 mod 256.
inline const std::array<bool, 256>& case2_values_mod256() {
    static const std::array<bool, 256> table = [] {
        std::array<bool, 256> t{};
        std::array<bool, 256> sq{}, dsq{};
        for (int x = 0; x < 256; ++x) {
            sq[x * x % 256] = true;
            dsq[2 * x * x % 256] = true;
        }
        for (int a = 0; a < 256; ++a)
            if (sq[a])
                for (int b = 0; b < 256; ++b)
                    if (dsq[b])
                        for (int c = 0; c < 256; ++c)
                            if (dsq[c]) t[(a + b + c) % 256] = true;
        return t;
    }();
    return table;
}

}  // namespace detail

// Membership of t in Q(<1,2,2> over Z_2), decided at precision
// 2^(ord_2(t)+5) after scaling down by 4 while ord_2(t) >= 4 (solutions of
// t and 4t correspond by doubling, so the reduction is value-preserving).
inline bool q2_represents_case2(i64 t) {
    if (t == 0) return true;
    int e = int(ord(2, t));
    while (e >= 4) { t /= 4; e -= 2; }
    i64 mod = i64(1) << (e + 5);  // e <= 3, so mod <= 256
    i64 r = ((t % mod) + mod) % mod;
    const auto& table = detail::case2_values_mod256();
    for (int s = 0; s < 256; ++s)
        if (table[s] && s % mod == r) return true;
    return false;
}

// The congruence class the parameter mu = m^2 must lie in so that
// c*n1 - mu^2 lands in Q(L_2), keyed on (ord_2(c), n1 mod 16).
inline bool admissible_mu(i64 c, i64 n1, i64 mu) {
    LatticeShape sh = classify_c(c);
    if (n1 < 1) throw std::invalid_argument("admissible_mu: n1 must be positive");
    if (n1 % 16 == 0) throw std::invalid_argument("admissible_mu: ord_2(n1) must be at most 3");
    if (mu < 0) throw std::invalid_argument("admissible_mu: mu must be non-negative");
    if (!sh.even_case) {
        if (n1 % 4 == 1) return mu % 2 == 0;
        if (n1 % 4 == 3) return mu % 2 == 1;
        if (n1 % 4 == 2) return true;
        if (n1 % 8 == 4) return mu % 2 == 1;
        return mu % 4 == 0;  // n1 = 8 mod 16
    }
    if (n1 % 2 == 1) return mu % 2 == 1;
    if (n1 % 4 == 2) return mu % 2 == 1;
    if (n1 % 8 == 4) return mu % 4 == 0;
    // n1 = 8 mod 16: additionally mu/4 must match (c*n1-16)/32 mod 2
    if (mu % 4 != 0) return false;
    i64 target = (checked_mul(c, n1) - 16) / 32;
    return (mu / 4) % 2 == ((target % 2) + 2) % 2;
}

enum class LocalRepReason {
    unimodular_all,          // odd q not dividing c: Q(L_q) = Z_q
    odd_p_square_condition,  // odd p | c: x^2 + p^r * y structure
    dyadic_class,            // p = 2: Case I / Case II class membership
    archimedean_sign,
};

struct LocalRepReport {
    Place place;
    bool representable;
    LocalRepReason reason;
};

inline LocalRepReport local_represents(const TernaryDiagonalLattice& l, const Place& v, i64 t) {
    LatticeShape sh = lattice_shape(l);
    if (v.infinite)
        return {v, t >= 0, LocalRepReason::archimedean_sign};
    if (v.p == 2) {
        bool ok;
        if (sh.even_case) {
            ok = q2_represents_case2(t);
        } else if (t == 0) {
            ok = true;
        } else {
            i64 e = ord(2, t);
            i64 o = t >> e;
            ok = !(e % 2 == 0 && ((o % 8) + 8) % 8 == 7);
        }
        return {v, ok, LocalRepReason::dyadic_class};
    }
    if (sh.p != 0 && v.p == sh.p) {
        // Q(L_p) = {x^2 + p^r y}; -1 is a square since p = 1 mod 4
        if (t == 0) return {v, true, LocalRepReason::odd_p_square_condition};
        i64 j = ord(sh.p, t);
        if (j >= sh.r) return {v, true, LocalRepReason::odd_p_square_condition};
        if (j % 2 != 0) return {v, false, LocalRepReason::odd_p_square_condition};
        i64 u = t;
        for (i64 i = 0; i < j; ++i) u /= sh.p;
        i64 rm = u % sh.p; if (rm < 0) rm += sh.p;
        bool ok = legendre(rm, sh.p) == 1;
        return {v, ok, LocalRepReason::odd_p_square_condition};
    }
    return {v, true, LocalRepReason::unimodular_all};
}

inline bool represents_everywhere_locally(const TernaryDiagonalLattice& l, i64 t) {
    LatticeShape sh = lattice_shape(l);
    if (!local_represents(l, Place::at_infinity(), t).representable) return false;
    if (!local_represents(l, Place::finite(2), t).representable) return false;
    if (sh.p != 0 && !local_represents(l, Place::finite(sh.p), t).representable) return false;
    return true;
}

enum class SpinorNormGroup {
    UnitsTimesSquares,
    FullGroup,
    ContainsUnitsTimesSquares,
};

inline SpinorNormGroup spinor_norm_group(const TernaryDiagonalLattice& l, i64 p) {
    LatticeShape sh = lattice_shape(l);
    if (!is_prime(p)) throw std::invalid_argument("spinor_norm_group: p must be prime");
    if (p == 2)
        return SpinorNormGroup::FullGroup;  // rank-3 unimodular (Case I) or <1,2,2> (Case II)
    if (sh.p != 0 && p == sh.p)
        return SpinorNormGroup::ContainsUnitsTimesSquares;  // binary unimodular component
    return SpinorNormGroup::UnitsTimesSquares;  // ternary unimodular over Z_q
}

// Units-times-squares is contained in every spinor norm group above, so the
// genus of <1,c,c> consists of a single spinor genus for every valid shape.
inline bool genus_equals_spinor_genus(const TernaryDiagonalLattice& l) {
    LatticeShape sh = lattice_shape(l);
    auto contains_units = [](SpinorNormGroup g) {
        return g == SpinorNormGroup::UnitsTimesSquares || g == SpinorNormGroup::FullGroup ||
               g == SpinorNormGroup::ContainsUnitsTimesSquares;
    };
    if (!contains_units(spinor_norm_group(l, 2))) return false;
    if (sh.p != 0 && !contains_units(spinor_norm_group(l, sh.p))) return false;
    return true;
}

struct TernaryWitness {
    i64 u, z, w;  // u >= 0, z <= w
};

// First solution of u^2 + c z^2 + c w^2 = t in lexicographic (z, w) order.
inline std::optional<TernaryWitness> ternary_represent(const TernaryDiagonalLattice& l, i64 t) {
    if (t < 0) return std::nullopt;
    if (l.d1 != 1 || l.d2 != l.d3)
        throw unsupported_shape("ternary_represent: lattice must have shape <1, c, c>");
    i64 c = l.d2;
    for (i64 z = 0; checked_mul(c, checked_mul(z, z)) <= t; ++z) {
        for (i64 w = z;; ++w) {
            i64 q = checked_mul(c, z * z + w * w);
            if (q > t) break;
            i64 rem = t - q;
            i64 u = isqrt(rem);
            if (u * u == rem) return TernaryWitness{u, z, w};
        }
    }
    return std::nullopt;
}

}  // namespace fsq
