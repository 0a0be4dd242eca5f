#pragma once

// Exhaustive ground truth: restricted four-square witnesses, conjecture
// scans and the classical corpus facts the analysis relies on.

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "fsq/decomposition.hpp"

namespace fsq {
namespace oracle {

// First witness in lexicographic (x,y,z,w) order with x^2+y^2+z^2+w^2 = n
// and a*x + b*y a perfect square.
inline std::optional<Decomposition> has_restricted_representation(i64 a, i64 b, i64 n) {
    if (n < 0) return std::nullopt;
    i64 xmax = isqrt(n);
    for (i64 x = 0; x <= xmax; ++x) {
        i64 rx = n - x * x;
        i64 ymax = isqrt(rx);
        for (i64 y = 0; y <= ymax; ++y) {
            i64 s = checked_mul(a, x) + checked_mul(b, y);
            if (!is_perfect_square(s)) continue;
            i64 rem = rx - y * y;
            i64 zmax = isqrt(rem);
            for (i64 z = 0; z <= zmax; ++z) {
                i64 w2 = rem - z * z;
                i64 w = isqrt(w2);
                if (w * w == w2)
                    return Decomposition{n, x, y, z, w, isqrt(s), 0, SolvePath::oracle};
            }
        }
    }
    return std::nullopt;
}

namespace detail {

// Square and sum-of-two-squares lookup tables for scan loops.
struct ScanTables {
    std::vector<bool> square;
    std::vector<bool> two_square;

    explicit ScanTables(i64 n_max, i64 lin_max) {
        square.assign(size_t(lin_max) + 1, false);
        for (i64 s = 0; s * s <= lin_max; ++s) square[size_t(s * s)] = true;
        two_square.assign(size_t(n_max) + 1, false);
        for (i64 z = 0; z * z <= n_max; ++z)
            for (i64 w = z; z * z + w * w <= n_max; ++w)
                two_square[size_t(z * z + w * w)] = true;
    }
};

inline bool has_witness_fast(i64 a, i64 b, i64 n, const ScanTables& t) {
    i64 xmax = isqrt(n);
    for (i64 x = 0; x <= xmax; ++x) {
        i64 rx = n - x * x;
        i64 ymax = isqrt(rx);
        for (i64 y = 0; y <= ymax; ++y)
            if (t.square[size_t(a * x + b * y)] && t.two_square[size_t(rx - y * y)])
                return true;
    }
    return false;
}

}  // namespace detail

struct ScanReport {
    i64 a = 0, b = 0;
    i64 n_max = 0;
    std::vector<i64> failures;                // every n <= n_max without a witness
    std::map<i64, Decomposition> witness_sample;
    std::chrono::milliseconds elapsed{0};
};

inline ScanReport scan_failures(i64 a, i64 b, i64 n_max, int jobs = 1) {
    if (n_max < 1) throw std::invalid_argument("scan_failures: n_max must be positive");
    auto start = std::chrono::steady_clock::now();
    i64 lin_max = checked_mul(a + b, isqrt(n_max)) + 1;
    detail::ScanTables tables(n_max, lin_max);

    std::vector<i64> failures;
    if (jobs <= 1) {
        for (i64 n = 0; n <= n_max; ++n)
            if (!detail::has_witness_fast(a, b, n, tables)) failures.push_back(n);
    } else {
        std::vector<std::vector<i64>> chunk_failures;
        chunk_failures.resize(size_t(jobs));
        std::vector<std::thread> workers;
        for (int j = 0; j < jobs; ++j) {
            workers.emplace_back([&, j] {
                for (i64 n = j; n <= n_max; n += jobs)
                    if (!detail::has_witness_fast(a, b, n, tables))
                        chunk_failures[size_t(j)].push_back(n);
            });
        }
        for (auto& w : workers) w.join();
        for (auto& cf : chunk_failures) failures.insert(failures.end(), cf.begin(), cf.end());
        std::sort(failures.begin(), failures.end());
    }

    ScanReport report;
    report.a = a;
    report.b = b;
    report.n_max = n_max;
    report.failures = std::move(failures);
    // Sample a handful of witnesses from the top of the range.
    int sampled = 0;
    for (i64 n = n_max; n >= 0 && sampled < 3; --n) {
        if (auto d = has_restricted_representation(a, b, n)) {
            report.witness_sample.emplace(n, *d);
            ++sampled;
        }
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

// All multisets {x,y,z,w} with x^2+y^2+z^2+w^2 = n, each sorted ascending.
inline std::vector<std::array<i64, 4>> four_square_partitions(i64 n) {
    std::vector<std::array<i64, 4>> out;
    if (n < 0) return out;
    for (i64 x = 0; 4 * x * x <= n; ++x)
        for (i64 y = x; x * x + 3 * y * y <= n; ++y)
            for (i64 z = y; x * x + y * y + 2 * z * z <= n; ++z) {
                i64 rem = n - x * x - y * y - z * z;
                i64 w = isqrt(rem);
                if (w >= z && w * w == rem) out.push_back({x, y, z, w});
            }
    return out;
}

struct FamilyVerdict {
    i64 r;
    i64 n;  // 4^(2r+1) * 6
    bool unique_partition;   // only partition is {4^(r+1), 2*4^r, 2*4^r, 0}
    bool no_witness;         // no restricted witness for (a,b) = (3,10)
};

inline std::vector<FamilyVerdict> counterexample_family_check(i64 r_max) {
    std::vector<FamilyVerdict> out;
    for (i64 r = 0; r <= r_max; ++r) {
        i64 pow4 = 1;
        for (i64 i = 0; i < 2 * r + 1; ++i) pow4 = checked_mul(pow4, 4);
        i64 n = checked_mul(pow4, 6);
        i64 q = 1;
        for (i64 i = 0; i < r; ++i) q = checked_mul(q, 4);
        std::array<i64, 4> expected{0, 2 * q, 2 * q, 4 * q};
        auto parts = four_square_partitions(n);
        bool unique = parts.size() == 1 && parts[0] == expected;
        bool none = !has_restricted_representation(3, 10, n).has_value();
        out.push_back({r, n, unique, none});
    }
    return out;
}

// For every a <= b <= coeff_max with gcd(a,b) square-free: least n <= n_max
// with no witness, or nullopt when the scanned range has none.
inline std::map<std::pair<i64, i64>, std::optional<i64>> suitability_scan(i64 coeff_max,
                                                                          i64 n_max) {
    std::map<std::pair<i64, i64>, std::optional<i64>> out;
    i64 lin_max = checked_mul(2 * coeff_max, isqrt(n_max)) + 1;
    detail::ScanTables tables(n_max, lin_max);
    for (i64 a = 1; a <= coeff_max; ++a)
        for (i64 b = a; b <= coeff_max; ++b) {
            i64 g = gcd(a, b);
            bool squarefree = true;
            if (g > 1)
                for (auto [p, e] : factorize(g).factors)
                    if (e > 1) squarefree = false;
            if (!squarefree) continue;
            std::optional<i64> first;
            for (i64 n = 0; n <= n_max; ++n)
                if (!detail::has_witness_fast(a, b, n, tables)) { first = n; break; }
            out.emplace(std::make_pair(a, b), first);
        }
    return out;
}

// Witness for n = x^2+y^2+z^2+w^2, m = x+y+z+w; guaranteed non-empty when
// m^2 < 4n and 3n < m^2 + 2m + 4 (both n, m odd).
inline std::optional<std::array<i64, 4>> cauchy_witness(i64 n, i64 m) {
    if (n <= 0 || m <= 0 || n % 2 == 0 || m % 2 == 0)
        throw std::invalid_argument("cauchy_witness: n and m must be positive odd integers");
    for (i64 x = 0; x * x <= n && x <= m; ++x)
        for (i64 y = 0; x * x + y * y <= n && x + y <= m; ++y) {
            i64 rem2 = n - x * x - y * y;
            for (i64 z = 0; z * z <= rem2 && x + y + z <= m; ++z) {
                i64 w = m - x - y - z;
                if (w * w == rem2 - z * z) return std::array<i64, 4>{x, y, z, w};
            }
        }
    return std::nullopt;
}

// Integers up to n_max missed by x^2 + 2y^2 + 5z^2 + 5w^2 over Z^4.
inline std::vector<i64> dickson_gap_check(i64 n_max) {
    if (n_max < 1) throw std::invalid_argument("dickson_gap_check: n_max must be positive");
    std::vector<bool> hit(size_t(n_max) + 1, false);
    for (i64 x = 0; x * x <= n_max; ++x)
        for (i64 y = 0; x * x + 2 * y * y <= n_max; ++y)
            for (i64 z = 0; x * x + 2 * y * y + 5 * z * z <= n_max; ++z)
                for (i64 w = 0;; ++w) {
                    i64 v = x * x + 2 * y * y + 5 * z * z + 5 * w * w;
                    if (v > n_max) break;
                    hit[size_t(v)] = true;
                }
    std::vector<i64> gaps;
    for (i64 n = 0; n <= n_max; ++n)
        if (!hit[size_t(n)]) gaps.push_back(n);
    return gaps;
}

}  // namespace oracle
}  // namespace fsq
