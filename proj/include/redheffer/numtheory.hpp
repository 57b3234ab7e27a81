#pragma once

// Classical number-theoretic routines: Moebius sieve with Mertens prefix
// sums, ordered-factorization counts, the signed factorization identity,
// and the growth-exponent estimate for the permanent sequence.

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "redheffer/errors.hpp"
#include "redheffer/matrix.hpp"

namespace redheffer {

inline constexpr std::int64_t kSieveCap = 100'000'000;       // memory-bound
inline constexpr std::int64_t kFactorTableCap = 10'000'000;  // O(n log n) DP

/// Moebius values mu(1..n) by linear sieve, with Mertens prefix sums
/// M(k) = sum_{j<=k} mu(j).
class MoebiusSieve {
public:
    explicit MoebiusSieve(std::int64_t n) : n_(n) {
        if (n < 1) throw Error("moebius_sieve: n must be >= 1");
        if (n > kSieveCap)
            throw CapExceededError("moebius_sieve: n " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(kSieveCap));
        mu_.assign(static_cast<std::size_t>(n) + 1, 0);
        mertens_.assign(static_cast<std::size_t>(n) + 1, 0);
        std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
        std::vector<std::int32_t> primes;
        mu_[1] = 1;
        for (std::int64_t i = 2; i <= n; ++i) {
            if (!composite[static_cast<std::size_t>(i)]) {
                primes.push_back(static_cast<std::int32_t>(i));
                mu_[static_cast<std::size_t>(i)] = -1;
            }
            for (std::int32_t p : primes) {
                if (i * p > n) break;
                composite[static_cast<std::size_t>(i * p)] = true;
                if (i % p == 0) {
                    mu_[static_cast<std::size_t>(i * p)] = 0;
                    break;
                }
                mu_[static_cast<std::size_t>(i * p)] =
                    static_cast<std::int8_t>(-mu_[static_cast<std::size_t>(i)]);
            }
        }
        for (std::int64_t k = 1; k <= n; ++k)
            mertens_[static_cast<std::size_t>(k)] =
                mertens_[static_cast<std::size_t>(k) - 1] + mu_[static_cast<std::size_t>(k)];
    }

    std::int64_t limit() const { return n_; }

    /// mu(k), in {-1, 0, 1}.
    int moebius(std::int64_t k) const {
        check_range(k);
        return mu_[static_cast<std::size_t>(k)];
    }

    /// M(k) = sum_{j<=k} mu(j).
    std::int64_t mertens(std::int64_t k) const {
        check_range(k);
        return mertens_[static_cast<std::size_t>(k)];
    }

private:
    void check_range(std::int64_t k) const {
        if (k < 1 || k > n_)
            throw Error("moebius_sieve: index " + std::to_string(k) + " out of range");
    }

    std::int64_t n_;
    std::vector<std::int8_t> mu_;
    std::vector<std::int32_t> mertens_; // |M(k)| <= k <= cap < 2^31
};

/// Mertens function M(n). Builds a sieve per call; use MoebiusSieve for bulk.
inline std::int64_t mertens(std::int64_t n) { return MoebiusSieve(n).mertens(n); }

/// Counts of ordered factorizations into factors >= 2.
///
/// Convention: F[1] = 1 represents the empty factorization, so the permanent
/// of the classical Redheffer matrix is plainly sum_{k<=n} F[k]. (The same
/// quantity is often written 1 + sum f(k) with f(1) = 0.)
class FactorCountTable {
public:
    explicit FactorCountTable(std::int64_t n) : n_(n) {
        if (n < 1) throw Error("ordered_factorization_counts: n must be >= 1");
        if (n > kFactorTableCap)
            throw CapExceededError("ordered_factorization_counts: n " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(kFactorTableCap));
        counts_.assign(static_cast<std::size_t>(n) + 1, 0);
        counts_[1] = 1;
        // Forward divisor sieve: once F[k] is final, push it into every
        // proper multiple. Totals stay far below 2^63 for n <= cap; the
        // overflow guard makes that assumption checked rather than silent.
        for (std::int64_t k = 1; k <= n; ++k) {
            const std::uint64_t fk = counts_[static_cast<std::size_t>(k)];
            if (fk == 0) continue;
            for (std::int64_t m = 2 * k; m <= n; m += k) {
                auto& slot = counts_[static_cast<std::size_t>(m)];
                if (__builtin_add_overflow(slot, fk, &slot))
                    throw Error("ordered_factorization_counts: 64-bit overflow");
            }
        }
    }

    std::int64_t limit() const { return n_; }

    /// F[k]: number of ordered factorizations of k (F[1] = 1, empty one).
    BigInt count(std::int64_t k) const { return BigInt(count_u64(k)); }

    std::uint64_t count_u64(std::int64_t k) const {
        if (k < 1 || k > n_)
            throw Error("ordered_factorization_counts: index " + std::to_string(k) +
                        " out of range");
        return counts_[static_cast<std::size_t>(k)];
    }

private:
    std::int64_t n_;
    std::vector<std::uint64_t> counts_;
};

inline FactorCountTable ordered_factorization_counts(std::int64_t n) {
    return FactorCountTable(n);
}

/// Permanent of the classical n x n Redheffer matrix by counting:
/// sum_{k<=n} F[k] (equivalently 1 + sum of ordered-factorization counts
/// of 2..n). No matrix is formed.
inline BigInt permanent_formula(const FactorCountTable& table, std::int64_t n) {
    if (n < 1 || n > table.limit())
        throw Error("permanent_formula: n " + std::to_string(n) + " out of table range");
    BigInt total(0);
    for (std::int64_t k = 1; k <= n; ++k) total += table.count_u64(k);
    return total;
}

inline BigInt permanent_formula(std::int64_t n) {
    return permanent_formula(FactorCountTable(n), n);
}

/// G[r] = sum over ordered factorizations phi of r of (-1)^{k(phi)},
/// G[1] = 1 (empty factorization, zero factors). Computed by the signed
/// divisor DP, independent of any Moebius sieve.
inline std::vector<std::int64_t> signed_factorization_table(std::int64_t n) {
    if (n < 1) throw Error("signed_factorization_table: n must be >= 1");
    if (n > kFactorTableCap)
        throw CapExceededError("signed_factorization_table: n " + std::to_string(n) +
                               " exceeds cap " + std::to_string(kFactorTableCap));
    std::vector<std::int64_t> g(static_cast<std::size_t>(n) + 1, 0);
    g[1] = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        const std::int64_t gk = g[static_cast<std::size_t>(k)];
        if (gk == 0) continue;
        for (std::int64_t m = 2 * k; m <= n; m += k) g[static_cast<std::size_t>(m)] -= gk;
    }
    return g;
}

/// sum_phi (-1)^{k(phi)} over ordered factorizations of r; equals mu(r).
inline std::int64_t signed_factorization_sum(std::int64_t r) {
    if (r < 1) throw Error("signed_factorization_sum: r must be >= 1");
    return signed_factorization_table(r)[static_cast<std::size_t>(r)];
}

/// Least-squares slope of y against x. Used by the growth estimator and
/// directly testable on degenerate inputs.
inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw Error("least_squares_slope: need two samples");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0) throw Error("least_squares_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

/// Log-log slope of the permanent sequence sampled at ~`samples`
/// geometrically spaced points in [n_lo, n_hi]. The sequence grows like
/// C * n^a with a = 1.7286... (the Kalmar exponent); at desk scale the
/// fitted slope lands near but not exactly on that value.
inline double growth_exponent_estimate(std::int64_t n_lo, std::int64_t n_hi, int samples = 50) {
    if (n_lo < 1 || n_lo >= n_hi)
        throw Error("growth_exponent_estimate: need 1 <= n_lo < n_hi");
    if (samples < 2) throw Error("growth_exponent_estimate: need at least 2 samples");
    FactorCountTable table(n_hi);
    std::vector<std::int64_t> points;
    points.reserve(static_cast<std::size_t>(samples));
    const double ratio = static_cast<double>(n_hi) / static_cast<double>(n_lo);
    for (int i = 0; i < samples; ++i) {
        const double t = static_cast<double>(i) / (samples - 1);
        auto p = static_cast<std::int64_t>(std::llround(n_lo * std::pow(ratio, t)));
        if (p < n_lo) p = n_lo;
        if (p > n_hi) p = n_hi;
        if (points.empty() || points.back() != p) points.push_back(p);
    }
    std::vector<double> logx, logy;
    logx.reserve(points.size());
    logy.reserve(points.size());
    std::size_t next = 0;
    std::uint64_t running = 0;
    for (std::int64_t k = 1; k <= n_hi && next < points.size(); ++k) {
        running += table.count_u64(k);
        if (k == points[next]) {
            logx.push_back(std::log(static_cast<double>(k)));
            logy.push_back(std::log(static_cast<double>(running)));
            ++next;
        }
    }
    return least_squares_slope(logx, logy);
}

} // namespace redheffer
