#pragma once

// Independent brute-force oracles for the test suites. Everything here is
// deliberately naive and kept apart from the library's own algorithms:
// cofactor determinants, permutation-sum permanents, trial-division Moebius,
// recursive factorization enumeration, rational Gaussian elimination, and
// exhaustive chain enumeration.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "redheffer/matrix.hpp"
#include "redheffer/poset.hpp"

namespace testutil {

using redheffer::BigInt;
using redheffer::BigRat;
using redheffer::IntMatrix;
using redheffer::Matrix;
using redheffer::RatMatrix;

using I64Matrix = Matrix<std::int64_t>;

inline IntMatrix to_bigint(const I64Matrix& m) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = static_cast<long>(m(i, j));
    return out;
}

// Determinant by cofactor expansion along the first row.
inline std::int64_t det_cofactor(const I64Matrix& m) {
    const std::size_t n = m.size();
    if (n == 1) return m(0, 0);
    std::int64_t det = 0;
    I64Matrix minor(n - 1);
    for (std::size_t col = 0; col < n; ++col) {
        if (m(0, col) == 0) continue;
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == col) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        const std::int64_t term = m(0, col) * det_cofactor(minor);
        det += (col % 2 == 0) ? term : -term;
    }
    return det;
}

// Permanent as the plain sum over all permutations.
inline std::int64_t permanent_by_permutations(const I64Matrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::int64_t total = 0;
    do {
        std::int64_t prod = 1;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Classical Moebius function by trial division.
inline int moebius_by_trial_division(std::int64_t k) {
    int prime_factors = 0;
    for (std::int64_t p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        k /= p;
        if (k % p == 0) return 0;
        ++prime_factors;
    }
    if (k > 1) ++prime_factors;
    return prime_factors % 2 == 0 ? 1 : -1;
}

// All ordered factorizations of k into factors >= 2, enumerated recursively.
inline void ordered_factorizations(std::int64_t k, std::vector<std::int64_t>& current,
                                   std::vector<std::vector<std::int64_t>>& out) {
    if (k == 1) {
        out.push_back(current);
        return;
    }
    for (std::int64_t d = 2; d <= k; ++d) {
        if (k % d != 0) continue;
        current.push_back(d);
        ordered_factorizations(k / d, current, out);
        current.pop_back();
    }
}

inline std::vector<std::vector<std::int64_t>> ordered_factorizations(std::int64_t k) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> current;
    ordered_factorizations(k, current, out);
    return out;
}

// Exact inverse by rational Gauss-Jordan elimination with partial pivoting.
// Throws redheffer::SingularError on singular input.
inline RatMatrix invert_by_elimination(const IntMatrix& m) {
    const std::size_t n = m.size();
    RatMatrix a = redheffer::to_rational(m);
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col) == 0) ++pivot;
        if (pivot == n) throw redheffer::SingularError("oracle: singular matrix");
        if (pivot != col) {
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
        }
        const BigRat p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            const BigRat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// All chains of S - {0}, the empty chain included, as sorted position
// sequences (ascending label order inside each chain).
inline std::vector<std::vector<std::size_t>> all_chains_avoiding_zero(const redheffer::Poset& p) {
    const std::size_t n = p.size();
    std::vector<std::vector<std::size_t>> chains;
    chains.push_back({});
    std::vector<std::size_t> current;
    auto extend = [&](auto&& self, std::size_t last_pos) -> void {
        for (std::size_t next = last_pos + 1; next < n; ++next) {
            if (!p.less(p.element_at(last_pos), p.element_at(next))) continue;
            current.push_back(next);
            chains.push_back(current);
            self(self, next);
            current.pop_back();
        }
    };
    for (std::size_t start = 1; start < n; ++start) {
        current.assign(1, start);
        chains.push_back(current);
        extend(extend, start);
        current.clear();
    }
    return chains;
}

inline I64Matrix random_matrix(std::mt19937_64& rng, std::size_t n, std::int64_t lo, std::int64_t hi) {
    I64Matrix m(n);
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = lo + static_cast<std::int64_t>(rng() % span);
    return m;
}

} // namespace testutil
