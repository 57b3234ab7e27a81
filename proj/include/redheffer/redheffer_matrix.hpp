#pragma once

// Redheffer matrices: the classical divisor-order matrix R_n, the poset
// generalization R(S) (zeta matrix with the 0 column set to ones), the
// Moebius-sum determinant, and the closed-form rank-1 inverse.

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "redheffer/errors.hpp"
#include "redheffer/matrix.hpp"
#include "redheffer/poset.hpp"

namespace redheffer {

/// A Redheffer matrix together with the poset it came from. Column 0 (the
/// 0 element's position) is all ones; every other column y holds the order
/// indicators [x <= y].
struct RedhefferMatrix {
    IntMatrix matrix;
    std::shared_ptr<const Poset> poset;
};

/// Redheffer matrix of a poset: its zeta matrix with the 0 element's column
/// overwritten by ones.
inline RedhefferMatrix redheffer_general(std::shared_ptr<const Poset> poset) {
    IntMatrix m = zeta_matrix(*poset);
    for (std::size_t i = 0; i < m.size(); ++i) m(i, 0) = 1;
    return RedhefferMatrix{std::move(m), std::move(poset)};
}

inline RedhefferMatrix redheffer_general(const Poset& poset) {
    return redheffer_general(std::make_shared<const Poset>(poset));
}

/// Classical n x n Redheffer matrix: entry (i, j) = 1 iff i divides j or
/// j = 1 (1-based). Numerically identical to redheffer_general(divisor
/// poset); built directly from the divisibility rule.
inline RedhefferMatrix redheffer_classic(std::int64_t n) {
    auto poset = std::make_shared<const Poset>(divisor_poset(n));
    IntMatrix m(static_cast<std::size_t>(n));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i) {
        m(i - 1, 0) = 1;
        for (std::size_t j = i; j <= static_cast<std::size_t>(n); j += i) m(i - 1, j - 1) = 1;
    }
    return RedhefferMatrix{std::move(m), std::move(poset)};
}

/// det R(S) = sum_{x in S} mu(0, x), computed from the Moebius recursion
/// alone; the matrix is never formed.
inline BigInt det_via_moebius(const Poset& p) {
    auto mu = detail::moebius_row(p, p.zero());
    BigInt sum(0);
    for (const auto& v : mu) sum += v;
    return sum;
}

/// Exact inverse of B + u v^T given B^-1, by the Sherman-Morrison formula.
/// Throws SingularUpdateError when 1 + v^T B^-1 u = 0.
inline RatMatrix sherman_morrison_inverse(const RatMatrix& b_inv, const std::vector<BigRat>& u,
                                          const std::vector<BigRat>& v) {
    const std::size_t n = b_inv.size();
    if (u.size() != n || v.size() != n)
        throw DimensionMismatchError("sherman_morrison_inverse: vector length mismatch");
    std::vector<BigRat> binv_u(n, BigRat(0));   // B^-1 u
    std::vector<BigRat> vt_binv(n, BigRat(0));  // v^T B^-1
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            binv_u[i] += b_inv(i, j) * u[j];
            vt_binv[i] += v[j] * b_inv(j, i);
        }
    BigRat denom(1);
    for (std::size_t i = 0; i < n; ++i) denom += v[i] * binv_u[i];
    if (denom == 0)
        throw SingularUpdateError("sherman_morrison_inverse: 1 + v^T B^-1 u = 0");
    RatMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const BigRat wi = binv_u[i] / denom;
        for (std::size_t j = 0; j < n; ++j) out(i, j) = b_inv(i, j) - wi * vt_binv[j];
    }
    return out;
}

/// Inverse of R(S) straight from the Moebius table:
///   (R^-1)_{x,y} = mu(x,y) - mu(0,y) * sum_{z != 0} mu(x,z) / sum_z mu(0,z).
/// Indexed by matrix position. Throws SingularError when sum_z mu(0,z) = 0
/// (always the case when the poset has a 1 element and >= 2 elements).
inline RatMatrix redheffer_inverse(const Poset& p) {
    const std::size_t n = p.size();
    const BigInt det = det_via_moebius(p); // cheap check before the full table
    if (det == 0)
        throw SingularError("redheffer matrix is singular: sum_z mu(0,z) = 0");
    const MoebiusTable mu(p);
    const std::size_t zero = p.zero();
    std::vector<BigInt> rowsum(n, BigInt(0)); // sum_{z != 0} mu(x, z)
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z)
            if (z != zero) rowsum[x] += mu.value(x, z);
    RatMatrix out(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            BigRat entry(mu.value(x, y) * det - mu.value(zero, y) * rowsum[x], det);
            entry.canonicalize();
            out(p.label(x), p.label(y)) = std::move(entry);
        }
    return out;
}

} // namespace redheffer
