#pragma once

// Dense square matrices over exact scalar types (arbitrary-precision
// integers and rationals), with exact determinant and permanent routines.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "redheffer/errors.hpp"

namespace redheffer {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Largest dimension accepted by det_bareiss.
inline constexpr std::size_t kDetDimensionCap = 1024;

/// Largest dimension accepted by permanent_ryser (cost is 2^n * n).
inline constexpr std::size_t kPermanentDimensionCap = 24;

/// Dense square matrix, row-major. T is an exact scalar (BigInt, BigRat,
/// or a built-in integer in test code).
template <typename T>
class Matrix {
public:
    explicit Matrix(std::size_t n, const T& fill = T(0)) : n_(n), entries_(n * n, fill) {
        if (n == 0) throw DimensionMismatchError("matrix dimension must be at least 1");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t size() const { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < n_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t i = 0; i < a.entries_.size(); ++i)
            if (!(a.entries_[i] == b.entries_[i])) return false;
        return true;
    }

private:
    std::size_t n_;
    std::vector<T> entries_;
};

using IntMatrix = Matrix<BigInt>;
using RatMatrix = Matrix<BigRat>;

/// Exact matrix product. Throws DimensionMismatchError on size mismatch.
template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.size() != b.size())
        throw DimensionMismatchError("mat_mul: dimensions " + std::to_string(a.size()) +
                                     " and " + std::to_string(b.size()) + " differ");
    const std::size_t n = a.size();
    Matrix<T> c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
bool is_identity(const Matrix<T>& m) {
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(m(i, j) == (i == j ? 1 : 0))) return false;
    return true;
}

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = BigRat(m(i, j));
    return r;
}

/// Exact determinant by fraction-free (Bareiss) elimination. Pivoting picks
/// the first row with a nonzero entry; every intermediate value is an
/// integer (a minor of the input). Singular input returns 0.
inline BigInt det_bareiss(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n > kDetDimensionCap)
        throw DimensionCapError("det_bareiss: dimension " + std::to_string(n) +
                                " exceeds cap " + std::to_string(kDetDimensionCap));
    IntMatrix a = m;
    int sign = 1;
    BigInt prev(1);
    BigInt t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return BigInt(0);
        if (pivot != k) {
            a.swap_rows(pivot, k);
            sign = -sign;
        }
        const BigInt& piv = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                t = a(i, j) * piv - a(i, k) * a(k, j);
                // Exact by the Bareiss invariant: t is divisible by prev.
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = piv;
    }
    return sign < 0 ? BigInt(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

namespace detail {

inline void add_signed_int128(BigInt& acc, __int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    BigInt t(static_cast<unsigned long>(u >> 64));
    t <<= 64;
    t += static_cast<unsigned long>(u);
    if (neg)
        acc -= t;
    else
        acc += t;
}

// Ryser over machine integers; valid when the product bound fits __int128.
inline BigInt permanent_ryser_small(const std::vector<std::int64_t>& a, std::size_t n) {
    std::vector<std::int64_t> rowsum(n, 0);
    BigInt acc(0);
    int parity = 1; // (-1)^{|S|} for the current subset
    const std::uint64_t subsets = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const unsigned bit = static_cast<unsigned>(__builtin_ctzll(k));
        const std::uint64_t gray = k ^ (k >> 1);
        if (gray & (std::uint64_t(1) << bit))
            for (std::size_t i = 0; i < n; ++i) rowsum[i] += a[i * n + bit];
        else
            for (std::size_t i = 0; i < n; ++i) rowsum[i] -= a[i * n + bit];
        parity = -parity;
        __int128 prod = parity;
        for (std::size_t i = 0; i < n; ++i) {
            if (rowsum[i] == 0) {
                prod = 0;
                break;
            }
            prod *= rowsum[i];
        }
        if (prod != 0) add_signed_int128(acc, prod);
    }
    if (n % 2) acc = -acc;
    return acc;
}

inline BigInt permanent_ryser_big(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<BigInt> rowsum(n, BigInt(0));
    BigInt acc(0), prod;
    int parity = 1;
    const std::uint64_t subsets = std::uint64_t(1) << n;
    for (std::uint64_t k = 1; k < subsets; ++k) {
        const unsigned bit = static_cast<unsigned>(__builtin_ctzll(k));
        const std::uint64_t gray = k ^ (k >> 1);
        if (gray & (std::uint64_t(1) << bit))
            for (std::size_t i = 0; i < n; ++i) rowsum[i] += m(i, bit);
        else
            for (std::size_t i = 0; i < n; ++i) rowsum[i] -= m(i, bit);
        parity = -parity;
        prod = parity;
        for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
        acc += prod;
    }
    if (n % 2) acc = -acc;
    return acc;
}

} // namespace detail

/// Exact permanent by Ryser's inclusion-exclusion formula with Gray-code
/// subset updates. Throws DimensionCapError above dimension 24.
inline BigInt permanent_ryser(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n > kPermanentDimensionCap)
        throw DimensionCapError("permanent_ryser: dimension " + std::to_string(n) +
                                " exceeds cap " + std::to_string(kPermanentDimensionCap));
    // Machine-word fast path when all row-sum products provably fit __int128.
    bool small = true;
    double log2_bound = 0.0;
    std::vector<std::int64_t> a;
    a.reserve(n * n);
    for (std::size_t i = 0; i < n && small; ++i) {
        double absrow = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const BigInt& e = m(i, j);
            if (!e.fits_slong_p()) {
                small = false;
                break;
            }
            const auto v = static_cast<std::int64_t>(e.get_si());
            a.push_back(v);
            absrow += static_cast<double>(v < 0 ? -v : v);
        }
        if (absrow >= 4.6e18) small = false; // keep row sums inside int64
        if (absrow > 1.0) log2_bound += std::log2(absrow);
    }
    if (small && log2_bound <= 120.0) return detail::permanent_ryser_small(a, n);
    return detail::permanent_ryser_big(m);
}

/// One row per line, entries separated by tabs. Rationals print as p/q in
/// lowest terms (plain integer when q = 1).
template <typename T>
std::string to_tsv(const Matrix<T>& m) {
    std::ostringstream out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j) out << '\t';
            out << m(i, j);
        }
        out << '\n';
    }
    return out.str();
}

} // namespace redheffer
