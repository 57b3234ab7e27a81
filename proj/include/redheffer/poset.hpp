#pragma once

// Finite posets with a 0 element: construction from cover relations,
// canonical divisor and Boolean-lattice posets, zeta matrices, and the
// poset Moebius function.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "redheffer/errors.hpp"
#include "redheffer/matrix.hpp"

namespace redheffer {

/// Largest number of elements a poset may have (Boolean lattice cap n = 12).
inline constexpr std::size_t kPosetSizeCap = 4096;

/// Largest n accepted by boolean_lattice.
inline constexpr int kBooleanLatticeCap = 12;

namespace detail {

// Row-of-words boolean matrix, used for the reflexive-transitive closure.
class BitMatrix {
public:
    explicit BitMatrix(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

    bool get(std::size_t i, std::size_t j) const {
        return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j) {
        bits_[i * words_ + j / 64] |= std::uint64_t(1) << (j % 64);
    }

    // this |= this * this (boolean product); returns true if anything changed.
    bool or_square() {
        BitMatrix prod(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k)
                if (get(i, k)) {
                    const std::uint64_t* src = &bits_[k * words_];
                    std::uint64_t* dst = &prod.bits_[i * words_];
                    for (std::size_t w = 0; w < words_; ++w) dst[w] |= src[w];
                }
        bool changed = false;
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            const std::uint64_t merged = bits_[w] | prod.bits_[w];
            if (merged != bits_[w]) {
                bits_[w] = merged;
                changed = true;
            }
        }
        return changed;
    }

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
};

} // namespace detail

/// A finite poset with a 0 element and a fixed linear-extension labeling.
///
/// Elements are addressed two ways: by internal index (the order they were
/// given in) and by matrix position (the labeling, a linear extension with
/// the 0 element at position 0). The zeta and Redheffer matrices are indexed
/// by position.
class Poset {
public:
    std::size_t size() const { return n_; }

    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& name(std::size_t x) const { return elements_[x]; }

    /// x <= y in the partial order (internal indices).
    bool leq(std::size_t x, std::size_t y) const { return leq_[x * n_ + y] != 0; }
    /// x < y strictly.
    bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

    /// Internal index of the 0 element.
    std::size_t zero() const { return zero_; }

    /// Matrix position of element x; label(zero()) == 0.
    std::size_t label(std::size_t x) const { return label_[x]; }

    /// Internal index of the element at matrix position pos.
    std::size_t element_at(std::size_t pos) const { return order_[pos]; }

    /// Find an element by name; returns size() if absent.
    std::size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? n_ : it->second;
    }

    /// Construct from a validated reflexive-transitive relation. Intended
    /// for the factory functions below; checks nothing beyond the labeling.
    Poset(std::vector<std::string> elements, std::vector<std::uint8_t> leq, std::size_t zero,
          std::vector<std::size_t> label)
        : n_(elements.size()),
          elements_(std::move(elements)),
          leq_(std::move(leq)),
          zero_(zero),
          label_(std::move(label)),
          order_(n_) {
        for (std::size_t x = 0; x < n_; ++x) order_[label_[x]] = x;
        for (std::size_t x = 0; x < n_; ++x) index_.emplace(elements_[x], x);
    }

private:
    std::size_t n_;
    std::vector<std::string> elements_;
    std::vector<std::uint8_t> leq_; // n*n, reflexive-transitive
    std::size_t zero_;
    std::vector<std::size_t> label_; // internal index -> position
    std::vector<std::size_t> order_; // position -> internal index
    std::unordered_map<std::string, std::size_t> index_;
};

namespace detail {

// Kahn topological sort over the strict order, ties broken by input order.
// The 0 element, lying below everything, always lands at position 0.
inline std::vector<std::size_t> linear_extension(const std::vector<std::uint8_t>& leq,
                                                 std::size_t n) {
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && leq[x * n + y]) ++indegree[y];
    std::set<std::size_t> ready;
    for (std::size_t x = 0; x < n; ++x)
        if (indegree[x] == 0) ready.insert(x);
    std::vector<std::size_t> label(n, 0);
    for (std::size_t pos = 0; pos < n; ++pos) {
        if (ready.empty()) throw CycleError("cover relation contains a directed cycle");
        const std::size_t x = *ready.begin();
        ready.erase(ready.begin());
        label[x] = pos;
        for (std::size_t y = 0; y < n; ++y)
            if (x != y && leq[x * n + y] && --indegree[y] == 0) ready.insert(y);
    }
    return label;
}

inline std::size_t find_zero(const std::vector<std::uint8_t>& leq, std::size_t n) {
    for (std::size_t z = 0; z < n; ++z) {
        bool below_all = true;
        for (std::size_t x = 0; x < n; ++x)
            if (!leq[z * n + x]) {
                below_all = false;
                break;
            }
        if (below_all) return z;
    }
    throw NoZeroError("poset has no 0 element (no element below all others)");
}

} // namespace detail

/// Build a poset from elements and cover relations. The relation is closed
/// reflexively and transitively; redundant covers are tolerated, cycles are
/// not. Throws DuplicateElementError, PosetFormatError (unknown endpoint),
/// CycleError, NoZeroError, CapExceededError.
inline Poset build_poset(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    const std::size_t n = elements.size();
    if (n == 0) throw PosetFormatError("poset needs at least one element");
    if (n > kPosetSizeCap)
        throw CapExceededError("poset size " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kPosetSizeCap));
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i)
        if (!index.emplace(elements[i], i).second)
            throw DuplicateElementError("duplicate element '" + elements[i] + "'");

    detail::BitMatrix reach(n);
    for (std::size_t i = 0; i < n; ++i) reach.set(i, i);
    for (const auto& [a, b] : covers) {
        const auto ia = index.find(a);
        const auto ib = index.find(b);
        if (ia == index.end()) throw PosetFormatError("cover names unknown element '" + a + "'");
        if (ib == index.end()) throw PosetFormatError("cover names unknown element '" + b + "'");
        if (ia->second == ib->second)
            throw CycleError("cover (" + a + ", " + b + ") is a self-loop");
        reach.set(ia->second, ib->second);
    }
    // Reflexive-transitive closure by repeated boolean squaring.
    while (reach.or_square()) {
    }

    std::vector<std::uint8_t> leq(n * n, 0);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) leq[x * n + y] = reach.get(x, y) ? 1 : 0;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
            if (leq[x * n + y] && leq[y * n + x])
                throw CycleError("elements '" + elements[x] + "' and '" + elements[y] +
                                 "' lie on a directed cycle");

    auto label = detail::linear_extension(leq, n);
    const std::size_t zero = detail::find_zero(leq, n);
    return Poset(elements, std::move(leq), zero, std::move(label));
}

/// Divisors order on {1..n}: i <= j iff i divides j. The 0 element is 1 and
/// the labeling is the identity (divisibility respects numeric order).
inline Poset divisor_poset(std::int64_t n) {
    if (n < 1) throw Error("divisor_poset: n must be >= 1");
    if (static_cast<std::size_t>(n) > kPosetSizeCap)
        throw CapExceededError("divisor_poset: n " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kPosetSizeCap));
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::string> elements(un);
    for (std::size_t i = 0; i < un; ++i) elements[i] = std::to_string(i + 1);
    std::vector<std::uint8_t> leq(un * un, 0);
    for (std::size_t i = 1; i <= un; ++i)
        for (std::size_t j = i; j <= un; j += i) leq[(i - 1) * un + (j - 1)] = 1;
    std::vector<std::size_t> label(un);
    std::iota(label.begin(), label.end(), std::size_t{0});
    return Poset(std::move(elements), std::move(leq), 0, std::move(label));
}

namespace detail {

inline std::string subset_name(unsigned mask) {
    if (mask == 0) return "{}";
    std::string s = "{";
    bool first = true;
    for (unsigned b = 0; mask >> b; ++b)
        if (mask & (1u << b)) {
            if (!first) s += ',';
            s += std::to_string(b + 1);
            first = false;
        }
    s += '}';
    return s;
}

} // namespace detail

/// Boolean lattice B_n: subsets of {1..n} ordered by inclusion, 0 element
/// the empty set. Elements are listed (and labeled) by cardinality, then by
/// the binary value of the characteristic vector.
inline Poset boolean_lattice(std::int64_t n) {
    if (n < 0) throw Error("boolean_lattice: n must be >= 0");
    if (n > kBooleanLatticeCap)
        throw CapExceededError("boolean_lattice: n " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kBooleanLatticeCap));
    const std::size_t count = std::size_t(1) << n;
    std::vector<unsigned> masks(count);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::string> elements(count);
    for (std::size_t i = 0; i < count; ++i) elements[i] = detail::subset_name(masks[i]);
    std::vector<std::uint8_t> leq(count * count, 0);
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < count; ++j)
            if ((masks[i] & ~masks[j]) == 0) leq[i * count + j] = 1;
    std::vector<std::size_t> label(count);
    std::iota(label.begin(), label.end(), std::size_t{0});
    return Poset(std::move(elements), std::move(leq), 0, std::move(label));
}

/// Zeta matrix by matrix position: entry (label(x), label(y)) = [x <= y].
/// Upper-triangular with unit diagonal because the labeling is a linear
/// extension.
inline IntMatrix zeta_matrix(const Poset& p) {
    const std::size_t n = p.size();
    IntMatrix z(n);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (p.leq(x, y)) z(p.label(x), p.label(y)) = 1;
    return z;
}

namespace detail {

// mu(x, y) for one fixed x and every y, by the interval recursion evaluated
// in label order: mu(x,x) = 1, mu(x,y) = -sum_{x <= z < y} mu(x,z).
inline std::vector<BigInt> moebius_row(const Poset& p, std::size_t x) {
    const std::size_t n = p.size();
    std::vector<BigInt> mu(n, BigInt(0));
    mu[x] = 1;
    for (std::size_t pos = p.label(x) + 1; pos < n; ++pos) {
        const std::size_t y = p.element_at(pos);
        if (!p.leq(x, y)) continue;
        BigInt sum(0);
        for (std::size_t q = p.label(x); q < pos; ++q) {
            const std::size_t z = p.element_at(q);
            if (p.leq(x, z) && p.leq(z, y)) sum += mu[z];
        }
        mu[y] = -sum;
    }
    return mu;
}

} // namespace detail

/// Moebius function of the poset: mu(x, y) over internal indices; 0 when
/// x <= y fails. Evaluates the recursion over the interval [x, y] only;
/// use moebius_table for bulk queries.
inline BigInt moebius(const Poset& p, std::size_t x, std::size_t y) {
    if (!p.leq(x, y)) return BigInt(0);
    if (x == y) return BigInt(1);
    const std::size_t n = p.size();
    std::vector<BigInt> mu(n, BigInt(0));
    mu[x] = 1;
    for (std::size_t pos = p.label(x) + 1; pos <= p.label(y); ++pos) {
        const std::size_t w = p.element_at(pos);
        if (!p.leq(x, w) || !p.leq(w, y)) continue;
        BigInt sum(0);
        for (std::size_t q = p.label(x); q < pos; ++q) {
            const std::size_t z = p.element_at(q);
            if (p.leq(x, z) && p.leq(z, w)) sum += mu[z];
        }
        mu[w] = -sum;
    }
    return mu[y];
}

/// All Moebius values of a poset. The table indexed by matrix positions is
/// the exact inverse of the zeta matrix.
class MoebiusTable {
public:
    explicit MoebiusTable(const Poset& p) : n_(p.size()), mu_(n_ * n_, BigInt(0)) {
        for (std::size_t x = 0; x < n_; ++x) {
            auto row = detail::moebius_row(p, x);
            for (std::size_t y = 0; y < n_; ++y) mu_[x * n_ + y] = std::move(row[y]);
        }
        labels_.reserve(n_);
        for (std::size_t x = 0; x < n_; ++x) labels_.push_back(p.label(x));
    }

    std::size_t size() const { return n_; }

    /// mu(x, y), internal indices; 0 when incomparable.
    const BigInt& value(std::size_t x, std::size_t y) const { return mu_[x * n_ + y]; }

    /// The table as a matrix indexed by position: inverse of zeta_matrix.
    IntMatrix as_int_matrix() const {
        IntMatrix m(n_);
        for (std::size_t x = 0; x < n_; ++x)
            for (std::size_t y = 0; y < n_; ++y) m(labels_[x], labels_[y]) = mu_[x * n_ + y];
        return m;
    }

    RatMatrix as_rat_matrix() const { return to_rational(as_int_matrix()); }

private:
    std::size_t n_;
    std::vector<BigInt> mu_;
    std::vector<std::size_t> labels_; // internal index -> position
};

inline MoebiusTable moebius_table(const Poset& p) { return MoebiusTable(p); }

} // namespace redheffer
