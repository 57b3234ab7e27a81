#pragma once

// Chain counting and enumeration in posets with a 0 element, the signed
// chain sums behind the determinant, and the permutations whose term in
// det R(S) is nonzero.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "redheffer/errors.hpp"
#include "redheffer/matrix.hpp"
#include "redheffer/poset.hpp"
#include "redheffer/redheffer_matrix.hpp"

namespace redheffer {

/// Strictly increasing (in poset order) sequence of matrix positions;
/// possibly empty.
using Chain = std::vector<std::size_t>;

/// Enumeration cap for contributing permutations.
inline constexpr std::int64_t kEnumerationCap = 10'000'000;

/// Number of chains of S containing the 0 element, i.e. the number of
/// chains (empty one included) of S - {0}. Pure DP over the order; equals
/// the permanent of R(S) but no permanent is computed.
inline BigInt count_chains_through_zero(const Poset& p) {
    const std::size_t n = p.size();
    const std::size_t zero = p.zero();
    // g[x] = number of chains in S - {0} whose minimum is x, filled in
    // decreasing label order so every y > x is ready first.
    std::vector<BigInt> g(n, BigInt(0));
    BigInt total(1); // the empty chain
    for (std::size_t pos = n; pos-- > 0;) {
        const std::size_t x = p.element_at(pos);
        if (x == zero) continue;
        g[x] = 1;
        for (std::size_t q = pos + 1; q < n; ++q) {
            const std::size_t y = p.element_at(q);
            if (p.less(x, y)) g[x] += g[y];
        }
        total += g[x];
    }
    return total;
}

namespace detail {

// h[x] = sum of (-1)^{|C|} over nonempty chains of S - {0} with maximum x,
// filled in increasing label order.
inline std::vector<BigInt> signed_chain_sums_by_max(const Poset& p) {
    const std::size_t n = p.size();
    const std::size_t zero = p.zero();
    std::vector<BigInt> h(n, BigInt(0));
    for (std::size_t pos = 0; pos < n; ++pos) {
        const std::size_t x = p.element_at(pos);
        if (x == zero) continue;
        BigInt sum(-1); // the chain {x} alone
        for (std::size_t q = 0; q < pos; ++q) {
            const std::size_t w = p.element_at(q);
            if (w != zero && p.less(w, x)) sum -= h[w];
        }
        h[x] = std::move(sum);
    }
    return h;
}

} // namespace detail

/// Signed sum over nonempty chains of S - {0} whose maximum element is x,
/// each weighted (-1)^{|C|}. Equals mu(0, x). x is an internal element
/// index distinct from the 0 element.
inline BigInt signed_chain_sum_by_max(const Poset& p, std::size_t x) {
    if (x == p.zero()) throw Error("signed_chain_sum_by_max: x must differ from the 0 element");
    return detail::signed_chain_sums_by_max(p)[x];
}

/// Signed sum over all chains of S - {0} (empty chain contributes +1).
/// Equals sum_x mu(0, x) = det R(S).
inline BigInt signed_chain_sum(const Poset& p) {
    auto h = detail::signed_chain_sums_by_max(p);
    BigInt total(1);
    for (const auto& v : h) total += v;
    return total;
}

/// A permutation whose term in det R(S) is nonzero: identity outside one
/// cycle through the 0 element whose remaining entries form a chain.
/// `cycle` lists matrix positions, starting at position 0 (the 0 element);
/// empty means the identity permutation.
struct ContributingPermutation {
    std::size_t n = 0;
    std::vector<std::size_t> cycle;

    /// (-1)^{k-1} for a k-cycle, +1 for the identity; agrees with the
    /// permutation's parity since the other n-k points are fixed.
    int sign() const {
        if (cycle.size() <= 1) return 1;
        return cycle.size() % 2 == 1 ? 1 : -1;
    }

    /// Position -> position map: each cycle entry goes to the next one,
    /// the last returns to position 0.
    std::vector<std::size_t> as_permutation() const {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) perm[cycle[i]] = cycle[i + 1];
        if (!cycle.empty()) perm[cycle.back()] = cycle.front();
        return perm;
    }
};

/// Cycle notation using element names, e.g. "(1 2 4)"; identity is "()".
inline std::string to_cycle_string(const ContributingPermutation& cp, const Poset& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < cp.cycle.size(); ++i) {
        if (i) s += ' ';
        s += p.name(p.element_at(cp.cycle[i]));
    }
    s += ')';
    return s;
}

/// Visit the identity permutation and then, for every nonempty chain
/// j2 < j3 < ... < jk of S - {0} (DFS in label order, so the sequence is
/// deterministic), the permutation with unique nontrivial cycle
/// (0, j2, ..., jk). Visits exactly count_chains_through_zero(p)
/// permutations.
inline void for_each_contributing_permutation(
    const Poset& p, const std::function<void(const ContributingPermutation&)>& visit) {
    const std::size_t n = p.size();
    ContributingPermutation cp;
    cp.n = n;
    visit(cp); // identity
    std::vector<std::size_t> chain;
    auto extend = [&](auto&& self, std::size_t last_pos) -> void {
        for (std::size_t next = last_pos + 1; next < n; ++next) {
            if (!p.less(p.element_at(last_pos), p.element_at(next))) continue;
            chain.push_back(next);
            cp.cycle.assign(1, 0);
            cp.cycle.insert(cp.cycle.end(), chain.begin(), chain.end());
            visit(cp);
            self(self, next);
            chain.pop_back();
        }
    };
    for (std::size_t start = 1; start < n; ++start) {
        chain.assign(1, start);
        cp.cycle = {0, start};
        visit(cp);
        extend(extend, start);
        chain.clear();
    }
}

/// Materialized enumeration. Throws CapExceededError when the stream would
/// exceed kEnumerationCap permutations.
inline std::vector<ContributingPermutation> enumerate_contributing_permutations(const Poset& p) {
    const BigInt count = count_chains_through_zero(p);
    if (count > kEnumerationCap)
        throw CapExceededError("enumerate_contributing_permutations: " + count.get_str() +
                               " permutations exceed cap " + std::to_string(kEnumerationCap));
    std::vector<ContributingPermutation> out;
    out.reserve(count.get_ui());
    for_each_contributing_permutation(p, [&](const ContributingPermutation& cp) {
        out.push_back(cp);
    });
    return out;
}

/// Parity sign of an arbitrary permutation: (-1)^{n - #cycles}.
inline int permutation_parity_sign(const std::vector<std::size_t>& perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    std::size_t cycles = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return (n - cycles) % 2 == 0 ? 1 : -1;
}

/// Check that the permutations with no zero factor in R(S) are exactly the
/// enumerated ones: by exhaustive search over all |S|! permutations when
/// |S| <= 8, by permanent counting (entries are 0/1) for larger posets.
/// Throws CapExceededError when |S| > 24.
inline bool verify_contributing_support(const Poset& p) {
    const std::size_t n = p.size();
    if (n > kPermanentDimensionCap)
        throw CapExceededError("verify_contributing_support: poset size " + std::to_string(n) +
                               " exceeds cap " + std::to_string(kPermanentDimensionCap));
    const RedhefferMatrix r = redheffer_general(p);
    const auto contributes = [&](const std::vector<std::size_t>& perm) {
        for (std::size_t i = 0; i < n; ++i)
            if (r.matrix(i, perm[i]) == 0) return false;
        return true;
    };
    if (n <= 8) {
        std::vector<std::vector<std::size_t>> enumerated;
        for_each_contributing_permutation(p, [&](const ContributingPermutation& cp) {
            enumerated.push_back(cp.as_permutation());
        });
        std::sort(enumerated.begin(), enumerated.end());
        if (std::adjacent_find(enumerated.begin(), enumerated.end()) != enumerated.end())
            return false;
        std::vector<std::vector<std::size_t>> support;
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        do {
            if (contributes(perm)) support.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return support == enumerated; // both sorted (next_permutation ascends)
    }
    // Streamed check: every enumerated permutation hits only nonzero
    // entries, and their number equals the permanent, which counts all
    // contributing permutations since the entries are 0/1. Distinctness is
    // structural (the cycle determines the chain), so equal counts force
    // set equality.
    BigInt streamed(0);
    bool all_contribute = true;
    for_each_contributing_permutation(p, [&](const ContributingPermutation& cp) {
        if (all_contribute && !contributes(cp.as_permutation())) all_contribute = false;
        ++streamed;
    });
    return all_contribute && permanent_ryser(r.matrix) == streamed;
}

} // namespace redheffer
