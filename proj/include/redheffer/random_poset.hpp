#pragma once

// Seeded random posets for cross-checking identities. A random DAG on
// indexed elements is generated edge-by-edge (only low index -> high index,
// so acyclic by construction) and a fresh 0 element is adjoined below
// everything; build_poset then takes the closure.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "redheffer/poset.hpp"

namespace redheffer {

/// Random poset with `size` elements (2 <= size). Element "z" is the 0
/// element; the rest are "e1", "e2", ... with a random order among them.
/// Deterministic for a fixed engine state.
inline Poset random_poset(std::mt19937_64& rng, std::size_t size) {
    if (size < 2) throw Error("random_poset: size must be >= 2");
    const std::size_t k = size - 1;
    std::vector<std::string> elements;
    elements.reserve(size);
    elements.push_back("z");
    for (std::size_t i = 1; i <= k; ++i) elements.push_back("e" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> covers;
    for (std::size_t i = 1; i <= k; ++i) covers.emplace_back("z", elements[i]);
    // Edge density varies per poset so chains, antichains and mixtures all
    // show up.
    const unsigned denom = 2 + static_cast<unsigned>(rng() % 4); // 1/2 .. 1/5
    for (std::size_t i = 1; i <= k; ++i)
        for (std::size_t j = i + 1; j <= k; ++j)
            if (rng() % denom == 0) covers.emplace_back(elements[i], elements[j]);
    return build_poset(elements, covers);
}

} // namespace redheffer
