#pragma once

// Shared frozen fixtures for the test suites.

#include <array>
#include <cstdint>

#include "redheffer/matrix.hpp"

namespace testutil {

// The classical 8 x 8 Redheffer matrix, entry (i,j) = 1 iff i | j or j = 1.
inline redheffer::IntMatrix known_redheffer_8() {
    static constexpr std::array<std::array<int, 8>, 8> rows = {{
        {1, 1, 1, 1, 1, 1, 1, 1},
        {1, 1, 0, 1, 0, 1, 0, 1},
        {1, 0, 1, 0, 0, 1, 0, 0},
        {1, 0, 0, 1, 0, 0, 0, 1},
        {1, 0, 0, 0, 1, 0, 0, 0},
        {1, 0, 0, 0, 0, 1, 0, 0},
        {1, 0, 0, 0, 0, 0, 1, 0},
        {1, 0, 0, 0, 0, 0, 0, 1},
    }};
    redheffer::IntMatrix m(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) m(i, j) = rows[i][j];
    return m;
}

// Permanents of R_1..R_10: 1 + cumulative ordered-factorization counts.
inline constexpr std::array<std::int64_t, 10> kPermanentSequence = {1, 2,  3,  5,  6,
                                                                    9, 10, 14, 16, 19};

// Chains through the empty set in B_0..B_5.
inline constexpr std::array<std::int64_t, 6> kBooleanChainCounts = {1, 2, 6, 26, 150, 1082};

} // namespace testutil
