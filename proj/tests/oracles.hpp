// Test-only oracles, independent of the library's enumeration and order
// implementations.
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "springer/partition.hpp"

namespace oracle {

using springer::Bipartition;
using springer::Int;
using springer::Partition;

// p(0..up_to) by the bounded-largest-part recurrence.
inline std::vector<Int> partition_counts(Int up_to) {
    std::vector<Int> dp(static_cast<std::size_t>(up_to) + 1, 0);
    dp[0] = 1;
    for (Int k = 1; k <= up_to; ++k)
        for (Int n = k; n <= up_to; ++n)
            dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - k)];
    return dp;
}

// Partitions into distinct odd parts (0/1 knapsack over odd values).
inline std::vector<Int> distinct_odd_counts(Int up_to) {
    std::vector<Int> dp(static_cast<std::size_t>(up_to) + 1, 0);
    dp[0] = 1;
    for (Int k = 1; k <= up_to; k += 2)
        for (Int n = up_to; n >= k; --n)
            dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - k)];
    return dp;
}

// Partitions into parts divisible by 4. A part value e (even) occurring an
// even number of times 2p contributes weight 2pe, and 2e runs over 4, 8, ...
inline std::vector<Int> multiple_of_four_counts(Int up_to) {
    std::vector<Int> dp(static_cast<std::size_t>(up_to) + 1, 0);
    dp[0] = 1;
    for (Int k = 4; k <= up_to; k += 4)
        for (Int n = k; n <= up_to; ++n)
            dp[static_cast<std::size_t>(n)] += dp[static_cast<std::size_t>(n - k)];
    return dp;
}

// |X_n| as the convolution of the two generating functions above.
inline Int xn_count(Int n) {
    const auto odd = distinct_odd_counts(n);
    const auto four = multiple_of_four_counts(n);
    Int total = 0;
    for (Int j = 0; j <= n; ++j)
        total += odd[static_cast<std::size_t>(j)] * four[static_cast<std::size_t>(n - j)];
    return total;
}

inline Int bipartition_count(Int m) {
    const auto p = partition_counts(m);
    Int total = 0;
    for (Int j = 0; j <= m; ++j)
        total += p[static_cast<std::size_t>(j)] * p[static_cast<std::size_t>(m - j)];
    return total;
}

// Dominance by explicit prefix sums padded well past both lengths.
inline bool dominance_leq_naive(const Partition& a, const Partition& b) {
    const std::size_t len = std::max(a.size(), b.size()) + 3;
    Int sa = 0;
    Int sb = 0;
    bool ok = true;
    for (std::size_t i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) ok = false;
    }
    return ok;
}

// Direct transcription of the two prefix-sum chains of the bipartition
// dominance order, padded past both lengths, including k = 0.
inline bool djm_leq_naive(const Bipartition& a, const Bipartition& b) {
    bool ok = true;
    {
        const std::size_t len = std::max(a.first.size(), b.first.size()) + 3;
        Int sa = 0;
        Int sb = 0;
        for (std::size_t k = 0; k < len; ++k) {
            sa += a.first.part(k);
            sb += b.first.part(k);
            if (sa > sb) ok = false;
        }
    }
    {
        const std::size_t len = std::max(a.second.size(), b.second.size()) + 3;
        Int sa = a.first.weight();
        Int sb = b.first.weight();
        if (sa > sb) ok = false;
        for (std::size_t k = 0; k < len; ++k) {
            sa += a.second.part(k);
            sb += b.second.part(k);
            if (sa > sb) ok = false;
        }
    }
    return ok;
}

}  // namespace oracle
