#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "springer/springer_map.hpp"

namespace springer {

enum class OrderRelation { Less, Greater, Equal, Incomparable };

const char* to_text(OrderRelation rel) noexcept;

// Dominance order: prefix sums of a never exceed those of b. Both sides must
// have the same weight.
bool dominance_leq(const Partition& a, const Partition& b);

// Dominance order on bipartitions: prefix sums of the first components
// compare as above, and |a.first| + prefix sums of a.second never exceed
// |b.first| + prefix sums of b.second (the k = 0 case compares |first|
// weights directly).
bool djm_leq(const Bipartition& a, const Bipartition& b);

// First index where the prefix-sum condition fails, with both sums; empty
// when a <= b holds. For bipartitions chain is 1 or 2.
struct PrefixFailure {
    int chain = 0;
    std::size_t k = 0;
    Int lhs = 0;
    Int rhs = 0;
};
std::optional<PrefixFailure> first_dominance_failure(const Partition& a, const Partition& b);
std::optional<PrefixFailure> first_djm_failure(const Bipartition& a, const Bipartition& b);

template <class T, class Leq>
OrderRelation compare(const T& a, const T& b, Leq&& leq) {
    const bool ab = leq(a, b);
    const bool ba = leq(b, a);
    if (ab && ba) return OrderRelation::Equal;
    if (ab) return OrderRelation::Less;
    if (ba) return OrderRelation::Greater;
    return OrderRelation::Incomparable;
}

// The order bipartitions of m inherit from dominance on X_{2t^2 - t + 4m}:
// compares the fiber preimages. Uses the closed form when t >= m, otherwise
// the brute-force scan (subject to the enumeration cap).
bool induced_leq(const Bipartition& a, const Bipartition& b, Int t, const Options& opts = {});

// Cover relations of a finite poset; indices refer to the input order.
struct PosetEdges {
    std::size_t element_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> cover_pairs;  // (lower, upper)
};

// Transitive reduction of the comparability digraph. Throws
// InvariantViolationError if leq holds both ways for two distinct elements.
template <class T, class Leq>
PosetEdges hasse_edges(const std::vector<T>& elements, Leq&& leq) {
    const std::size_t n = elements.size();
    std::vector<char> le(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) le[i * n + j] = leq(elements[i], elements[j]) ? 1 : 0;

    auto lt = [&](std::size_t i, std::size_t j) { return le[i * n + j] && !le[j * n + i]; };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (le[i * n + j] && le[j * n + i] && !(elements[i] == elements[j]))
                throw InvariantViolationError("antisymmetry violation between elements " +
                                              std::to_string(i) + " and " + std::to_string(j));

    PosetEdges edges;
    edges.element_count = n;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!lt(i, j)) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (lt(i, k) && lt(k, j)) {
                    covered = false;
                    break;
                }
            }
            if (covered) edges.cover_pairs.emplace_back(i, j);
        }
    }
    return edges;
}

}  // namespace springer
