#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "springer/errors.hpp"

namespace springer {

using Int = std::int64_t;

// Default bound for the enumeration streams. p(60) is just under a million,
// which keeps even the widest brute-force scans affordable in memory and time.
inline constexpr Int kDefaultEnumerationCap = 60;

// Throws CapExceededError when a requested weight is over the cap.
void ensure_within_cap(Int requested, Int cap);

// A partition: non-increasing positive parts. Indexing past the stored length
// reads 0, so prefix-sum conditions quantified over all k need only finitely
// many checks.
class Partition {
public:
    Partition() = default;
    // Normalizes: sorts non-increasing and strips zeros. Rejects negatives.
    explicit Partition(std::vector<Int> values);

    const std::vector<Int>& parts() const noexcept { return parts_; }
    Int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t size() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    Int weight() const noexcept { return weight_; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Int> parts_;
    Int weight_ = 0;
};

// Ordered pair of partitions. The two components are not interchangeable.
struct Bipartition {
    Partition first;
    Partition second;

    Int weight() const noexcept { return first.weight() + second.weight(); }
    auto operator<=>(const Bipartition&) const = default;
};

// Membership in X_n: every odd part value occurs exactly once and every even
// part value occurs an even number of times.
bool is_in_xn(const Partition& p) noexcept;

// A partition validated to lie in X_n.
class XnElement {
public:
    explicit XnElement(Partition p);

    const Partition& partition() const noexcept { return partition_; }
    auto operator<=>(const XnElement&) const = default;

private:
    Partition partition_;
};

namespace detail {
// Advances to the next partition in lexicographically decreasing order.
// Returns false once cur was the all-ones partition.
bool next_partition(std::vector<Int>& cur);
}  // namespace detail

// Streams every partition of n exactly once, lexicographically decreasing,
// starting from (n). Single-consumer; independent streams may run
// concurrently.
template <class Fn>
void for_each_partition(Int n, Fn&& fn) {
    if (n < 0) throw PreconditionError("partition weight must be nonnegative");
    if (n == 0) {
        fn(Partition{});
        return;
    }
    std::vector<Int> cur{n};
    do {
        fn(Partition(cur));
    } while (detail::next_partition(cur));
}

// Streams every ordered pair (first, second) with |first| + |second| = m.
// Order: weight of the first component descending, components each
// lexicographically decreasing.
template <class Fn>
void for_each_bipartition(Int m, Fn&& fn) {
    if (m < 0) throw PreconditionError("bipartition weight must be nonnegative");
    for (Int j = m; j >= 0; --j) {
        for_each_partition(j, [&](const Partition& a) {
            for_each_partition(m - j, [&](const Partition& b) { fn(Bipartition{a, b}); });
        });
    }
}

std::vector<Partition> enumerate_partitions(Int n, Int cap = kDefaultEnumerationCap);
std::vector<XnElement> enumerate_xn(Int n, Int cap = kDefaultEnumerationCap);
std::vector<Bipartition> enumerate_bipartitions(Int m, Int cap = kDefaultEnumerationCap);

// Text formats. Partition: comma-separated parts, "" for the empty partition.
// Bipartition: the two partition strings joined by '/', e.g. "1,1/1"; "/"
// denotes a pair of empty partitions.
std::string to_text(const Partition& p);
std::string to_text(const Bipartition& bp);
Partition parse_partition(std::string_view text);
Bipartition parse_bipartition(std::string_view text);

}  // namespace springer
