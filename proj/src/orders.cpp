#include "springer/orders.hpp"

#include <algorithm>

namespace springer {

const char* to_text(OrderRelation rel) noexcept {
    switch (rel) {
        case OrderRelation::Less: return "LESS";
        case OrderRelation::Greater: return "GREATER";
        case OrderRelation::Equal: return "EQUAL";
        case OrderRelation::Incomparable: return "INCOMPARABLE";
    }
    return "INCOMPARABLE";
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) throw WeightMismatchError(a.weight(), b.weight());
    const std::size_t len = std::max(a.size(), b.size());
    Int sa = 0;
    Int sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

bool djm_leq(const Bipartition& a, const Bipartition& b) {
    if (a.weight() != b.weight()) throw WeightMismatchError(a.weight(), b.weight());
    const std::size_t len1 = std::max(a.first.size(), b.first.size());
    Int sa = 0;
    Int sb = 0;
    for (std::size_t k = 0; k < len1; ++k) {
        sa += a.first.part(k);
        sb += b.first.part(k);
        if (sa > sb) return false;
    }
    sa = a.first.weight();
    sb = b.first.weight();
    if (sa > sb) return false;
    const std::size_t len2 = std::max(a.second.size(), b.second.size());
    for (std::size_t k = 0; k < len2; ++k) {
        sa += a.second.part(k);
        sb += b.second.part(k);
        if (sa > sb) return false;
    }
    return true;
}

std::optional<PrefixFailure> first_dominance_failure(const Partition& a, const Partition& b) {
    const std::size_t len = std::max(a.size(), b.size());
    Int sa = 0;
    Int sb = 0;
    for (std::size_t i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return PrefixFailure{0, i + 1, sa, sb};
    }
    return std::nullopt;
}

std::optional<PrefixFailure> first_djm_failure(const Bipartition& a, const Bipartition& b) {
    const std::size_t len1 = std::max(a.first.size(), b.first.size());
    Int sa = 0;
    Int sb = 0;
    for (std::size_t k = 0; k < len1; ++k) {
        sa += a.first.part(k);
        sb += b.first.part(k);
        if (sa > sb) return PrefixFailure{1, k + 1, sa, sb};
    }
    sa = a.first.weight();
    sb = b.first.weight();
    if (sa > sb) return PrefixFailure{2, 0, sa, sb};
    const std::size_t len2 = std::max(a.second.size(), b.second.size());
    for (std::size_t k = 0; k < len2; ++k) {
        sa += a.second.part(k);
        sb += b.second.part(k);
        if (sa > sb) return PrefixFailure{2, k + 1, sa, sb};
    }
    return std::nullopt;
}

bool induced_leq(const Bipartition& a, const Bipartition& b, Int t, const Options& opts) {
    if (a.weight() != b.weight()) throw WeightMismatchError(a.weight(), b.weight());
    const Int m = a.weight();
    auto preimage = [&](const Bipartition& bp) -> Partition {
        if (t >= m) return closed_form_inverse(bp, t).partition();
        const auto found = brute_force_inverse(bp, t, opts);
        if (!found)
            throw PreconditionError("no preimage of " + to_text(bp) + " in the fiber t=" +
                                    std::to_string(t));
        return found->partition();
    };
    return dominance_leq(preimage(a), preimage(b));
}

}  // namespace springer
