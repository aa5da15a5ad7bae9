#include "springer/springer_map.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace springer {

int delta(Int part) {
    if (part < 1) throw PreconditionError("delta is defined for positive parts");
    if (part % 2 == 0) return 0;
    return part % 4 == 1 ? 1 : -1;
}

DeltaProfile delta_profile(const XnElement& el) {
    const auto& parts = el.partition().parts();
    DeltaProfile prof;
    prof.deltas.resize(parts.size());
    prof.tail_sums.resize(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) prof.deltas[i] = delta(parts[i]);
    Int acc = 0;
    for (std::size_t i = parts.size(); i-- > 0;) {
        prof.tail_sums[i] = acc;
        acc += prof.deltas[i];
    }
    prof.total = acc;
    return prof;
}

std::vector<EvenRun> even_runs(const XnElement& el) {
    const auto& parts = el.partition().parts();
    std::vector<EvenRun> runs;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (parts[i] % 2 == 0) runs.push_back(EvenRun{parts[i], j - i, i});
        i = j;
    }
    return runs;
}

RawImage apply_replacement_rules(const XnElement& el) {
    const auto& parts = el.partition().parts();
    const DeltaProfile prof = delta_profile(el);

    RawImage raw;
    raw.t = prof.total;
    raw.entries.reserve(parts.size());

    std::size_t i = 0;
    while (i < parts.size()) {
        const Int v = parts[i];
        if (v % 2 != 0) {
            const Int ti = prof.tail_sums[i];
            if (v % 4 == 1)
                raw.entries.push_back({(v - 1) / 4 - ti, Label::A, i});
            else
                raw.entries.push_back({(v - 3) / 4 + ti, Label::B, i});
            ++i;
        } else {
            std::size_t j = i;
            while (j < parts.size() && parts[j] == v) ++j;
            // Even parts carry delta 0, so the tail sum is constant across
            // the run; the 2p entries alternate b, a, b, ..., a.
            const Int ti = prof.tail_sums[i];
            const Int b_value = v % 4 == 2 ? (v - 2) / 4 + ti : v / 4 + ti;
            const Int a_value = v % 4 == 2 ? (v + 2) / 4 - ti : v / 4 - ti;
            for (std::size_t k = i; k < j; ++k) {
                const bool is_b = (k - i) % 2 == 0;
                raw.entries.push_back({is_b ? b_value : a_value, is_b ? Label::B : Label::A, k});
            }
            i = j;
        }
    }

    for (const LabeledEntry& e : raw.entries) {
        (e.label == Label::A ? raw.alpha_raw : raw.beta_raw).push_back(e.value);
    }
    return raw;
}

bool raw_values_nonnegative(const RawImage& raw) {
    return std::all_of(raw.entries.begin(), raw.entries.end(),
                       [](const LabeledEntry& e) { return e.value >= 0; });
}

Bipartition image_bipartition(const RawImage& raw, Convention convention) {
    Partition alpha(std::vector<Int>(raw.alpha_raw));
    Partition beta(std::vector<Int>(raw.beta_raw));
    const bool swap = raw.t < 0 || (raw.t == 0 && convention == Convention::T0Swap);
    if (swap) return Bipartition{std::move(beta), std::move(alpha)};
    return Bipartition{std::move(alpha), std::move(beta)};
}

namespace {

bool non_increasing(const std::vector<Int>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

}  // namespace

SpringerImage forward_map(const XnElement& el, Convention convention) {
    RawImage raw = apply_replacement_rules(el);
    if (!raw_values_nonnegative(raw))
        throw InvariantViolationError("negative replaced value for " +
                                      to_text(el.partition()));
    if (!non_increasing(raw.alpha_raw) || !non_increasing(raw.beta_raw))
        throw InvariantViolationError("label sequence not non-increasing for " +
                                      to_text(el.partition()));
    SpringerImage img;
    img.t = raw.t;
    img.bipartition = image_bipartition(raw, convention);
    img.alpha_raw = std::move(raw.alpha_raw);
    img.beta_raw = std::move(raw.beta_raw);
    img.entries = std::move(raw.entries);
    return img;
}

OddEvenSplit odd_even_split(const XnElement& el) {
    OddEvenSplit split;
    for (Int v : el.partition().parts()) {
        (v % 2 != 0 ? split.odd_parts : split.even_parts).push_back(v);
    }
    return split;
}

XnElement closed_form_inverse(const Bipartition& bp, Int t) {
    const Int m = bp.weight();
    if (t < m)
        throw PreconditionError("closed-form inverse needs t >= " + std::to_string(m) +
                                ", got t = " + std::to_string(t));
    std::vector<Int> parts;
    parts.reserve(static_cast<std::size_t>(t) + 2 * bp.second.size());
    for (Int i = 1; i <= t; ++i)
        parts.push_back(4 * bp.first.part(static_cast<std::size_t>(i - 1)) + 4 * (t - i) + 1);
    for (Int b : bp.second.parts()) {
        parts.push_back(2 * b);
        parts.push_back(2 * b);
    }
    return XnElement(Partition(std::move(parts)));
}

std::optional<XnElement> brute_force_inverse(const Bipartition& bp, Int t,
                                             const Options& opts) {
    const Int n = source_weight(bp.weight(), t);
    if (n < 0)
        throw PreconditionError("no fiber: source weight 2t^2 - t + 4m is negative");
    const std::vector<XnElement> xs = enumerate_xn(n, opts.cap);

    std::vector<char> hit(xs.size(), 0);
    run_indexed(opts.mode, xs.size(), [&](std::size_t i) {
        const RawImage raw = apply_replacement_rules(xs[i]);
        if (raw.t != t || !raw_values_nonnegative(raw)) return;
        if (image_bipartition(raw, opts.convention) == bp) hit[i] = 1;
    });

    std::optional<std::size_t> first;
    std::size_t count = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!hit[i]) continue;
        if (!first) first = i;
        ++count;
    }
    if (count > 1)
        throw InvariantViolationError("ambiguous preimage: " + std::to_string(count) +
                                      " elements of X_" + std::to_string(n) + " map to (t=" +
                                      std::to_string(t) + ", " + to_text(bp) + ")");
    if (!first) return std::nullopt;
    return xs[*first];
}

}  // namespace springer
