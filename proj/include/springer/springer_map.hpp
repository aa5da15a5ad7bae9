#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "springer/parallel.hpp"
#include "springer/partition.hpp"

namespace springer {

// Which pair ordering an image with t = 0 receives. The operative rule swaps
// at t = 0 exactly like t < 0; the alternate keeps (alpha, beta). Both give
// bijections on every fiber tested, so the choice stays configurable.
enum class Convention { T0Swap, T0Keep };

// Shared knobs for the operations that enumerate or scan.
struct Options {
    Int cap = kDefaultEnumerationCap;
    Convention convention = Convention::T0Swap;
    ExecMode mode = ExecMode::Parallel;
};

// Sign attached to a part: 0 for even parts, +1 for parts = 1 mod 4,
// -1 for parts = 3 mod 4.
int delta(Int part);

// Per-index signs, tail sums and their total for a partition.
// tail_sums[i] is the sum of deltas strictly after index i; total is the sum
// over all parts (the defect t).
struct DeltaProfile {
    std::vector<int> deltas;
    std::vector<Int> tail_sums;
    Int total = 0;
};

DeltaProfile delta_profile(const XnElement& el);

enum class Label { A, B };

// One replaced entry of the forward map, with the part it came from.
struct LabeledEntry {
    Int value = 0;
    Label label = Label::A;
    std::size_t source_index = 0;
};

// Maximal block of equal even parts; the multiplicity is even for any member
// of X_n.
struct EvenRun {
    Int value = 0;
    std::size_t multiplicity = 0;
    std::size_t start_index = 0;
};

std::vector<EvenRun> even_runs(const XnElement& el);

// Raw outcome of the replacement rules, before any validity enforcement.
// alpha_raw / beta_raw keep zeros so the monotonicity of the label sequences
// can be inspected.
struct RawImage {
    Int t = 0;
    std::vector<LabeledEntry> entries;
    std::vector<Int> alpha_raw;
    std::vector<Int> beta_raw;
};

// Applies the replacement rules entry by entry. Never throws on the math
// path, so it is safe inside parallel scans; callers check validity.
RawImage apply_replacement_rules(const XnElement& el);

bool raw_values_nonnegative(const RawImage& raw);

// Normalizes the label sequences into a bipartition and applies the sign
// convention on t. Requires nonnegative raw values.
Bipartition image_bipartition(const RawImage& raw, Convention convention);

// Forward image: the defect t, the bipartition with the sign convention
// applied, and the raw label data.
struct SpringerImage {
    Int t = 0;
    Bipartition bipartition;
    std::vector<Int> alpha_raw;
    std::vector<Int> beta_raw;
    std::vector<LabeledEntry> entries;
};

// The forward map. Throws InvariantViolationError if a replaced value is
// negative or a label sequence fails to be non-increasing; the bijection
// rules both out, so either means a bug.
SpringerImage forward_map(const XnElement& el, Convention convention = Convention::T0Swap);

// Parts split by parity: the strictly decreasing odd subsequence and the
// non-increasing even subsequence.
struct OddEvenSplit {
    std::vector<Int> odd_parts;
    std::vector<Int> even_parts;
};

OddEvenSplit odd_even_split(const XnElement& el);

// Weight bookkeeping for a fiber: a source of weight n with defect t maps
// into bipartitions of (n - 2t^2 + t)/4, and conversely.
inline Int source_weight(Int m, Int t) { return 2 * t * t - t + 4 * m; }
inline Int fiber_weight(Int n, Int t) { return (n - 2 * t * t + t) / 4; }

// Closed-form inverse, valid for t >= |bp|: odd parts 4*alpha_i + 4(t-i) + 1
// with alpha zero-padded to t entries, even parts a pair of 2*beta_j per
// positive beta_j.
XnElement closed_form_inverse(const Bipartition& bp, Int t);

// Scans X_n for the unique preimage of (t, bp); nullopt when none exists.
// Two preimages would contradict injectivity and raise
// InvariantViolationError.
std::optional<XnElement> brute_force_inverse(const Bipartition& bp, Int t,
                                             const Options& opts = {});

}  // namespace springer
