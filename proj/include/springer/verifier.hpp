#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "springer/orders.hpp"

namespace springer {

// One failed check, with enough witnesses to diagnose it without rerunning.
struct Violation {
    std::string kind;
    std::map<std::string, std::string> witness;
};

// Outcome of one verification run. passed() is defined as "no violations";
// counters are exact unless params carries sampled=1.
struct VerificationReport {
    std::string check;
    std::map<std::string, Int> params;
    std::map<std::string, Int> counters;
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }
    nlohmann::json to_json() const;
    std::string to_text(std::size_t max_violations = 50) const;
};

// Checks the correspondence on all of X_n: the defect is congruent to n
// mod 4, image weights match (n - 2t^2 + t)/4, the map is injective, and each
// admissible fiber is exactly the set of bipartitions of that weight.
VerificationReport verify_bijection(Int n, const Options& opts = {});

// For every bipartition of m and t >= m: the closed-form image has all parts
// even or congruent to 1 mod 4, exactly t odd parts, and even parts <= 2m.
VerificationReport verify_lemma1(Int m, Int t, const Options& opts = {});

// For every bipartition of m and t >= m: the closed form agrees with the
// brute-force inverse, the forward map round-trips, and the closed-form
// coefficients recomputed from the image's odd/even split give back the
// bipartition.
VerificationReport verify_lemma2(Int m, Int t, const Options& opts = {});

// For every ordered pair of bipartitions of m: the order induced through the
// fiber at t coincides with the dominance order on bipartitions.
VerificationReport verify_theorem(Int m, Int t, const Options& opts = {});

// Violation counts of verify_theorem for each t in [t_min, t_max].
std::vector<std::pair<Int, Int>> scan_threshold(Int m, Int t_min, Int t_max,
                                                const Options& opts = {});

// The family breaking the induced order at t = m - 1: for t >= 2, the source
// (4t+1, 4t-3, ..., 9, 5, 3, 1) maps to ((1^t), (1)) and its neighbor
// (4t+1, 4t-3, ..., 9, 5, 2, 2) to ((1^{t+1}), ()); the sources compare
// strictly one way, the images strictly the other.
VerificationReport reproduce_counterexample(Int t, const Options& opts = {});

// Structural facts about the raw forward map on all of X_n: replaced values
// nonnegative, both label sequences non-increasing, total replaced weight
// equal to (n - 2t^2 + t)/4, and t congruent to n mod 4.
VerificationReport verify_forward_invariants(Int n, const Options& opts = {});

// Partial-order axioms, exhaustively for sets of at most 30 elements and by
// fixed-seed sampling of transitivity triples above that.
VerificationReport verify_axioms_dominance_xn(Int n, const Options& opts = {});
VerificationReport verify_axioms_djm(Int m, const Options& opts = {});

}  // namespace springer
