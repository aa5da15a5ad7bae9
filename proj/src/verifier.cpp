#include "springer/verifier.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <sstream>

namespace springer {

namespace {

constexpr std::size_t kExhaustiveTransitivityLimit = 30;
constexpr std::size_t kSampledTriples = 100000;
constexpr std::uint64_t kTripleSeed = 987654321;

bool mod4_equal(Int a, Int b) { return ((a - b) % 4 + 4) % 4 == 0; }

// All defects t with t = n mod 4 whose fiber weight is nonnegative.
std::vector<Int> admissible_t_values(Int n) {
    std::vector<Int> ts;
    for (Int t = -n - 1; t <= n + 1; ++t) {
        if (!mod4_equal(t, n)) continue;
        if (2 * t * t - t > n) continue;
        ts.push_back(t);
    }
    return ts;
}

Int raw_image_weight(const RawImage& raw) {
    Int w = 0;
    for (const LabeledEntry& e : raw.entries) w += e.value;
    return w;
}

bool non_increasing(const std::vector<Int>& v) {
    return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string failure_text(const PrefixFailure& f) {
    std::string s;
    if (f.chain != 0) s += "chain=" + std::to_string(f.chain) + " ";
    s += "k=" + std::to_string(f.k) + " lhs=" + std::to_string(f.lhs) +
         " rhs=" + std::to_string(f.rhs);
    return s;
}

void append(std::vector<Violation>& into, std::vector<Violation>&& more) {
    into.insert(into.end(), std::make_move_iterator(more.begin()),
                std::make_move_iterator(more.end()));
}

// Fiber of the forward map over defect t, keyed by normalized image.
// Ambiguous images (two sources) are reported, first source kept.
std::map<Bipartition, std::size_t> fiber_of(const std::vector<XnElement>& xs,
                                            const std::vector<RawImage>& raws, Int t,
                                            Convention convention,
                                            std::vector<Violation>& violations) {
    std::map<Bipartition, std::size_t> fiber;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (raws[i].t != t || !raw_values_nonnegative(raws[i])) continue;
        const Bipartition bp = image_bipartition(raws[i], convention);
        const auto [it, inserted] = fiber.emplace(bp, i);
        if (!inserted) {
            violations.push_back(
                Violation{"ambiguous_preimage",
                          {{"bipartition", to_text(bp)},
                           {"first_source", to_text(xs[it->second].partition())},
                           {"second_source", to_text(xs[i].partition())},
                           {"t", std::to_string(t)}}});
        }
    }
    return fiber;
}

std::vector<RawImage> raw_images(const std::vector<XnElement>& xs, ExecMode mode) {
    std::vector<RawImage> raws(xs.size());
    run_indexed(mode, xs.size(), [&](std::size_t i) { raws[i] = apply_replacement_rules(xs[i]); });
    return raws;
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["check"] = check;
    j["params"] = params;
    j["passed"] = passed();
    j["counters"] = counters;
    nlohmann::json vs = nlohmann::json::array();
    for (const Violation& v : violations) {
        nlohmann::json jv;
        jv["kind"] = v.kind;
        jv["witness"] = v.witness;
        vs.push_back(std::move(jv));
    }
    j["violations"] = std::move(vs);
    return j;
}

std::string VerificationReport::to_text(std::size_t max_violations) const {
    std::ostringstream out;
    out << (passed() ? "[PASS] " : "[FAIL] ") << check;
    if (!params.empty()) {
        out << " (";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) out << ", ";
            out << k << "=" << v;
            first = false;
        }
        out << ")";
    }
    out << "\n";
    if (!counters.empty()) {
        out << "  counters:";
        for (const auto& [k, v] : counters) out << " " << k << "=" << v;
        out << "\n";
    }
    std::size_t shown = 0;
    for (const Violation& v : violations) {
        if (shown == max_violations) {
            out << "  ... " << (violations.size() - shown) << " more violations\n";
            break;
        }
        out << "  violation " << v.kind << ":";
        for (const auto& [k, val] : v.witness) out << " " << k << "=" << val;
        out << "\n";
        ++shown;
    }
    return out.str();
}

VerificationReport verify_bijection(Int n, const Options& opts) {
    if (n < 0) throw PreconditionError("weight must be nonnegative");
    VerificationReport rep;
    rep.check = "bijection";
    rep.params["n"] = n;

    const std::vector<XnElement> xs = enumerate_xn(n, opts.cap);
    const std::vector<RawImage> raws = raw_images(xs, opts.mode);

    append(rep.violations,
           collect_indexed<Violation>(opts.mode, xs.size(), [&](std::size_t i, auto emit) {
               const RawImage& raw = raws[i];
               const std::string source = to_text(xs[i].partition());
               if (!mod4_equal(raw.t, n))
                   emit(Violation{"defect_residue",
                                  {{"source", source},
                                   {"t", std::to_string(raw.t)},
                                   {"n", std::to_string(n)}}});
               const Int image_weight = raw_image_weight(raw);
               if (n - 2 * raw.t * raw.t + raw.t != 4 * image_weight)
                   emit(Violation{"weight_identity",
                                  {{"source", source},
                                   {"t", std::to_string(raw.t)},
                                   {"image_weight", std::to_string(image_weight)}}});
               if (!raw_values_nonnegative(raw))
                   emit(Violation{"invalid_image", {{"source", source}}});
           }));

    // Normalized images of the representable elements, in enumeration order.
    std::vector<std::optional<std::pair<Int, Bipartition>>> images(xs.size());
    run_indexed(opts.mode, xs.size(), [&](std::size_t i) {
        if (!raw_values_nonnegative(raws[i])) return;
        images[i] = std::make_pair(raws[i].t, image_bipartition(raws[i], opts.convention));
    });

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (images[i]) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (*images[a] != *images[b]) return *images[a] < *images[b];
        return a < b;
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        if (*images[order[k]] == *images[order[k + 1]]) {
            rep.violations.push_back(
                Violation{"not_injective",
                          {{"first_source", to_text(xs[order[k]].partition())},
                           {"second_source", to_text(xs[order[k + 1]].partition())},
                           {"t", std::to_string(images[order[k]]->first)},
                           {"image", to_text(images[order[k]]->second)}}});
        }
    }

    const std::vector<Int> ts = admissible_t_values(n);
    rep.counters["xn_count"] = static_cast<Int>(xs.size());
    rep.counters["admissible_t_values"] = static_cast<Int>(ts.size());
    for (Int t : ts) {
        const Int m = fiber_weight(n, t);
        std::vector<Bipartition> actual;
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (images[i] && images[i]->first == t) actual.push_back(images[i]->second);
        std::sort(actual.begin(), actual.end());
        std::vector<Bipartition> expected = enumerate_bipartitions(m, opts.cap);
        std::sort(expected.begin(), expected.end());
        rep.counters["fiber_t_" + std::to_string(t)] = static_cast<Int>(actual.size());

        std::size_t a = 0;
        std::size_t e = 0;
        while (a < actual.size() || e < expected.size()) {
            if (a < actual.size() && e < expected.size() && actual[a] == expected[e]) {
                ++a;
                ++e;
            } else if (e < expected.size() &&
                       (a == actual.size() || expected[e] < actual[a])) {
                rep.violations.push_back(Violation{"fiber_missing",
                                                   {{"t", std::to_string(t)},
                                                    {"bipartition", to_text(expected[e])}}});
                ++e;
            } else {
                rep.violations.push_back(Violation{"fiber_extra",
                                                   {{"t", std::to_string(t)},
                                                    {"bipartition", to_text(actual[a])}}});
                ++a;
            }
        }
    }
    return rep;
}

VerificationReport verify_lemma1(Int m, Int t, const Options& opts) {
    if (m < 0) throw PreconditionError("weight must be nonnegative");
    if (t < m) throw PreconditionError("lemma 1 regime needs t >= m");
    VerificationReport rep;
    rep.check = "lemma1";
    rep.params["m"] = m;
    rep.params["t"] = t;

    const std::vector<Bipartition> bps = enumerate_bipartitions(m, opts.cap);
    append(rep.violations,
           collect_indexed<Violation>(opts.mode, bps.size(), [&](std::size_t i, auto emit) {
               const XnElement image = closed_form_inverse(bps[i], t);
               const std::string bp_text = to_text(bps[i]);
               const std::string image_text = to_text(image.partition());
               Int odd_count = 0;
               for (Int part : image.partition().parts()) {
                   if (part % 2 == 0) {
                       if (part > 2 * m)
                           emit(Violation{"even_part_bound",
                                          {{"bipartition", bp_text},
                                           {"image", image_text},
                                           {"part", std::to_string(part)},
                                           {"bound", std::to_string(2 * m)}}});
                   } else {
                       ++odd_count;
                       if (part % 4 != 1)
                           emit(Violation{"odd_residue",
                                          {{"bipartition", bp_text},
                                           {"image", image_text},
                                           {"part", std::to_string(part)}}});
                   }
               }
               if (odd_count != t)
                   emit(Violation{"odd_count",
                                  {{"bipartition", bp_text},
                                   {"image", image_text},
                                   {"odd_parts", std::to_string(odd_count)},
                                   {"expected", std::to_string(t)}}});
           }));
    rep.counters["bipartitions_checked"] = static_cast<Int>(bps.size());
    rep.counters["n"] = source_weight(m, t);
    return rep;
}

VerificationReport verify_lemma2(Int m, Int t, const Options& opts) {
    if (m < 0) throw PreconditionError("weight must be nonnegative");
    if (t < m) throw PreconditionError("lemma 2 regime needs t >= m");
    VerificationReport rep;
    rep.check = "lemma2";
    rep.params["m"] = m;
    rep.params["t"] = t;

    const Int n = source_weight(m, t);
    const std::vector<XnElement> xs = enumerate_xn(n, opts.cap);
    const std::vector<RawImage> raws = raw_images(xs, opts.mode);
    const std::map<Bipartition, std::size_t> fiber =
        fiber_of(xs, raws, t, opts.convention, rep.violations);

    const std::vector<Bipartition> bps = enumerate_bipartitions(m, opts.cap);
    append(rep.violations,
           collect_indexed<Violation>(opts.mode, bps.size(), [&](std::size_t i, auto emit) {
               const Bipartition& bp = bps[i];
               const std::string bp_text = to_text(bp);
               const XnElement closed = closed_form_inverse(bp, t);
               const std::string closed_text = to_text(closed.partition());

               const auto found = fiber.find(bp);
               if (found == fiber.end()) {
                   emit(Violation{"preimage_missing",
                                  {{"bipartition", bp_text}, {"t", std::to_string(t)}}});
               } else if (!(xs[found->second] == closed)) {
                   emit(Violation{"inverse_mismatch",
                                  {{"bipartition", bp_text},
                                   {"closed_form", closed_text},
                                   {"brute_force", to_text(xs[found->second].partition())}}});
               }

               const RawImage raw = apply_replacement_rules(closed);
               if (raw.t != t || !raw_values_nonnegative(raw) ||
                   !(image_bipartition(raw, opts.convention) == bp)) {
                   emit(Violation{"roundtrip_mismatch",
                                  {{"bipartition", bp_text},
                                   {"image", closed_text},
                                   {"roundtrip_t", std::to_string(raw.t)}}});
               }

               // Recompute the coefficients from the image's odd/even split.
               const OddEvenSplit split = odd_even_split(closed);
               bool rederivable = static_cast<Int>(split.odd_parts.size()) == t &&
                                  split.even_parts.size() % 2 == 0;
               std::vector<Int> alpha_values;
               std::vector<Int> beta_values;
               if (rederivable) {
                   for (Int i1 = 1; i1 <= t && rederivable; ++i1) {
                       const Int base = 4 * (t - i1) + 1;
                       const Int diff = split.odd_parts[static_cast<std::size_t>(i1 - 1)] - base;
                       if (diff < 0 || diff % 4 != 0)
                           rederivable = false;
                       else
                           alpha_values.push_back(diff / 4);
                   }
                   for (std::size_t k = 0; rederivable && 2 * k + 1 < split.even_parts.size();
                        ++k) {
                       if (split.even_parts[2 * k] != split.even_parts[2 * k + 1])
                           rederivable = false;
                       else
                           beta_values.push_back(split.even_parts[2 * k + 1] / 2);
                   }
               }
               if (!rederivable ||
                   !(Bipartition{Partition(std::move(alpha_values)),
                                 Partition(std::move(beta_values))} == bp)) {
                   emit(Violation{"rederivation_mismatch",
                                  {{"bipartition", bp_text}, {"image", closed_text}}});
               }
           }));
    rep.counters["pairs_checked"] = static_cast<Int>(bps.size());
    rep.counters["xn_count"] = static_cast<Int>(xs.size());
    rep.counters["n"] = n;
    return rep;
}

VerificationReport verify_theorem(Int m, Int t, const Options& opts) {
    if (m < 0) throw PreconditionError("weight must be nonnegative");
    VerificationReport rep;
    rep.check = "theorem";
    rep.params["m"] = m;
    rep.params["t"] = t;

    const Int n = source_weight(m, t);
    if (n < 0) throw PreconditionError("no fiber: source weight 2t^2 - t + 4m is negative");
    rep.counters["n"] = n;

    const std::vector<Bipartition> bps = enumerate_bipartitions(m, opts.cap);
    const std::size_t count = bps.size();
    rep.counters["bipartitions"] = static_cast<Int>(count);

    std::vector<std::optional<XnElement>> images(count);
    if (t >= m) {
        run_indexed(opts.mode, count, [&](std::size_t i) {
            images[i] = closed_form_inverse(bps[i], t);
        });
        // Closed-form images are cheap to validate against the forward map.
        append(rep.violations,
               collect_indexed<Violation>(opts.mode, count, [&](std::size_t i, auto emit) {
                   const RawImage raw = apply_replacement_rules(*images[i]);
                   if (raw.t != t || !raw_values_nonnegative(raw) ||
                       !(image_bipartition(raw, opts.convention) == bps[i]))
                       emit(Violation{"roundtrip_mismatch",
                                      {{"bipartition", to_text(bps[i])},
                                       {"image", to_text(images[i]->partition())}}});
               }));
    } else {
        const std::vector<XnElement> xs = enumerate_xn(n, opts.cap);
        const std::vector<RawImage> raws = raw_images(xs, opts.mode);
        const std::map<Bipartition, std::size_t> fiber =
            fiber_of(xs, raws, t, opts.convention, rep.violations);
        for (std::size_t i = 0; i < count; ++i) {
            const auto found = fiber.find(bps[i]);
            if (found == fiber.end())
                rep.violations.push_back(
                    Violation{"preimage_missing",
                              {{"bipartition", to_text(bps[i])}, {"t", std::to_string(t)}}});
            else
                images[i] = xs[found->second];
        }
    }

    if (!rep.violations.empty()) {
        rep.counters["pairs_checked"] = 0;
        return rep;
    }

    append(rep.violations,
           collect_indexed<Violation>(opts.mode, count * count, [&](std::size_t idx, auto emit) {
               const std::size_t i = idx / count;
               const std::size_t j = idx % count;
               const Partition& pi = images[i]->partition();
               const Partition& pj = images[j]->partition();
               const bool induced = dominance_leq(pi, pj);
               const bool djm = djm_leq(bps[i], bps[j]);
               if (induced == djm) return;
               Violation v{"order_mismatch", {}};
               v.witness["a"] = to_text(bps[i]);
               v.witness["b"] = to_text(bps[j]);
               v.witness["image_a"] = to_text(pi);
               v.witness["image_b"] = to_text(pj);
               v.witness["induced_leq"] = bool_text(induced);
               v.witness["djm_leq"] = bool_text(djm);
               if (!induced) {
                   if (const auto f = first_dominance_failure(pi, pj))
                       v.witness["induced_detail"] = failure_text(*f);
               } else {
                   if (const auto f = first_djm_failure(bps[i], bps[j]))
                       v.witness["djm_detail"] = failure_text(*f);
               }
               emit(std::move(v));
           }));
    rep.counters["pairs_checked"] = static_cast<Int>(count * count);
    return rep;
}

std::vector<std::pair<Int, Int>> scan_threshold(Int m, Int t_min, Int t_max,
                                                const Options& opts) {
    if (t_min > t_max) throw PreconditionError("empty scan range: t_min > t_max");
    std::vector<std::pair<Int, Int>> out;
    for (Int t = t_min; t <= t_max; ++t) {
        const VerificationReport rep = verify_theorem(m, t, opts);
        out.emplace_back(t, static_cast<Int>(rep.violations.size()));
    }
    return out;
}

VerificationReport reproduce_counterexample(Int t, const Options& opts) {
    if (t < 2) throw PreconditionError("counterexample family is stated for t >= 2");
    VerificationReport rep;
    rep.check = "counterexample";
    rep.params["t"] = t;

    std::vector<Int> base;
    for (Int j = t; j >= 1; --j) base.push_back(4 * j + 1);
    std::vector<Int> lower = base;
    lower.push_back(3);
    lower.push_back(1);
    std::vector<Int> upper = base;
    upper.push_back(2);
    upper.push_back(2);

    const XnElement lambda{Partition(std::move(lower))};
    const XnElement lambda_prime{Partition(std::move(upper))};
    rep.counters["n"] = lambda.partition().weight();
    rep.counters["m"] = t + 1;

    const SpringerImage img = forward_map(lambda, opts.convention);
    const SpringerImage img_prime = forward_map(lambda_prime, opts.convention);

    const Bipartition expected{Partition(std::vector<Int>(static_cast<std::size_t>(t), 1)),
                               Partition(std::vector<Int>{1})};
    const Bipartition expected_prime{
        Partition(std::vector<Int>(static_cast<std::size_t>(t) + 1, 1)), Partition{}};

    if (img.t != t || !(img.bipartition == expected))
        rep.violations.push_back(Violation{"image_mismatch",
                                           {{"source", to_text(lambda.partition())},
                                            {"got_t", std::to_string(img.t)},
                                            {"got", to_text(img.bipartition)},
                                            {"expected", to_text(expected)}}});
    if (img_prime.t != t || !(img_prime.bipartition == expected_prime))
        rep.violations.push_back(Violation{"image_mismatch",
                                           {{"source", to_text(lambda_prime.partition())},
                                            {"got_t", std::to_string(img_prime.t)},
                                            {"got", to_text(img_prime.bipartition)},
                                            {"expected", to_text(expected_prime)}}});

    const bool source_gt = dominance_leq(lambda_prime.partition(), lambda.partition()) &&
                           !dominance_leq(lambda.partition(), lambda_prime.partition());
    if (!source_gt)
        rep.violations.push_back(
            Violation{"source_order",
                      {{"lambda", to_text(lambda.partition())},
                       {"lambda_prime", to_text(lambda_prime.partition())},
                       {"expected", "lambda > lambda_prime strictly"}}});

    const bool image_lt = djm_leq(img.bipartition, img_prime.bipartition) &&
                          !djm_leq(img_prime.bipartition, img.bipartition);
    if (!image_lt)
        rep.violations.push_back(Violation{"image_order",
                                           {{"image", to_text(img.bipartition)},
                                            {"image_prime", to_text(img_prime.bipartition)},
                                            {"expected", "image < image_prime strictly"}}});
    return rep;
}

VerificationReport verify_forward_invariants(Int n, const Options& opts) {
    if (n < 0) throw PreconditionError("weight must be nonnegative");
    VerificationReport rep;
    rep.check = "forward-invariants";
    rep.params["n"] = n;

    const std::vector<XnElement> xs = enumerate_xn(n, opts.cap);
    const std::vector<RawImage> raws = raw_images(xs, opts.mode);
    append(rep.violations,
           collect_indexed<Violation>(opts.mode, xs.size(), [&](std::size_t i, auto emit) {
               const RawImage& raw = raws[i];
               const std::string source = to_text(xs[i].partition());
               for (const LabeledEntry& e : raw.entries)
                   if (e.value < 0)
                       emit(Violation{"replaced_negative",
                                      {{"source", source},
                                       {"index", std::to_string(e.source_index)},
                                       {"value", std::to_string(e.value)}}});
               if (!non_increasing(raw.alpha_raw))
                   emit(Violation{"a_sequence_order", {{"source", source}}});
               if (!non_increasing(raw.beta_raw))
                   emit(Violation{"b_sequence_order", {{"source", source}}});
               if (n - 2 * raw.t * raw.t + raw.t != 4 * raw_image_weight(raw))
                   emit(Violation{"weight_identity",
                                  {{"source", source}, {"t", std::to_string(raw.t)}}});
               if (!mod4_equal(raw.t, n))
                   emit(Violation{"defect_residue",
                                  {{"source", source}, {"t", std::to_string(raw.t)}}});
           }));
    rep.counters["xn_count"] = static_cast<Int>(xs.size());
    Int entries = 0;
    for (const RawImage& raw : raws) entries += static_cast<Int>(raw.entries.size());
    rep.counters["entries_checked"] = entries;
    return rep;
}

namespace {

template <class T, class LeqFn, class TextFn>
void check_axioms(VerificationReport& rep, const std::vector<T>& els, LeqFn leq, TextFn text,
                  const Options& opts) {
    const std::size_t n = els.size();
    rep.counters["elements"] = static_cast<Int>(n);

    append(rep.violations,
           collect_indexed<Violation>(opts.mode, n, [&](std::size_t i, auto emit) {
               if (!leq(els[i], els[i]))
                   emit(Violation{"not_reflexive", {{"element", text(els[i])}}});
           }));

    append(rep.violations,
           collect_indexed<Violation>(opts.mode, n * n, [&](std::size_t idx, auto emit) {
               const std::size_t i = idx / n;
               const std::size_t j = idx % n;
               if (i >= j) return;
               if (leq(els[i], els[j]) && leq(els[j], els[i]) && !(els[i] == els[j]))
                   emit(Violation{"not_antisymmetric",
                                  {{"a", text(els[i])}, {"b", text(els[j])}}});
           }));
    rep.counters["pairs_checked"] = static_cast<Int>(n * (n - (n > 0 ? 1 : 0)) / 2);

    auto triple_violation = [&](std::size_t i, std::size_t j, std::size_t k, auto emit) {
        if (leq(els[i], els[j]) && leq(els[j], els[k]) && !leq(els[i], els[k]))
            emit(Violation{"not_transitive",
                           {{"a", text(els[i])}, {"b", text(els[j])}, {"c", text(els[k])}}});
    };

    if (n <= kExhaustiveTransitivityLimit) {
        rep.params["sampled"] = 0;
        append(rep.violations,
               collect_indexed<Violation>(opts.mode, n * n * n, [&](std::size_t idx, auto emit) {
                   triple_violation(idx / (n * n), (idx / n) % n, idx % n, emit);
               }));
        rep.counters["triples_checked"] = static_cast<Int>(n * n * n);
    } else {
        rep.params["sampled"] = 1;
        rep.params["seed"] = static_cast<Int>(kTripleSeed);
        std::mt19937_64 rng(kTripleSeed);
        std::vector<std::array<std::size_t, 3>> triples(kSampledTriples);
        for (auto& tr : triples)
            tr = {static_cast<std::size_t>(rng() % n), static_cast<std::size_t>(rng() % n),
                  static_cast<std::size_t>(rng() % n)};
        append(rep.violations,
               collect_indexed<Violation>(opts.mode, triples.size(),
                                          [&](std::size_t idx, auto emit) {
                                              const auto& tr = triples[idx];
                                              triple_violation(tr[0], tr[1], tr[2], emit);
                                          }));
        rep.counters["triples_checked"] = static_cast<Int>(kSampledTriples);
    }
}

}  // namespace

VerificationReport verify_axioms_dominance_xn(Int n, const Options& opts) {
    if (n < 0) throw PreconditionError("weight must be nonnegative");
    VerificationReport rep;
    rep.check = "axioms-dominance-xn";
    rep.params["n"] = n;
    const std::vector<XnElement> els = enumerate_xn(n, opts.cap);
    check_axioms(
        rep, els,
        [](const XnElement& a, const XnElement& b) {
            return dominance_leq(a.partition(), b.partition());
        },
        [](const XnElement& e) { return to_text(e.partition()); }, opts);
    return rep;
}

VerificationReport verify_axioms_djm(Int m, const Options& opts) {
    if (m < 0) throw PreconditionError("weight must be nonnegative");
    VerificationReport rep;
    rep.check = "axioms-djm";
    rep.params["m"] = m;
    const std::vector<Bipartition> els = enumerate_bipartitions(m, opts.cap);
    check_axioms(
        rep, els, [](const Bipartition& a, const Bipartition& b) { return djm_leq(a, b); },
        [](const Bipartition& e) { return to_text(e); }, opts);
    return rep;
}

}  // namespace springer
