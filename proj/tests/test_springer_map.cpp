#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "springer/springer_map.hpp"

using namespace springer;

namespace {

Partition P(std::vector<Int> v) { return Partition(std::move(v)); }
XnElement X(std::vector<Int> v) { return XnElement(P(std::move(v))); }
Bipartition BP(std::vector<Int> a, std::vector<Int> b) {
    return Bipartition{P(std::move(a)), P(std::move(b))};
}

}  // namespace

TEST_CASE("delta by residue mod 4") {
    CHECK(delta(2) == 0);
    CHECK(delta(1) == 1);
    CHECK(delta(3) == -1);
    CHECK(delta(5) == 1);
    CHECK(delta(7) == -1);
    CHECK(delta(9) == 1);
    CHECK_THROWS_AS(delta(0), PreconditionError);

    // against the sign exponent part*(part-1)/2 evaluated directly
    for (Int part = 1; part <= 199; part += 2) {
        const Int exponent = part * (part - 1) / 2;
        CHECK(delta(part) == (exponent % 2 == 0 ? 1 : -1));
    }
    for (Int part = 2; part <= 200; part += 2) CHECK(delta(part) == 0);
}

TEST_CASE("delta profile examples") {
    const DeltaProfile p1 = delta_profile(X({3, 1}));
    CHECK(p1.deltas == std::vector<int>{-1, 1});
    CHECK(p1.tail_sums == std::vector<Int>{1, 0});
    CHECK(p1.total == 0);

    const DeltaProfile p2 = delta_profile(X({9, 5, 3, 1}));
    CHECK(p2.total == 2);
    CHECK(p2.tail_sums == std::vector<Int>{1, 0, 1, 0});

    const DeltaProfile p3 = delta_profile(XnElement(Partition{}));
    CHECK(p3.total == 0);
    CHECK(p3.deltas.empty());
}

TEST_CASE("delta profile tail sums are suffix sums") {
    for (Int n = 0; n <= 15; ++n) {
        for (const XnElement& el : enumerate_xn(n)) {
            const DeltaProfile prof = delta_profile(el);
            for (std::size_t i = 0; i < prof.deltas.size(); ++i) {
                CHECK((prof.deltas[i] == 0) == (el.partition().parts()[i] % 2 == 0));
                Int suffix = 0;
                for (std::size_t j = i + 1; j < prof.deltas.size(); ++j)
                    suffix += prof.deltas[j];
                CHECK(prof.tail_sums[i] == suffix);
            }
        }
    }
}

TEST_CASE("even runs are maximal blocks") {
    const auto runs = even_runs(X({9, 5, 2, 2}));
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].value == 2);
    CHECK(runs[0].multiplicity == 2);
    CHECK(runs[0].start_index == 2);

    const auto runs2 = even_runs(X({4, 4, 2, 2}));
    REQUIRE(runs2.size() == 2);
    CHECK(runs2[0].value == 4);
    CHECK(runs2[1].value == 2);
    CHECK(runs2[1].start_index == 2);

    CHECK(even_runs(X({3, 1})).empty());
}

TEST_CASE("forward map on the worked examples") {
    const SpringerImage a = forward_map(X({9, 5, 3, 1}));
    CHECK(a.t == 2);
    CHECK(a.bipartition == BP({1, 1}, {1}));
    CHECK(a.alpha_raw == std::vector<Int>{1, 1, 0});
    CHECK(a.beta_raw == std::vector<Int>{1});

    const SpringerImage b = forward_map(X({9, 5, 2, 2}));
    CHECK(b.t == 2);
    CHECK(b.bipartition == BP({1, 1, 1}, {}));

    const SpringerImage c = forward_map(X({3}));
    CHECK(c.t == -1);
    CHECK(c.bipartition == Bipartition{});

    const SpringerImage d = forward_map(X({2, 2}));
    CHECK(d.t == 0);
    CHECK(d.bipartition == BP({}, {1}));
    CHECK(d.alpha_raw == std::vector<Int>{1});
    CHECK(d.beta_raw == std::vector<Int>{0});
    REQUIRE(d.entries.size() == 2);
    CHECK(d.entries[0].label == Label::B);
    CHECK(d.entries[0].value == 0);
    CHECK(d.entries[0].source_index == 0);
    CHECK(d.entries[1].label == Label::A);
    CHECK(d.entries[1].value == 1);

    const SpringerImage e = forward_map(X({3, 1}));
    CHECK(e.t == 0);
    CHECK(e.bipartition == BP({1}, {}));
}

TEST_CASE("even runs alternate labels b,a,b,a") {
    const SpringerImage img = forward_map(X({2, 2, 2, 2}));
    REQUIRE(img.entries.size() == 4);
    CHECK(img.entries[0].label == Label::B);
    CHECK(img.entries[1].label == Label::A);
    CHECK(img.entries[2].label == Label::B);
    CHECK(img.entries[3].label == Label::A);
    CHECK(img.alpha_raw == std::vector<Int>{1, 1});
    CHECK(img.beta_raw == std::vector<Int>{0, 0});
    CHECK(img.t == 0);
    CHECK(img.bipartition == BP({}, {1, 1}));

    const SpringerImage mixed = forward_map(X({4, 4, 3, 1}));
    CHECK(mixed.t == 0);
    CHECK(mixed.bipartition == BP({1, 1}, {1}));
}

TEST_CASE("t = 0 convention switch") {
    CHECK(forward_map(X({2, 2}), Convention::T0Keep).bipartition == BP({1}, {}));
    CHECK(forward_map(X({3, 1}), Convention::T0Keep).bipartition == BP({}, {1}));
    // negative and positive t are unaffected by the switch
    CHECK(forward_map(X({3}), Convention::T0Keep).bipartition == Bipartition{});
    CHECK(forward_map(X({9, 5, 3, 1}), Convention::T0Keep).bipartition == BP({1, 1}, {1}));
}

TEST_CASE("odd even split") {
    const OddEvenSplit s = odd_even_split(X({9, 5, 4, 4, 1}));
    CHECK(s.odd_parts == std::vector<Int>{9, 5, 1});
    CHECK(s.even_parts == std::vector<Int>{4, 4});
    CHECK(odd_even_split(X({2, 2})).odd_parts.empty());
    CHECK(odd_even_split(X({3, 1})).even_parts.empty());
}

TEST_CASE("closed form inverse on the worked examples") {
    CHECK(closed_form_inverse(BP({}, {2}), 3).partition() == P({9, 5, 4, 4, 1}));
    CHECK(closed_form_inverse(Bipartition{}, 1).partition() == P({1}));
    const XnElement big = closed_form_inverse(BP({1, 1}, {1}), 5);
    CHECK(big.partition() == P({21, 17, 9, 5, 2, 2, 1}));
    CHECK(big.partition().weight() == 57);
    CHECK(closed_form_inverse(Bipartition{}, 0).partition() == Partition{});

    CHECK_THROWS_AS(closed_form_inverse(BP({1}, {}), 0), PreconditionError);
    CHECK_THROWS_AS(closed_form_inverse(BP({2, 1}, {1}), 3), PreconditionError);
}

TEST_CASE("closed form weight formula") {
    for (Int m = 0; m <= 3; ++m) {
        for (Int t = m; t <= 4; ++t) {
            for (const Bipartition& bp : enumerate_bipartitions(m)) {
                CHECK(closed_form_inverse(bp, t).partition().weight() == source_weight(m, t));
            }
        }
    }
}

TEST_CASE("forward of closed form round-trips and matches brute force") {
    for (Int m = 0; m <= 3; ++m) {
        for (Int t = m; t <= 3; ++t) {
            for (const Bipartition& bp : enumerate_bipartitions(m)) {
                const XnElement closed = closed_form_inverse(bp, t);
                const SpringerImage img = forward_map(closed);
                CHECK(img.t == t);
                CHECK(img.bipartition == bp);
                const auto brute = brute_force_inverse(bp, t);
                REQUIRE(brute.has_value());
                CHECK(*brute == closed);
            }
        }
    }
}

TEST_CASE("brute force inverse on the worked examples") {
    const auto a = brute_force_inverse(BP({1, 1}, {1}), 2);
    REQUIRE(a.has_value());
    CHECK(a->partition() == P({9, 5, 3, 1}));
    CHECK(a->partition().weight() == 18);

    const auto b = brute_force_inverse(BP({}, {1}), 0);
    REQUIRE(b.has_value());
    CHECK(b->partition() == P({2, 2}));

    const auto c = brute_force_inverse(BP({1}, {}), 0);
    REQUIRE(c.has_value());
    CHECK(c->partition() == P({3, 1}));

    Options keep;
    keep.convention = Convention::T0Keep;
    const auto d = brute_force_inverse(BP({1}, {}), 0, keep);
    REQUIRE(d.has_value());
    CHECK(d->partition() == P({2, 2}));

    CHECK_THROWS_AS(brute_force_inverse(BP({1}, {}), 10), CapExceededError);
}

TEST_CASE("forward map structural invariants at small n") {
    for (Int n = 0; n <= 22; ++n) {
        std::set<std::pair<Int, Bipartition>> seen;
        for (const XnElement& el : enumerate_xn(n)) {
            const SpringerImage img = forward_map(el);  // throws on any violation
            CHECK(((img.t - n) % 4 + 4) % 4 == 0);
            Int raw_weight = 0;
            for (const LabeledEntry& entry : img.entries) {
                CHECK(entry.value >= 0);
                raw_weight += entry.value;
            }
            CHECK(n - 2 * img.t * img.t + img.t == 4 * raw_weight);
            CHECK(img.bipartition.weight() == fiber_weight(n, img.t));
            CHECK(seen.insert({img.t, img.bipartition}).second);  // injective
        }
    }
}

TEST_CASE("lemma 1 part residues via the closed form") {
    for (Int m = 0; m <= 3; ++m) {
        for (Int t = m; t <= 5; ++t) {
            for (const Bipartition& bp : enumerate_bipartitions(m)) {
                const XnElement image = closed_form_inverse(bp, t);
                Int odd = 0;
                for (Int part : image.partition().parts()) {
                    if (part % 2 != 0) {
                        CHECK(part % 4 == 1);
                        ++odd;
                    } else {
                        CHECK(part <= 2 * m);
                    }
                }
                CHECK(odd == t);
            }
        }
    }
}
