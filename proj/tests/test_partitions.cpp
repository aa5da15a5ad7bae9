#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "springer/partition.hpp"

using namespace springer;

namespace {

Partition P(std::vector<Int> v) { return Partition(std::move(v)); }

Int stream_count(Int n) {
    Int count = 0;
    for_each_partition(n, [&](const Partition&) { ++count; });
    return count;
}

}  // namespace

TEST_CASE("construction normalizes") {
    const Partition p = P({3, 1, 3});
    CHECK(p.parts() == std::vector<Int>{3, 3, 1});
    CHECK(p.weight() == 7);

    CHECK(Partition{}.weight() == 0);
    CHECK(P({}).parts().empty());

    const Partition q = P({0, 2, 2, 0});
    CHECK(q.parts() == std::vector<Int>{2, 2});
    CHECK(q.weight() == 4);

    CHECK_THROWS_AS(P({1, -1}), PreconditionError);
}

TEST_CASE("normalization is idempotent") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<Int> values(rng() % 12);
        for (auto& v : values) v = static_cast<Int>(rng() % 9);
        const Partition once(values);
        const Partition twice(once.parts());
        CHECK(once == twice);
    }
}

TEST_CASE("indexing has a zero tail") {
    const Partition p = P({3, 1});
    CHECK(p.part(0) == 3);
    CHECK(p.part(1) == 1);
    CHECK(p.part(2) == 0);
    CHECK(p.part(100) == 0);
    CHECK(P({3, 1, 0, 0}) == p);
    CHECK(P({3, 1, 0, 0}).weight() == p.weight());
}

TEST_CASE("xn membership") {
    CHECK(is_in_xn(P({3, 1})));
    CHECK_FALSE(is_in_xn(P({3, 3})));
    CHECK_FALSE(is_in_xn(P({2, 2, 2})));
    CHECK(is_in_xn(P({})));
    CHECK(is_in_xn(P({2, 2})));
    CHECK(is_in_xn(P({4, 4, 4, 4, 3})));
    CHECK_FALSE(is_in_xn(P({4, 4, 2})));

    CHECK_THROWS_AS(XnElement(P({3, 3})), PreconditionError);
    CHECK(XnElement(P({3, 1})).partition() == P({3, 1}));
}

TEST_CASE("partition enumeration order at small n") {
    const std::vector<Partition> want = {P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}),
                                         P({1, 1, 1, 1})};
    CHECK(enumerate_partitions(4) == want);
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(enumerate_partitions(1) == std::vector<Partition>{P({1})});
}

TEST_CASE("enumeration counts match the classical partition numbers") {
    const std::vector<Int> a000041 = {1,  1,  2,  3,  5,   7,   11,  15,  22,  30, 42,
                                      56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    for (Int n = 0; n <= 20; ++n)
        CHECK(stream_count(n) == a000041[static_cast<std::size_t>(n)]);

    const auto dp = oracle::partition_counts(34);
    for (Int n = 21; n <= 34; ++n) CHECK(stream_count(n) == dp[static_cast<std::size_t>(n)]);

    // streams are strictly lexicographically decreasing, hence duplicate-free
    for (Int n = 0; n <= 12; ++n) {
        const auto all = enumerate_partitions(n);
        for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i] > all[i + 1]);
    }
}

TEST_CASE("xn enumeration equals the condition filter") {
    CHECK(enumerate_xn(4) == std::vector<XnElement>{XnElement(P({3, 1})), XnElement(P({2, 2}))});
    CHECK(enumerate_xn(2).empty());
    CHECK(enumerate_xn(3) == std::vector<XnElement>{XnElement(P({3}))});

    for (Int n = 0; n <= 25; ++n) {
        const auto xs = enumerate_xn(n);
        CHECK(static_cast<Int>(xs.size()) == oracle::xn_count(n));
        for (const XnElement& el : xs) {
            // re-check the two conditions with a plain multiset count
            std::map<Int, Int> mult;
            for (Int part : el.partition().parts()) ++mult[part];
            for (const auto& [value, count] : mult) {
                if (value % 2 != 0)
                    CHECK(count == 1);
                else
                    CHECK(count % 2 == 0);
            }
        }
    }
}

TEST_CASE("xn members have odd-part count congruent to n mod 2") {
    for (Int n = 0; n <= 20; ++n) {
        for (const XnElement& el : enumerate_xn(n)) {
            Int odd = 0;
            for (Int part : el.partition().parts())
                if (part % 2 != 0) ++odd;
            CHECK(((odd - n) % 2 + 2) % 2 == 0);
        }
    }
}

TEST_CASE("bipartition enumeration") {
    CHECK(enumerate_bipartitions(0) == std::vector<Bipartition>{Bipartition{}});
    CHECK(enumerate_bipartitions(1) ==
          std::vector<Bipartition>{Bipartition{P({1}), {}}, Bipartition{{}, P({1})}});
    const std::vector<Bipartition> m2 = {Bipartition{P({2}), {}}, Bipartition{P({1, 1}), {}},
                                         Bipartition{P({1}), P({1})}, Bipartition{{}, P({2})},
                                         Bipartition{{}, P({1, 1})}};
    CHECK(enumerate_bipartitions(2) == m2);

    for (Int m = 0; m <= 12; ++m)
        CHECK(static_cast<Int>(enumerate_bipartitions(m).size()) ==
              oracle::bipartition_count(m));
}

TEST_CASE("caps are enforced and named") {
    CHECK_THROWS_AS(enumerate_partitions(61), CapExceededError);
    CHECK_THROWS_AS(enumerate_xn(11, 10), CapExceededError);
    CHECK_THROWS_AS(enumerate_bipartitions(61), CapExceededError);
    try {
        enumerate_xn(11, 10);
        CHECK(false);
    } catch (const CapExceededError& e) {
        CHECK(e.cap() == 10);
        CHECK(e.requested() == 11);
        CHECK(std::string(e.what()).find("10") != std::string::npos);
    }
    CHECK_THROWS_AS(enumerate_partitions(-1), PreconditionError);
}

TEST_CASE("text formats round-trip over full enumerations") {
    CHECK(to_text(Partition{}) == "");
    CHECK(to_text(P({9, 5, 3, 1})) == "9,5,3,1");
    CHECK(to_text(Bipartition{P({1, 1}), P({1})}) == "1,1/1");
    CHECK(to_text(Bipartition{}) == "/");

    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("9,5,3,1") == P({9, 5, 3, 1}));
    CHECK(parse_bipartition("1,1/1") == Bipartition{P({1, 1}), P({1})});
    CHECK(parse_bipartition("/1") == Bipartition{{}, P({1})});
    CHECK(parse_bipartition("/") == Bipartition{});

    for (Int n = 0; n <= 12; ++n)
        for (const Partition& p : enumerate_partitions(n)) CHECK(parse_partition(to_text(p)) == p);
    for (Int m = 0; m <= 12; ++m)
        for (const Bipartition& bp : enumerate_bipartitions(m))
            CHECK(parse_bipartition(to_text(bp)) == bp);
}

TEST_CASE("parse errors carry 1-based positions") {
    auto position_of = [](auto fn) -> std::size_t {
        try {
            fn();
        } catch (const ParseError& e) {
            return e.position();
        }
        return 0;
    };
    CHECK(position_of([] { parse_partition("9,x"); }) == 3);
    CHECK(position_of([] { parse_partition("1,-2"); }) == 3);
    CHECK(position_of([] { parse_partition(","); }) == 1);
    CHECK(position_of([] { parse_partition("3, 1"); }) == 3);
    CHECK(position_of([] { parse_bipartition("1,1"); }) == 4);
    CHECK(position_of([] { parse_bipartition("1/2/3"); }) == 4);
    CHECK(position_of([] { parse_bipartition("1,1/x"); }) == 5);
}
