#include "gpf/progressions.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "gpf/errors.hpp"
#include "support/oracles.hpp"

namespace gpf {
namespace {

using IntSet = std::vector<std::uint64_t>;

std::set<IntSet> as_sets(const std::vector<GpSet>& gps) {
    std::set<IntSet> out;
    for (const auto& g : gps) out.insert(IntSet(g.elements().begin(), g.elements().end()));
    return out;
}

TEST(Ratio, ReducesAndOrients) {
    EXPECT_EQ(canonical_ratio(6, 4), canonical_ratio(3, 2));
    EXPECT_EQ(canonical_ratio(6, 4).p(), 3u);
    EXPECT_EQ(canonical_ratio(6, 4).q(), 2u);
    EXPECT_EQ(canonical_ratio(2, 3), canonical_ratio(3, 2));
}

TEST(Ratio, RejectsOneAndNonpositive) {
    EXPECT_THROW(canonical_ratio(5, 5), DomainError);
    EXPECT_THROW(canonical_ratio(0, 3), DomainError);
    EXPECT_THROW(canonical_ratio(3, -1), DomainError);
}

TEST(Expand, KnownProgressions) {
    EXPECT_EQ(expand({1, canonical_ratio(3, 2), 4}), (IntSet{8, 12, 18, 27}));
    EXPECT_EQ(expand({1, canonical_ratio(2, 1), 3}), (IntSet{1, 2, 4}));
    EXPECT_EQ(expand({29, canonical_ratio(5, 3), 3}), (IntSet{9 * 29, 15 * 29, 25 * 29}));
}

TEST(Expand, OverflowIsReported) {
    EXPECT_THROW(expand({1, canonical_ratio(2, 1), 65}), OverflowError);
    EXPECT_THROW(expand({std::uint64_t{1} << 62, canonical_ratio(3, 1), 3}), OverflowError);
    // 2^63 is the largest power of two that fits.
    EXPECT_NO_THROW(expand({1, canonical_ratio(2, 1), 64}));
    EXPECT_THROW(expand({1, canonical_ratio(2, 1), 2}), DomainError);
}

TEST(GpSet, ValidatesInput) {
    EXPECT_EQ(GpSet::from_elements({27, 8, 18, 12}).ratio(), canonical_ratio(3, 2));
    EXPECT_THROW(GpSet::from_elements({1, 2, 3}), DomainError);
    EXPECT_THROW(GpSet::from_elements({1, 2}), DomainError);
    EXPECT_THROW(GpSet::from_elements({2, 2, 2}), DomainError);
    EXPECT_THROW(GpSet::from_elements({0, 0, 0}), DomainError);
}

TEST(Enumerate, SmallCases) {
    const auto gps = enumerate_gps(10, 3);
    EXPECT_EQ(as_sets(gps), (std::set<IntSet>{{1, 2, 4}, {2, 4, 8}, {1, 3, 9}, {4, 6, 9}}));
    // (p, q, m) order: ratio 2 (m = 1, 2), ratio 3, ratio 3/2.
    ASSERT_EQ(gps.size(), 4u);
    EXPECT_EQ(IntSet(gps[0].elements().begin(), gps[0].elements().end()), (IntSet{1, 2, 4}));
    EXPECT_EQ(IntSet(gps[3].elements().begin(), gps[3].elements().end()), (IntSet{4, 6, 9}));
    EXPECT_TRUE(enumerate_gps(3, 3).empty());
}

TEST(Enumerate, HundredThreeTermsMatchesTripleOracle) {
    const auto oracle = testing::triples_with_square_middle(100);
    EXPECT_EQ(oracle.size(), 105u);
    EXPECT_EQ(as_sets(enumerate_gps(100, 3)), oracle);
}

TEST(Enumerate, RejectsBadInput) {
    EXPECT_THROW(enumerate_gps(10, 2), DomainError);
    EXPECT_THROW(enumerate_gps(0, 3), DomainError);
}

TEST(BruteForce, MatchesKnownAnswers) {
    EXPECT_EQ(as_sets(brute_force_gps(10, 3)), as_sets(enumerate_gps(10, 3)));
    EXPECT_EQ(as_sets(brute_force_gps(15, 4)), (std::set<IntSet>{{1, 2, 4, 8}}));
    EXPECT_TRUE(brute_force_gps(3, 3).empty());
}

TEST(BruteForce, RefusesLargeInputs) {
    EXPECT_THROW(brute_force_gps(1000, 3), DomainError);
    EXPECT_NO_THROW(brute_force_gps(60, 3));
}

TEST(Enumerate, AgreesWithBruteForceUpToForty) {
    for (unsigned k = 3; k <= 5; ++k)
        for (std::uint64_t n = 1; n <= 40; ++n)
            ASSERT_EQ(as_sets(enumerate_gps(n, k)), as_sets(brute_force_gps(n, k))) << "n=" << n << " k=" << k;
}

TEST(Enumerate, MembersAreWellFormed) {
    for (unsigned k = 3; k <= 6; ++k) {
        const std::uint64_t n = 2000;
        const auto gps = enumerate_gps(n, k);
        EXPECT_EQ(as_sets(gps).size(), gps.size()) << "duplicates for k=" << k;
        for (const auto& g : gps) {
            ASSERT_EQ(g.size(), k);
            EXPECT_GE(g.front(), 1u);
            EXPECT_LE(g.back(), n);
            EXPECT_EQ(expand(g.to_progression()), IntSet(g.elements().begin(), g.elements().end()));
            // The descending reading of a progression is the same set.
            IntSet reversed(g.elements().rbegin(), g.elements().rend());
            EXPECT_EQ(GpSet::from_elements(reversed), g);
        }
    }
}

TEST(Enumerate, MonotoneInN) {
    for (unsigned k = 3; k <= 4; ++k) {
        auto previous = as_sets(enumerate_gps(1, k));
        for (std::uint64_t n = 2; n <= 300; ++n) {
            auto current = as_sets(enumerate_gps(n, k));
            EXPECT_TRUE(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
            previous = std::move(current);
        }
    }
}

TEST(FindGp, Examples) {
    const IntSet paper{8, 12, 18, 27};
    auto w = find_gp(paper, 4);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(IntSet(w->elements().begin(), w->elements().end()), paper);

    EXPECT_FALSE(find_gp(IntSet{1, 2}, 3).has_value());
    EXPECT_FALSE(find_gp(IntSet{}, 3).has_value());
    EXPECT_TRUE(is_gp_free(IntSet{1, 2, 3, 5, 6, 7, 8, 10}, 3));
    EXPECT_THROW(find_gp(IntSet{0, 1, 2}, 3), DomainError);
}

TEST(FindGp, UnsortedAndDuplicatedInput) {
    EXPECT_TRUE(find_gp(IntSet{9, 1, 3, 3, 3}, 3).has_value());
    EXPECT_FALSE(find_gp(IntSet{4, 4, 4, 2}, 3).has_value());
}

TEST(FindGp, LargeSparseValues) {
    const std::uint64_t big = std::uint64_t{1} << 40;
    EXPECT_TRUE(find_gp(IntSet{big, 3 * big, 9 * big, 5}, 3).has_value());
    EXPECT_FALSE(find_gp(IntSet{big, 3 * big, 8 * big, 5}, 3).has_value());
}

// Random subsets: witness existence matches the enumeration, the rational
// oracle, and both internal strategies.
TEST(FindGp, PropertyAgreesWithEnumeration) {
    std::mt19937_64 rng(20261014);
    for (int trial = 0; trial < 400; ++trial) {
        const unsigned k = 3 + trial % 3;
        const std::uint64_t n = 20 + rng() % 200;
        std::bernoulli_distribution keep(0.2 + 0.6 * (trial % 7) / 6.0);
        IntSet set;
        for (std::uint64_t x = 1; x <= n; ++x)
            if (keep(rng)) set.push_back(x);
        if (set.empty()) continue;

        bool expected = false;
        for (const auto& g : enumerate_gps(set.back(), k))
            if (std::all_of(g.elements().begin(), g.elements().end(),
                            [&](auto x) { return std::binary_search(set.begin(), set.end(), x); })) {
                expected = true;
                break;
            }
        const auto w = find_gp(set, k);
        ASSERT_EQ(w.has_value(), expected) << "trial " << trial;
        EXPECT_EQ(testing::contains_gp_rational(set, k), expected);
        EXPECT_EQ(detail::find_gp_by_pairs(set, k).has_value(), expected);
        EXPECT_EQ(detail::find_gp_by_walk(set, k).has_value(), expected);
        if (w) {
            EXPECT_EQ(w->size(), k);
            for (auto x : w->elements()) EXPECT_TRUE(std::binary_search(set.begin(), set.end(), x));
        }
    }
}

}  // namespace
}  // namespace gpf
