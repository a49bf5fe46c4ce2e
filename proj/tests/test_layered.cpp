#include "superpattern/classes.hpp"
#include "superpattern/layered.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace superpattern;

namespace {
LayerProfile P(std::vector<LayerSize> s) { return LayerProfile{std::move(s)}; }
}  // namespace

TEST(Realize, Examples) {
    EXPECT_EQ(realize(P({3, 1, 2, 1})), parse("3 2 1 4 6 5 7"));
    EXPECT_EQ(realize(P({6})), decreasing(6));
    EXPECT_EQ(realize(P({1, 1, 1})), (Permutation{1, 2, 3}));
    EXPECT_TRUE(realize(P({})).empty());
    EXPECT_THROW(realize(P({2, 0})), std::invalid_argument);
}

TEST(LayerProfileOf, Examples) {
    EXPECT_EQ(layer_profile(parse("3 2 1 4 6 5 7")), P({3, 1, 2, 1}));
    EXPECT_EQ(layer_profile(Permutation::identity(5)), P({1, 1, 1, 1, 1}));
    EXPECT_EQ(layer_profile(Permutation{}), P({}));
    EXPECT_FALSE(layer_profile(Permutation{2, 4, 1, 3}));
    EXPECT_TRUE(contains(Permutation{2, 3, 1}, Permutation{2, 4, 1, 3}));
    EXPECT_FALSE(layer_profile(Permutation{1, 3, 4, 2}));
    EXPECT_FALSE(layer_profile(Permutation{3, 1, 2}));
}

TEST(LayerProfileOf, RoundTripsAllProfilesUpTo12) {
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const auto& p : CompositionRange(n)) {
            const auto perm = realize(p);
            ASSERT_EQ(perm.size(), n);
            ASSERT_EQ(layer_profile(perm), p);
        }
    }
}

TEST(LayerProfileOf, CharacterizedBy231And312) {
    const Permutation p231{2, 3, 1}, p312{3, 1, 2};
    for (std::size_t n = 0; n <= 7; ++n) {
        for (const auto& perm : oracle::all_permutations(n)) {
            const bool excluded = oracle::contains(p231, perm) || oracle::contains(p312, perm);
            ASSERT_EQ(!layer_profile(perm).has_value(), excluded) << format(perm);
        }
    }
}

TEST(ProfileText, ParseAndFormat) {
    EXPECT_EQ(format(P({3, 1, 2, 1})), "[3,1,2,1]");
    EXPECT_EQ(parse_profile("[3,1,2,1]"), P({3, 1, 2, 1}));
    EXPECT_EQ(parse_profile(" [ 3, 1 ,2 ] "), P({3, 1, 2}));
    EXPECT_EQ(parse_profile("[]"), P({}));
    EXPECT_THROW(parse_profile("3,1"), ParseError);
    EXPECT_THROW(parse_profile("[3,0]"), ParseError);
    EXPECT_THROW(parse_profile("[3,,1]"), ParseError);
    EXPECT_THROW(parse_profile("[a]"), ParseError);
}

TEST(EnumerateLayered, SmallCases) {
    const auto three = enumerate_layered(3);
    ASSERT_EQ(three.size(), 4u);
    EXPECT_EQ(three[0], P({1, 1, 1}));
    EXPECT_EQ(three[1], P({1, 2}));
    EXPECT_EQ(three[2], P({2, 1}));
    EXPECT_EQ(three[3], P({3}));
    EXPECT_EQ(realize(three[0]), (Permutation{1, 2, 3}));
    EXPECT_EQ(realize(three[1]), (Permutation{1, 3, 2}));
    EXPECT_EQ(realize(three[2]), (Permutation{2, 1, 3}));
    EXPECT_EQ(realize(three[3]), (Permutation{3, 2, 1}));

    const auto zero = enumerate_layered(0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_TRUE(zero[0].sizes.empty());

    EXPECT_EQ(enumerate_layered(10).size(), 512u);
}

TEST(EnumerateLayered, MatchesRecursiveCompositions) {
    for (std::size_t n = 0; n <= 16; ++n) {
        const auto expected = oracle::compositions(n);
        CompositionRange range(n);
        ASSERT_EQ(range.size(), expected.size());
        ASSERT_EQ(range.size(), n == 0 ? 1u : (1u << (n - 1)));
        std::size_t i = 0;
        for (const auto& p : range) ASSERT_EQ(p.sizes, expected[i++]) << "n=" << n;
    }
}

TEST(EnumerateLayered, LexicographicInBothForms) {
    const auto profiles = enumerate_layered(8);
    for (std::size_t i = 1; i < profiles.size(); ++i) {
        EXPECT_LT(profiles[i - 1], profiles[i]);
        EXPECT_LT(realize(profiles[i - 1]), realize(profiles[i]));
    }
}

TEST(EnumerateLayered, SubRangesAreRestartable) {
    const auto all = enumerate_layered(9);
    std::vector<LayerProfile> stitched;
    for (std::uint64_t b = 0; b < 256; b += 37) {
        for (const auto& p : CompositionRange(9, b, b + 37)) stitched.push_back(p);
    }
    EXPECT_EQ(stitched, all);
    EXPECT_EQ(CompositionRange(9, 300, 200).size(), 0u);
}

TEST(EnumerateLayered, CapEnforced) {
    EXPECT_THROW(enumerate_layered(21), std::length_error);
    EXPECT_NO_THROW(enumerate_layered(5, 5));
    EXPECT_THROW(enumerate_layered(6, 5), std::length_error);
}

TEST(LayeredContains, Examples) {
    const auto host = P({3, 1, 2, 1});
    EXPECT_TRUE(layered_contains(P({2, 1}), host));
    EXPECT_TRUE(oracle::contains(realize(P({2, 1})), realize(host)));
    EXPECT_FALSE(layered_contains(P({3, 3}), host));
    EXPECT_FALSE(oracle::contains(realize(P({3, 3})), realize(host)));
    EXPECT_TRUE(layered_contains(P({}), host));
    EXPECT_TRUE(layered_contains(P({}), P({})));
    EXPECT_FALSE(layered_contains(P({1}), P({})));
}

TEST(LayeredContains, GreedyMatchesBacktracking) {
    std::vector<std::vector<LayerProfile>> patterns, hosts;
    for (std::size_t n = 0; n <= 6; ++n) patterns.push_back(enumerate_layered(n));
    for (std::size_t n = 0; n <= 10; ++n) hosts.push_back(enumerate_layered(n));
    std::size_t pairs = 0;
    for (const auto& pn : patterns) {
        for (const auto& p : pn) {
            const auto pp = realize(p);
            for (const auto& hn : hosts) {
                for (const auto& h : hn) {
                    ASSERT_EQ(layered_contains(p, h), is_contained(pp, realize(h)))
                        << format(p) << " in " << format(h);
                    ++pairs;
                }
            }
        }
    }
    EXPECT_EQ(pairs, 64u * 1024u);
}

TEST(LayeredContains, ExposesIncreasingLayerIndices) {
    std::mt19937 rng(17);
    for (std::size_t hn = 0; hn <= 10; ++hn) {
        for (const auto& h : enumerate_layered(hn)) {
            const auto p = composition_at(1 + rng() % 6, 0);
            for (const auto& pat : {p, composition_at(4, rng() % 8), composition_at(3, rng() % 4)}) {
                const auto idx = layered_embedding(pat, h);
                ASSERT_EQ(idx.has_value(), layered_contains(pat, h));
                if (!idx) continue;
                ASSERT_EQ(idx->size(), pat.sizes.size());
                for (std::size_t i = 0; i < idx->size(); ++i) {
                    EXPECT_GE(h.sizes[(*idx)[i] - 1], pat.sizes[i]);
                    if (i) {
                        EXPECT_LT((*idx)[i - 1], (*idx)[i]);
                    }
                }
            }
        }
    }
}
