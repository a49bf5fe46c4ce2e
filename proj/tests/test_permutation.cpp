#include "superpattern/permutation.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace superpattern;

TEST(Parse, ReadsOneLineNotation) {
    const auto p = parse("3 4 8 1 7 5 6 2");
    EXPECT_EQ(p, (Permutation{3, 4, 8, 1, 7, 5, 6, 2}));
    EXPECT_EQ(parse("3,4, 8,1 ,7\t5 6\n2"), p);
    // 3 4 9 1 8 6 7 2 skips 5, so it only names a permutation after standardizing.
    EXPECT_THROW(parse("3 4 9 1 8 6 7 2"), ParseError);
    const std::vector<Value> raw{3, 4, 9, 1, 8, 6, 7, 2};
    EXPECT_EQ(standardize(raw), p);
}

TEST(Standardize, PreservesRelativeOrder) {
    const std::vector<Value> raw{10, -3, 7};
    EXPECT_EQ(standardize(raw), (Permutation{3, 1, 2}));
    EXPECT_TRUE(standardize(std::vector<Value>{}).empty());
    EXPECT_THROW(standardize(std::vector<Value>{4, 2, 4}), ParseError);
}

TEST(Parse, EmptyInputIsEmptyPermutation) {
    EXPECT_TRUE(parse("").empty());
    EXPECT_TRUE(parse("   ").empty());
}

TEST(Parse, RejectsNonBijections) {
    auto kind_of = [](std::string_view text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        ADD_FAILURE() << "no error for '" << text << "'";
        return ParseErrorKind::BadToken;
    };
    EXPECT_EQ(kind_of("1 1 2"), ParseErrorKind::DuplicateValue);
    EXPECT_EQ(kind_of("1 4 2"), ParseErrorKind::ValueOutOfRange);
    EXPECT_EQ(kind_of("0 1"), ParseErrorKind::ValueOutOfRange);
    EXPECT_EQ(kind_of("1 x 2"), ParseErrorKind::BadToken);
    EXPECT_EQ(kind_of("1 2.5"), ParseErrorKind::BadToken);
    EXPECT_EQ(kind_of("-1"), ParseErrorKind::ValueOutOfRange);
}

TEST(Parse, FormatIsCanonical) {
    EXPECT_EQ(format(parse(" 2,1 ,3 ")), "2 1 3");
    EXPECT_EQ(format(Permutation{}), "");
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        const auto p = oracle::random_permutation(rng() % 15, rng);
        EXPECT_EQ(parse(format(p)), p);
        EXPECT_EQ(format(parse(format(p))), format(p));
    }
}

TEST(Decreasing, Basics) {
    EXPECT_EQ(decreasing(3), (Permutation{3, 2, 1}));
    EXPECT_TRUE(decreasing(0).empty());
    EXPECT_EQ(decreasing(5), (Permutation{5, 4, 3, 2, 1}));
}

TEST(DirectSum, Examples) {
    EXPECT_EQ(direct_sum({decreasing(3), decreasing(1), decreasing(2), decreasing(1)}),
              (Permutation{3, 2, 1, 4, 6, 5, 7}));
    const Permutation pi{2, 4, 1, 3};
    EXPECT_EQ(direct_sum({Permutation{}, pi}), pi);
    EXPECT_EQ(direct_sum({pi, Permutation{}}), pi);
    EXPECT_EQ(direct_sum({Permutation{1}, Permutation{2, 1}}), (Permutation{1, 3, 2}));
    EXPECT_TRUE(direct_sum(std::span<const Permutation>{}).empty());
}

TEST(DirectSum, Associative) {
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        const auto a = oracle::random_permutation(rng() % 5, rng);
        const auto b = oracle::random_permutation(rng() % 5, rng);
        const auto c = oracle::random_permutation(rng() % 5, rng);
        EXPECT_EQ(direct_sum({a, direct_sum({b, c})}), direct_sum({direct_sum({a, b}), c}));
        EXPECT_EQ(direct_sum({a, b, c}), direct_sum({direct_sum({a, b}), c}));
    }
}

TEST(Contains, WitnessExample) {
    const auto host = standardize(std::vector<Value>{3, 4, 9, 1, 8, 6, 7, 2});
    const auto pattern = parse("5 1 3 4 2");
    const auto e = contains(pattern, host);
    ASSERT_TRUE(e);
    EXPECT_EQ(pattern_of(host, *e), pattern);
    // 9 1 6 7 2 sits at positions 3 4 6 7 8.
    EXPECT_EQ(pattern_of(host, Embedding{{3, 4, 6, 7, 8}}), pattern);
    EXPECT_EQ(e->positions, oracle::contains(pattern, host).value());
}

TEST(Contains, SmallCases) {
    EXPECT_TRUE(contains(Permutation{1}, Permutation{2, 3, 1}));
    EXPECT_FALSE(contains(Permutation{2, 1}, Permutation{1, 2}));
    // Frozen from the exhaustive scan over the 4-element subsequence.
    EXPECT_FALSE(oracle::contains(Permutation{2, 1, 4, 3}, Permutation{2, 4, 1, 3}));
    EXPECT_FALSE(contains(Permutation{2, 1, 4, 3}, Permutation{2, 4, 1, 3}));
    EXPECT_FALSE(contains(Permutation{1, 2, 3}, Permutation{1, 2}));
    const auto empty = contains(Permutation{}, Permutation{});
    ASSERT_TRUE(empty);
    EXPECT_TRUE(empty->positions.empty());
    EXPECT_TRUE(contains(Permutation{}, Permutation{3, 1, 2}));
}

TEST(Contains, AgreesWithExhaustiveScan) {
    std::vector<std::vector<Permutation>> by_length;
    for (std::size_t k = 0; k <= 5; ++k) by_length.push_back(oracle::all_permutations(k));
    std::size_t checked = 0;
    for (std::size_t hn = 0; hn <= 7; ++hn) {
        for (const auto& host : oracle::all_permutations(hn)) {
            for (std::size_t k = 0; k <= std::min<std::size_t>(5, hn); ++k) {
                for (const auto& pattern : by_length[k]) {
                    const auto got = contains(pattern, host);
                    const auto want = oracle::contains(pattern, host);
                    ASSERT_EQ(got.has_value(), want.has_value())
                        << format(pattern) << " in " << format(host);
                    if (got) {
                        ASSERT_EQ(got->positions, *want);
                        ASSERT_EQ(pattern_of(host, *got), pattern);
                    }
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 800000u);
}

TEST(Contains, Transitive) {
    std::mt19937 rng(5);
    for (int t = 0; t < 3000; ++t) {
        const auto rho = oracle::random_permutation(7 + rng() % 3, rng);
        const auto pi = oracle::random_permutation(3 + rng() % 3, rng);
        const auto sigma = oracle::random_permutation(1 + rng() % 3, rng);
        if (is_contained(sigma, pi) && is_contained(pi, rho)) {
            EXPECT_TRUE(is_contained(sigma, rho));
        }
    }
}

TEST(PatternOf, Examples) {
    const Permutation host{2, 4, 1, 3};
    EXPECT_EQ(pattern_of(host, Embedding{{2, 4}}), (Permutation{2, 1}));
    EXPECT_TRUE(contains(Permutation{2, 1}, host));
    EXPECT_EQ(pattern_of(host, Embedding{{1, 2, 3, 4}}), host);
    EXPECT_TRUE(pattern_of(host, Embedding{}).empty());
}

TEST(PatternOf, RejectsBadPositions) {
    const Permutation host{2, 4, 1, 3};
    EXPECT_THROW(pattern_of(host, Embedding{{0, 2}}), std::out_of_range);
    EXPECT_THROW(pattern_of(host, Embedding{{1, 5}}), std::out_of_range);
    EXPECT_THROW(pattern_of(host, Embedding{{3, 2}}), std::invalid_argument);
    EXPECT_THROW(pattern_of(host, Embedding{{2, 2}}), std::invalid_argument);
}
