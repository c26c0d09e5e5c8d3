#include <betashift/constructions.hpp>
#include <betashift/theorems.hpp>

#include <gtest/gtest.h>

#include "brute.hpp"

using namespace betashift;

TEST(Lift, Example) {
    EXPECT_EQ(lift_digits({0, 1, 0, 0}), (Word{1, 2, 1, 1}));
}

TEST(Lift, PreservesComplexity) {
    const Word d = champernowne(4);
    const Word lifted = lift_digits(d);
    for (std::size_t n = 1; n <= 6; ++n) {
        EXPECT_EQ(brute::windows(lifted, n).size(), brute::windows(d, n).size());
    }
}

TEST(Champernowne, Example) {
    EXPECT_EQ(champernowne(2), (Word{0, 1, 0, 0, 0, 1, 1, 0, 1, 1}));
    EXPECT_EQ(champernowne(5).size(), 2u + 8u + 24u + 64u + 160u);
    EXPECT_THROW(champernowne(0), Error);
}

TEST(Prepend, Examples) {
    const auto t = prepend_symbol(champernowne(5), true);
    EXPECT_EQ(t.first(7), (Word{2, 0, 1, 0, 0, 0, 1}));
    EXPECT_TRUE(validate_kneading(t).valid);
    for (std::size_t n = 1; n <= 4; ++n) {
        EXPECT_EQ(predecessor_count(t, n).value, (std::uint64_t{1} << n) + 1);
    }
    Word alternating;
    for (int i = 0; i < 20; ++i) {
        alternating.push_back(i % 2);
    }
    EXPECT_TRUE(validate_kneading(prepend_symbol(alternating)).valid);
    try {
        prepend_symbol({0, 0, 0});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroTail);
    }
}

TEST(Prepend, AddsOneToComplexity) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Word d(60);
        for (Digit& x : d) {
            x = static_cast<Digit>(rng() % 3);
        }
        d[0] = 1;
        const auto prepended = prepend_symbol(d);
        EXPECT_TRUE(validate_kneading(prepended).valid);
        for (std::size_t n = 1; n <= 5; ++n) {
            EXPECT_EQ(brute::windows(prepended.digits(), n).size(), brute::windows(d, n).size() + 1);
        }
    }
}

TEST(Recipes, Examples) {
    EXPECT_EQ(golden_mean().output, KneadingSequence::exact({}, {1, 0}));
    EXPECT_EQ(full_shift(1).output, KneadingSequence::exact({}, {1}));
    const Interval three = solve_beta(full_shift(2).output, parse_rational("1e-9"));
    EXPECT_TRUE(three.is_point());
    EXPECT_EQ(three.lo, 3);
    const auto b = beta_1_8_prefix(40);
    EXPECT_EQ(b.output, kneading_from_beta(BetaSpec::interval(Rational(9, 5), Rational(9, 5)), 40).with_assert_aperiodic(true));
    EXPECT_EQ(b.output.digits().size(), 40u);
    EXPECT_EQ(b.parameters.at("L"), "40");
    EXPECT_EQ(named_example("champernowne_tilde").output, champernowne_tilde(5).output);
    EXPECT_EQ(named_example("full_shift", {{"k", "2"}}).output, KneadingSequence::exact({}, {2}));
    EXPECT_THROW(named_example("nope"), Error);
    EXPECT_THROW(named_example("full_shift", {{"k", "x"}}), Error);
}
