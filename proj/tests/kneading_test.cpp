#include <betashift/kneading.hpp>

#include <gtest/gtest.h>

#include <cmath>

#include "brute.hpp"

using namespace betashift;

namespace {

KneadingSequence golden() { return KneadingSequence::exact({}, {1, 0}); }

BetaSpec golden_root() {
    return BetaSpec::polynomial_root({Rational(-1), Rational(-1), Rational(1)}, parse_rational("1.6"), parse_rational("1.7"));
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InvalidInput;
}

} // namespace

TEST(KneadingSequence, Construction) {
    EXPECT_EQ(kind_of([] { KneadingSequence::exact({1}, {}); }), ErrorKind::InvalidKneading);
    EXPECT_EQ(kind_of([] { KneadingSequence::prefix({1, -1}); }), ErrorKind::InvalidKneading);
    const auto d = KneadingSequence::exact({2}, {1, 0});
    EXPECT_EQ(d.alphabet_max(), 2);
    EXPECT_EQ(d.first(6), (Word{2, 1, 0, 1, 0, 1}));
    EXPECT_FALSE(d.horizon());
    const auto p = KneadingSequence::prefix({1, 1, 0, 1});
    EXPECT_EQ(p.horizon(), 4u);
    EXPECT_EQ(kind_of([&] { p.first(5); }), ErrorKind::HorizonExceeded);
}

TEST(Normalize, Examples) {
    EXPECT_EQ(normalize(KneadingSequence::exact({1, 0}, {1, 0})), golden());
    EXPECT_EQ(normalize(KneadingSequence::exact({}, {1, 0, 1, 0})), golden());
    EXPECT_EQ(normalize(KneadingSequence::exact({2, 1}, {1})), KneadingSequence::exact({2}, {1}));
    // Rotation while absorbing: 3 1 (0 1)^inf = 3 (1 0)^inf.
    EXPECT_EQ(normalize(KneadingSequence::exact({3, 1}, {0, 1})), KneadingSequence::exact({3}, {1, 0}));
}

TEST(Normalize, PreservesDigitsAndIsIdempotent) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        Word pre(rng() % 4), period(1 + rng() % 4);
        for (Digit& x : pre) {
            x = static_cast<Digit>(rng() % 3);
        }
        for (Digit& x : period) {
            x = static_cast<Digit>(rng() % 3);
        }
        const auto d = KneadingSequence::exact(pre, period);
        const auto n = normalize(d);
        EXPECT_EQ(normalize(n), n);
        EXPECT_EQ(n.first(40), d.first(40));
        EXPECT_LE(n.preperiod().size(), d.preperiod().size());
        EXPECT_LE(n.period().size(), d.period().size());
    }
}

TEST(ShiftEqual, Examples) {
    EXPECT_EQ(shift_equal(golden(), 0, 2), ShiftRelation::Equal);
    EXPECT_EQ(shift_equal(golden(), 0, 1), ShiftRelation::Distinct);
    EXPECT_EQ(shift_equal(KneadingSequence::exact({2}, {1, 0}), 1, 3), ShiftRelation::Equal);
    const auto p = KneadingSequence::prefix({1, 0, 1, 0, 1, 0});
    EXPECT_EQ(shift_equal(p, 0, 2), ShiftRelation::Unknown);
    EXPECT_EQ(shift_equal(p, 0, 1), ShiftRelation::Distinct);
    EXPECT_EQ(shift_equal(p, 3, 3), ShiftRelation::Equal);
    EXPECT_EQ(kind_of([&] { shift_equal(p, 0, 6); }), ErrorKind::IndexBeyondHorizon);
}

TEST(ShiftEqual, AgreesWithLongDigitComparison) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Word pre(rng() % 4), period(1 + rng() % 4);
        for (Digit& x : pre) {
            x = static_cast<Digit>(rng() % 2);
        }
        for (Digit& x : period) {
            x = static_cast<Digit>(rng() % 2);
        }
        const auto d = KneadingSequence::exact(pre, period);
        const brute::Sequence s{pre, period};
        for (std::size_t j = 0; j < 6; ++j) {
            for (std::size_t k = 0; k < 6; ++k) {
                bool same = true;
                for (std::size_t t = 0; t < 64; ++t) {
                    same = same && s.at(j + t) == s.at(k + t);
                }
                EXPECT_EQ(shift_equal(d, j, k) == ShiftRelation::Equal, same);
            }
        }
    }
}

TEST(Validate, Examples) {
    EXPECT_TRUE(validate_kneading(golden()).valid);
    const auto bad = validate_kneading(KneadingSequence::exact({}, {0, 1}));
    ASSERT_FALSE(bad.valid);
    EXPECT_EQ(bad.violations.front().shift, 1u);
    const auto zero_tail = validate_kneading(KneadingSequence::exact({1}, {0}));
    EXPECT_FALSE(zero_tail.valid);
    EXPECT_TRUE(validate_kneading(KneadingSequence::exact({2}, {1, 0})).valid);
    EXPECT_FALSE(validate_kneading(KneadingSequence::prefix({1})).valid);
    EXPECT_FALSE(validate_kneading(KneadingSequence::prefix({0, 0, 0})).valid);
    EXPECT_FALSE(validate_kneading(KneadingSequence::prefix({1, 0, 1, 1})).valid);
    EXPECT_TRUE(validate_kneading(KneadingSequence::prefix({1, 1, 0, 1})).valid);
}

TEST(CharacteristicPolynomial, Golden) {
    const Polynomial p = characteristic_polynomial(golden());
    EXPECT_EQ(p, Polynomial({Rational(-1), Rational(-1), Rational(1)}));
}

TEST(CharacteristicPolynomial, VanishesOnSeriesRoot) {
    // For beta with d*(1) = d, sum d_i beta^-i = 1; check sign changes of the
    // truncated series bracket the same root the polynomial has.
    for (const auto& d : {golden(), KneadingSequence::exact({2}, {1, 0}), KneadingSequence::exact({2, 1}, {1, 0, 1}),
                          KneadingSequence::exact({}, {1}), KneadingSequence::exact({}, {2})}) {
        const Interval box = solve_beta(d, parse_rational("1e-12"));
        const double beta = static_cast<double>(box.lo);
        double sum = 0;
        double scale = 1;
        for (Digit x : d.first(400)) {
            scale /= beta;
            sum += x * scale;
        }
        EXPECT_NEAR(sum, 1.0, 1e-9) << to_decimal(box.lo, 12, Rounding::Down);
    }
}

TEST(SolveBeta, Examples) {
    const Interval g = solve_beta(golden(), parse_rational("1e-9"));
    EXPECT_TRUE(g.contains(parse_rational("1.6180339887")));
    EXPECT_LE(g.width(), parse_rational("1e-9"));
    const Interval two = solve_beta(KneadingSequence::exact({}, {1}), parse_rational("1e-9"));
    EXPECT_TRUE(two.is_point());
    EXPECT_EQ(two.lo, 2);
    const Interval three = solve_beta(KneadingSequence::exact({}, {2}), parse_rational("1e-9"));
    EXPECT_TRUE(three.is_point());
    EXPECT_EQ(three.lo, 3);
}

TEST(SolveBeta, PrefixEnclosesAndReportsUnreachable) {
    const auto prefix = KneadingSequence::prefix(golden().first(40));
    const Interval box = solve_beta(prefix, parse_rational("1e-6"));
    EXPECT_TRUE(box.contains(parse_rational("1.6180339887")));
    EXPECT_EQ(kind_of([&] { solve_beta(KneadingSequence::prefix({1, 0, 1, 0}), parse_rational("1e-9")); }),
              ErrorKind::ToleranceUnreachable);
    EXPECT_EQ(kind_of([] { solve_beta(KneadingSequence::exact({}, {0, 1}), Rational(1, 100)); }),
              ErrorKind::InvalidKneading);
}

TEST(GreedyExpansion, Examples) {
    EXPECT_EQ(greedy_expansion(golden_root(), 5), (Word{1, 1, 0, 0, 0}));
    EXPECT_EQ(greedy_expansion(BetaSpec::interval(Rational(2), Rational(2)), 3), (Word{2, 0, 0}));
    EXPECT_EQ(greedy_expansion(BetaSpec::interval(Rational(9, 5), Rational(9, 5)), 4), (Word{1, 1, 0, 1}));
}

TEST(GreedyExpansion, MatchesFloatingPointAwayFromTies) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational beta(1000 + static_cast<long>(rng() % 2000), 1000);
        const Word digits = greedy_expansion(BetaSpec::interval(beta, beta), 12);
        EXPECT_EQ(digits, brute::float_expansion(static_cast<long double>(beta), 12)) << to_fraction(beta);
    }
}

TEST(GreedyExpansion, AmbiguousIntervalRaises) {
    // Both 1.5 and 1.7 lie in the interval; the second digit differs.
    EXPECT_EQ(kind_of([] { greedy_expansion(BetaSpec::interval(parse_rational("1.5"), parse_rational("1.7")), 3); }),
              ErrorKind::PrecisionExhausted);
    EXPECT_EQ(kind_of([] { BetaSpec::interval(Rational(1), Rational(2)); }), ErrorKind::InvalidBeta);
    EXPECT_EQ(kind_of([] { BetaSpec::polynomial_root({Rational(-1), Rational(-1), Rational(1)}, Rational(-1), Rational(2)); }),
              ErrorKind::InvalidBeta);
}

TEST(KneadingFromBeta, Examples) {
    EXPECT_EQ(kneading_from_beta(golden_root(), 2), golden());
    EXPECT_EQ(kneading_from_beta(BetaSpec::interval(Rational(2), Rational(2)), 8), KneadingSequence::exact({}, {1}));
    const auto d = kneading_from_beta(BetaSpec::interval(Rational(9, 5), Rational(9, 5)), 20);
    ASSERT_TRUE(d.is_prefix());
    EXPECT_EQ(d.digits().size(), 20u);
    EXPECT_EQ(d.first(4), (Word{1, 1, 0, 1}));
    EXPECT_EQ(d.digits(), brute::float_expansion(1.8L, 20));
    EXPECT_EQ(kind_of([] { kneading_from_beta(BetaSpec::interval(Rational(2), Rational(2)), 1); }),
              ErrorKind::HorizonTooSmall);
}

TEST(KneadingFromBeta, RoundTripThroughCharacteristicPolynomial) {
    for (const auto& d : {golden(), KneadingSequence::exact({2}, {1, 0}), KneadingSequence::exact({}, {1}),
                          KneadingSequence::exact({}, {2}), KneadingSequence::exact({}, {1, 1, 0}),
                          KneadingSequence::exact({2, 1}, {1, 0, 1})}) {
        const Interval box = solve_beta(d, parse_rational("1e-9"));
        const auto beta = BetaSpec::polynomial_root(characteristic_polynomial(d).coefficients(), box.lo, box.hi);
        const auto back = kneading_from_beta(beta, 30);
        EXPECT_EQ(back.first(30), d.first(30)) << to_digit_string(d.first(12));
        EXPECT_EQ(kneading_from_beta(BetaSpec::from_kneading(d), 30).first(30), d.first(30));
    }
}
