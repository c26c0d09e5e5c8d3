#pragma once

// Kneading sequences d*(1) of beta-shifts and the certified conversions
// between a real beta > 1 and its kneading sequence.
//
// A kneading sequence is held either exactly, as preperiod + period^inf, or
// as a finite prefix with an explicit horizon. Nothing here reads a digit of
// a prefix beyond its horizon; such reads raise HorizonExceeded.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "error.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "word.hpp"

namespace betashift {

inline constexpr unsigned kDefaultPrecisionBits = 4096;

class KneadingSequence {
public:
    enum class Mode { Exact, Prefix };

    static KneadingSequence exact(Word preperiod, Word period) {
        if (period.empty()) {
            throw Error(ErrorKind::InvalidKneading, "exact kneading sequence needs a nonempty period");
        }
        check_digits(preperiod);
        check_digits(period);
        KneadingSequence d;
        d.mode_ = Mode::Exact;
        d.preperiod_ = std::move(preperiod);
        d.period_ = std::move(period);
        d.alphabet_max_ = std::max(max_digit(d.preperiod_), max_digit(d.period_));
        return d;
    }

    static KneadingSequence prefix(Word digits, bool assert_aperiodic = false) {
        check_digits(digits);
        KneadingSequence d;
        d.mode_ = Mode::Prefix;
        d.digits_ = std::move(digits);
        d.assert_aperiodic_ = assert_aperiodic;
        d.alphabet_max_ = max_digit(d.digits_);
        return d;
    }

    Mode mode() const { return mode_; }
    bool is_exact() const { return mode_ == Mode::Exact; }
    bool is_prefix() const { return mode_ == Mode::Prefix; }

    const Word& preperiod() const { return preperiod_; }
    const Word& period() const { return period_; }
    const Word& digits() const { return digits_; }
    bool assert_aperiodic() const { return assert_aperiodic_; }

    /// Largest symbol; for a valid sequence this is the first digit.
    Digit alphabet_max() const { return alphabet_max_; }

    /// Number of stored digits for a prefix, nullopt for an exact sequence.
    std::optional<std::size_t> horizon() const {
        if (is_exact()) {
            return std::nullopt;
        }
        return digits_.size();
    }

    bool covers(std::size_t n) const { return is_exact() || n <= digits_.size(); }

    void require_horizon(std::size_t n, const char* what) const {
        if (!covers(n)) {
            throw Error(ErrorKind::HorizonExceeded, std::string(what) + " needs " + std::to_string(n)
                                                        + " digits but the prefix horizon is "
                                                        + std::to_string(digits_.size()));
        }
    }

    Digit digit(std::size_t i) const {
        if (is_exact()) {
            if (i < preperiod_.size()) {
                return preperiod_[i];
            }
            return period_[(i - preperiod_.size()) % period_.size()];
        }
        require_horizon(i + 1, "digit lookup");
        return digits_[i];
    }

    /// The first n digits (d)_n.
    Word first(std::size_t n) const {
        require_horizon(n, "prefix extraction");
        if (is_prefix()) {
            return Word(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(n));
        }
        Word out(n);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = digit(i);
        }
        return out;
    }

    KneadingSequence with_assert_aperiodic(bool flag) const {
        KneadingSequence copy = *this;
        if (copy.is_prefix()) {
            copy.assert_aperiodic_ = flag;
        }
        return copy;
    }

    friend bool operator==(const KneadingSequence&, const KneadingSequence&) = default;

private:
    KneadingSequence() = default;

    static void check_digits(const Word& w) {
        if (std::any_of(w.begin(), w.end(), [](Digit x) { return x < 0; })) {
            throw Error(ErrorKind::InvalidKneading, "digits must be nonnegative");
        }
    }

    Mode mode_ = Mode::Exact;
    Word preperiod_;
    Word period_;
    Word digits_;
    bool assert_aperiodic_ = false;
    Digit alphabet_max_ = 0;
};

struct Violation {
    std::size_t shift;
    std::string description;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
    std::size_t checked_horizon = 0;
};

// ---------------------------------------------------------------------------
// Shifts of a kneading sequence

namespace detail {

inline Word rotate_left(Word w, std::size_t by) {
    if (!w.empty()) {
        std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(by % w.size()), w.end());
    }
    return w;
}

inline std::size_t primitive_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t q = 1; q < n; ++q) {
        if (n % q != 0) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = q; i < n && ok; ++i) {
            ok = w[i] == w[i - q];
        }
        if (ok) {
            return q;
        }
    }
    return n;
}

inline void require_exact(const KneadingSequence& d, const char* what) {
    if (!d.is_exact()) {
        throw Error(ErrorKind::InvalidInput, std::string(what) + " requires an exact (eventually periodic) sequence");
    }
}

} // namespace detail

/// Canonical form: primitive period, shortest preperiod.
inline KneadingSequence normalize(const KneadingSequence& d) {
    detail::require_exact(d, "normalize");
    Word period = d.period();
    period.resize(detail::primitive_period(period));
    Word pre = d.preperiod();
    while (!pre.empty() && pre.back() == period.back()) {
        pre.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
    return KneadingSequence::exact(std::move(pre), std::move(period));
}

/// sigma^j(d) for an exact sequence.
inline KneadingSequence shifted(const KneadingSequence& d, std::size_t j) {
    detail::require_exact(d, "shifted");
    const auto& pre = d.preperiod();
    if (j < pre.size()) {
        return KneadingSequence::exact(Word(pre.begin() + static_cast<std::ptrdiff_t>(j), pre.end()), d.period());
    }
    return KneadingSequence::exact({}, detail::rotate_left(d.period(), j - pre.size()));
}

/// Lexicographic comparison of sigma^j(d) with sigma^k(d). Exact sequences
/// always compare; for a prefix the result is nullopt when the two shifts
/// agree on every digit inside the horizon.
inline std::optional<std::strong_ordering> compare_shifts(const KneadingSequence& d, std::size_t j, std::size_t k) {
    if (j == k) {
        return std::strong_ordering::equal;
    }
    std::size_t span = 0;
    if (d.is_exact()) {
        // Both shifts are periodic with period |period| from index |preperiod| on.
        span = d.preperiod().size() + d.period().size();
    } else {
        const std::size_t horizon = *d.horizon();
        if (j >= horizon || k >= horizon) {
            throw Error(ErrorKind::IndexBeyondHorizon, "shift index " + std::to_string(std::max(j, k))
                                                           + " is not below the horizon " + std::to_string(horizon));
        }
        span = horizon - std::max(j, k);
    }
    for (std::size_t t = 0; t < span; ++t) {
        const Digit a = d.digit(j + t);
        const Digit b = d.digit(k + t);
        if (a != b) {
            return a <=> b;
        }
    }
    if (d.is_exact()) {
        return std::strong_ordering::equal;
    }
    return std::nullopt;
}

enum class ShiftRelation { Equal, Distinct, Unknown };

inline std::string_view to_string(ShiftRelation r) {
    switch (r) {
    case ShiftRelation::Equal: return "equal";
    case ShiftRelation::Distinct: return "distinct";
    case ShiftRelation::Unknown: return "unknown";
    }
    return "unknown";
}

inline ShiftRelation shift_equal(const KneadingSequence& d, std::size_t j, std::size_t k) {
    if (d.is_exact()) {
        return normalize(shifted(d, j)) == normalize(shifted(d, k)) ? ShiftRelation::Equal : ShiftRelation::Distinct;
    }
    const auto cmp = compare_shifts(d, j, k);
    if (!cmp) {
        return ShiftRelation::Unknown;
    }
    return *cmp == 0 ? ShiftRelation::Equal : ShiftRelation::Distinct;
}

// ---------------------------------------------------------------------------
// Validation

inline ValidationReport validate_kneading(const KneadingSequence& d) {
    ValidationReport report;
    auto violate = [&](std::size_t shift, std::string text) {
        report.valid = false;
        report.violations.push_back({shift, std::move(text)});
    };

    if (d.is_exact()) {
        const std::size_t a = d.preperiod().size();
        const std::size_t b = d.period().size();
        report.checked_horizon = a + 2 * b;
        if (max_digit(d.period()) == 0) {
            violate(a, "period is all zeros: the sequence ends in an infinite string of zeros");
        }
        for (std::size_t i = 1; i < a + b; ++i) {
            if (*compare_shifts(d, i, 0) > 0) {
                violate(i, "shift " + std::to_string(i) + " is lexicographically greater than the sequence");
            }
        }
        return report;
    }

    const Word& digits = d.digits();
    const std::size_t horizon = digits.size();
    report.checked_horizon = horizon;
    if (horizon < 2) {
        violate(0, "prefix horizon must be at least 2");
    }
    if (max_digit(digits) == 0) {
        violate(0, "no nonzero digit within the horizon");
    }
    for (std::size_t i = 1; i < horizon; ++i) {
        const auto cmp = compare_shifts(d, i, 0);
        if (cmp && *cmp > 0) {
            violate(i, "shift " + std::to_string(i) + " is lexicographically greater than the sequence within the horizon");
        }
    }
    return report;
}

namespace detail {

inline void require_valid(const KneadingSequence& d) {
    const auto report = validate_kneading(d);
    if (!report.valid) {
        throw Error(ErrorKind::InvalidKneading, report.violations.front().description);
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// beta specifications

struct NumericInterval {
    Rational lo;
    Rational hi;
};

/// A simple real root of `poly` isolated by [lo, hi]; lo == hi when the
/// root is rational and known exactly.
struct PolynomialRoot {
    Polynomial poly;
    Rational lo;
    Rational hi;
};

class BetaSpec {
public:
    using Variant = std::variant<NumericInterval, PolynomialRoot, KneadingSequence>;

    static BetaSpec interval(Rational lo, Rational hi) {
        if (!(lo > 1)) {
            throw Error(ErrorKind::InvalidBeta, "beta must exceed 1 (lower bound " + to_fraction(lo) + ")");
        }
        if (hi < lo) {
            throw Error(ErrorKind::InvalidBeta, "interval upper bound is below the lower bound");
        }
        return BetaSpec(NumericInterval{std::move(lo), std::move(hi)});
    }

    /// `coeffs` ascending (c0 + c1 x + ...). The interval must contain exactly
    /// one real root, which must exceed 1.
    static BetaSpec polynomial_root(const std::vector<Rational>& coeffs, Rational lo, Rational hi) {
        const Polynomial p(coeffs);
        if (p.degree() < 1) {
            throw Error(ErrorKind::InvalidBeta, "polynomial must have degree at least 1");
        }
        if (hi < lo) {
            throw Error(ErrorKind::InvalidBeta, "isolating interval upper bound is below the lower bound");
        }
        const Polynomial q = square_free_part(p);
        const bool lo_root = q(lo) == 0;
        const bool hi_root = lo != hi && q(hi) == 0;
        const int roots = count_roots(q, lo, hi) + (lo_root ? 1 : 0);
        if (roots != 1) {
            throw Error(ErrorKind::InvalidBeta, "isolating interval contains " + std::to_string(roots)
                                                    + " distinct real roots, expected exactly 1");
        }
        if (lo_root || hi_root) {
            Rational root = lo_root ? lo : hi;
            if (!(root > 1)) {
                throw Error(ErrorKind::InvalidBeta, "root " + to_fraction(root) + " does not exceed 1");
            }
            return BetaSpec(PolynomialRoot{q, root, root});
        }
        if (hi <= 1) {
            throw Error(ErrorKind::InvalidBeta, "isolated root does not exceed 1");
        }
        if (lo < 1) {
            if (q(Rational(1)) == 0 || count_roots(q, Rational(1), hi) == 0) {
                throw Error(ErrorKind::InvalidBeta, "isolated root does not exceed 1");
            }
            lo = 1;
        }
        return BetaSpec(PolynomialRoot{q, std::move(lo), std::move(hi)});
    }

    static BetaSpec from_kneading(KneadingSequence d) { return BetaSpec(std::move(d)); }

    const Variant& variant() const { return value_; }

private:
    explicit BetaSpec(Variant v) : value_(std::move(v)) {}

    Variant value_;
};

// ---------------------------------------------------------------------------
// solve_beta

/// The polynomial whose unique root above 1 is the beta with d*(1) = d, for
/// an exact d = u v^inf: x^a (x^b - 1) - (x^b - 1) U(x) - V(x), where U and V
/// read the preperiod and period as base-x numerals.
inline Polynomial characteristic_polynomial(const KneadingSequence& d) {
    detail::require_exact(d, "characteristic_polynomial");
    const Word& u = d.preperiod();
    const Word& v = d.period();
    const std::size_t a = u.size();
    const std::size_t b = v.size();
    auto numeral = [](const Word& w) {
        std::vector<Rational> c(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            c[w.size() - 1 - i] = w[i];
        }
        return Polynomial(std::move(c));
    };
    const Polynomial xb_minus_1 = Polynomial::monomial(b) - Polynomial::constant(1);
    return Polynomial::monomial(a) * xb_minus_1 - xb_minus_1 * numeral(u) - numeral(v);
}

namespace detail {

/// sum_{i<L} d_i x^{-i-1} for the stored digits of a prefix.
inline Rational truncated_value(const Word& digits, const Rational& x) {
    const Rational y = Rational(1) / x;
    Rational acc(0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc = (acc + *it) * y;
    }
    return acc;
}

/// Largest possible contribution of the unseen digits i >= L, each at most k.
inline Rational tail_bound(std::size_t horizon, Digit k, const Rational& x) {
    Rational xl(1);
    for (std::size_t i = 0; i < horizon; ++i) {
        xl *= x;
    }
    return Rational(k) / (xl * (x - 1));
}

inline Interval solve_exact(const KneadingSequence& d, const Rational& tolerance) {
    const Polynomial p = characteristic_polynomial(d);
    const Rational k(d.alphabet_max());
    Rational lo = k;
    Rational hi = k + 1;
    if (p(hi) == 0) {
        return {hi, hi};
    }
    // p < 0 on (1, beta) and p > 0 above beta.
    while (hi - lo > tolerance) {
        const Rational mid = (lo + hi) / 2;
        const int s = p.sign_at(mid);
        if (s == 0) {
            return {mid, mid};
        }
        (s < 0 ? lo : hi) = mid;
    }
    return {lo, hi};
}

inline Interval solve_prefix(const KneadingSequence& d, const Rational& tolerance) {
    const Word& digits = d.digits();
    const Digit k = d.alphabet_max();
    const std::size_t horizon = digits.size();
    // The true beta lies between the root of the truncated series (all unseen
    // digits zero) and the root of the series with every unseen digit k.
    auto lower_fn = [&](const Rational& x) { return truncated_value(digits, x) - 1; };
    auto upper_fn = [&](const Rational& x) { return truncated_value(digits, x) + tail_bound(horizon, k, x) - 1; };

    // Brackets: lower_fn(lo_lo) >= 0 > lower_fn(lo_hi), upper_fn(hi_lo) > 0 >= upper_fn(hi_hi);
    // the tail bound blows up at x = 1, so upper_fn(1) counts as positive.
    Rational lo_lo(k), lo_hi(k + 1), hi_lo(k), hi_hi(k + 1);
    if (k > 1 && upper_fn(hi_lo) <= 0) {
        hi_hi = hi_lo;
    }
    for (int iter = 0; iter < 20000; ++iter) {
        if (hi_hi - lo_lo <= tolerance) {
            return {lo_lo, hi_hi};
        }
        if (hi_lo - lo_hi > tolerance) {
            break;
        }
        if (lo_hi - lo_lo >= hi_hi - hi_lo) {
            const Rational mid = (lo_lo + lo_hi) / 2;
            (lower_fn(mid) >= 0 ? lo_lo : lo_hi) = mid;
        } else {
            const Rational mid = (hi_lo + hi_hi) / 2;
            (upper_fn(mid) > 0 ? hi_lo : hi_hi) = mid;
        }
    }
    throw Error(ErrorKind::ToleranceUnreachable,
                "a prefix of " + std::to_string(horizon) + " digits cannot pin beta to width "
                    + to_decimal(tolerance, 20, Rounding::Up));
}

} // namespace detail

/// An interval of width <= tolerance containing the unique beta with
/// d*(1) = d; always within [k, k+1] for k = d.alphabet_max().
inline Interval solve_beta(const KneadingSequence& d, const Rational& tolerance) {
    if (!(tolerance > 0)) {
        throw Error(ErrorKind::InvalidInput, "tolerance must be positive");
    }
    detail::require_valid(d);
    return d.is_exact() ? detail::solve_exact(d, tolerance) : detail::solve_prefix(d, tolerance);
}

// ---------------------------------------------------------------------------
// Certified greedy expansion of 1

namespace detail {

/// beta reduced to something the expansion loop can enclose and query.
class BetaSource {
public:
    enum class Kind { Point, Fixed, Algebraic };

    static BetaSource point(Rational v) { return BetaSource(Kind::Point, {}, v, v); }
    static BetaSource fixed(Rational lo, Rational hi) {
        if (lo == hi) {
            return point(std::move(lo));
        }
        return BetaSource(Kind::Fixed, {}, std::move(lo), std::move(hi));
    }
    static BetaSource algebraic(Polynomial p, Rational lo, Rational hi) {
        if (lo == hi) {
            return point(std::move(lo));
        }
        return BetaSource(Kind::Algebraic, std::move(p), std::move(lo), std::move(hi));
    }

    Kind kind() const { return kind_; }
    const Polynomial& modulus() const { return poly_; }

    /// An enclosure of width <= 2^-bits when refinable, the fixed interval otherwise.
    Interval enclose(unsigned bits) const {
        if (kind_ != Kind::Algebraic) {
            return {lo_, hi_};
        }
        Rational lo = lo_;
        Rational hi = hi_;
        const int lo_sign = poly_.sign_at(lo);
        const Rational target = Rational(1) / pow2(bits);
        while (hi - lo > target) {
            const Rational mid = (lo + hi) / 2;
            const int s = poly_.sign_at(mid);
            if (s == 0) {
                return {mid, mid};
            }
            (s == lo_sign ? lo : hi) = mid;
        }
        return {round_down(lo, bits + 2), round_up(hi, bits + 2)};
    }

    /// Whether q(beta) == 0, when that can be decided.
    std::optional<bool> is_root(const Polynomial& q) const {
        switch (kind_) {
        case Kind::Point:
            return q(lo_) == 0;
        case Kind::Fixed:
            return std::nullopt;
        case Kind::Algebraic: {
            // gcd(q, p) vanishes at beta iff q does; beta is the only root of
            // the square-free p inside (lo, hi) and it is simple.
            const Polynomial g = gcd(q, poly_);
            if (g.degree() < 1) {
                return false;
            }
            return g.sign_at(lo_) != g.sign_at(hi_);
        }
        }
        return std::nullopt;
    }

private:
    BetaSource(Kind kind, Polynomial p, Rational lo, Rational hi)
        : kind_(kind), poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}

    Kind kind_;
    Polynomial poly_;
    Rational lo_;
    Rational hi_;
};

/// Enclosure of beta for a kneading prefix, as tight as the horizon allows.
inline Interval prefix_enclosure(const KneadingSequence& d) {
    Rational tol = Rational(1) / pow2(8);
    Interval best = solve_beta(d, Rational(1));
    for (int i = 0; i < 32; ++i) {
        try {
            best = solve_beta(d, tol);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::ToleranceUnreachable) {
                throw;
            }
            break;
        }
        tol /= 256;
    }
    return best;
}

inline BetaSource resolve(const BetaSpec& beta) {
    return std::visit(
        [](const auto& v) -> BetaSource {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, NumericInterval>) {
                return BetaSource::fixed(v.lo, v.hi);
            } else if constexpr (std::is_same_v<T, PolynomialRoot>) {
                return BetaSource::algebraic(v.poly, v.lo, v.hi);
            } else {
                require_valid(v);
                if (v.is_exact()) {
                    const Rational k(v.alphabet_max());
                    const Polynomial p = characteristic_polynomial(v);
                    const auto spec = BetaSpec::polynomial_root(p.coefficients(), k, k + 1);
                    const auto& root = std::get<PolynomialRoot>(spec.variant());
                    return BetaSource::algebraic(root.poly, root.lo, root.hi);
                }
                const Interval box = prefix_enclosure(v);
                return BetaSource::fixed(box.lo, box.hi);
            }
        },
        beta.variant());
}

struct ExpansionTrace {
    Word digits;
    /// Number of digits emitted when the remainder became exactly zero.
    std::optional<std::size_t> terminated_after;
    /// Some remainder enclosure touched zero without a decision on termination.
    bool termination_uncertain = false;
};

/// One pass at a fixed working precision; nullopt asks for more bits.
inline std::optional<ExpansionTrace> expand_at(const BetaSource& src, std::size_t count, unsigned bits) {
    const Interval b = src.enclose(bits);
    const bool algebraic = src.kind() == BetaSource::Kind::Algebraic && !b.is_point();
    const Polynomial x = Polynomial::x();

    ExpansionTrace trace;
    trace.digits.reserve(count);
    Interval r{Rational(1), Rational(1)};
    Polynomial exact_remainder = Polynomial::constant(1);

    for (std::size_t i = 0; i < count; ++i) {
        if (trace.terminated_after) {
            trace.digits.push_back(0);
            continue;
        }
        const Rational t_lo = b.lo * r.lo;
        const Rational t_hi = b.hi * r.hi;
        const Integer first_int = ceil_of(t_lo);
        const Integer last_int = floor_of(t_hi);

        Integer digit;
        bool remainder_zero = false;
        if (first_int > last_int) {
            digit = floor_of(t_lo);
        } else if (first_int == last_int) {
            // Exactly one integer m inside; decide whether beta * r == m.
            const Integer& m = first_int;
            std::optional<bool> hit;
            if (b.is_point() && r.is_point()) {
                hit = t_lo == Rational(m);
            } else {
                hit = src.is_root(x * exact_remainder - Polynomial::constant(Rational(m)));
            }
            if (hit && *hit) {
                digit = m;
                remainder_zero = true;
            } else if (Rational(m) == t_lo) {
                // Floor is m either way; only termination is in doubt.
                digit = m;
                if (!hit) {
                    trace.termination_uncertain = true;
                }
            } else if (!hit) {
                throw Error(ErrorKind::PrecisionExhausted,
                            "digit " + std::to_string(i + 1) + " is ambiguous for every beta in the given interval");
            } else {
                return std::nullopt;
            }
        } else {
            if (src.kind() != BetaSource::Kind::Algebraic) {
                throw Error(ErrorKind::PrecisionExhausted,
                            "digit " + std::to_string(i + 1) + " is ambiguous for every beta in the given interval");
            }
            return std::nullopt;
        }

        trace.digits.push_back(static_cast<Digit>(digit));
        if (remainder_zero) {
            trace.terminated_after = i + 1;
            continue;
        }
        r = {t_lo - Rational(digit), t_hi - Rational(digit)};
        if (algebraic) {
            r.lo = round_down(r.lo, bits);
            r.hi = round_up(r.hi, bits);
            if (r.lo < 0) {
                r.lo = 0;
            }
            exact_remainder = (x * exact_remainder - Polynomial::constant(Rational(digit))) % src.modulus();
        }
    }
    return trace;
}

inline ExpansionTrace expand(const BetaSpec& beta, std::size_t count, unsigned max_bits) {
    const BetaSource src = resolve(beta);
    unsigned bits = std::min(64u, max_bits);
    for (;;) {
        if (auto trace = expand_at(src, count, bits)) {
            return *trace;
        }
        if (bits >= max_bits) {
            throw Error(ErrorKind::PrecisionExhausted,
                        "digits not certified at " + std::to_string(max_bits) + " bits of precision");
        }
        bits = std::min(bits * 2, max_bits);
    }
}

} // namespace detail

/// The first `count` digits of the greedy expansion d_beta(1), each certified.
inline Word greedy_expansion(const BetaSpec& beta, std::size_t count, unsigned max_bits = kDefaultPrecisionBits) {
    if (count == 0) {
        throw Error(ErrorKind::InvalidInput, "digit count must be positive");
    }
    return detail::expand(beta, count, max_bits).digits;
}

/// d*(1): exact when d_beta(1) terminates within the horizon, otherwise the
/// first `horizon` digits of d_beta(1) as a prefix.
inline KneadingSequence kneading_from_beta(const BetaSpec& beta, std::size_t horizon,
                                           unsigned max_bits = kDefaultPrecisionBits) {
    if (horizon < 2) {
        throw Error(ErrorKind::HorizonTooSmall, "horizon must be at least 2");
    }
    const auto trace = detail::expand(beta, horizon, max_bits);
    if (!trace.terminated_after) {
        if (trace.termination_uncertain) {
            throw Error(ErrorKind::PrecisionExhausted,
                        "cannot certify whether the expansion of 1 terminates for every beta in the interval");
        }
        return KneadingSequence::prefix(trace.digits, false);
    }

    // d_beta(1) = d_1 ... d_m 0^inf gives d*(1) = (d_1 ... d_{m-1} (d_m - 1))^inf.
    Word period(trace.digits.begin(), trace.digits.begin() + static_cast<std::ptrdiff_t>(*trace.terminated_after));
    period.back() -= 1;
    KneadingSequence d = normalize(KneadingSequence::exact({}, std::move(period)));
    detail::require_valid(d);

    // The period's series must sum to 1 at this beta.
    const Interval solved = solve_beta(d, Rational(1) / pow2(40));
    const Interval box = detail::resolve(beta).enclose(48);
    if (!solved.intersects(box)) {
        throw Error(ErrorKind::InvalidKneading, "finite-expansion kneading sequence does not reproduce beta");
    }
    return d;
}

} // namespace betashift
