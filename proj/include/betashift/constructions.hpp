#pragma once

// Example kneading sequences and the complexity-realizing constructions:
// lifting every digit by one, and prepending a symbol larger than all others.

#include <map>
#include <string>
#include <string_view>

#include "kneading.hpp"
#include "word.hpp"

namespace betashift {

inline Word lift_digits(const Word& d) {
    Word out(d);
    for (Digit& x : out) {
        ++x;
    }
    return out;
}

/// (k+1) d as a prefix kneading sequence, k the largest digit of d.
inline KneadingSequence prepend_symbol(const Word& d, bool assert_aperiodic = false) {
    if (max_digit(d) == 0) {
        throw Error(ErrorKind::ZeroTail, "input is all zeros; lift its digits first");
    }
    Word out;
    out.reserve(d.size() + 1);
    out.push_back(max_digit(d) + 1);
    out.insert(out.end(), d.begin(), d.end());
    return KneadingSequence::prefix(std::move(out), assert_aperiodic);
}

/// All binary words of length 1..max_block, by length then lexicographically, concatenated.
inline Word champernowne(std::size_t max_block) {
    if (max_block == 0) {
        throw Error(ErrorKind::InvalidInput, "max_block must be positive");
    }
    if (max_block > 24) {
        throw Error(ErrorKind::InvalidInput, "max_block above 24 is not supported");
    }
    Word out;
    for (std::size_t len = 1; len <= max_block; ++len) {
        for (std::size_t code = 0; code < (std::size_t{1} << len); ++code) {
            for (std::size_t bit = len; bit-- > 0;) {
                out.push_back(static_cast<Digit>((code >> bit) & 1U));
            }
        }
    }
    return out;
}

struct SequenceRecipe {
    std::string name;
    std::map<std::string, std::string> parameters;
    KneadingSequence output;
};

inline SequenceRecipe golden_mean() {
    return {"golden_mean", {}, KneadingSequence::exact({}, {1, 0})};
}

inline SequenceRecipe full_shift(Digit k) {
    if (k < 1) {
        throw Error(ErrorKind::InvalidInput, "full shift needs k >= 1");
    }
    return {"full_shift", {{"k", std::to_string(k)}}, KneadingSequence::exact({}, {k})};
}

/// 9/5 is not an algebraic integer, so its kneading sequence is not
/// eventually periodic; the prefix is marked aperiodic accordingly.
inline SequenceRecipe beta_1_8_prefix(std::size_t horizon) {
    const auto beta = BetaSpec::interval(Rational(9, 5), Rational(9, 5));
    const KneadingSequence d = kneading_from_beta(beta, horizon);
    return {"beta_1_8_prefix", {{"L", std::to_string(horizon)}}, d.with_assert_aperiodic(true)};
}

inline SequenceRecipe champernowne_tilde(std::size_t max_block) {
    return {"champernowne_tilde", {{"max_block", std::to_string(max_block)}}, prepend_symbol(champernowne(max_block), true)};
}

inline SequenceRecipe named_example(std::string_view name, const std::map<std::string, std::string>& params = {}) {
    auto param = [&](const std::string& key, std::size_t fallback) -> std::size_t {
        const auto it = params.find(key);
        if (it == params.end()) {
            return fallback;
        }
        try {
            std::size_t used = 0;
            const long v = std::stol(it->second, &used);
            if (used == it->second.size() && v > 0) {
                return static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
        }
        throw Error(ErrorKind::InvalidInput, "parameter " + key + " must be a positive integer");
    };
    if (name == "golden_mean") {
        return golden_mean();
    }
    if (name == "full_shift") {
        return full_shift(static_cast<Digit>(param("k", 1)));
    }
    if (name == "beta_1_8_prefix") {
        return beta_1_8_prefix(param("L", 40));
    }
    if (name == "champernowne_tilde") {
        return champernowne_tilde(param("max_block", 5));
    }
    throw Error(ErrorKind::InvalidInput, "unknown recipe '" + std::string(name) + "'");
}

} // namespace betashift
