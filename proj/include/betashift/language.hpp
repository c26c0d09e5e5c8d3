#pragma once

// The language of a beta-shift as seen through its kneading sequence d:
// a word w is legal iff every suffix of w is lexicographically <= the
// equally long prefix of d.

#include <algorithm>
#include <set>
#include <span>
#include <vector>

#include "count_report.hpp"
#include "kneading.hpp"

namespace betashift {

namespace detail {

inline void require_alphabet(const Word& w, const KneadingSequence& d) {
    for (Digit x : w) {
        if (x < 0 || x > d.alphabet_max()) {
            throw Error(ErrorKind::InvalidInput, "digit " + std::to_string(x) + " outside alphabet {0,...,"
                                                     + std::to_string(d.alphabet_max()) + "}");
        }
    }
}

} // namespace detail

inline bool is_admissible(const Word& w, const KneadingSequence& d) {
    detail::require_alphabet(w, d);
    d.require_horizon(w.size(), "admissibility check");
    const Word top = d.first(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto offset = static_cast<std::ptrdiff_t>(i);
        if (std::lexicographical_compare_three_way(w.begin() + offset, w.end(), top.begin(), top.end() - offset) > 0) {
            return false;
        }
    }
    return true;
}

/// Failure-function automaton for the pattern (d)_n. After feeding a word,
/// state() is the length of the longest prefix of the pattern that is a
/// suffix of the input.
class PrefixMatcher {
public:
    explicit PrefixMatcher(Word pattern) : pattern_(std::move(pattern)), border_(pattern_.size() + 1, 0) {
        std::size_t k = 0;
        for (std::size_t i = 1; i < pattern_.size(); ++i) {
            while (k > 0 && pattern_[i] != pattern_[k]) {
                k = border_[k];
            }
            if (pattern_[i] == pattern_[k]) {
                ++k;
            }
            border_[i + 1] = k;
        }
    }

    std::size_t state() const { return state_; }

    void feed(Digit c) {
        if (state_ == pattern_.size()) {
            state_ = border_[state_];
        }
        while (state_ > 0 && pattern_[state_] != c) {
            state_ = border_[state_];
        }
        if (!pattern_.empty() && pattern_[state_] == c) {
            ++state_;
        }
    }

    /// All matched lengths for the current state, longest first (ends with 0).
    std::vector<std::size_t> matched_lengths() const {
        std::vector<std::size_t> out;
        for (std::size_t k = state_; k > 0; k = border_[k]) {
            out.push_back(k);
        }
        out.push_back(0);
        return out;
    }

private:
    Word pattern_;
    std::vector<std::size_t> border_;
    std::size_t state_ = 0;
};

/// Length of the longest prefix of d that is a suffix of w (the class S_k of w).
inline std::size_t suffix_class(const Word& w, const KneadingSequence& d) {
    d.require_horizon(w.size(), "suffix classification");
    PrefixMatcher matcher(d.first(w.size()));
    for (Digit c : w) {
        matcher.feed(c);
    }
    return matcher.state();
}

/// L_n(X_beta) in ascending lexicographic order.
inline std::vector<Word> enumerate_language(const KneadingSequence& d, std::size_t n) {
    d.require_horizon(n, "language enumeration");
    if (n == 0) {
        return {Word{}};
    }
    const Word top = d.first(n);
    std::vector<Word> out;
    Word current;
    current.reserve(n);
    // `active` holds every k with current[|current|-k ..] == top[0 .. k); a
    // digit c may follow iff c <= top[k] for each of them.
    std::vector<std::vector<std::size_t>> active_stack{{0}};

    auto descend = [&](auto&& self) -> void {
        if (current.size() == n) {
            out.push_back(current);
            return;
        }
        const std::vector<std::size_t> active = active_stack.back();
        Digit limit = d.alphabet_max();
        for (std::size_t k : active) {
            limit = std::min(limit, top[k]);
        }
        for (Digit c = 0; c <= limit; ++c) {
            std::vector<std::size_t> next{0};
            for (std::size_t k : active) {
                if (top[k] == c && k + 1 < n) {
                    next.push_back(k + 1);
                }
            }
            current.push_back(c);
            active_stack.push_back(std::move(next));
            self(self);
            active_stack.pop_back();
            current.pop_back();
        }
    };
    descend(descend);
    return out;
}

/// Distinct length-n factors of a finite digit string, sorted.
inline std::vector<Word> distinct_windows(std::span<const Digit> seq, std::size_t n) {
    std::set<Word> seen;
    if (n == 0) {
        seen.insert(Word{});
    } else if (seq.size() >= n) {
        for (std::size_t i = 0; i + n <= seq.size(); ++i) {
            seen.emplace(seq.begin() + static_cast<std::ptrdiff_t>(i), seq.begin() + static_cast<std::ptrdiff_t>(i + n));
        }
    }
    return {seen.begin(), seen.end()};
}

struct WindowSet {
    std::size_t n = 0;
    std::vector<Word> windows;
    CountStatus status = CountStatus::Exact;
};

/// The n-letter factors of d; exact for an exact d, a lower bound otherwise.
inline WindowSet window_set(const KneadingSequence& d, std::size_t n) {
    d.require_horizon(n, "window scan");
    WindowSet ws;
    ws.n = n;
    if (d.is_exact()) {
        const std::size_t span = d.preperiod().size() + 2 * d.period().size() + n;
        ws.windows = distinct_windows(d.first(span), n);
        ws.status = CountStatus::Exact;
    } else {
        ws.windows = distinct_windows(d.digits(), n);
        ws.status = CountStatus::LowerBound;
    }
    return ws;
}

inline CountReport subword_complexity(const KneadingSequence& d, std::size_t n) {
    const WindowSet ws = window_set(d, n);
    CountReport r;
    r.n = n;
    r.value = ws.windows.size();
    r.status = ws.status;
    r.provenance = Provenance::Formula;
    r.params.horizon = d.horizon();
    return r;
}

} // namespace betashift
