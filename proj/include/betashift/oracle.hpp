#pragma once

// Brute-force counting of truncated follower, predecessor and extender sets
// for any factorial language given by a membership test.
//
// For each legal w of length n the truncated set collects every context of
// length <= m (the empty context included) that keeps w legal; the number of
// distinct truncated sets is a lower bound on the true count since equal
// sets have equal truncations.

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "count_report.hpp"
#include "error.hpp"
#include "kneading.hpp"
#include "language.hpp"
#include "word.hpp"

namespace betashift {

inline constexpr std::uint64_t kDefaultWorkBudget = 100'000'000;

struct LegalityPredicate {
    std::string name;
    Digit alphabet_max = 1;
    std::function<bool(const Word&)> test;
};

inline LegalityPredicate predicate_from_kneading(const KneadingSequence& d) {
    std::string name = "kneading:";
    if (d.is_exact()) {
        name += to_digit_string(d.preperiod()) + "(" + to_digit_string(d.period()) + ")";
    } else {
        name += "prefix/" + std::to_string(*d.horizon());
    }
    return {std::move(name), d.alphabet_max(), [d](const Word& w) { return is_admissible(w, d); }};
}

inline LegalityPredicate full_shift_predicate(Digit k) {
    if (k < 1) {
        throw Error(ErrorKind::InvalidInput, "full shift needs alphabet_max >= 1");
    }
    return {"full(" + std::to_string(k) + ")", k, [](const Word&) { return true; }};
}

/// No factor 1 0^{2j+1} 1.
inline LegalityPredicate even_shift_predicate() {
    return {"even_shift", 1, [](const Word& w) {
                bool seen_one = false;
                std::size_t zeros = 0;
                for (Digit c : w) {
                    if (c == 1) {
                        if (seen_one && zeros % 2 == 1) {
                            return false;
                        }
                        seen_one = true;
                        zeros = 0;
                    } else {
                        ++zeros;
                    }
                }
                return true;
            }};
}

inline LegalityPredicate forbidden_words_predicate(std::vector<Word> forbidden, Digit alphabet_max) {
    std::string name = "forbidden(";
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
        name += (i ? "," : "") + to_digit_string(forbidden[i]);
    }
    name += ")";
    return {std::move(name), alphabet_max, [forbidden = std::move(forbidden)](const Word& w) {
                for (const Word& f : forbidden) {
                    if (!f.empty() && std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) {
                        return false;
                    }
                }
                return true;
            }};
}

enum class SetKind { Follower, Predecessor, Extender };

inline std::string_view to_string(SetKind k) {
    switch (k) {
    case SetKind::Follower: return "follower";
    case SetKind::Predecessor: return "predecessor";
    case SetKind::Extender: return "extender";
    }
    return "follower";
}

struct TruncatedSetCount {
    SetKind kind = SetKind::Follower;
    std::size_t n = 0;
    std::size_t depth = 0;
    std::uint64_t value = 0;
    bool stabilized = false;
};

/// Legal words of length n and the truncated-set class of each.
struct TruncatedPartition {
    std::vector<Word> words;
    std::vector<std::size_t> class_of;
    std::size_t class_count = 0;

    std::size_t class_of_word(const Word& w) const {
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (words[i] == w) {
                return class_of[i];
            }
        }
        throw Error(ErrorKind::InadmissibleWord, "word " + to_digit_string(w) + " is not legal");
    }
};

namespace detail {

class CountingOracle {
public:
    CountingOracle(const LegalityPredicate& pred, std::uint64_t budget) : pred_(pred), budget_(budget) {}

    bool operator()(const Word& w) {
        if (++tests_ > budget_) {
            throw Error(ErrorKind::WorkBudgetExceeded, "more than " + std::to_string(budget_) + " legality tests");
        }
        return pred_.test(w);
    }

private:
    const LegalityPredicate& pred_;
    std::uint64_t budget_;
    std::uint64_t tests_ = 0;
};

struct VectorHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
        std::size_t h = v.size();
        for (std::uint64_t x : v) {
            h ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline std::vector<Word> legal_words(CountingOracle& legal, Digit k, std::size_t n) {
    std::vector<Word> out;
    Word current;
    auto descend = [&](auto&& self) -> void {
        if (current.size() == n) {
            out.push_back(current);
            return;
        }
        for (Digit c = 0; c <= k; ++c) {
            current.push_back(c);
            if (legal(current)) {
                self(self);
            }
            current.pop_back();
        }
    };
    descend(descend);
    return out;
}

/// Visits every u with |u| <= m and left + core + u legal; `code` is a
/// bijective base-(k+2) numbering of u.
template <class Visit>
void right_contexts(CountingOracle& legal, Digit k, std::size_t m, Word& base, Visit&& visit) {
    const std::uint64_t radix = static_cast<std::uint64_t>(k) + 2;
    auto descend = [&](auto&& self, std::size_t len, std::uint64_t code, std::uint64_t place) -> void {
        visit(code);
        if (len == m) {
            return;
        }
        for (Digit c = 0; c <= k; ++c) {
            base.push_back(c);
            if (legal(base)) {
                self(self, len + 1, code + static_cast<std::uint64_t>(c + 1) * place, place * radix);
            }
            base.pop_back();
        }
    };
    descend(descend, 0, 0, 1);
}

template <class Visit>
void left_contexts(CountingOracle& legal, Digit k, std::size_t m, const Word& core, Visit&& visit) {
    const std::uint64_t radix = static_cast<std::uint64_t>(k) + 2;
    Word current = core;
    auto descend = [&](auto&& self, std::size_t len, std::uint64_t code) -> void {
        visit(code, current);
        if (len == m) {
            return;
        }
        for (Digit c = 0; c <= k; ++c) {
            current.insert(current.begin(), c);
            if (legal(current)) {
                self(self, len + 1, static_cast<std::uint64_t>(c + 1) + radix * code);
            }
            current.erase(current.begin());
        }
    };
    descend(descend, 0, 0);
}

inline double work_estimate(Digit k, SetKind kind, std::size_t n, std::size_t m) {
    const double exponent = static_cast<double>(n + (kind == SetKind::Extender ? 2 * m : m));
    return std::pow(static_cast<double>(k) + 1.0, exponent);
}

} // namespace detail

inline TruncatedPartition truncated_set_partition(const LegalityPredicate& pred, SetKind kind, std::size_t n,
                                                  std::size_t m, std::uint64_t work_budget = kDefaultWorkBudget) {
    const Digit k = pred.alphabet_max;
    if (detail::work_estimate(k, kind, n, m) > static_cast<double>(work_budget)) {
        throw Error(ErrorKind::WorkBudgetExceeded, "(k+1)^(n+" + std::string(kind == SetKind::Extender ? "2m" : "m")
                                                       + ") exceeds the work budget of " + std::to_string(work_budget));
    }
    const double radix = static_cast<double>(k) + 2.0;
    if (std::pow(radix, static_cast<double>(2 * m + 2)) >= 1.8e19) {
        throw Error(ErrorKind::WorkBudgetExceeded, "context depth too large to encode");
    }
    const std::uint64_t pair_shift = static_cast<std::uint64_t>(std::llround(std::pow(radix, static_cast<double>(m + 1))));

    detail::CountingOracle legal(pred, work_budget);
    TruncatedPartition part;
    part.words = detail::legal_words(legal, k, n);
    std::unordered_map<std::vector<std::uint64_t>, std::size_t, detail::VectorHash> ids;

    for (const Word& w : part.words) {
        std::vector<std::uint64_t> set;
        switch (kind) {
        case SetKind::Follower: {
            Word base = w;
            detail::right_contexts(legal, k, m, base, [&](std::uint64_t u) { set.push_back(u); });
            break;
        }
        case SetKind::Predecessor:
            detail::left_contexts(legal, k, m, w, [&](std::uint64_t s, const Word&) { set.push_back(s); });
            break;
        case SetKind::Extender:
            detail::left_contexts(legal, k, m, w, [&](std::uint64_t s, const Word& sw) {
                Word base = sw;
                detail::right_contexts(legal, k, m, base,
                                       [&](std::uint64_t u) { set.push_back(s * pair_shift + u); });
            });
            break;
        }
        std::sort(set.begin(), set.end());
        const auto [it, inserted] = ids.try_emplace(std::move(set), ids.size());
        part.class_of.push_back(it->second);
    }
    part.class_count = ids.size();
    return part;
}

inline TruncatedSetCount truncated_set_count(const LegalityPredicate& pred, SetKind kind, std::size_t n, std::size_t m,
                                             std::uint64_t work_budget = kDefaultWorkBudget) {
    const auto part = truncated_set_partition(pred, kind, n, m, work_budget);
    return {kind, n, m, part.class_count, false};
}

/// Depths 1..m_max; stabilized iff the last two depths agree (depth 0 counts 1).
inline TruncatedSetCount stabilized_count(const LegalityPredicate& pred, SetKind kind, std::size_t n,
                                          std::size_t m_max, std::uint64_t work_budget = kDefaultWorkBudget) {
    if (m_max == 0) {
        throw Error(ErrorKind::InvalidInput, "maximum depth must be positive");
    }
    std::uint64_t previous = truncated_set_partition(pred, kind, n, 0, work_budget).class_count;
    TruncatedSetCount last;
    for (std::size_t m = 1; m <= m_max; ++m) {
        last = truncated_set_count(pred, kind, n, m, work_budget);
        last.stabilized = last.value == previous;
        previous = last.value;
    }
    return last;
}

inline CountReport to_count_report(const TruncatedSetCount& t, bool depth_escalated = false) {
    CountReport r;
    r.n = t.n;
    r.value = t.value;
    r.status = CountStatus::LowerBound;
    r.provenance = Provenance::Oracle;
    r.params.depth = t.depth;
    if (depth_escalated) {
        r.params.stabilized = t.stabilized;
    }
    return r;
}

/// Draws random legal words and checks every factor is legal; returns the
/// first offending word, if any.
inline std::optional<Word> find_factor_closure_violation(const LegalityPredicate& pred, std::size_t samples,
                                                         std::size_t max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Digit> digit(0, pred.alphabet_max);
    std::uniform_int_distribution<std::size_t> length(1, std::max<std::size_t>(1, max_len));
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t len = length(rng);
        Word w;
        while (w.size() < len) {
            bool extended = false;
            for (int attempt = 0; attempt < 8 && !extended; ++attempt) {
                w.push_back(digit(rng));
                if (pred.test(w)) {
                    extended = true;
                } else {
                    w.pop_back();
                }
            }
            if (!extended) {
                break;
            }
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j <= w.size(); ++j) {
                const Word factor(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
                if (!pred.test(factor)) {
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace betashift
