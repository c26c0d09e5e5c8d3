#pragma once

// Closed-form follower, predecessor and extender set counts for beta-shifts.
//
// Words of length n split into classes S_0..S_n by the longest prefix of d
// they end with. Follower sets are constant on a class and two classes j, k
// share a follower set iff sigma^j(d) == sigma^k(d). Predecessor sets are
// ranked: P(w) is fixed by how many n-windows of d dominate w.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "count_report.hpp"
#include "kneading.hpp"
#include "language.hpp"

namespace betashift {

/// p = min{ j : sigma^k(d) == sigma^j(d) for some k < j }.
inline std::size_t sofic_parameter_p(const KneadingSequence& d) {
    detail::require_exact(d, "sofic_parameter_p");
    const std::size_t bound = d.preperiod().size() + d.period().size();
    for (std::size_t j = 1; j <= bound; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            if (shift_equal(d, k, j) == ShiftRelation::Equal) {
                return j;
            }
        }
    }
    // sigma^{a+b} == sigma^a always holds, so the loop returns.
    throw Error(ErrorKind::InvalidKneading, "no recurrence among shifts");
}

namespace detail {

/// Greedy set of pairwise provably distinct shifts among sigma^0..sigma^n;
/// its size is a lower bound on the number of distinct shifts.
inline std::pair<std::size_t, bool> distinct_shift_count(const KneadingSequence& d, std::size_t n) {
    std::vector<std::size_t> representatives;
    bool all_resolved = true;
    for (std::size_t j = 0; j <= n; ++j) {
        bool separate = true;
        for (std::size_t k : representatives) {
            const auto rel = shift_equal(d, k, j);
            if (rel != ShiftRelation::Distinct) {
                separate = false;
                if (rel == ShiftRelation::Unknown) {
                    all_resolved = false;
                }
                break;
            }
        }
        if (separate) {
            representatives.push_back(j);
        }
    }
    return {representatives.size(), all_resolved};
}

/// Number of classes of the relation shift_equal on {0..n} (exact mode).
inline std::size_t shift_class_count(const KneadingSequence& d, std::size_t n) {
    std::vector<KneadingSequence> seen;
    for (std::size_t j = 0; j <= n; ++j) {
        KneadingSequence s = normalize(shifted(d, j));
        if (std::find(seen.begin(), seen.end(), s) == seen.end()) {
            seen.push_back(std::move(s));
        }
    }
    return seen.size();
}

} // namespace detail

inline CountReport follower_count(const KneadingSequence& d, std::size_t n) {
    CountReport r;
    r.n = n;
    r.provenance = Provenance::Formula;
    r.params.horizon = d.horizon();
    if (n == 0) {
        r.value = 1;
        return r;
    }
    if (d.is_exact()) {
        const std::size_t p = sofic_parameter_p(d);
        r.value = std::min(n + 1, p);
        if (r.value != detail::shift_class_count(d, n)) {
            throw Error(ErrorKind::InvalidKneading, "follower count disagrees with the shift classes");
        }
        r.status = CountStatus::Exact;
        return r;
    }
    d.require_horizon(2 * n, "follower count");
    const auto [distinct, resolved] = detail::distinct_shift_count(d, n);
    r.value = distinct;
    r.params.aperiodicity_assumed = d.assert_aperiodic();
    r.status = (d.assert_aperiodic() && resolved && distinct == n + 1) ? CountStatus::Exact : CountStatus::LowerBound;
    return r;
}

inline CountReport predecessor_count(const KneadingSequence& d, std::size_t n) {
    CountReport r = subword_complexity(d, n);
    r.provenance = Provenance::Formula;
    return r;
}

/// Number of n-windows of `ws` that dominate w (w <= u).
inline std::size_t predecessor_rank(const Word& w, const WindowSet& ws) {
    const auto it = std::lower_bound(ws.windows.begin(), ws.windows.end(), w);
    return static_cast<std::size_t>(ws.windows.end() - it);
}

inline std::size_t predecessor_rank(const Word& w, const KneadingSequence& d) {
    d.require_horizon(w.size(), "predecessor rank");
    if (!is_admissible(w, d)) {
        throw Error(ErrorKind::InadmissibleWord, "word " + to_digit_string(w) + " is not in the language");
    }
    return predecessor_rank(w, window_set(d, w.size()));
}

struct EtaEntry {
    Word word;
    std::size_t suffix_class = 0;
    std::size_t rank = 0;
};

/// (class, rank) index over L_n(X_beta) used to evaluate eta.
class EtaTable {
public:
    static EtaTable build(const KneadingSequence& d, std::size_t n) {
        EtaTable t;
        t.n_ = n;
        t.windows_ = window_set(d, n);
        const Word top = d.first(n);
        for (Word& w : enumerate_language(d, n)) {
            PrefixMatcher m(top);
            for (Digit c : w) {
                m.feed(c);
            }
            EtaEntry e{std::move(w), m.state(), 0};
            e.rank = predecessor_rank(e.word, t.windows_);
            ++t.incidence_[{e.suffix_class, e.rank}];
            t.entries_.push_back(std::move(e));
        }
        return t;
    }

    std::size_t n() const { return n_; }
    const std::vector<EtaEntry>& entries() const { return entries_; }
    const WindowSet& windows() const { return windows_; }

    const EtaEntry& entry(const Word& w) const {
        const auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                                         [](const EtaEntry& e, const Word& x) { return e.word < x; });
        if (it == entries_.end() || it->word != w) {
            throw Error(ErrorKind::InadmissibleWord, "word " + to_digit_string(w) + " is not in L_n");
        }
        return *it;
    }

    std::size_t incidence(std::size_t cls, std::size_t rank) const {
        const auto it = incidence_.find({cls, rank});
        return it == incidence_.end() ? 0 : it->second;
    }

private:
    std::size_t n_ = 0;
    WindowSet windows_;
    std::vector<EtaEntry> entries_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> incidence_;
};

/// 1 iff some v != w in class S_k has the same predecessor set as w.
inline int eta(const Word& w, std::size_t k, const EtaTable& table) {
    const EtaEntry& e = table.entry(w);
    std::size_t same = table.incidence(k, e.rank);
    if (e.suffix_class == k) {
        --same;
    }
    return same > 0 ? 1 : 0;
}

namespace detail {

inline std::uint64_t extender_formula_value(const EtaTable& table) {
    std::uint64_t total = table.windows().windows.size();
    for (const Word& w : table.windows().windows) {
        for (std::size_t k = 0; k <= table.n(); ++k) {
            total += static_cast<std::uint64_t>(eta(w, k, table));
        }
    }
    return total;
}

} // namespace detail

/// Phi_n(d) + sum over n-windows w of d of sum_k eta(w, k).
inline CountReport extender_count_formula(const KneadingSequence& d, std::size_t n) {
    CountReport r;
    r.n = n;
    r.provenance = Provenance::Formula;
    r.params.horizon = d.horizon();
    if (n == 0) {
        r.value = 1;
        return r;
    }
    d.require_horizon(2 * n, "extender formula");
    const EtaTable table = EtaTable::build(d, n);

    if (d.is_exact()) {
        r.value = detail::extender_formula_value(table);
        r.status = CountStatus::UpperBound;
        r.params.note = "sofic input: formula overcounts at most";
        return r;
    }

    r.params.aperiodicity_assumed = d.assert_aperiodic();
    const bool resolved = detail::distinct_shift_count(d, n).second;
    if (d.assert_aperiodic() && resolved) {
        r.value = detail::extender_formula_value(table);
        r.status = CountStatus::Exact;
        return r;
    }
    // Without a non-sofic guarantee only |E(n)| >= |P(n)| >= observed windows is certain.
    r.value = table.windows().windows.size();
    r.status = CountStatus::LowerBound;
    r.params.note = d.assert_aperiodic() ? "shift comparisons unresolved within horizon; reporting complexity lower bound"
                                         : "aperiodicity not asserted; reporting complexity lower bound";
    return r;
}

struct ExtenderBounds {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
};

/// (Phi_n, (n+1) Phi_n) for a non-sofic shift.
inline ExtenderBounds extender_bounds(const KneadingSequence& d, std::size_t n) {
    if (d.is_exact()) {
        throw Error(ErrorKind::SoficInput, "extender bounds hold for non-sofic shifts only");
    }
    if (!d.assert_aperiodic()) {
        throw Error(ErrorKind::SoficInput, "extender bounds need a prefix asserted aperiodic");
    }
    const std::uint64_t phi = subword_complexity(d, n).value;
    return {phi, (n + 1) * phi};
}

} // namespace betashift
