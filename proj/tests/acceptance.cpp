// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <betashift/betashift.hpp>

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>

using namespace betashift;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

std::vector<KneadingSequence> exact_battery() {
    return {golden_mean().output, full_shift(1).output, full_shift(2).output, KneadingSequence::exact({2}, {1, 0})};
}

std::vector<KneadingSequence> aperiodic_battery() {
    return {beta_1_8_prefix(40).output, champernowne_tilde(5).output};
}

void golden_followers(Outcome& o) {
    const auto d = golden_mean().output;
    const auto pred = predicate_from_kneading(d);
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto f = follower_count(d, n);
        o.require(f.value == 2 && f.status == CountStatus::Exact, "formula at n=" + std::to_string(n));
        o.require(truncated_set_count(pred, SetKind::Follower, n, 6).value == 2, "oracle at n=" + std::to_string(n));
    }
}

void even_shift_followers(Outcome& o) {
    const std::vector<std::uint64_t> expected{2, 3, 3, 3, 3, 3};
    for (std::size_t n = 1; n <= 6; ++n) {
        const auto v = truncated_set_count(even_shift_predicate(), SetKind::Follower, n, 6).value;
        o.detail << ' ' << v;
        o.require(v == expected[n - 1], "n=" + std::to_string(n));
    }
}

void full_shift_counts(Outcome& o) {
    for (Digit k : {1, 2}) {
        const auto pred = full_shift_predicate(k);
        for (std::size_t n = 1; n <= 5; ++n) {
            const std::size_t depth = k == 1 ? 4 : 3;
            for (auto kind : {SetKind::Follower, SetKind::Predecessor, SetKind::Extender}) {
                o.require(truncated_set_count(pred, kind, n, depth).value == 1,
                          "k=" + std::to_string(k) + " n=" + std::to_string(n) + " " + std::string(to_string(kind)));
            }
            o.require(predecessor_count(full_shift(k).output, n).value == 1, "formula k=" + std::to_string(k));
        }
    }
}

void champernowne_counts(Outcome& o) {
    const auto d = champernowne_tilde(5).output;
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto v = predecessor_count(d, n).value;
        o.detail << ' ' << v;
        o.require(v == (std::uint64_t{1} << n) + 1, "predecessor n=" + std::to_string(n));
    }
    for (std::size_t n = 1; n <= 8; ++n) {
        o.require(follower_count(d, n).value == n + 1, "follower n=" + std::to_string(n));
    }
}

void solve_beta_values(Outcome& o) {
    const Rational tol = parse_rational("1e-9");
    const Interval g = solve_beta(golden_mean().output, tol);
    o.require(g.contains(parse_rational("1.6180339887")) && g.width() <= tol, "golden");
    const Interval two = solve_beta(full_shift(1).output, tol);
    o.require(two.is_point() && two.lo == 2, "period [1]");
    const Interval three = solve_beta(full_shift(2).output, tol);
    o.require(three.is_point() && three.lo == 3, "period [2]");
}

void round_trip(Outcome& o) {
    for (const auto& d : exact_battery()) {
        const Interval box = solve_beta(d, parse_rational("1e-9"));
        const auto beta = BetaSpec::polynomial_root(characteristic_polynomial(d).coefficients(), box.lo, box.hi);
        const auto back = kneading_from_beta(beta, 30);
        o.require(back.first(30) == d.first(30), to_digit_string(d.first(6)));
    }
}

void extender_formula_vs_oracle(Outcome& o) {
    const auto golden = golden_mean().output;
    const auto g = extender_count_formula(golden, 2);
    const auto go = stabilized_count(predicate_from_kneading(golden), SetKind::Extender, 2, 6);
    o.require(g.value == 3 && g.status == CountStatus::UpperBound, "golden formula");
    o.require(go.value == 3 && go.stabilized, "golden oracle");

    const auto full = full_shift(1).output;
    const auto f = extender_count_formula(full, 2);
    const auto fo = stabilized_count(full_shift_predicate(1), SetKind::Extender, 2, 6);
    o.require(f.value == 3 && f.status == CountStatus::UpperBound, "full formula");
    o.require(fo.value == 1, "full oracle");

    const auto tilde = champernowne_tilde(5).output;
    const auto pred = predicate_from_kneading(tilde);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto formula = extender_count_formula(tilde, n);
        const auto oracle = stabilized_count(pred, SetKind::Extender, n, 6);
        const auto [low, high] = extender_bounds(tilde, n);
        o.detail << " n=" << n << ":oracle " << oracle.value << (oracle.stabilized ? " (stable)" : " (rising)")
                 << " formula " << formula.value << " in [" << low << "," << high << "]";
        o.require(oracle.value <= formula.value, "oracle <= formula at n=" + std::to_string(n));
        o.require(low <= formula.value && formula.value <= high, "bounds at n=" + std::to_string(n));
    }
}

void invariant_suite(Outcome& o) {
    std::mt19937_64 rng(2024);
    std::vector<KneadingSequence> all = exact_battery();
    for (const auto& d : aperiodic_battery()) {
        all.push_back(d);
    }
    for (const auto& d : all) {
        for (std::size_t n = 1; n <= 10; ++n) {
            o.require(follower_count(d, n).value <= n + 1, "|F(n)| <= n+1");
        }
    }

    for (const auto& d : exact_battery()) {
        const auto pred = predicate_from_kneading(d);
        std::uint64_t previous = 0;
        for (std::size_t m = 0; m <= 5; ++m) {
            const auto v = truncated_set_count(pred, SetKind::Extender, 2, m).value;
            o.require(v >= previous, "depth monotone");
            previous = v;
        }
    }

    for (const auto& d : all) {
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto words = enumerate_language(d, n);
            const auto ws = window_set(d, n);
            for (std::size_t i = 0; i + 1 < words.size(); ++i) {
                o.require(predecessor_rank(words[i], ws) >= predecessor_rank(words[i + 1], ws), "rank monotone");
            }
        }
    }

    std::size_t samples = 0;
    while (samples < 1000) {
        const auto& d = all[samples % all.size()];
        const std::size_t len = 1 + rng() % 12;
        Word w;
        while (w.size() < len) {
            Word x = w;
            x.push_back(static_cast<Digit>(rng() % (d.alphabet_max() + 1)));
            if (is_admissible(x, d)) {
                w = x;
            }
        }
        PrefixMatcher m(d.first(len));
        for (Digit c : w) {
            m.feed(c);
        }
        const auto lengths = m.matched_lengths();
        for (std::size_t a = 0; a < lengths.size(); ++a) {
            for (std::size_t b = a + 1; b < lengths.size(); ++b) {
                const auto cmp = compare_shifts(d, lengths[a], lengths[b]);
                o.require(!cmp || *cmp <= 0, "shift dominance on " + to_digit_string(w));
            }
        }
        ++samples;
    }

    for (int trial = 0; trial < 20; ++trial) {
        Word d{1};
        while (d.size() < 60) {
            d.push_back(static_cast<Digit>(rng() % 2));
        }
        const auto base = KneadingSequence::prefix(d, true);
        const auto p = prepend_symbol(d, true);
        for (std::size_t n = 1; n <= 5; ++n) {
            o.require(subword_complexity(p, n).value == subword_complexity(base, n).value + 1, "complexity +1");
        }
    }
}

void dichotomy(Outcome& o) {
    for (const auto& d : exact_battery()) {
        bool drops = false;
        for (std::size_t n = 1; n <= 10; ++n) {
            drops = drops || follower_count(d, n).value <= n;
        }
        o.require(drops, "sofic member " + to_digit_string(d.first(4)) + " never drops below n+1");
    }
    for (const auto& d : aperiodic_battery()) {
        for (std::size_t n = 1; n <= 10; ++n) {
            const auto f = follower_count(d, n);
            o.require(f.value == n + 1 && f.status == CountStatus::Exact, "aperiodic member at n=" + std::to_string(n));
        }
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        void (*check)(Outcome&);
    };
    const std::vector<Criterion> criteria{
        {1, "golden-mean follower counts, formula and depth-6 oracle", 5, golden_followers},
        {2, "even-shift oracle follower counts 2,3,3,3,3,3", 10, even_shift_followers},
        {3, "full shifts k=1,2: all oracle counts 1, predecessor formula 1", 10, full_shift_counts},
        {4, "prepended Champernowne: predecessors 2^n+1, followers n+1", 10, champernowne_counts},
        {5, "solve_beta on golden mean and full shifts", 1, solve_beta_values},
        {6, "round trip kneading -> beta -> kneading, 30 digits", 5, round_trip},
        {7, "extender formula against the oracle and the bounds", 60, extender_formula_vs_oracle},
        {8, "invariant suite", 60, invariant_suite},
        {9, "follower-count dichotomy on the battery", 10, dichotomy},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.check(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << " [exception: " << e.what() << "]";
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.limit_seconds) {
            o.pass = false;
            o.detail << " [over time limit " << c.limit_seconds << " s]";
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << seconds << " s)"
                  << o.detail.str() << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
