#pragma once

// Batch command-line front end. `run` is kept separate from main() so the
// tests can drive every subcommand with captured streams.
//
// Exit codes: 0 ok, 1 oracle contradicted a formula, 2 invalid input,
// 3 horizon or work budget exceeded, 4 precision exhausted.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "json_io.hpp"
#include "kneading.hpp"
#include "language.hpp"
#include "oracle.hpp"
#include "theorems.hpp"

namespace betashift::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOracleMismatch = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitLimitExceeded = 3;
inline constexpr int kExitPrecision = 4;

inline int exit_code_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::HorizonExceeded:
    case ErrorKind::IndexBeyondHorizon:
    case ErrorKind::WorkBudgetExceeded:
    case ErrorKind::ToleranceUnreachable:
        return kExitLimitExceeded;
    case ErrorKind::PrecisionExhausted:
        return kExitPrecision;
    default:
        return kExitInvalidInput;
    }
}

struct NRange {
    std::size_t first = 1;
    std::size_t last = 1;
    bool is_range = false;
};

inline NRange parse_n_range(const std::string& text) {
    auto number = [&](const std::string& s) -> std::size_t {
        std::size_t used = 0;
        long v = -1;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || v < 0) {
            throw Error(ErrorKind::InvalidInput, "bad --n value '" + text + "'");
        }
        return static_cast<std::size_t>(v);
    };
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::size_t n = number(text);
        return {n, n, false};
    }
    NRange r{number(text.substr(0, dots)), number(text.substr(dots + 2)), true};
    if (r.last < r.first) {
        throw Error(ErrorKind::InvalidInput, "empty --n range '" + text + "'");
    }
    return r;
}

inline LegalityPredicate parse_predicate(const std::string& spec) {
    if (spec == "even_shift" || spec == "even") {
        return even_shift_predicate();
    }
    if (spec == "golden_mean") {
        return forbidden_words_predicate({{1, 1}}, 1);
    }
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "full") {
        std::size_t used = 0;
        int k = 0;
        try {
            k = tail.empty() ? 1 : std::stoi(tail, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (!tail.empty() && used != tail.size()) {
            throw Error(ErrorKind::InvalidInput, "full shift takes an alphabet maximum, e.g. full:2");
        }
        return full_shift_predicate(k);
    }
    if (head == "forbidden" && !tail.empty()) {
        std::vector<Word> words;
        Digit top = 1;
        std::stringstream ss(tail);
        std::string item;
        while (std::getline(ss, item, ',')) {
            Word w = parse_word(item);
            top = std::max(top, max_digit(w));
            words.push_back(std::move(w));
        }
        return forbidden_words_predicate(std::move(words), top);
    }
    throw Error(ErrorKind::InvalidInput, "unknown predicate '" + spec + "'");
}

inline SetKind parse_kind(const std::string& text) {
    if (text == "follower" || text == "followers") {
        return SetKind::Follower;
    }
    if (text == "predecessor" || text == "predecessors") {
        return SetKind::Predecessor;
    }
    if (text == "extender" || text == "extenders") {
        return SetKind::Extender;
    }
    throw Error(ErrorKind::InvalidInput, "unknown set kind '" + text + "'");
}

namespace detail {

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::InvalidInput, "malformed JSON in '" + path + "': " + e.what());
    }
}

struct Inputs {
    std::string kneading_file;
    std::string preperiod;
    std::string period;
    std::string digits;
    std::string beta_file;
    std::string lo;
    std::string hi;
    std::string coeffs;
    bool assert_aperiodic = false;
    std::uint64_t work_budget = kDefaultWorkBudget;
    unsigned precision_bits = kDefaultPrecisionBits;
    std::string format;

    KneadingSequence kneading() const {
        std::optional<KneadingSequence> d;
        if (!kneading_file.empty()) {
            d = kneading_from_json(read_json_file(kneading_file));
        } else if (!period.empty()) {
            d = KneadingSequence::exact(preperiod.empty() ? Word{} : parse_word(preperiod), parse_word(period));
        } else if (!digits.empty()) {
            d = KneadingSequence::prefix(parse_word(digits), false);
        } else {
            throw Error(ErrorKind::InvalidInput, "no kneading sequence given (use --kneading, --period or --digits)");
        }
        if (assert_aperiodic) {
            if (!d->is_prefix()) {
                throw Error(ErrorKind::InvalidInput, "--assert-aperiodic applies to prefix sequences only");
            }
            d = d->with_assert_aperiodic(true);
        }
        return *d;
    }

    BetaSpec beta() const {
        if (!beta_file.empty()) {
            return beta_from_json(read_json_file(beta_file));
        }
        if (lo.empty()) {
            throw Error(ErrorKind::InvalidInput, "no beta given (use --beta or --lo/--hi)");
        }
        const Rational l = parse_rational(lo);
        const Rational h = hi.empty() ? l : parse_rational(hi);
        if (coeffs.empty()) {
            return BetaSpec::interval(l, h);
        }
        std::vector<Rational> cs;
        std::stringstream ss(coeffs);
        std::string item;
        while (std::getline(ss, item, ',')) {
            cs.push_back(parse_rational(item));
        }
        return BetaSpec::polynomial_root(cs, l, h);
    }
};

inline void add_kneading_options(CLI::App* cmd, Inputs& in) {
    cmd->add_option("--kneading", in.kneading_file, "kneading sequence JSON file");
    cmd->add_option("--preperiod", in.preperiod, "inline exact preperiod, e.g. 2");
    cmd->add_option("--period", in.period, "inline exact period, e.g. 10");
    cmd->add_option("--digits", in.digits, "inline prefix digits");
}

inline void add_beta_options(CLI::App* cmd, Inputs& in) {
    cmd->add_option("--beta", in.beta_file, "beta specification JSON file");
    cmd->add_option("--lo", in.lo, "inline interval lower bound");
    cmd->add_option("--hi", in.hi, "inline interval upper bound (defaults to --lo)");
    cmd->add_option("--coeffs", in.coeffs, "polynomial coefficients c0,c1,... (root isolated by --lo/--hi)");
}

using Formula = std::function<CountReport(const KneadingSequence&, std::size_t)>;

struct SequenceQuery {
    std::string n = "1";
    bool check_oracle = false;
    std::size_t depth = 0;
};

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Beta-shift expansions, kneading sequences and follower/predecessor/extender set counts",
                 "betashift"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_help_all_flag("--help-all");

    detail::Inputs in;
    app.add_option("--work-budget", in.work_budget, "legality-test budget for the oracle")->capture_default_str();
    app.add_option("--precision-bits", in.precision_bits, "precision cap for digit certification")
        ->capture_default_str();
    app.add_flag("--assert-aperiodic", in.assert_aperiodic, "treat a prefix kneading sequence as non-eventually-periodic");
    app.add_option("--format", in.format, "output format")->check(CLI::IsMember({"csv", "json", "lines"}));

    std::function<int()> action;
    bool failed_check = false;

    // expand
    std::size_t count = 0;
    auto* expand = app.add_subcommand("expand", "certified digits of the greedy expansion of 1");
    detail::add_beta_options(expand, in);
    expand->add_option("--count", count, "number of digits")->required();
    expand->callback([&] {
        action = [&] {
            const Word digits = greedy_expansion(in.beta(), count, in.precision_bits);
            out << Json{{"digits", digits}}.dump() << '\n';
            return kExitOk;
        };
    });

    // kneading
    std::size_t horizon = 0;
    auto* kneading = app.add_subcommand("kneading", "kneading sequence d*(1) of a beta");
    detail::add_beta_options(kneading, in);
    kneading->add_option("--horizon", horizon, "digits to certify")->required();
    kneading->callback([&] {
        action = [&] {
            out << to_json(kneading_from_beta(in.beta(), horizon, in.precision_bits)).dump() << '\n';
            return kExitOk;
        };
    });

    // solve-beta
    std::string tolerance = "1e-9";
    unsigned decimals = 20;
    auto* solve = app.add_subcommand("solve-beta", "enclose the beta of a kneading sequence");
    detail::add_kneading_options(solve, in);
    solve->add_option("--tolerance", tolerance, "maximum interval width")->capture_default_str();
    solve->add_option("--decimals", decimals, "decimal digits in lo/hi")->capture_default_str();
    solve->callback([&] {
        action = [&] {
            const Interval box = solve_beta(in.kneading(), parse_rational(tolerance));
            Json j = to_json(box, decimals);
            j["width"] = to_decimal(box.width(), decimals, Rounding::Up);
            out << j.dump() << '\n';
            return kExitOk;
        };
    });

    // validate
    auto* validate = app.add_subcommand("validate", "check kneading sequence invariants");
    detail::add_kneading_options(validate, in);
    validate->callback([&] {
        action = [&] {
            out << to_json(validate_kneading(in.kneading())).dump() << '\n';
            return kExitOk;
        };
    });

    // admissible
    std::string word_text;
    auto* admissible = app.add_subcommand("admissible", "is a word in the language");
    detail::add_kneading_options(admissible, in);
    admissible->add_option("--word", word_text, "digits, e.g. 010 or 0,1,0")->required();
    admissible->callback([&] {
        action = [&] {
            const Word w = parse_word(word_text);
            const KneadingSequence d = in.kneading();
            Json j{{"word", w}, {"admissible", is_admissible(w, d)}};
            if (is_admissible(w, d)) {
                j["suffix_class"] = suffix_class(w, d);
                j["predecessor_rank"] = predecessor_rank(w, d);
            }
            out << j.dump() << '\n';
            return kExitOk;
        };
    });

    // language
    std::size_t language_n = 1;
    auto* language = app.add_subcommand("language", "list L_n in lexicographic order");
    detail::add_kneading_options(language, in);
    language->add_option("--n", language_n, "word length")->required();
    language->callback([&] {
        action = [&] {
            const auto words = enumerate_language(in.kneading(), language_n);
            if (in.format == "lines" || in.format == "csv") {
                for (const Word& w : words) {
                    out << to_digit_string(w) << '\n';
                }
            } else {
                out << Json(words).dump() << '\n';
            }
            return kExitOk;
        };
    });

    // formula sequences
    detail::SequenceQuery query;
    auto emit_sequence = [&](const detail::Formula& formula, std::optional<SetKind> oracle_kind) {
        const NRange range = parse_n_range(query.n);
        const KneadingSequence d = in.kneading();
        if (query.check_oracle && query.depth == 0) {
            throw Error(ErrorKind::InvalidInput, "--check-oracle needs --depth");
        }
        const bool csv = in.format.empty() ? range.is_range : in.format == "csv";
        Json rows = Json::array();
        if (csv) {
            out << "n,value,status" << (query.check_oracle ? ",oracle_value,oracle_depth" : "") << '\n';
        }
        for (std::size_t n = range.first; n <= range.last; ++n) {
            const CountReport r = formula(d, n);
            Json row = to_json(r);
            std::string extra;
            if (query.check_oracle && oracle_kind) {
                const auto oracle = truncated_set_count(predicate_from_kneading(d), *oracle_kind, n, query.depth,
                                                        in.work_budget);
                if (r.status != CountStatus::LowerBound && oracle.value > r.value) {
                    failed_check = true;
                    err << "oracle count " << oracle.value << " exceeds formula value " << r.value << " at n=" << n
                        << '\n';
                }
                row["oracle"] = to_json(to_count_report(oracle));
                extra = "," + std::to_string(oracle.value) + "," + std::to_string(query.depth);
            }
            if (csv) {
                out << n << ',' << r.value << ',' << to_string(r.status) << extra << '\n';
            } else {
                rows.push_back(std::move(row));
            }
        }
        if (!csv) {
            out << (range.is_range ? rows.dump() : rows.front().dump()) << '\n';
        }
        return failed_check ? kExitOracleMismatch : kExitOk;
    };

    auto add_sequence = [&](const char* name, const char* help, detail::Formula formula,
                            std::optional<SetKind> oracle_kind) {
        auto* cmd = app.add_subcommand(name, help);
        detail::add_kneading_options(cmd, in);
        cmd->add_option("--n", query.n, "length N or range A..B")->required();
        cmd->add_flag("--check-oracle", query.check_oracle, "cross-check against the truncated-set oracle");
        cmd->add_option("--depth", query.depth, "oracle context depth");
        cmd->callback([&, formula, oracle_kind] { action = [&, formula, oracle_kind] { return emit_sequence(formula, oracle_kind); }; });
    };
    add_sequence("complexity", "subword complexity of d", subword_complexity, SetKind::Predecessor);
    add_sequence("followers", "follower set counts", follower_count, SetKind::Follower);
    add_sequence("predecessors", "predecessor set counts", predecessor_count, SetKind::Predecessor);
    add_sequence("extenders", "extender set counts (formula)", extender_count_formula, SetKind::Extender);

    // bounds
    std::string bounds_n = "1";
    bool bounds_check = false;
    std::size_t bounds_depth = 0;
    auto* bounds = app.add_subcommand("bounds", "extender set bounds for non-sofic shifts");
    detail::add_kneading_options(bounds, in);
    bounds->add_option("--n", bounds_n, "length N or range A..B")->required();
    bounds->add_flag("--check-oracle", bounds_check, "cross-check the upper bound against the oracle");
    bounds->add_option("--depth", bounds_depth, "oracle context depth");
    bounds->callback([&] {
        action = [&] {
            const NRange range = parse_n_range(bounds_n);
            const KneadingSequence d = in.kneading();
            if (bounds_check && bounds_depth == 0) {
                throw Error(ErrorKind::InvalidInput, "--check-oracle needs --depth");
            }
            const bool csv = in.format.empty() ? range.is_range : in.format == "csv";
            Json rows = Json::array();
            if (csv) {
                out << "n,low,high\n";
            }
            for (std::size_t n = range.first; n <= range.last; ++n) {
                const ExtenderBounds b = extender_bounds(d, n);
                if (bounds_check) {
                    const auto oracle =
                        truncated_set_count(predicate_from_kneading(d), SetKind::Extender, n, bounds_depth, in.work_budget);
                    if (oracle.value > b.high) {
                        failed_check = true;
                        err << "oracle count " << oracle.value << " exceeds upper bound " << b.high << " at n=" << n
                            << '\n';
                    }
                }
                if (csv) {
                    out << n << ',' << b.low << ',' << b.high << '\n';
                } else {
                    rows.push_back(Json{{"n", n}, {"low", b.low}, {"high", b.high}});
                }
            }
            if (!csv) {
                out << (range.is_range ? rows.dump() : rows.front().dump()) << '\n';
            }
            return failed_check ? kExitOracleMismatch : kExitOk;
        };
    });

    // oracle
    std::string predicate_spec;
    std::string kind_text = "follower";
    std::string oracle_n = "1";
    std::size_t oracle_depth = 0;
    bool stabilize = false;
    auto* oracle = app.add_subcommand("oracle", "brute-force truncated set counts");
    detail::add_kneading_options(oracle, in);
    oracle->add_option("--predicate", predicate_spec, "even_shift | golden_mean | full:K | forbidden:W1,W2");
    oracle->add_option("--kind", kind_text, "follower | predecessor | extender")->capture_default_str();
    oracle->add_option("--n", oracle_n, "length N or range A..B")->required();
    oracle->add_option("--depth", oracle_depth, "context depth (maximum depth with --stabilize)")->required();
    oracle->add_flag("--stabilize", stabilize, "escalate depth 1..depth and report stabilization");
    oracle->callback([&] {
        action = [&] {
            const LegalityPredicate pred =
                predicate_spec.empty() ? predicate_from_kneading(in.kneading()) : parse_predicate(predicate_spec);
            const SetKind kind = parse_kind(kind_text);
            const NRange range = parse_n_range(oracle_n);
            if (oracle_depth == 0) {
                throw Error(ErrorKind::InvalidInput, "--depth must be positive");
            }
            const bool csv = in.format.empty() ? range.is_range : in.format == "csv";
            Json rows = Json::array();
            if (csv) {
                out << "n,value,status" << (stabilize ? ",stabilized" : "") << '\n';
            }
            for (std::size_t n = range.first; n <= range.last; ++n) {
                const TruncatedSetCount t = stabilize ? stabilized_count(pred, kind, n, oracle_depth, in.work_budget)
                                                      : truncated_set_count(pred, kind, n, oracle_depth, in.work_budget);
                const CountReport r = to_count_report(t, stabilize);
                if (csv) {
                    out << n << ',' << r.value << ',' << to_string(r.status);
                    if (stabilize) {
                        out << ',' << (t.stabilized ? "true" : "false");
                    }
                    out << '\n';
                } else {
                    rows.push_back(to_json(r));
                }
            }
            if (!csv) {
                out << (range.is_range ? rows.dump() : rows.front().dump()) << '\n';
            }
            return kExitOk;
        };
    });

    // construct
    std::string recipe;
    std::size_t k_param = 0;
    std::size_t l_param = 0;
    std::size_t block_param = 0;
    std::string construct_digits;
    auto* construct = app.add_subcommand("construct", "build a named kneading sequence");
    construct->add_option("name", recipe, "golden_mean | full_shift | beta_1_8_prefix | champernowne_tilde | lift | prepend")
        ->required();
    construct->add_option("--k", k_param, "alphabet maximum for full_shift");
    construct->add_option("--L", l_param, "horizon for beta_1_8_prefix");
    construct->add_option("--max-block", block_param, "largest block length for champernowne_tilde");
    construct->add_option("--input", construct_digits, "digit string for lift / prepend");
    construct->callback([&] {
        action = [&] {
            if (recipe == "lift" || recipe == "prepend") {
                if (construct_digits.empty()) {
                    throw Error(ErrorKind::InvalidInput, recipe + " needs --input");
                }
                const Word digits = parse_word(construct_digits);
                const KneadingSequence d = recipe == "lift" ? KneadingSequence::prefix(lift_digits(digits), in.assert_aperiodic)
                                                            : prepend_symbol(digits, in.assert_aperiodic);
                out << to_json(d).dump() << '\n';
                return kExitOk;
            }
            std::map<std::string, std::string> params;
            if (k_param) {
                params["k"] = std::to_string(k_param);
            }
            if (l_param) {
                params["L"] = std::to_string(l_param);
            }
            if (block_param) {
                params["max_block"] = std::to_string(block_param);
            }
            out << to_json(named_example(recipe, params).output).dump() << '\n';
            return kExitOk;
        };
    });

    try {
        std::vector<const char*> argv{"betashift"};
        for (const auto& a : args) {
            argv.push_back(a.c_str());
        }
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInvalidInput;
    }

    try {
        return action ? action() : kExitInvalidInput;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidInput;
    }
}

} // namespace betashift::cli
