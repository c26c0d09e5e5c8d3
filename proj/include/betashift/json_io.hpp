#pragma once

// JSON forms of kneading sequences, beta specifications, words and count
// reports.

#include <json.hpp>

#include "count_report.hpp"
#include "kneading.hpp"
#include "oracle.hpp"

namespace betashift {

using Json = nlohmann::ordered_json;

namespace detail {

inline Word word_from_json(const Json& j, const char* field) {
    if (!j.is_array()) {
        throw Error(ErrorKind::InvalidInput, std::string(field) + " must be an array of integers");
    }
    Word out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0) {
            throw Error(ErrorKind::InvalidInput, std::string(field) + " must hold nonnegative integers");
        }
        out.push_back(x.get<Digit>());
    }
    return out;
}

inline Rational rational_field(const Json& j, const char* field) {
    if (!j.contains(field)) {
        throw Error(ErrorKind::InvalidInput, std::string("missing field '") + field + "'");
    }
    const Json& v = j.at(field);
    if (v.is_string()) {
        return parse_rational(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return Rational(v.get<long long>());
    }
    throw Error(ErrorKind::InvalidInput, std::string(field) + " must be a decimal string");
}

} // namespace detail

inline Json to_json(const Word& w) {
    return Json(w);
}

inline Json to_json(const KneadingSequence& d) {
    if (d.is_exact()) {
        return Json{{"type", "exact"}, {"preperiod", d.preperiod()}, {"period", d.period()}};
    }
    return Json{{"type", "prefix"}, {"digits", d.digits()}, {"assert_aperiodic", d.assert_aperiodic()}};
}

inline KneadingSequence kneading_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        throw Error(ErrorKind::InvalidInput, "kneading sequence JSON needs a string 'type'");
    }
    const auto type = j.at("type").get<std::string>();
    if (type == "exact") {
        const Word pre = j.contains("preperiod") ? detail::word_from_json(j.at("preperiod"), "preperiod") : Word{};
        if (!j.contains("period")) {
            throw Error(ErrorKind::InvalidInput, "exact kneading sequence needs 'period'");
        }
        return KneadingSequence::exact(pre, detail::word_from_json(j.at("period"), "period"));
    }
    if (type == "prefix") {
        if (!j.contains("digits")) {
            throw Error(ErrorKind::InvalidInput, "prefix kneading sequence needs 'digits'");
        }
        bool aperiodic = false;
        if (j.contains("assert_aperiodic")) {
            if (!j.at("assert_aperiodic").is_boolean()) {
                throw Error(ErrorKind::InvalidInput, "assert_aperiodic must be a boolean");
            }
            aperiodic = j.at("assert_aperiodic").get<bool>();
        }
        return KneadingSequence::prefix(detail::word_from_json(j.at("digits"), "digits"), aperiodic);
    }
    throw Error(ErrorKind::InvalidInput, "unknown kneading sequence type '" + type + "'");
}

inline BetaSpec beta_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
        throw Error(ErrorKind::InvalidInput, "beta JSON needs a string 'type'");
    }
    const auto type = j.at("type").get<std::string>();
    if (type == "interval") {
        return BetaSpec::interval(detail::rational_field(j, "lo"), detail::rational_field(j, "hi"));
    }
    if (type == "polynomial") {
        if (!j.contains("coeffs") || !j.at("coeffs").is_array()) {
            throw Error(ErrorKind::InvalidInput, "polynomial beta needs 'coeffs'");
        }
        std::vector<Rational> coeffs;
        for (const auto& c : j.at("coeffs")) {
            if (c.is_number_integer()) {
                coeffs.emplace_back(c.get<long long>());
            } else if (c.is_string()) {
                coeffs.push_back(parse_rational(c.get<std::string>()));
            } else {
                throw Error(ErrorKind::InvalidInput, "coefficients must be integers");
            }
        }
        return BetaSpec::polynomial_root(coeffs, detail::rational_field(j, "lo"), detail::rational_field(j, "hi"));
    }
    if (type == "exact" || type == "prefix") {
        return BetaSpec::from_kneading(kneading_from_json(j));
    }
    throw Error(ErrorKind::InvalidInput, "unknown beta type '" + type + "'");
}

inline Json to_json(const CountReport& r) {
    Json params = Json::object();
    if (r.params.depth) {
        params["depth"] = *r.params.depth;
    }
    if (r.params.horizon) {
        params["horizon"] = *r.params.horizon;
    }
    params["aperiodicity_assumed"] = r.params.aperiodicity_assumed;
    if (r.params.stabilized) {
        params["stabilized"] = *r.params.stabilized;
    }
    if (!r.params.note.empty()) {
        params["note"] = r.params.note;
    }
    return Json{{"n", r.n},
                {"value", r.value},
                {"status", std::string(to_string(r.status))},
                {"provenance", std::string(to_string(r.provenance))},
                {"params", std::move(params)}};
}

inline Json to_json(const ValidationReport& v) {
    Json violations = Json::array();
    for (const auto& x : v.violations) {
        violations.push_back(Json{{"shift", x.shift}, {"description", x.description}});
    }
    return Json{{"valid", v.valid}, {"violations", std::move(violations)}, {"checked_horizon", v.checked_horizon}};
}

inline Json to_json(const Interval& i, unsigned digits = 20) {
    return Json{{"lo", to_decimal(i.lo, digits, Rounding::Down)},
                {"hi", to_decimal(i.hi, digits, Rounding::Up)},
                {"lo_exact", to_fraction(i.lo)},
                {"hi_exact", to_fraction(i.hi)}};
}

} // namespace betashift
