#pragma once

// Exact rational numbers, outward rounding and closed intervals.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "error.hpp"

namespace betashift {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& x) {
    return x.sign();
}

inline Integer floor_of(const Rational& x) {
    const Integer num = boost::multiprecision::numerator(x);
    const Integer den = boost::multiprecision::denominator(x);
    Integer q = num / den;
    if (num % den != 0 && num < 0) {
        q -= 1;
    }
    return q;
}

inline Integer ceil_of(const Rational& x) {
    return -floor_of(-x);
}

inline Rational pow2(unsigned bits) {
    return Rational(Integer(1) << bits);
}

/// Largest multiple of 2^-bits not above x.
inline Rational round_down(const Rational& x, unsigned bits) {
    const Integer scaled = floor_of(x * pow2(bits));
    return Rational(scaled, Integer(1) << bits);
}

/// Smallest multiple of 2^-bits not below x.
inline Rational round_up(const Rational& x, unsigned bits) {
    const Integer scaled = ceil_of(x * pow2(bits));
    return Rational(scaled, Integer(1) << bits);
}

/// Parses "12", "-1.25", "1e-9", "2.5E3" or "9/5" exactly.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        return Error(ErrorKind::InvalidInput, "not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) {
        throw fail();
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const Rational num = parse_rational(text.substr(0, slash));
        const Rational den = parse_rational(text.substr(slash + 1));
        if (den == 0) {
            throw fail();
        }
        return num / den;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    Integer mantissa = 0;
    long exponent = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            any_digit = true;
            if (seen_point) {
                --exponent;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) {
        throw fail();
    }
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E') {
            throw fail();
        }
        ++pos;
        const std::string tail(text.substr(pos));
        if (tail.empty()) {
            throw fail();
        }
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(tail, &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (used != tail.size() || e > 100000 || e < -100000) {
            throw fail();
        }
        exponent += e;
    }
    Rational value(mantissa);
    const Integer ten_power = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        value /= Rational(ten_power);
    } else {
        value *= Rational(ten_power);
    }
    return negative ? Rational(-value) : value;
}

enum class Rounding { Down, Up };

/// Fixed-point decimal rendering with `digits` fractional digits, rounded in
/// the requested direction so that enclosures stay enclosures.
inline std::string to_decimal(const Rational& x, unsigned digits, Rounding rounding) {
    const Rational scale(boost::multiprecision::pow(Integer(10), digits));
    const Integer scaled = rounding == Rounding::Down ? floor_of(x * scale) : ceil_of(x * scale);
    const bool negative = scaled < 0;
    std::string body = (negative ? Integer(-scaled) : scaled).str();
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    std::string out = negative ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

inline std::string to_fraction(const Rational& x) {
    const Integer den = boost::multiprecision::denominator(x);
    std::string out = boost::multiprecision::numerator(x).str();
    if (den != 1) {
        out += "/" + den.str();
    }
    return out;
}

/// Closed interval [lo, hi] with exact endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
};

} // namespace betashift
