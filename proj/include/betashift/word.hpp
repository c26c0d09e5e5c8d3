#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "error.hpp"

namespace betashift {

using Digit = int;
using Word = std::vector<Digit>;

/// Compact digit-string form, e.g. {2,1,0} -> "210". Digits above 9 are
/// separated by commas so the rendering stays unambiguous.
inline std::string to_digit_string(std::span<const Digit> w) {
    const bool wide = std::any_of(w.begin(), w.end(), [](Digit d) { return d > 9; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (wide && i > 0) {
            out += ',';
        }
        out += std::to_string(w[i]);
    }
    return out;
}

/// Accepts "0,1,2", "0 1 2" or "012" (the last only for single-digit symbols).
inline Word parse_word(const std::string& text) {
    Word out;
    const bool separated = text.find_first_of(", ") != std::string::npos;
    if (!separated) {
        for (char c : text) {
            if (c < '0' || c > '9') {
                throw Error(ErrorKind::InvalidInput, "bad digit in word '" + text + "'");
            }
            out.push_back(c - '0');
        }
        return out;
    }
    std::string token;
    auto flush = [&] {
        if (token.empty()) {
            return;
        }
        std::size_t used = 0;
        int value = -1;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || value < 0) {
            throw Error(ErrorKind::InvalidInput, "bad digit '" + token + "' in word '" + text + "'");
        }
        out.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    return out;
}

inline Digit max_digit(std::span<const Digit> w) {
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

} // namespace betashift
