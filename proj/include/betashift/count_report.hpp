#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace betashift {

enum class CountStatus { Exact, LowerBound, UpperBound };
enum class Provenance { Formula, Oracle };

inline std::string_view to_string(CountStatus s) {
    switch (s) {
    case CountStatus::Exact: return "exact";
    case CountStatus::LowerBound: return "lower_bound";
    case CountStatus::UpperBound: return "upper_bound";
    }
    return "exact";
}

inline std::string_view to_string(Provenance p) {
    return p == Provenance::Formula ? "formula" : "oracle";
}

struct CountParams {
    std::optional<std::size_t> depth;
    std::optional<std::size_t> horizon;
    bool aperiodicity_assumed = false;
    std::optional<bool> stabilized;
    /// Free-form qualifier, e.g. why a formula fell back to a bound.
    std::string note;
};

/// A count together with how far it can be trusted.
struct CountReport {
    std::size_t n = 0;
    std::uint64_t value = 0;
    CountStatus status = CountStatus::Exact;
    Provenance provenance = Provenance::Formula;
    CountParams params;
};

} // namespace betashift
