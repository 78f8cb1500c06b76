#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace walkhull {

/// One emitted result line; shared by the CSV and JSON writers.
struct ResultRow {
    std::string experiment;
    std::int64_t n = 0;
    std::string param_name;
    double param_value = 0.0;
    std::int64_t trials = 0;
    std::int64_t successes = 0;
    std::int64_t ambiguous = 0;
    double estimate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;

    bool operator==(const ResultRow&) const = default;
};

/// Header plus one line per row; doubles at round-trip precision, decimal
/// point, no thousands separators, UTF-8.
std::string to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(const std::string& text);

std::string to_json(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_json(const std::string& text);

}  // namespace walkhull
