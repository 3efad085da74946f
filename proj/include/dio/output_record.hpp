#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dio {

using OutputValue = std::variant<std::uint64_t, std::int64_t, double, bool, std::string>;
using OutputRow = std::vector<std::pair<std::string, OutputValue>>;

// Machine output of one CLI invocation. Serialization is deterministic:
// fixed field order, floats printed with up to 17 significant digits (which
// round-trips doubles exactly), no timestamps. Timings live apart from the
// data rows so repeated runs stay byte-identical when they are disabled.
struct OutputRecord {
    std::string schema_version = "1";
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::vector<OutputRow> rows;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> solutions;  // count -v only
    std::vector<double> timings_ms;                                  // per row
};

// %.17g; not-finite values become "null" in JSON context.
std::string format_f64(double x);

std::string to_json(const OutputRecord& rec, bool include_timings);

// Header plus one line per row. Auxiliary material (solution list, timings)
// goes into '#'-prefixed footer lines.
std::string to_csv(const OutputRecord& rec, bool include_timings);

}  // namespace dio
