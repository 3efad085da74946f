#include "dio/output_record.hpp"

#include <cmath>
#include <cstdio>

namespace dio {

std::string format_f64(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

std::string json_value(const OutputValue& v) {
    switch (v.index()) {
        case 0: return std::to_string(std::get<std::uint64_t>(v));
        case 1: return std::to_string(std::get<std::int64_t>(v));
        case 2: {
            const double x = std::get<double>(v);
            return std::isfinite(x) ? format_f64(x) : std::string("null");
        }
        case 3: return std::get<bool>(v) ? "true" : "false";
        default: return "\"" + json_escape(std::get<std::string>(v)) + "\"";
    }
}

std::string csv_value(const OutputValue& v) {
    switch (v.index()) {
        case 0: return std::to_string(std::get<std::uint64_t>(v));
        case 1: return std::to_string(std::get<std::int64_t>(v));
        case 2: return format_f64(std::get<double>(v));
        case 3: return std::get<bool>(v) ? "1" : "0";
        default: return std::get<std::string>(v);
    }
}

}  // namespace

std::string to_json(const OutputRecord& rec, bool include_timings) {
    std::string out = "{\"schema_version\":\"" + json_escape(rec.schema_version) + "\"";
    out += ",\"command\":\"" + json_escape(rec.command) + "\"";
    out += ",\"parameters\":{";
    for (std::size_t i = 0; i < rec.parameters.size(); ++i) {
        if (i) out += ',';
        out += "\"" + json_escape(rec.parameters[i].first) + "\":\"" +
               json_escape(rec.parameters[i].second) + "\"";
    }
    out += "},\"rows\":[";
    for (std::size_t i = 0; i < rec.rows.size(); ++i) {
        if (i) out += ',';
        out += '{';
        for (std::size_t j = 0; j < rec.rows[i].size(); ++j) {
            if (j) out += ',';
            out += "\"" + json_escape(rec.rows[i][j].first) + "\":" + json_value(rec.rows[i][j].second);
        }
        out += '}';
    }
    out += ']';
    if (!rec.solutions.empty()) {
        out += ",\"solutions\":[";
        for (std::size_t i = 0; i < rec.solutions.size(); ++i) {
            if (i) out += ',';
            out += '[' + std::to_string(rec.solutions[i].first) + ',' +
                   std::to_string(rec.solutions[i].second) + ']';
        }
        out += ']';
    }
    if (include_timings && !rec.timings_ms.empty()) {
        out += ",\"timings_ms\":[";
        for (std::size_t i = 0; i < rec.timings_ms.size(); ++i) {
            if (i) out += ',';
            out += format_f64(rec.timings_ms[i]);
        }
        out += ']';
    }
    out += "}\n";
    return out;
}

std::string to_csv(const OutputRecord& rec, bool include_timings) {
    std::string out;
    if (!rec.rows.empty()) {
        const OutputRow& head = rec.rows.front();
        for (std::size_t j = 0; j < head.size(); ++j) {
            if (j) out += ',';
            out += head[j].first;
        }
        out += '\n';
        for (const auto& row : rec.rows) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out += ',';
                out += csv_value(row[j].second);
            }
            out += '\n';
        }
    }
    for (const auto& [x, y] : rec.solutions)
        out += "# solution," + std::to_string(x) + ',' + std::to_string(y) + '\n';
    if (include_timings) {
        for (std::size_t i = 0; i < rec.timings_ms.size(); ++i)
            out += "# timing_ms," + std::to_string(i) + ',' + format_f64(rec.timings_ms[i]) + '\n';
    }
    return out;
}

}  // namespace dio
