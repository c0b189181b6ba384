#include "floorset/output_record.hpp"

#include <cinttypes>
#include <cstdio>
#include <stdexcept>

namespace floorset {

void OutputRecord::add(std::string key, Value value) {
    fields_.emplace_back(std::move(key), std::move(value));
}

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string value_to_csv(const OutputRecord::Value& v) {
    struct Visitor {
        std::string operator()(OutputRecord::Empty) const { return ""; }
        std::string operator()(uint64_t u) const { return std::to_string(u); }
        std::string operator()(int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const { return csv_escape(s); }
    };
    return std::visit(Visitor{}, v);
}

std::string value_to_json(const OutputRecord::Value& v) {
    struct Visitor {
        std::string operator()(OutputRecord::Empty) const { return "null"; }
        std::string operator()(uint64_t u) const { return std::to_string(u); }
        std::string operator()(int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(const std::string& s) const {
            return "\"" + json_escape(s) + "\"";
        }
    };
    return std::visit(Visitor{}, v);
}

} // namespace

void write_csv(std::ostream& os, const std::vector<OutputRecord>& records) {
    if (records.empty()) return;
    const auto& header = records.front().fields();
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) os << ',';
        os << csv_escape(header[i].first);
    }
    os << '\n';
    for (const auto& rec : records) {
        const auto& fields = rec.fields();
        if (fields.size() != header.size())
            throw std::invalid_argument("write_csv: records have inconsistent fields");
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) os << ',';
            if (fields[i].first != header[i].first)
                throw std::invalid_argument("write_csv: records have inconsistent fields");
            os << value_to_csv(fields[i].second);
        }
        os << '\n';
    }
}

void write_ndjson(std::ostream& os, const std::vector<OutputRecord>& records) {
    for (const auto& rec : records) {
        os << '{';
        const auto& fields = rec.fields();
        for (size_t i = 0; i < fields.size(); ++i) {
            if (i) os << ',';
            os << '"' << json_escape(fields[i].first) << "\":" << value_to_json(fields[i].second);
        }
        os << "}\n";
    }
}

} // namespace floorset
