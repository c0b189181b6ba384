#ifndef FLOORSET_OUTPUT_RECORD_HPP
#define FLOORSET_OUTPUT_RECORD_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace floorset {

// One result row. Keys keep insertion order so CSV columns and JSON
// fields come out in the same, stable order run after run. Doubles
// serialize with %.17g (round-trippable); an empty Value is a blank
// CSV cell / JSON null.
class OutputRecord {
public:
    struct Empty {
        friend bool operator==(const Empty&, const Empty&) = default;
    };
    using Value = std::variant<Empty, std::uint64_t, std::int64_t, double, bool, std::string>;

    void add(std::string key, Value value);

    const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }

private:
    std::vector<std::pair<std::string, Value>> fields_;
};

// "a,b,c" header from the first record, then one line per record.
void write_csv(std::ostream& os, const std::vector<OutputRecord>& records);

// One JSON object per line (NDJSON), no header.
void write_ndjson(std::ostream& os, const std::vector<OutputRecord>& records);

// %.17g, shared by both writers.
std::string format_double(double value);

} // namespace floorset

#endif
