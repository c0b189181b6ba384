#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "floorset/output_record.hpp"
#include "json.hpp"

using floorset::OutputRecord;

namespace {

std::vector<OutputRecord> sample_records() {
    std::vector<OutputRecord> records(2);
    records[0].add("x", std::uint64_t{100});
    records[0].add("label", std::string("plain"));
    records[0].add("ratio", 0.1);
    records[0].add("flag", true);
    records[0].add("missing", OutputRecord::Empty{});
    records[1].add("x", std::uint64_t{7});
    records[1].add("label", std::string("needs,\"quoting\"\n"));
    records[1].add("ratio", -2.5);
    records[1].add("flag", false);
    records[1].add("missing", std::int64_t{-3});
    return records;
}

} // namespace

TEST_CASE("csv output") {
    std::ostringstream os;
    floorset::write_csv(os, sample_records());
    CHECK(os.str() ==
          "x,label,ratio,flag,missing\n"
          "100,plain,0.10000000000000001,true,\n"
          "7,\"needs,\"\"quoting\"\"\n\",-2.5,false,-3\n");

    std::ostringstream empty;
    floorset::write_csv(empty, {});
    CHECK(empty.str().empty());

    std::vector<OutputRecord> bad(2);
    bad[0].add("x", std::uint64_t{1});
    bad[1].add("y", std::uint64_t{2});
    std::ostringstream sink;
    CHECK_THROWS_AS(floorset::write_csv(sink, bad), std::invalid_argument);
}

TEST_CASE("ndjson output parses back") {
    std::ostringstream os;
    floorset::write_ndjson(os, sample_records());

    std::istringstream in(os.str());
    std::string line;
    std::vector<nlohmann::json> rows;
    while (std::getline(in, line)) rows.push_back(nlohmann::json::parse(line));

    REQUIRE(rows.size() == 2);
    CHECK(rows[0]["x"] == 100);
    CHECK(rows[0]["label"] == "plain");
    CHECK(rows[0]["ratio"] == 0.1);
    CHECK(rows[0]["flag"] == true);
    CHECK(rows[0]["missing"].is_null());
    CHECK(rows[1]["x"] == 7);
    CHECK(rows[1]["label"] == "needs,\"quoting\"\n");
    CHECK(rows[1]["ratio"] == -2.5);
    CHECK(rows[1]["flag"] == false);
    CHECK(rows[1]["missing"] == -3);
}

TEST_CASE("double formatting round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e308, 1e-300, 0.0, -0.0, 123456789.123456789}) {
        const std::string s = floorset::format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(floorset::format_double(2.0) == "2");
    CHECK(floorset::format_double(0.5) == "0.5");
}
