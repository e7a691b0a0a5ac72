#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sstream>

#include "../vendor/doctest.h"
#include "chebotarev/io.hpp"

using namespace chebotarev;

TEST_CASE("csv layout with rounding metadata") {
    io::Table t;
    t.columns = {"n0", "c2", "c3"};
    t.add_row({2, io::Cell(0.052174, io::Rounding::Down),
               io::Cell(8.608, io::Rounding::Up)});
    const std::string csv = io::to_csv(t);
    CHECK(csv ==
          "n0,c2,c3,rounding\n"
          "2,0.052174,8.608,c2:down;c3:up\n");
}

TEST_CASE("csv uses 10 significant digits and '.' decimals") {
    io::Table t;
    t.columns = {"v"};
    t.add_row({io::Cell(1.0 / 3.0)});
    t.add_row({io::Cell(12345678.9012345)});
    CHECK(io::to_csv(t) ==
          "v,rounding\n"
          "0.3333333333,\n"
          "12345678.9,\n");
}

TEST_CASE("row width is enforced") {
    io::Table t;
    t.columns = {"a", "b"};
    CHECK_THROWS_AS(t.add_row({1}), std::logic_error);
}

TEST_CASE("json mirrors the columns") {
    io::Table t;
    t.columns = {"name", "v"};
    t.add_row({"row1", io::Cell(2.5, io::Rounding::Up)});
    const auto parsed = nlohmann::json::parse(io::to_json(t));
    REQUIRE(parsed.is_array());
    CHECK(parsed[0]["name"] == "row1");
    CHECK(parsed[0]["v"] == 2.5);
    CHECK(parsed[0]["rounding"]["v"] == "up");
}

TEST_CASE("config parsing") {
    std::istringstream in(
        "# comment line\n"
        "c35 = 1.25\n"
        "  c39=0.184  # trailing comment\n"
        "\n"
        "name = some value\n");
    const auto cfg = io::parse_config(in);
    CHECK(cfg.at("c35") == "1.25");
    CHECK(cfg.at("c39") == "0.184");
    CHECK(cfg.at("name") == "some value");
}

TEST_CASE("config rejects malformed lines with the line number") {
    std::istringstream bad("c35 = 1\nno equals sign here\n");
    CHECK_THROWS_WITH_AS(io::parse_config(bad), doctest::Contains("line 2"),
                         std::runtime_error);
    std::istringstream empty_key(" = 3\n");
    CHECK_THROWS_AS(io::parse_config(empty_key), std::runtime_error);
}
