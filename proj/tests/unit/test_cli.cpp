#include <sstream>

#include "doctest.h"
#include "run_config.hpp"
#include "speiser/types.hpp"

using namespace speiser;
using namespace speiser::cli;

TEST_CASE("radii lists") {
    CHECK(parse_radii("2,4,8") == std::vector<double>{2, 4, 8});
    CHECK(parse_radii("3..6") == std::vector<double>{3, 4, 5, 6});
    CHECK(parse_radii("4..16:4") == std::vector<double>{4, 8, 12, 16});
    CHECK(parse_radii("2..128*2") == std::vector<double>{2, 4, 8, 16, 32, 64, 128});
    CHECK(parse_radii("1,5..7") == std::vector<double>{1, 5, 6, 7});
    CHECK(parse_radii("0.5..1.5:0.5") == std::vector<double>{0.5, 1.0, 1.5});
    for (const char* bad : {"", "a", "4..2", "2..8:0", "0..8*2", "2..8*1", "1,,2", "3.."}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_radii(bad), Error);
    }
    CHECK(integer_radii({1, 2, 3}) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(integer_radii({1.5}), Error);
    CHECK_THROWS_AS(integer_radii({-1}), Error);
}

TEST_CASE("solver modes") {
    for (const char* m : {"auto", "exact", "iterative"}) CHECK(std::string(solver_mode_name(parse_solver_mode(m))) == m);
    CHECK_THROWS_AS(parse_solver_mode("fast"), Error);
}

TEST_CASE("run config header") {
    RunConfig cfg;
    cfg.subcommand = "resistance";
    cfg.family = "tree-3";
    cfg.radii_spec = "1..3";
    cfg.vertex_budget = 1000;
    cfg.timestamp = false;
    std::ostringstream os;
    write_header(os, cfg);
    const std::string s = os.str();
    CHECK(s.rfind("# speiser resistance\n# run_config: {", 0) == 0);
    CHECK(s.find("\"family\":\"tree-3\"") != std::string::npos);
    CHECK(s.find("timestamp") == std::string::npos);
    const auto j = cfg.to_json();
    CHECK(j.begin().key() == "subcommand");
    CHECK(j["vertex_budget"] == 1000);
}
