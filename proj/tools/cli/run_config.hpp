#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "speiser/potential.hpp"

namespace speiser::cli {

struct RunConfig {
    std::string subcommand;
    std::string family;
    std::map<std::string, std::string> params;
    int extended = 0;
    std::string radii_spec;
    std::vector<double> radii;
    SolverOptions solver;
    std::uint64_t seed = 1;
    std::string out;
    std::size_t vertex_budget = 0;
    bool timestamp = true;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();  // subcommand-specific settings

    nlohmann::ordered_json to_json() const;
};

// "2,4,8", "4..40", "4..40:4" (step) or "2..128*2" (factor).
std::vector<double> parse_radii(const std::string& spec);
std::vector<int> integer_radii(const std::vector<double>& radii);

const char* solver_mode_name(SolverMode m);
SolverMode parse_solver_mode(const std::string& s);

std::string utc_timestamp();

// Comment lines opening every text output; prefix is "#" or "//".
void write_header(std::ostream& os, const RunConfig& cfg, const std::string& prefix = "#");

}  // namespace speiser::cli
