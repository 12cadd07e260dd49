#include "run_config.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "speiser/types.hpp"

namespace speiser::cli {

using nlohmann::ordered_json;

ordered_json RunConfig::to_json() const {
    ordered_json j;
    j["subcommand"] = subcommand;
    if (!family.empty()) j["family"] = family;
    if (!params.empty()) j["params"] = params;
    if (extended > 0) j["extended"] = extended;
    if (!radii_spec.empty()) j["radii"] = radii_spec;
    j["solver"] = {{"mode", solver_mode_name(solver.mode)},
                   {"tolerance", solver.tolerance},
                   {"max_iterations", solver.max_iterations},
                   {"exact_limit", solver.exact_limit}};
    j["seed"] = seed;
    if (!out.empty()) j["out"] = out;
    j["vertex_budget"] = vertex_budget;
    for (const auto& [k, v] : extra.items()) j[k] = v;
    return j;
}

namespace {

double number(const std::string& s, const std::string& spec) {
    std::size_t used = 0;
    double x = 0;
    try {
        x = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(x)) throw Error(ErrorCode::BadArgument, "bad radii list: " + spec);
    return x;
}

}  // namespace

std::vector<double> parse_radii(const std::string& spec) {
    std::vector<double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(number(item, spec));
            continue;
        }
        const double lo = number(item.substr(0, dots), spec);
        std::string rest = item.substr(dots + 2);
        double step = 1, factor = 0;
        if (auto p = rest.find(':'); p != std::string::npos) {
            step = number(rest.substr(p + 1), spec);
            rest = rest.substr(0, p);
        } else if (auto q = rest.find('*'); q != std::string::npos) {
            factor = number(rest.substr(q + 1), spec);
            rest = rest.substr(0, q);
        }
        const double hi = number(rest, spec);
        if (hi < lo || step <= 0 || (factor != 0 && (factor <= 1 || lo <= 0)))
            throw Error(ErrorCode::BadArgument, "bad radii range: " + item);
        if (factor != 0)
            for (double r = lo; r <= hi * (1 + 1e-12); r *= factor) out.push_back(r);
        else
            for (long k = 0; lo + static_cast<double>(k) * step <= hi + 1e-9; ++k)
                out.push_back(lo + static_cast<double>(k) * step);
    }
    if (out.empty()) throw Error(ErrorCode::BadArgument, "empty radii list");
    return out;
}

std::vector<int> integer_radii(const std::vector<double>& radii) {
    std::vector<int> out;
    for (double r : radii) {
        if (r < 0 || r != std::floor(r)) throw Error(ErrorCode::BadArgument, "radii must be non-negative integers");
        out.push_back(static_cast<int>(r));
    }
    return out;
}

const char* solver_mode_name(SolverMode m) {
    switch (m) {
        case SolverMode::Auto: return "auto";
        case SolverMode::ExactRational: return "exact";
        case SolverMode::Iterative: return "iterative";
    }
    return "auto";
}

SolverMode parse_solver_mode(const std::string& s) {
    if (s == "auto") return SolverMode::Auto;
    if (s == "exact") return SolverMode::ExactRational;
    if (s == "iterative") return SolverMode::Iterative;
    throw Error(ErrorCode::BadArgument, "solver must be auto, exact or iterative");
}

std::string utc_timestamp() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream os;
    os << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void write_header(std::ostream& os, const RunConfig& cfg, const std::string& prefix) {
    os << prefix << " speiser " << cfg.subcommand << '\n';
    os << prefix << " run_config: " << cfg.to_json().dump() << '\n';
    if (cfg.timestamp) os << prefix << " timestamp: " << utc_timestamp() << '\n';
}

}  // namespace speiser::cli
