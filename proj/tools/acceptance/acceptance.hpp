#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace speiser::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string summary;
    std::vector<std::string> details;
    double seconds = 0.0;
};

struct Options {
    std::uint64_t seed = 1;
    std::size_t vertex_budget = 8'000'000;
};

struct Criterion {
    int id;
    std::string name;
    std::function<CriterionResult(const Options&)> run;
};

const std::vector<Criterion>& criteria();

// Runs one criterion, catching library errors into a failing result.
CriterionResult run_criterion(int id, const Options& opt = {});

// "[PASS] 3 series-law: ..." followed by indented detail lines.
void print_result(std::ostream& os, const CriterionResult& r, bool details = true);

CriterionResult mean_excess_limits(const Options& opt);
CriterionResult excess_ball_bound(const Options& opt);
CriterionResult series_law(const Options& opt);
CriterionResult type_calibration(const Options& opt);
CriterionResult appendix_dichotomy(const Options& opt);
CriterionResult counterexample1_parabolic(const Options& opt);
CriterionResult extended_face_bound(const Options& opt);
CriterionResult counterexample3_properties(const Options& opt);
CriterionResult curvature_lab(const Options& opt);

}  // namespace speiser::acceptance
