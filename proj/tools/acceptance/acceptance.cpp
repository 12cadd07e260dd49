#include "acceptance.hpp"

#include <chrono>
#include <exception>
#include <ostream>

#include "speiser/types.hpp"

namespace speiser::acceptance {

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "mean-excess-limits", mean_excess_limits},
        {2, "excess-ball-bound", excess_ball_bound},
        {3, "series-law", series_law},
        {4, "type-calibration", type_calibration},
        {5, "appendix-dichotomy", appendix_dichotomy},
        {6, "counterexample1-parabolic", counterexample1_parabolic},
        {7, "extended-face-bound", extended_face_bound},
        {8, "counterexample3-properties", counterexample3_properties},
        {9, "curvature-lab", curvature_lab},
    };
    return list;
}

CriterionResult run_criterion(int id, const Options& opt) {
    for (const Criterion& c : criteria()) {
        if (c.id != id) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r;
        try {
            r = c.run(opt);
        } catch (const std::exception& e) {
            r = {};
            r.summary = std::string("error: ") + e.what();
        }
        r.id = c.id;
        r.name = c.name;
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw Error(ErrorCode::BadArgument, "no acceptance criterion " + std::to_string(id));
}

void print_result(std::ostream& os, const CriterionResult& r, bool details) {
    os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ' ' << r.name << ": " << r.summary << " ("
       << static_cast<int>(r.seconds * 10 + 0.5) / 10.0 << " s)\n";
    if (!details) return;
    for (const std::string& d : r.details) os << "    " << d << '\n';
}

}  // namespace speiser::acceptance
