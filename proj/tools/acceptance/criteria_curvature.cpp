#include "acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "speiser/curvature.hpp"

namespace speiser::acceptance {

namespace {

bool within_of_each_other(const std::vector<double>& xs, double tol) {
    auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return *lo > 0 && *hi <= (1 + tol) * *lo;
}

}  // namespace

CriterionResult curvature_lab(const Options&) {
    CriterionResult res;
    GridSpec spec;
    spec.h = 0.02;
    spec.r_max = 12;
    std::vector<double> radii;
    for (int r = 1; r <= 12; ++r) radii.push_back(r);
    std::vector<CurvatureReport> levels = curvature_refinement(spec, 3, radii);
    const CurvatureReport& fine = levels.back();

    for (std::size_t r = 0; r < radii.size(); ++r) {
        std::string line = fmt::format("r={:>2}:", radii[r]);
        for (const CurvatureReport& rep : levels) {
            const CurvatureRecord& x = rep.records[r];
            line += fmt::format("  h=1/{:.0f} beta {:.4f} eps {:.4f}", 1 / rep.h, x.beta_grid / x.beta_closed, -x.ratio);
        }
        res.details.push_back(line);
    }

    bool beta_ok = true, sign_ok = true;
    double beta_lo = 1e300, beta_hi = 0;
    std::vector<double> eps, q_over_beta;
    for (const CurvatureRecord& x : fine.records) {
        if (x.ratio >= 0) sign_ok = false;
        eps.push_back(-x.ratio);
        if (x.r >= 2) q_over_beta.push_back(x.area_Q / x.beta_closed);
        if (x.r < 2 || x.r > 10) continue;
        const double q = x.beta_grid / x.beta_closed;
        beta_lo = std::min(beta_lo, q);
        beta_hi = std::max(beta_hi, q);
        if (std::abs(q - 1) > 0.1) beta_ok = false;
    }
    const std::vector<double> eps_tail(eps.end() - 3, eps.end());
    const bool eps_ok = within_of_each_other(eps_tail, 0.1);

    // area(Q)/length(beta) approaches its limit geometrically; the last three
    // increments must contract, and the geometric tail gives the recorded bound.
    std::vector<double> inc;
    for (std::size_t i = 1; i < q_over_beta.size(); ++i) inc.push_back(q_over_beta[i] - q_over_beta[i - 1]);
    bool qb_ok = inc.size() >= 4;
    double contraction = 0;
    for (std::size_t i = inc.size() - 3; qb_ok && i < inc.size(); ++i) {
        contraction = std::max(contraction, inc[i] / inc[i - 1]);
        qb_ok = inc[i] >= 0 && inc[i] <= 0.85 * inc[i - 1];
    }
    const double qb_last = q_over_beta.back();
    const double qb_bound = qb_last + inc.back() * contraction / (1 - contraction);
    std::string incs;
    for (double d : inc) incs += fmt::format(" {:.4f}", d);
    res.details.push_back(fmt::format("finest grid h={} with {} nodes; area(Q)/length(beta) increments over r=2..12:{}",
                                      fine.h, fine.nodes, incs));
    res.details.push_back(fmt::format("area(Q)/length(beta) = {:.3f} at r=12, increments contract by <= {:.3f}, "
                                      "bound {:.3f}",
                                      qb_last, contraction, qb_bound));

    res.pass = beta_ok && sign_ok && eps_ok && qb_ok;
    res.summary = fmt::format("beta/4sinh(r/2) in [{:.4f}, {:.4f}] on r=2..10, omega/area < 0 {}, eps {:.4f} {:.4f} "
                              "{:.4f} at r=10..12, area(Q)/length(beta) <= {:.2f}",
                              beta_lo, beta_hi, sign_ok ? "everywhere" : "VIOLATED", eps_tail[0], eps_tail[1],
                              eps_tail[2], qb_bound);
    return res;
}

}  // namespace speiser::acceptance
