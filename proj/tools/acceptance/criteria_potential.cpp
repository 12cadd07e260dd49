#include "acceptance.hpp"

#include <cmath>
#include <fmt/format.h>

#include "oracles.hpp"
#include "speiser/generators.hpp"

namespace speiser::acceptance {

namespace {

BigRational exact_resistance(const Network& net, const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
    SolverOptions o;
    o.mode = SolverMode::ExactRational;
    return *resistance_between(net, a, b, o).exact;
}

std::string join(const std::vector<double>& xs, const char* f = "{:.3f}") {
    std::string s;
    for (double x : xs) s += (s.empty() ? "" : " ") + fmt::format(fmt::runtime(f), x);
    return s;
}

std::vector<double> tail(const std::vector<double>& xs, std::size_t k) {
    return {xs.end() - static_cast<std::ptrdiff_t>(std::min(k, xs.size())), xs.end()};
}

}  // namespace

CriterionResult series_law(const Options& opt) {
    CriterionResult res;
    std::mt19937_64 rng(opt.seed);
    const int instances = 120;
    int violations = 0, chain_mismatch = 0, chains = 0, compared = 0, oracle_fail = 0, strict = 0;
    std::size_t max_paths = 0, max_sweeps = 0, max_edges = 0;
    double worst = 0.0;
    auto compare = [&](const Network& net, const std::vector<std::uint32_t>& s, const std::vector<std::uint32_t>& t) {
        PathFamilyResult bf = brute_force_extremal_length(net, s, t);
        double lib = extremal_length(net, s, t).value;
        double rel = std::abs(bf.lambda - lib) / lib;
        worst = std::max(worst, rel);
        ++compared;
        max_paths = std::max(max_paths, bf.paths);
        max_sweeps = std::max(max_sweeps, bf.sweeps);
        if (!bf.converged || rel > 1e-6) ++oracle_fail;
    };
    for (int i = 0; i < instances; ++i) {
        const bool pure = i % 3 == 0;
        SeriesInstance inst = random_series_network(rng, pure);
        BigRational whole = exact_resistance(inst.whole, inst.first, inst.last);
        BigRational parts = 0;
        for (const auto& p : inst.parts) parts += exact_resistance(p.net, p.in, p.out);
        if (whole < parts) ++violations;
        if (whole > parts) ++strict;
        max_edges = std::max(max_edges, inst.whole.edges.size());
        if (pure) {
            ++chains;
            if (whole != parts) ++chain_mismatch;
        }
        if (inst.whole.edges.size() <= 24) compare(inst.whole, inst.first, inst.last);
    }
    for (int i = 0; i < 50; ++i) {
        RandomInstance inst = random_connected_instance(rng);
        compare(inst.net, inst.sources, inst.targets);
    }
    res.pass = violations == 0 && chain_mismatch == 0 && oracle_fail == 0 && compared > 0;
    res.summary = fmt::format("{} series networks, {} violations, {}/{} pure chains exact; brute-force oracle on {} "
                              "networks, max rel. error {:.1e}",
                              instances, violations, chains - chain_mismatch, chains, compared, worst);
    res.details.push_back(fmt::format("seed {}: {} strict inequalities, up to {} edges; oracle up to {} paths and {} "
                                      "sweeps, {} failures",
                                      opt.seed, strict, max_edges, max_paths, max_sweeps, oracle_fail));
    return res;
}

CriterionResult type_calibration(const Options& opt) {
    CriterionResult res;
    bool pass = true;
    struct WalkCase {
        CanonicalTag tag;
        int radius;
    };
    for (const WalkCase& c : {WalkCase{CanonicalTag::LINE_Z, 20}, {CanonicalTag::GRID_Z2, 10}, {CanonicalTag::TREE_3, 6}}) {
        auto g = gen_canonical(c.tag);
        const double R = resistance_to_sphere(*g, g->seed(), c.radius).value;
        WalkStats w = random_walk_escape(*g, g->seed(), c.radius, 100'000, opt.seed);
        const double deg = static_cast<double>(g->darts(g->seed()).size());
        const double lhs = w.p_hat * deg * R;
        const double sigma = w.sigma * deg * R;
        const double z = (lhs - 1.0) / sigma;
        const bool ok = std::abs(z) <= 3.0;
        pass = pass && ok;
        res.details.push_back(fmt::format("{} radius {}: p*deg*R = {:.4f}, {:+.2f} sigma{}", g->name(), c.radius, lhs, z,
                                          ok ? "" : " FAIL"));
    }

    auto tree = gen_canonical(CanonicalTag::TREE_3);
    std::vector<int> radii;
    for (int r = 1; r <= 12; ++r) radii.push_back(r);
    ResistanceProfile tp = resistance_profile(*tree, tree->seed(), radii, {}, opt.vertex_budget);
    Classification tc = classify_type(tp);
    const double limit = tp.entries.back().resistance;
    const double rel = std::abs(limit - 2.0 / 3.0) / (2.0 / 3.0);
    const bool tree_ok = tc.type == GraphType::Hyperbolic && rel <= 0.05;
    res.details.push_back(fmt::format("tree-3: {} ({}), R(12) = {:.5f}, {:.3f}% from 2/3", type_name(tc.type), tc.reason,
                                      limit, 100 * rel));

    auto grid = gen_canonical(CanonicalTag::GRID_Z2);
    radii.clear();
    for (int r = 2; r <= 58; r += 4) radii.push_back(r);
    Classification gc = classify_type(resistance_profile(*grid, grid->seed(), radii, {}, opt.vertex_budget));
    const bool grid_ok = gc.type == GraphType::Parabolic && gc.log_r2 >= 0.98;
    res.details.push_back(fmt::format("grid-z2: {} ({}), log-fit slope {:.4f}, R^2 = {:.5f}", type_name(gc.type), gc.reason,
                                      gc.log_slope, gc.log_r2));

    res.pass = pass && tree_ok && grid_ok;
    res.summary = fmt::format("tree {} ({:.2f}% from 2/3), grid {} (R^2 {:.4f}), escape identity {}", type_name(tc.type),
                              100 * rel, type_name(gc.type), gc.log_r2, pass ? "within 3 sigma" : "violated");
    return res;
}

CriterionResult appendix_dichotomy(const Options& opt) {
    CriterionResult res;
    const int depth = 7;
    std::vector<std::int64_t> l;
    // One level beyond the checked depth so the depth-N branch vertices have all their darts.
    for (int n = 1; n <= depth + 1; ++n) l.push_back((std::int64_t{1} << n) + 1);

    // Series-parallel reduction: 3 * 2^(n-1) parallel paths at level n.  On the
    // completed graph every doubled edge has resistance 1/2, so a path of l
    // edges with (l-1)/2 doubled ones carries l - (l-1)/4 = (3l+1)/4.
    auto closed = [&](int N, bool completed) {
        double r = 0;
        for (int n = 1; n <= N; ++n) {
            double ln = static_cast<double>(l[static_cast<std::size_t>(n) - 1]);
            r += (completed ? (3 * ln + 1) / 4 : ln) / (3 * std::ldexp(1.0, n - 1));
        }
        return r;
    };

    bool match = true;
    std::vector<std::pair<double, double>> profile;
    for (bool completed : {true, false}) {
        auto g = gen_appendixA(l, completed);
        double worst = 0;
        for (int N = 1; N <= depth; ++N) {
            const auto radius = static_cast<int>(g->level_radius(N));
            const double R = resistance_to_sphere(*g, g->seed(), radius, {}, opt.vertex_budget).value;
            worst = std::max(worst, std::abs(R - closed(N, completed)) / closed(N, completed));
            if (completed) profile.push_back({radius, R});
        }
        match = match && worst <= 0.01;
        res.details.push_back(fmt::format("{}: resistance to depth 1..{} vs closed form, max rel. error {:.2e}",
                                          g->name(), depth, worst));
    }
    Classification base = classify_type(profile);
    res.details.push_back(fmt::format("base graph: {} ({}), increments {}", type_name(base.type), base.reason,
                                      join(base.increments)));

    Family ext = make_family("extended", {{"base", "appendix-a"}, {"n", "1"}, {"depth", "14"}});
    std::vector<int> radii;
    for (int r = 2; r <= 128; r *= 2) radii.push_back(r);
    SolverOptions iter;
    iter.mode = SolverMode::Iterative;
    ResistanceProfile ep = resistance_profile(*ext.oracle, ext.oracle->seed(), radii, iter, opt.vertex_budget);
    Classification ec = classify_type(ep);
    std::vector<double> trailing = tail(ec.ratios, 4);
    bool ratios_ok = !trailing.empty();
    for (double r : trailing) ratios_ok = ratios_ok && r <= 0.85;
    res.details.push_back(fmt::format("extended n=1: {} ({}), R({}) = {:.4f} on {} vertices, trailing ratios {}",
                                      type_name(ec.type), ec.reason, ep.entries.back().radius,
                                      ep.entries.back().resistance, ep.entries.back().vertices, join(trailing)));

    res.pass = match && base.type == GraphType::Parabolic && ec.type == GraphType::Hyperbolic && ratios_ok;
    res.summary = fmt::format("closed forms {}, Speiser graph {}, extended graph {}", match ? "within 1%" : "MISMATCH",
                              type_name(base.type), type_name(ec.type));
    return res;
}

CriterionResult counterexample1_parabolic(const Options& opt) {
    CriterionResult res;
    Family g4 = make_family("gamma4");
    std::vector<int> radii;
    for (int r = 2; r <= 34; r += 2) radii.push_back(r);
    ResistanceProfile p = resistance_profile(*g4.oracle, g4.oracle->seed(), radii, {}, opt.vertex_budget);
    Classification c = classify_type(p);
    res.details.push_back(fmt::format("gamma4: {} ({}), R({}) = {:.4f}, log-fit R^2 {:.4f}", type_name(c.type), c.reason,
                                      p.entries.back().radius, p.entries.back().resistance, c.log_r2));

    auto gs = gen_gamma_star();
    std::vector<DensityAssignment> annuli;
    for (int i = 1; i <= 8; ++i) annuli.push_back(gamma_star_annulus(*gs, i));
    std::vector<AnnulusBound> bounds = annuli_lower_bound(annuli);
    // The bound after annulus i covers every r in [P_i, P_{i+1}).
    const double r_max = 1024;
    bool bound_ok = true;
    double reach = 0;
    for (std::size_t i = 0; i < bounds.size(); ++i) {
        const double lo = static_cast<double>(gs->join_position(static_cast<std::int64_t>(i) + 1));
        const double hi = static_cast<double>(gs->join_position(static_cast<std::int64_t>(i) + 2));
        const double need = 0.01 * std::log(std::min(hi, r_max));
        const bool ok = bounds[i].cumulative >= need;
        bound_ok = bound_ok && ok;
        if (ok) reach = hi;
        res.details.push_back(fmt::format("annulus {}: c = {:.4f}, energy {:.4f}, lambda {:.4f}, cumulative {:.4f} vs "
                                          "0.01 ln r = {:.4f} on r in [{}, {}){}",
                                          i + 1, bounds[i].min_weight, bounds[i].energy, bounds[i].lambda,
                                          bounds[i].cumulative, need, lo, hi, ok ? "" : " FAIL"));
        if (hi > r_max) break;
    }
    res.pass = c.type == GraphType::Parabolic && bound_ok && reach > r_max;
    res.summary = fmt::format("gamma4 {}, gamma-star cumulative bound {:.4f} >= 0.01 ln r up to r = {}", type_name(c.type),
                              bounds.back().cumulative, reach);
    return res;
}

}  // namespace speiser::acceptance
