#include <cmath>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "speiser/generators.hpp"
#include "speiser/potential.hpp"

using namespace speiser;

namespace {

SolverOptions exact() {
    SolverOptions o;
    o.mode = SolverMode::ExactRational;
    return o;
}

// Dense Gaussian elimination on the shorted Laplacian: sources at potential 1,
// sinks at 0, resistance = 1 / current.
double dense_resistance(const Network& net, const std::vector<std::uint32_t>& src, const std::vector<std::uint32_t>& snk) {
    const std::size_t n = net.n;
    std::vector<int> fixed(n, -1);
    for (auto s : src) fixed[s] = 1;
    for (auto t : snk) fixed[t] = 0;
    std::vector<std::size_t> free_idx(n, SIZE_MAX);
    std::size_t m = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (fixed[v] < 0) free_idx[v] = m++;
    std::vector<std::vector<double>> a(m, std::vector<double>(m + 1, 0.0));
    for (auto [u, v] : net.edges)
        for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
            if (fixed[x] >= 0) continue;
            a[free_idx[x]][free_idx[x]] += 1;
            if (fixed[y] >= 0) a[free_idx[x]][m] += fixed[y];
            else a[free_idx[x]][free_idx[y]] -= 1;
        }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < m; ++r)
            if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
        std::swap(a[c], a[p]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const double f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
        }
    }
    auto phi = [&](std::uint32_t v) { return fixed[v] >= 0 ? double(fixed[v]) : a[free_idx[v]][m] / a[free_idx[v]][free_idx[v]]; };
    double current = 0;
    for (auto [u, v] : net.edges) {
        if (fixed[u] == 1 && fixed[v] != 1) current += 1 - phi(v);
        if (fixed[v] == 1 && fixed[u] != 1) current += 1 - phi(u);
    }
    return 1 / current;
}

Network grid_network(int w, int h) {
    Network net;
    net.n = static_cast<std::size_t>(w * h);
    auto id = [w](int x, int y) { return static_cast<std::uint32_t>(y * w + x); };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) net.edges.push_back({id(x, y), id(x + 1, y)});
            if (y + 1 < h) net.edges.push_back({id(x, y), id(x, y + 1)});
        }
    return net;
}

DensityAssignment path_density(double mu) {
    DensityAssignment d;
    d.n = 3;
    d.edges = {{0, 1, mu, 1}, {1, 2, mu, 2}};
    d.sources = {0};
    d.targets = {2};
    return d;
}

}  // namespace

TEST_CASE("resistance of small networks") {
    const ResistanceResult path = resistance_between(network_of(fixtures::path(2)), {0}, {2}, exact());
    REQUIRE(path.exact.has_value());
    CHECK(*path.exact == BigRational(2));
    const ResistanceResult tri = resistance_between(network_of(fixtures::cycle(3)), {0}, {1}, exact());
    REQUIRE(tri.exact.has_value());
    CHECK(*tri.exact == BigRational(2, 3));
    CHECK(tri.value == doctest::Approx(dense_resistance(network_of(fixtures::cycle(3)), {0}, {1})));

    const FiniteOracle p(fixtures::path(2));
    const ResistanceResult b = effective_resistance(ball(p, p.seed(), 2), exact());
    CHECK(b.value == doctest::Approx(2.0));
}

TEST_CASE("trivalent tree ball of depth 5 has resistance 31/48") {
    const auto g = make_family("tree-3").oracle;
    const ResistanceResult r = resistance_to_sphere(*g, g->seed(), 5, exact());
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == BigRational(31, 48));
}

TEST_CASE("resistance profiles of the line and the tree") {
    const auto z = make_family("line-z").oracle;
    const ResistanceProfile pz = resistance_profile(*z, z->seed(), {1, 2, 3, 5, 8, 13});
    for (const auto& e : pz.entries) CHECK(e.resistance == doctest::Approx(e.radius / 2.0));

    const auto t = make_family("tree-3").oracle;
    const ResistanceProfile pt = resistance_profile(*t, t->seed(), {1, 2, 3, 4, 5, 6, 7, 8});
    for (const auto& e : pt.entries)
        CHECK(e.resistance == doctest::Approx(2.0 / 3.0 * (1 - std::ldexp(1.0, -e.radius))));
}

TEST_CASE("iterative and exact solvers agree with dense elimination") {
    const Network net = grid_network(7, 5);
    const std::vector<std::uint32_t> src{0, 7, 14}, snk{34, 27};
    SolverOptions it;
    it.mode = SolverMode::Iterative;
    it.tolerance = 1e-13;
    const double want = dense_resistance(net, src, snk);
    CHECK(resistance_between(net, src, snk, exact()).value == doctest::Approx(want).epsilon(1e-12));
    CHECK(resistance_between(net, src, snk, it).value == doctest::Approx(want).epsilon(1e-9));
    CHECK_THROWS_AS(resistance_between(net, {0, 1}, {1}), Error);
}

TEST_CASE("type classification") {
    const auto t = make_family("tree-3").oracle;
    CHECK(classify_type(resistance_profile(*t, t->seed(), {1, 2, 3, 4, 5, 6, 7, 8, 9, 10})).type == GraphType::Hyperbolic);

    const auto g = make_family("grid-z2").oracle;
    std::vector<int> radii;
    for (int r = 4; r <= 40; r += 4) radii.push_back(r);
    CHECK(classify_type(resistance_profile(*g, g->seed(), radii)).type == GraphType::Parabolic);

    std::vector<std::pair<double, double>> flat;
    for (int r = 1; r <= 10; ++r) flat.push_back({r, 1.25});
    CHECK(classify_type(flat).type == GraphType::Inconclusive);

    try {
        classify_type(std::vector<std::pair<double, double>>{{1, 1}, {2, 2}});
        FAIL("expected TooFewEntries");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooFewEntries);
    }
}

TEST_CASE("extremal length equals resistance on small networks") {
    CHECK(extremal_length(network_of(fixtures::path(2)), {0}, {2}, exact()).value == doctest::Approx(2.0));
    CHECK(extremal_length(network_of(fixtures::cycle(3)), {0}, {1}, exact()).value == doctest::Approx(2.0 / 3.0));

    // Column potentials make vertical edges idle: three layers of four parallel edges.
    const Network grid = grid_network(4, 4);
    const std::vector<std::uint32_t> left{0, 4, 8, 12}, right{3, 7, 11, 15};
    const ResistanceResult lam = extremal_length(grid, left, right, exact());
    REQUIRE(lam.exact.has_value());
    CHECK(*lam.exact == BigRational(3, 4));
    const auto brute = acceptance::brute_force_extremal_length(grid, left, right);
    CHECK(brute.converged);
    CHECK(brute.lambda == doctest::Approx(0.75).epsilon(1e-6));
}

TEST_CASE("admissibility of densities") {
    const AdmissibilityResult half = check_admissible(path_density(0.5));
    CHECK(half.ok);
    CHECK(half.min_weight == doctest::Approx(1.0));

    const AdmissibilityResult zero = check_admissible(path_density(0.0));
    CHECK(!zero.ok);
    CHECK(zero.min_weight == 0);
    CHECK(zero.witness.size() == 2);
}

TEST_CASE("annuli lower bound") {
    DensityAssignment a, b;
    a.n = b.n = 2;
    a.edges = {{0, 1, 1.0, 1}};
    b.edges = {{0, 1, 1.0, 2}};
    a.sources = b.sources = {0};
    a.targets = b.targets = {1};
    a.label = "A1";
    b.label = "A2";
    const auto bounds = annuli_lower_bound({a, b});
    REQUIRE(bounds.size() == 2);
    CHECK(bounds[0].lambda == doctest::Approx(1.0));
    CHECK(bounds[1].cumulative == doctest::Approx(2.0));

    b.edges[0].key = 1;
    try {
        annuli_lower_bound({a, b});
        FAIL("expected OverlappingAnnuli");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OverlappingAnnuli);
    }
    a.edges[0].mu = 0;
    CHECK_THROWS_AS(annuli_lower_bound({a}), Error);
}

TEST_CASE("Nash-Williams sums") {
    const auto sums = nash_williams_sums({2, 2, 2, 2});
    REQUIRE(sums.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) CHECK(sums[i] == doctest::Approx(0.5 * double(i + 1)));

    const auto z = make_family("line-z").oracle;
    for (const Cutset& c : level_cutsets(*z, z->seed(), 6)) CHECK(c.edges.size() == 2);

    const auto t = make_family("tree-3").oracle;
    const auto tcuts = level_cutsets(*t, t->seed(), 10);
    for (const Cutset& c : tcuts) CHECK(c.edges.size() == 3u << c.radius);
    const NashWilliamsResult tn = nash_williams(*t, t->seed(), tcuts);
    CHECK(tn.partial_sums.back() == doctest::Approx(2.0 / 3.0 * (1 - std::ldexp(1.0, -10))));

    // taxicab spheres r and r+1 in Z^2 are joined by 8r + 4 edges
    const auto g = make_family("grid-z2").oracle;
    const auto gcuts = level_cutsets(*g, g->seed(), 12);
    double h = 0;
    const NashWilliamsResult gn = nash_williams(*g, g->seed(), gcuts);
    for (std::size_t i = 0; i < gcuts.size(); ++i) {
        CHECK(gcuts[i].edges.size() == static_cast<std::size_t>(8 * gcuts[i].radius + 4));
        h += 1.0 / (8 * gcuts[i].radius + 4);
        CHECK(gn.partial_sums[i] == doctest::Approx(h));
    }
}

TEST_CASE("random walk escape probabilities") {
    const auto z = make_family("line-z").oracle;
    const WalkStats wz = random_walk_escape(*z, z->seed(), 10, 100'000, 7);
    CHECK(std::abs(wz.p_hat - 0.1) <= 3 * wz.sigma);
    const WalkStats again = random_walk_escape(*z, z->seed(), 10, 100'000, 7);
    CHECK(again.escaped == wz.escaped);

    const auto t = make_family("tree-3").oracle;
    const WalkStats wt = random_walk_escape(*t, t->seed(), 12, 100'000, 11);
    const double pt = 1.0 / (3.0 * (2.0 / 3.0) * (1 - std::ldexp(1.0, -12)));
    CHECK(pt == doctest::Approx(0.50024).epsilon(1e-4));
    CHECK(std::abs(wt.p_hat - pt) <= 3 * wt.sigma);

    const auto g = make_family("grid-z2").oracle;
    const double r = resistance_to_sphere(*g, g->seed(), 10).value;
    const WalkStats wg = random_walk_escape(*g, g->seed(), 10, 100'000, 13);
    CHECK(std::abs(wg.p_hat - 1.0 / (4.0 * r)) <= 3 * wg.sigma);
}
