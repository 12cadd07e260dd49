#include <cmath>

#include "doctest.h"
#include "speiser/curvature.hpp"
#include "speiser/types.hpp"

using namespace speiser;

namespace {

// Area of {y >= 1} inside the hyperbolic disc of radius r about (0, 1):
// the slice at height y = e^t has half-width sqrt(2y(cosh r - 1) - (y - 1)^2),
// and dx dy / y^2 = dx e^-t dt.  Composite Simpson in t.
double area_above_seam(double r) {
    const int n = 200000;
    const double top = r;  // the disc reaches y = e^r
    auto f = [r](double t) {
        const double y = std::exp(t);
        const double w2 = 2 * y * (std::cosh(r) - 1) - (y - 1) * (y - 1);
        return w2 > 0 ? 2 * std::sqrt(w2) * std::exp(-t) : 0.0;
    };
    const double dt = top / n;
    double s = f(0) + f(top);
    for (int i = 1; i < n; ++i) s += f(i * dt) * (i % 2 ? 4 : 2);
    return s * dt / 3;
}

GridSpec small_grid(double r_max) {
    GridSpec s;
    s.h = 0.02;
    s.r_max = r_max;
    return s;
}

}  // namespace

TEST_CASE("metric density") {
    CHECK(metric_density(0, 1) == doctest::Approx(1.0));
    CHECK(metric_density(3, 2) == doctest::Approx(0.5));
    CHECK(metric_density(0, 0) == doctest::Approx(std::exp(1.0)));
    CHECK(metric_density(-7, 0.5) == doctest::Approx(std::exp(0.5)));
    CHECK(in_hyperbolic_part(1.0));
    CHECK(!in_hyperbolic_part(0.999));
}

TEST_CASE("closed-form length of beta") {
    CHECK(beta_length_closed_form(2) == doctest::Approx(4.7008).epsilon(1e-4));
    CHECK(beta_length_closed_form(1e-4) / 2e-4 == doctest::Approx(1.0).epsilon(1e-6));
    double prev = 10;
    for (double r : {10.0, 40.0, 200.0}) {
        const double q = std::log(beta_length_closed_form(r)) / (r / 2);
        CHECK(q > 1);
        CHECK(q < prev);
        prev = q;
    }
    CHECK(prev == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("hyperbolic area above the seam") {
    for (double r : {0.5, 2.0, 5.0}) {
        CAPTURE(r);
        const double got = hyperbolic_area_above_seam(r);
        CHECK(got == doctest::Approx(area_above_seam(r)).epsilon(1e-6));
        CHECK(got < 4 * M_PI * std::sinh(r / 2) * std::sinh(r / 2));
    }
}

TEST_CASE("grid distances") {
    const GridDiscretization grid(small_grid(3));
    const std::vector<double> d = distance_field(grid, kBasepoint, 2.5);
    CHECK(d[grid.nearest(kBasepoint)] <= grid.spec().h);  // nearest cell centre is half a cell away
    CHECK(d[grid.nearest({2, 1})] == doctest::Approx(2 * std::asinh(1.0)).epsilon(0.05));

    CHECK(grid.edge_weight({0, 1}, {0.02, 1}) == doctest::Approx(0.02).epsilon(1e-3));
    CHECK(grid.edge_weight({0, 0}, {0, 0.04}) == doctest::Approx(grid.edge_weight({0, 0.04}, {0, 0})));
    CHECK(grid.edge_weight({0, 0}, {0, 0.04}) == doctest::Approx(std::exp(1.0) - std::exp(0.96)).epsilon(1e-6));

    try {
        distance_field(grid, kBasepoint, 30);
        FAIL("expected WindowTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::WindowTooSmall);
    }
}

TEST_CASE("grid edges are symmetric") {
    const GridDiscretization grid(small_grid(2));
    for (std::size_t u = 0; u < grid.size(); u += 97)
        grid.for_each_edge(u, [&](std::size_t w, double wt) {
            bool back = false;
            grid.for_each_edge(w, [&](std::size_t x, double wt2) { back |= x == u && std::abs(wt2 - wt) < 1e-12; });
            CHECK(back);
        });
}

TEST_CASE("curvature report") {
    const GridDiscretization grid(small_grid(4));
    const CurvatureReport rep = curvature_report(grid, kBasepoint, {1, 2, 3, 4});
    REQUIRE(rep.records.size() == 4);
    double prev_area = 0, prev_p = 0;
    for (const auto& rec : rep.records) {
        CAPTURE(rec.r);
        CHECK(rec.area_P + rec.area_Q == doctest::Approx(rec.area).epsilon(1e-12));
        CHECK(rec.omega == -rec.area_P);
        CHECK(rec.ratio == doctest::Approx(rec.omega / rec.area));
        CHECK(rec.ratio < 0);
        CHECK(rec.area >= prev_area);
        CHECK(rec.area_P >= prev_p);
        prev_area = rec.area;
        prev_p = rec.area_P;
        CHECK(rec.beta_closed == doctest::Approx(4 * std::sinh(rec.r / 2)));
        CHECK(rec.area_P_exact == doctest::Approx(area_above_seam(rec.r)).epsilon(1e-6));
        CHECK(rec.area_P == doctest::Approx(rec.area_P_exact).epsilon(0.05));
        if (rec.r >= 2) CHECK(rec.beta_grid == doctest::Approx(rec.beta_closed).epsilon(0.1));
    }
}
