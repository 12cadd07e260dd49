#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace speiser {

// Hybrid metric on the plane: |dz|/y on P = {y >= 1}, exp(1-y)|dz| on Q = {y < 1}.
double metric_density(double x, double y);
inline bool in_hyperbolic_part(double y) { return y >= 1.0; }

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline constexpr Point kBasepoint{0.0, 1.0};

// Closed-form length of beta_r = {(x, 1) : 2 asinh(|x|/2) <= r}, namely 4 sinh(r/2).
double beta_length_closed_form(double r);

// Hyperbolic area of P intersected with the metric ball D(a, r).  Inside P the
// metric distance from a is the half-plane distance, so this is exact up to quadrature.
double hyperbolic_area_above_seam(double r);

struct GridSpec {
    double h = 0.02;       // spacing in Q and in the first P band (1 <= y < 2)
    double r_max = 12.0;   // window is sized so that D(a, r_max) fits
    int stencil = 3;       // neighbours at primitive offsets with max(|dx|,|dy|) <= stencil
    double margin = 1.0;   // extra coordinate room around the ball
};

// Cell-centred grid.  Band 0 covers Q and 1 <= y < 2 with spacing h; band b >= 1
// covers 2^b <= y < 2^(b+1) with spacing h*2^b, so cells stay roughly h across
// in the metric.  Edge weights integrate the density along the segment by Simpson's rule.
class GridDiscretization {
public:
    explicit GridDiscretization(const GridSpec& spec);

    const GridSpec& spec() const { return spec_; }
    std::size_t size() const { return total_; }
    int band_count() const { return static_cast<int>(bands_.size()); }

    Point position(std::size_t node) const;
    double spacing(std::size_t node) const;
    double cell_area(std::size_t node) const;  // metric area of the cell
    bool in_P(std::size_t node) const;
    bool on_window_edge(std::size_t node) const;

    // Calls f(neighbour, weight) for each outgoing edge.
    template <class F>
    void for_each_edge(std::size_t node, F&& f) const;

    // Nodes just below and just above the seam y = 1 in column j of band 0.
    std::int64_t seam_columns() const { return bands_[0].half_cols; }
    std::size_t seam_below(std::int64_t j) const { return index(0, -1, j); }
    std::size_t seam_above(std::int64_t j) const { return index(0, 0, j); }
    std::size_t nearest(Point p) const;

    double edge_weight(Point p, Point q) const;

private:
    struct Band {
        double s = 0.0;           // spacing
        double y0 = 0.0;          // lower edge of row 0 of P rows
        std::int64_t rows = 0;    // rows k in [-rows_below, rows)
        std::int64_t rows_below = 0;  // Q rows, band 0 only
        std::int64_t half_cols = 0;   // columns j in [-half_cols, half_cols]
        std::size_t offset = 0;
    };

    struct Cell {
        int band;
        std::int64_t k;  // row, negative for Q rows of band 0
        std::int64_t j;
    };

    std::size_t index(int band, std::int64_t k, std::int64_t j) const;
    Cell locate(std::size_t node) const;
    double row_y(const Band& b, std::int64_t k) const { return b.y0 + (static_cast<double>(k) + 0.5) * b.s; }

    GridSpec spec_;
    std::vector<Band> bands_;
    std::vector<std::pair<std::int64_t, std::int64_t>> offsets_;
    std::size_t total_ = 0;
};

// Shortest-path distances from a, computed out to `reach`; nodes farther away
// keep +infinity.  Throws WindowTooSmall if a node within reach lies on the window edge.
std::vector<double> distance_field(const GridDiscretization& grid, Point a, double reach);

struct CurvatureRecord {
    double r = 0.0;
    double area = 0.0;
    double area_P = 0.0;
    double area_Q = 0.0;
    double omega = 0.0;  // -area_P
    double ratio = 0.0;  // omega / area
    double beta_grid = 0.0;
    double beta_closed = 0.0;
    double area_P_exact = 0.0;
};

struct CurvatureReport {
    double h = 0.0;
    std::size_t nodes = 0;
    std::vector<CurvatureRecord> records;
};

CurvatureReport curvature_report(const GridDiscretization& grid, Point a, const std::vector<double>& radii);

// Reports at spacings near h*2^(levels-1), ..., h for the same radii, coarse
// first.  Coarse spacings are rounded to the nearest 1/integer.
std::vector<CurvatureReport> curvature_refinement(GridSpec spec, int levels, const std::vector<double>& radii);

void write_curvature_csv(std::ostream& os, const CurvatureReport& report);

template <class F>
void GridDiscretization::for_each_edge(std::size_t node, F&& f) const {
    const Cell c = locate(node);
    const Band& b = bands_[static_cast<std::size_t>(c.band)];
    const Point p = position(node);
    const std::int64_t lo = -b.rows_below, hi = b.rows;
    const std::int64_t R = spec_.stencil;
    for (auto [dj, dk] : offsets_) {
        std::int64_t k = c.k + dk, j = c.j + dj;
        if (k < lo || k >= hi || j < -b.half_cols || j > b.half_cols) continue;
        std::size_t w = index(c.band, k, j);
        f(w, edge_weight(p, position(w)));
    }
    // Links to the neighbouring bands near the shared boundary.  Both ends use
    // the coarser spacing for the reach, so the links are symmetric.
    auto link = [&](int ob) {
        if (ob < 0 || ob >= band_count()) return;
        const Band& o = bands_[static_cast<std::size_t>(ob)];
        const double reach = static_cast<double>(R) * std::max(b.s, o.s) * (1 + 1e-9);
        auto kmin = static_cast<std::int64_t>(std::ceil((p.y - reach - o.y0) / o.s - 0.5));
        auto kmax = static_cast<std::int64_t>(std::floor((p.y + reach - o.y0) / o.s - 0.5));
        auto jmin = static_cast<std::int64_t>(std::ceil((p.x - reach) / o.s));
        auto jmax = static_cast<std::int64_t>(std::floor((p.x + reach) / o.s));
        kmin = std::max(kmin, -o.rows_below);
        kmax = std::min(kmax, o.rows - 1);
        jmin = std::max(jmin, -o.half_cols);
        jmax = std::min(jmax, o.half_cols);
        for (std::int64_t k = kmin; k <= kmax; ++k)
            for (std::int64_t j = jmin; j <= jmax; ++j) {
                std::size_t w = index(ob, k, j);
                f(w, edge_weight(p, position(w)));
            }
    };
    if (c.k >= hi - 2 * R) link(c.band + 1);
    if (c.k < lo + R) link(c.band - 1);
}

}  // namespace speiser
