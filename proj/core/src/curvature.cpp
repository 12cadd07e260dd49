#include "speiser/curvature.hpp"

#include "speiser/types.hpp"

#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace speiser {

double metric_density(double /*x*/, double y) { return y >= 1.0 ? 1.0 / y : std::exp(1.0 - y); }

double beta_length_closed_form(double r) { return 4.0 * std::sinh(r / 2.0); }

double hyperbolic_area_above_seam(double r) {
    if (r <= 0.0) return 0.0;
    // D(a, r) in P is the Euclidean disc with centre (0, cosh r) and radius sinh r.
    const double c = std::cosh(r), s = std::sinh(r);
    auto f = [&](double y) {
        double d = y - c;
        double w2 = s * s - d * d;
        return w2 > 0.0 ? 2.0 * std::sqrt(w2) / (y * y) : 0.0;
    };
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(f, 1.0, c + s);
}

namespace {

// Half-width of the hyperbolic disc D(a, r) at height y.
double disc_half_width(double r, double y) {
    double w2 = 2.0 * y * std::cosh(r) - y * y - 1.0;
    return w2 > 0.0 ? std::sqrt(w2) : 0.0;
}

}  // namespace

GridDiscretization::GridDiscretization(const GridSpec& spec) : spec_(spec) {
    if (!(spec.h > 0.0) || !(spec.r_max > 0.0) || spec.stencil < 1 || spec.margin < 0.0)
        throw Error(ErrorCode::BadArgument, "grid spacing, radius and stencil must be positive");
    const double per_unit = 1.0 / spec.h;
    const auto rows = static_cast<std::int64_t>(std::llround(per_unit));
    if (rows < 1 || std::abs(static_cast<double>(rows) * spec.h - 1.0) > 1e-9)
        throw Error(ErrorCode::BadArgument, "1/h must be an integer");

    for (int a = -spec.stencil; a <= spec.stencil; ++a)
        for (int b = -spec.stencil; b <= spec.stencil; ++b)
            if ((a != 0 || b != 0) && std::gcd(a, b) == 1) offsets_.emplace_back(a, b);

    const double r = spec.r_max;
    const double pad_cells = spec.stencil + 2;
    const double top = std::exp(r) * 1.05 + spec.margin;

    Band b0;
    b0.s = spec.h;
    b0.y0 = 1.0;
    b0.rows = rows;
    b0.rows_below = static_cast<std::int64_t>(std::ceil((std::log1p(r) + spec.margin) / spec.h));
    double w0 = std::max(disc_half_width(r, 2.0), 2.0 * std::sinh(r / 2.0)) * 1.05;
    b0.half_cols = static_cast<std::int64_t>(std::ceil((w0 + spec.margin) / spec.h + pad_cells));
    bands_.push_back(b0);

    for (int level = 1; std::ldexp(1.0, level) < top; ++level) {
        Band b;
        b.s = spec.h * std::ldexp(1.0, level);
        b.y0 = std::ldexp(1.0, level);
        b.rows = rows;
        double hi = std::ldexp(1.0, level + 1);
        double w = disc_half_width(r, std::min(hi, std::cosh(r))) * 1.05;
        b.half_cols = static_cast<std::int64_t>(std::ceil((w + spec.margin) / b.s + pad_cells));
        bands_.push_back(b);
    }

    std::size_t offset = 0;
    for (Band& b : bands_) {
        b.offset = offset;
        offset += static_cast<std::size_t>((b.rows + b.rows_below) * (2 * b.half_cols + 1));
    }
    total_ = offset;
}

std::size_t GridDiscretization::index(int band, std::int64_t k, std::int64_t j) const {
    const Band& b = bands_[static_cast<std::size_t>(band)];
    return b.offset + static_cast<std::size_t>((k + b.rows_below) * (2 * b.half_cols + 1) + (j + b.half_cols));
}

GridDiscretization::Cell GridDiscretization::locate(std::size_t node) const {
    auto it = std::upper_bound(bands_.begin(), bands_.end(), node,
                               [](std::size_t n, const Band& b) { return n < b.offset; });
    const int band = static_cast<int>(it - bands_.begin()) - 1;
    const Band& b = bands_[static_cast<std::size_t>(band)];
    const auto local = static_cast<std::int64_t>(node - b.offset);
    const std::int64_t cols = 2 * b.half_cols + 1;
    return {band, local / cols - b.rows_below, local % cols - b.half_cols};
}

Point GridDiscretization::position(std::size_t node) const {
    Cell c = locate(node);
    const Band& b = bands_[static_cast<std::size_t>(c.band)];
    return {static_cast<double>(c.j) * b.s, row_y(b, c.k)};
}

double GridDiscretization::spacing(std::size_t node) const { return bands_[static_cast<std::size_t>(locate(node).band)].s; }

double GridDiscretization::cell_area(std::size_t node) const {
    Point p = position(node);
    double s = spacing(node), rho = metric_density(p.x, p.y);
    return s * s * rho * rho;
}

bool GridDiscretization::in_P(std::size_t node) const { return in_hyperbolic_part(position(node).y); }

bool GridDiscretization::on_window_edge(std::size_t node) const {
    Cell c = locate(node);
    const Band& b = bands_[static_cast<std::size_t>(c.band)];
    if (c.j == -b.half_cols || c.j == b.half_cols) return true;
    if (c.band == 0 && c.k == -b.rows_below) return true;
    return c.band == band_count() - 1 && c.k == b.rows - 1;
}

std::size_t GridDiscretization::nearest(Point p) const {
    int band = 0;
    for (int i = 1; i < band_count(); ++i)
        if (p.y >= bands_[static_cast<std::size_t>(i)].y0) band = i;
    const Band& b = bands_[static_cast<std::size_t>(band)];
    auto k = static_cast<std::int64_t>(std::floor((p.y - b.y0) / b.s));
    auto j = static_cast<std::int64_t>(std::llround(p.x / b.s));
    if (k < -b.rows_below || k >= b.rows || j < -b.half_cols || j > b.half_cols)
        throw Error(ErrorCode::WindowTooSmall, "point outside the grid window");
    return index(band, k, j);
}

double GridDiscretization::edge_weight(Point p, Point q) const {
    const double len = std::hypot(q.x - p.x, q.y - p.y);
    const double my = 0.5 * (p.y + q.y);
    return len * (metric_density(p.x, p.y) + 4.0 * metric_density(0.0, my) + metric_density(q.x, q.y)) / 6.0;
}

std::vector<double> distance_field(const GridDiscretization& grid, Point a, double reach) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(grid.size(), inf);
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;

    // Seed the cells around a with the direct segment length.
    const std::size_t centre = grid.nearest(a);
    auto seed = [&](std::size_t v) {
        double d = grid.edge_weight(a, grid.position(v));
        if (d < dist[v]) {
            dist[v] = d;
            heap.emplace(d, v);
        }
    };
    seed(centre);
    grid.for_each_edge(centre, [&](std::size_t w, double) {
        Point p = grid.position(w), c = grid.position(centre);
        double s = grid.spacing(centre) * 1.5;
        if (std::abs(p.x - c.x) <= s && std::abs(p.y - c.y) <= s) seed(w);
    });

    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > dist[v]) continue;
        if (d > reach) break;
        if (grid.on_window_edge(v)) throw Error(ErrorCode::WindowTooSmall, "metric ball reaches the grid window edge");
        grid.for_each_edge(v, [&](std::size_t w, double wt) {
            double nd = d + wt;
            if (nd < dist[w]) {
                dist[w] = nd;
                heap.emplace(nd, w);
            }
        });
    }
    for (double& d : dist)
        if (d > reach) d = inf;
    return dist;
}

CurvatureReport curvature_report(const GridDiscretization& grid, Point a, const std::vector<double>& radii) {
    if (radii.empty()) throw Error(ErrorCode::BadArgument, "no radii");
    if (!std::is_sorted(radii.begin(), radii.end()) || radii.front() <= 0.0)
        throw Error(ErrorCode::BadArgument, "radii must be positive and increasing");
    if (radii.back() > grid.spec().r_max + 1e-12)
        throw Error(ErrorCode::WindowTooSmall, "radius exceeds the window reach");

    const std::vector<double> dist = distance_field(grid, a, radii.back());
    const std::size_t m = radii.size();
    std::vector<double> area_p(m, 0.0), area_q(m, 0.0), beta(m, 0.0);
    auto bucket = [&](double d) { return static_cast<std::size_t>(std::lower_bound(radii.begin(), radii.end(), d) - radii.begin()); };

    for (std::size_t v = 0; v < dist.size(); ++v) {
        if (!std::isfinite(dist[v])) continue;
        std::size_t i = bucket(dist[v]);
        if (i >= m) continue;
        (grid.in_P(v) ? area_p : area_q)[i] += grid.cell_area(v);
    }
    const double h = grid.spec().h;
    for (std::int64_t j = -grid.seam_columns(); j <= grid.seam_columns(); ++j) {
        double d = 0.5 * (dist[grid.seam_below(j)] + dist[grid.seam_above(j)]);
        if (!std::isfinite(d)) continue;
        std::size_t i = bucket(d);
        if (i < m) beta[i] += h;  // the density is 1 on the seam
    }

    CurvatureReport report;
    report.h = h;
    report.nodes = grid.size();
    double cp = 0.0, cq = 0.0, cb = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        cp += area_p[i];
        cq += area_q[i];
        cb += beta[i];
        CurvatureRecord rec;
        rec.r = radii[i];
        rec.area_P = cp;
        rec.area_Q = cq;
        rec.area = cp + cq;
        rec.omega = -cp;
        rec.ratio = rec.area > 0.0 ? rec.omega / rec.area : 0.0;
        rec.beta_grid = cb;
        rec.beta_closed = beta_length_closed_form(radii[i]);
        rec.area_P_exact = hyperbolic_area_above_seam(radii[i]);
        report.records.push_back(rec);
    }
    return report;
}

std::vector<CurvatureReport> curvature_refinement(GridSpec spec, int levels, const std::vector<double>& radii) {
    if (levels < 1) throw Error(ErrorCode::BadArgument, "levels must be positive");
    std::vector<CurvatureReport> out;
    const double finest = spec.h;
    for (int l = levels - 1; l >= 0; --l) {
        spec.h = l == 0 ? finest : 1.0 / std::round(1.0 / (finest * std::ldexp(1.0, l)));
        GridDiscretization grid(spec);
        out.push_back(curvature_report(grid, kBasepoint, radii));
    }
    return out;
}

void write_curvature_csv(std::ostream& os, const CurvatureReport& report) {
    os << "r,area,area_P,area_Q,omega,ratio,beta_grid,beta_closed,area_P_exact\n";
    os.precision(10);
    for (const auto& rec : report.records)
        os << rec.r << ',' << rec.area << ',' << rec.area_P << ',' << rec.area_Q << ',' << rec.omega << ','
           << rec.ratio << ',' << rec.beta_grid << ',' << rec.beta_closed << ',' << rec.area_P_exact << '\n';
}

}  // namespace speiser
