#include "speiser/potential.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <gmpxx.h>

namespace speiser {

Network network_of(const RotationGraph& g) {
    Network net;
    net.n = g.vertex_count();
    for (std::size_t h = 0; h < g.half_edge_count(); ++h) {
        std::size_t t = g.twin(h);
        if (h < t) net.edges.push_back({static_cast<std::uint32_t>(g.vertex_of(h)), static_cast<std::uint32_t>(g.vertex_of(t))});
    }
    return net;
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Collapses sources to node 0 and sinks to node 1; other vertices follow.
struct Collapsed {
    std::size_t m = 2;
    std::vector<std::uint32_t> node;  // vertex -> collapsed node
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

Collapsed collapse(const Network& net, const std::vector<std::uint32_t>& sources, const std::vector<std::uint32_t>& sinks) {
    if (sources.empty() || sinks.empty()) throw Error(ErrorCode::BadArgument, "source and sink sets must be nonempty");
    Collapsed c;
    c.node.assign(net.n, kNone);
    for (auto s : sources) c.node.at(s) = 0;
    for (auto t : sinks) {
        if (c.node.at(t) == 0) throw Error(ErrorCode::BadArgument, "source and sink sets overlap");
        c.node[t] = 1;
    }
    for (std::size_t v = 0; v < net.n; ++v)
        if (c.node[v] == kNone) c.node[v] = static_cast<std::uint32_t>(c.m++);
    for (auto [u, v] : net.edges) {
        std::uint32_t a = c.node[u], b = c.node[v];
        if (a != b) c.edges.push_back({a, b});
    }
    return c;
}

// Nodes reachable from the source node.
std::vector<char> reachable(const Collapsed& c) {
    std::vector<std::vector<std::uint32_t>> adj(c.m);
    for (auto [a, b] : c.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(c.m, 0);
    std::deque<std::uint32_t> q{0};
    seen[0] = 1;
    while (!q.empty()) {
        auto u = q.front();
        q.pop_front();
        for (auto w : adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                q.push_back(w);
            }
    }
    return seen;
}

BigRational to_big(const mpq_class& q) {
    return BigRational(boost::multiprecision::cpp_int(q.get_num().get_str()),
                       boost::multiprecision::cpp_int(q.get_den().get_str()));
}

// Exact Schur-complement elimination of all interior nodes in minimum-degree order.
ResistanceResult solve_exact(const Collapsed& c) {
    std::vector<std::unordered_map<std::uint32_t, mpq_class>> adj(c.m);
    for (auto [a, b] : c.edges) {
        adj[a][b] += 1;
        adj[b][a] += 1;
    }
    std::set<std::pair<std::size_t, std::uint32_t>> order;
    for (std::uint32_t v = 2; v < c.m; ++v) order.insert({adj[v].size(), v});
    std::vector<std::pair<std::uint32_t, mpq_class>> nb;
    while (!order.empty()) {
        std::uint32_t k = order.begin()->second;
        order.erase(order.begin());
        nb.assign(adj[k].begin(), adj[k].end());
        adj[k].clear();
        mpq_class total = 0;
        for (auto& [j, w] : nb) total += w;
        for (auto& [j, w] : nb) {
            if (j >= 2) order.erase({adj[j].size(), j});
            adj[j].erase(k);
        }
        if (total != 0) {
            for (std::size_t a = 0; a < nb.size(); ++a) {
                mpq_class fa = nb[a].second / total;
                for (std::size_t b = a + 1; b < nb.size(); ++b) {
                    mpq_class add = fa * nb[b].second;
                    adj[nb[a].first][nb[b].first] += add;
                    adj[nb[b].first][nb[a].first] += add;
                }
            }
        }
        for (auto& [j, w] : nb)
            if (j >= 2) order.insert({adj[j].size(), j});
    }
    auto it = adj[0].find(1);
    if (it == adj[0].end() || it->second == 0) throw Error(ErrorCode::Disconnected, "sources and sinks are not connected");
    mpq_class r = 1 / it->second;
    ResistanceResult out;
    out.mode = SolverMode::ExactRational;
    out.exact = to_big(r);
    out.value = r.get_d();
    return out;
}

ResistanceResult solve_iterative(const Collapsed& c, const SolverOptions& opt) {
    std::vector<char> live = reachable(c);
    if (!live[1]) throw Error(ErrorCode::Disconnected, "sources and sinks are not connected");
    std::vector<int> idx(c.m, -1);
    int n = 0;
    for (std::uint32_t v = 2; v < c.m; ++v)
        if (live[v]) idx[v] = n++;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(c.edges.size() * 4);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
    std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
    double direct = 0;
    std::vector<std::uint32_t> source_nbrs;
    for (auto [a, b] : c.edges) {
        if (!live[a] || !live[b]) continue;
        if ((a == 0 && b == 1) || (a == 1 && b == 0)) {
            direct += 1;
            continue;
        }
        for (int side = 0; side < 2; ++side) {
            std::uint32_t u = side ? b : a, w = side ? a : b;
            if (u < 2) continue;
            diag[static_cast<std::size_t>(idx[u])] += 1;
            if (w == 0) rhs[idx[u]] += 1;
            else if (w >= 2) trip.emplace_back(idx[u], idx[w], -1.0);
        }
        if (a == 0) source_nbrs.push_back(b);
        if (b == 0) source_nbrs.push_back(a);
    }
    for (int i = 0; i < n; ++i) trip.emplace_back(i, i, diag[static_cast<std::size_t>(i)]);
    Eigen::SparseMatrix<double> L(n, n);
    L.setFromTriplets(trip.begin(), trip.end());
    ResistanceResult out;
    out.mode = SolverMode::Iterative;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    if (n > 0) {
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
        cg.setTolerance(opt.tolerance);
        cg.setMaxIterations(opt.max_iterations);
        cg.compute(L);
        x = cg.solve(rhs);
        out.iterations = static_cast<int>(cg.iterations());
        out.residual = rhs.norm() > 0 ? (L * x - rhs).norm() / rhs.norm() : 0.0;
        if (cg.info() != Eigen::Success || out.residual > opt.tolerance * 10)
            throw Error(ErrorCode::SolverStall, "conjugate gradient residual " + std::to_string(out.residual) +
                                                    " after " + std::to_string(out.iterations) + " iterations");
    }
    double current = direct;
    for (auto w : source_nbrs)
        if (w >= 2) current += 1 - x[idx[w]];
    if (current <= 0) throw Error(ErrorCode::Disconnected, "no current between sources and sinks");
    out.value = 1 / current;
    return out;
}

}  // namespace

ResistanceResult resistance_between(const Network& net, const std::vector<std::uint32_t>& sources,
                                    const std::vector<std::uint32_t>& sinks, const SolverOptions& opt) {
    Collapsed c = collapse(net, sources, sinks);
    bool exact = opt.mode == SolverMode::ExactRational || (opt.mode == SolverMode::Auto && net.n <= opt.exact_limit);
    return exact ? solve_exact(c) : solve_iterative(c, opt);
}

ResistanceResult effective_resistance(const Ball& b, const SolverOptions& opt) {
    std::vector<std::uint32_t> sinks;
    for (std::size_t i = 1; i < b.size(); ++i)
        if (b.boundary[i]) sinks.push_back(static_cast<std::uint32_t>(i));
    if (sinks.empty())
        for (std::size_t i = 1; i < b.size(); ++i)
            if (b.dist[i] == b.radius) sinks.push_back(static_cast<std::uint32_t>(i));
    if (sinks.empty()) throw Error(ErrorCode::Disconnected, "ball has no boundary away from the center");
    return resistance_between(network_of(b.subgraph), {0}, sinks, opt);
}

namespace {

// Local network of the vertices within the given count of a BFS order.
struct LocalBall {
    BfsLayers layers;
    std::unordered_map<VertexId, std::uint32_t> index;
    std::vector<int> dist;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // sorted by max endpoint
};

LocalBall local_ball(const GraphOracle& g, VertexId center, int radius, std::size_t budget) {
    LocalBall lb;
    lb.layers = bfs_layers(g, center, radius, budget);
    const auto& vs = lb.layers.vertices;
    lb.index.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) lb.index.emplace(vs[i], static_cast<std::uint32_t>(i));
    lb.dist.assign(vs.size(), 0);
    for (int r = 0; r <= radius; ++r)
        for (std::size_t i = lb.layers.layer_start[static_cast<std::size_t>(r)];
             i < lb.layers.layer_start[static_cast<std::size_t>(r) + 1]; ++i)
            lb.dist[i] = r;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (const Dart& d : g.darts(vs[i])) {
            auto it = lb.index.find(d.to);
            if (it == lb.index.end() || it->second >= i) continue;
            lb.edges.push_back({it->second, static_cast<std::uint32_t>(i)});
        }
    }
    return lb;
}

Network prefix_network(const LocalBall& lb, std::size_t count) {
    Network net;
    net.n = count;
    for (auto [a, b] : lb.edges) {
        if (b >= count) break;
        net.edges.push_back({a, b});
    }
    return net;
}

}  // namespace

ResistanceResult resistance_to_sphere(const GraphOracle& g, VertexId center, int radius, const SolverOptions& opt,
                                      std::size_t budget) {
    if (radius < 1) throw Error(ErrorCode::BadArgument, "radius must be positive");
    LocalBall lb = local_ball(g, center, radius, budget);
    std::size_t lo = lb.layers.layer_start[static_cast<std::size_t>(radius)], hi = lb.layers.vertices.size();
    if (lo == hi) throw Error(ErrorCode::Disconnected, "sphere is empty");
    std::vector<std::uint32_t> sinks;
    for (std::size_t i = lo; i < hi; ++i) sinks.push_back(static_cast<std::uint32_t>(i));
    return resistance_between(prefix_network(lb, hi), {0}, sinks, opt);
}

ResistanceProfile resistance_profile(const GraphOracle& g, VertexId center, const std::vector<int>& radii,
                                     const SolverOptions& opt, std::size_t budget) {
    if (radii.empty()) throw Error(ErrorCode::TooFewEntries, "no radii");
    for (std::size_t i = 0; i < radii.size(); ++i)
        if (radii[i] < 1 || (i && radii[i] <= radii[i - 1]))
            throw Error(ErrorCode::BadArgument, "radii must be positive and strictly increasing");
    const int rmax = radii.back();
    LocalBall lb = local_ball(g, center, rmax + 1, budget);
    // a vertex at distance r is on the boundary of the r-ball when it has a neighbour at r+1
    std::vector<char> outward(lb.layers.vertices.size(), 0);
    for (auto [a, b] : lb.edges)
        if (lb.dist[b] == lb.dist[a] + 1) outward[a] = 1;
    ResistanceProfile p;
    p.center = center;
    for (int r : radii) {
        std::size_t count = lb.layers.count_within(r);
        std::vector<std::uint32_t> sinks;
        for (std::size_t i = lb.layers.layer_start[static_cast<std::size_t>(r)]; i < count; ++i)
            if (outward[i]) sinks.push_back(static_cast<std::uint32_t>(i));
        if (sinks.empty()) throw Error(ErrorCode::Disconnected, "ball of radius " + std::to_string(r) + " has no boundary");
        ResistanceResult res = resistance_between(prefix_network(lb, count), {0}, sinks, opt);
        p.mode = res.mode;
        if (!p.entries.empty() && res.value < p.entries.back().resistance * (1 - 1e-8))
            throw Error(ErrorCode::SolverStall, "resistance decreased between radii, solver inaccurate");
        p.entries.push_back({r, res.value, res.residual, count});
    }
    return p;
}

const char* type_name(GraphType t) {
    switch (t) {
        case GraphType::Parabolic: return "PARABOLIC";
        case GraphType::Hyperbolic: return "HYPERBOLIC";
        case GraphType::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Classification classify_type(const std::vector<std::pair<double, double>>& rv, const ClassifierConfig& cfg) {
    if (rv.size() < 5) throw Error(ErrorCode::TooFewEntries, "classification needs at least 5 entries");
    Classification c;
    double scale = 0;
    for (auto& e : rv) scale = std::max(scale, std::abs(e.second));
    const double eps = 1e-12 * std::max(scale, 1e-300);
    for (std::size_t k = 1; k < rv.size(); ++k) {
        double d = rv[k].second - rv[k - 1].second;
        c.increments.push_back(d);
        c.harmonic.push_back(d * rv[k].first / (rv[k].first - rv[k - 1].first));
    }
    for (std::size_t k = 1; k < c.increments.size(); ++k) {
        double prev = c.increments[k - 1];
        c.ratios.push_back(prev > eps ? c.increments[k] / prev : std::numeric_limits<double>::quiet_NaN());
    }
    // least squares of value against log radius
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    int m = 0;
    for (auto& [r, y] : rv) {
        if (r <= 0) continue;
        double x = std::log(r);
        sx += x, sy += y, sxx += x * x, sxy += x * y, syy += y * y;
        ++m;
    }
    double vx = sxx - sx * sx / m, vy = syy - sy * sy / m, cxy = sxy - sx * sy / m;
    c.log_slope = vx > 0 ? cxy / vx : 0;
    c.log_intercept = (sy - c.log_slope * sx) / m;
    c.log_r2 = (vx > 0 && vy > eps * eps) ? cxy * cxy / (vx * vy) : 0;

    std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(cfg.ratio_window), c.ratios.size());
    bool geometric = w > 0;
    for (std::size_t k = c.ratios.size() - w; k < c.ratios.size(); ++k)
        if (!(c.ratios[k] <= cfg.ratio_threshold) || c.increments[k + 1] < -eps) geometric = false;
    if (geometric) {
        c.type = GraphType::Hyperbolic;
        char buf[64];
        std::snprintf(buf, sizeof buf, "trailing increment ratios <= %g", cfg.ratio_threshold);
        c.reason = buf;
        return c;
    }
    if (c.log_slope > 0 && c.log_r2 >= cfg.r2_threshold) {
        c.type = GraphType::Parabolic;
        c.reason = "value grows linearly in log radius";
        return c;
    }
    std::size_t hw = std::min<std::size_t>(static_cast<std::size_t>(cfg.ratio_window), c.harmonic.size());
    bool harmonic = hw > 0;
    double first = c.harmonic[c.harmonic.size() - hw];
    for (std::size_t k = c.harmonic.size() - hw; k < c.harmonic.size(); ++k)
        if (!(c.harmonic[k] >= cfg.harmonic_min)) harmonic = false;
    if (harmonic && c.harmonic.back() >= 0.5 * first) {
        c.type = GraphType::Parabolic;
        c.reason = "increments bounded below by c/r";
        return c;
    }
    c.type = GraphType::Inconclusive;
    c.reason = "neither geometric decay nor divergent growth";
    return c;
}

Classification classify_type(const ResistanceProfile& p, const ClassifierConfig& cfg) {
    std::vector<std::pair<double, double>> rv;
    for (auto& e : p.entries) rv.push_back({static_cast<double>(e.radius), e.resistance});
    return classify_type(rv, cfg);
}

ResistanceResult extremal_length(const Network& net, const std::vector<std::uint32_t>& sources,
                                 const std::vector<std::uint32_t>& targets, const SolverOptions& opt) {
    return resistance_between(net, sources, targets, opt);
}

AdmissibilityResult check_admissible(const DensityAssignment& d) {
    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> adj(d.n);
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        const auto& x = d.edges[e];
        if (x.mu < 0) throw Error(ErrorCode::BadArgument, "negative density");
        adj.at(x.u).push_back({x.v, e});
        adj.at(x.v).push_back({x.u, e});
    }
    std::vector<double> dist(d.n, std::numeric_limits<double>::infinity());
    std::vector<std::size_t> via(d.n, SIZE_MAX);
    using Item = std::pair<double, std::uint32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    for (auto s : d.sources) {
        dist.at(s) = 0;
        pq.push({0, s});
    }
    std::vector<char> is_target(d.n, 0);
    for (auto t : d.targets) is_target.at(t) = 1;
    AdmissibilityResult out;
    out.min_weight = std::numeric_limits<double>::infinity();
    std::uint32_t hit = kNone;
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > dist[u]) continue;
        if (is_target[u]) {
            out.min_weight = du;
            hit = u;
            break;
        }
        for (auto [w, e] : adj[u]) {
            double nd = du + d.edges[e].mu;
            if (nd < dist[w]) {
                dist[w] = nd;
                via[w] = e;
                pq.push({nd, w});
            }
        }
    }
    out.ok = out.min_weight >= 1 - 1e-12;
    if (hit != kNone) {
        std::uint32_t u = hit;
        while (via[u] != SIZE_MAX) {
            std::size_t e = via[u];
            out.witness.push_back(e);
            u = d.edges[e].u == u ? d.edges[e].v : d.edges[e].u;
        }
        std::reverse(out.witness.begin(), out.witness.end());
    }
    return out;
}

std::vector<AnnulusBound> annuli_lower_bound(const std::vector<DensityAssignment>& annuli) {
    std::unordered_set<std::uint64_t> used;
    for (const auto& a : annuli) {
        std::unordered_set<std::uint64_t> mine;
        for (const auto& e : a.edges) {
            if (!mine.insert(e.key).second) continue;
            if (used.count(e.key)) throw Error(ErrorCode::OverlappingAnnuli, "edge shared between annuli " + a.label);
        }
        used.insert(mine.begin(), mine.end());
    }
    std::vector<AnnulusBound> out;
    double total = 0;
    for (const auto& a : annuli) {
        AdmissibilityResult adm = check_admissible(a);
        if (!(adm.min_weight > 0) || std::isinf(adm.min_weight))
            throw Error(ErrorCode::Inadmissible, "annulus " + a.label + " has a path of zero density or no crossing path");
        AnnulusBound b;
        b.label = a.label;
        b.min_weight = adm.min_weight;
        for (const auto& e : a.edges) b.energy += e.mu * e.mu;
        b.lambda = b.min_weight * b.min_weight / b.energy;
        total += b.lambda;
        b.cumulative = total;
        out.push_back(b);
    }
    return out;
}

EdgeKey edge_key(const GraphOracle& g, VertexId u, int slot) {
    Dart d = g.darts(u)[static_cast<std::size_t>(slot)];
    EdgeKey a{u, slot}, b{d.to, d.back};
    return std::min(a, b);
}

std::vector<Cutset> level_cutsets(const GraphOracle& g, VertexId center, int max_radius, std::size_t budget) {
    BfsLayers layers = bfs_layers(g, center, max_radius, budget);
    std::unordered_map<VertexId, int> dist;
    for (int r = 0; r <= max_radius; ++r)
        for (std::size_t i = layers.layer_start[static_cast<std::size_t>(r)];
             i < layers.layer_start[static_cast<std::size_t>(r) + 1]; ++i)
            dist.emplace(layers.vertices[i], r);
    std::vector<Cutset> cuts;
    for (int r = 0; r < max_radius; ++r) {
        Cutset c;
        c.radius = r;
        for (std::size_t i = layers.layer_start[static_cast<std::size_t>(r)];
             i < layers.layer_start[static_cast<std::size_t>(r) + 1]; ++i) {
            VertexId v = layers.vertices[i];
            DartList dv = g.darts(v);
            for (int s = 0; s < static_cast<int>(dv.size()); ++s) {
                auto it = dist.find(dv[static_cast<std::size_t>(s)].to);
                if (it != dist.end() && it->second == r + 1) c.edges.push_back(edge_key(g, v, s));
            }
        }
        cuts.push_back(std::move(c));
    }
    return cuts;
}

std::vector<double> nash_williams_sums(const std::vector<std::size_t>& sizes) {
    std::vector<double> out;
    double s = 0;
    for (std::size_t k : sizes) {
        if (k == 0) throw Error(ErrorCode::NotSeparating, "empty cutset");
        s += 1.0 / static_cast<double>(k);
        out.push_back(s);
    }
    return out;
}

NashWilliamsResult nash_williams(const GraphOracle& g, VertexId center, const std::vector<Cutset>& cuts,
                                 const ClassifierConfig& cfg, std::size_t budget) {
    std::set<EdgeKey> all;
    int rmax = 0;
    for (const auto& c : cuts) {
        for (const auto& e : c.edges)
            if (!all.insert(e).second) throw Error(ErrorCode::NotDisjoint, "edge appears in two cutsets");
        rmax = std::max(rmax, c.radius);
    }
    BfsLayers layers = bfs_layers(g, center, rmax + 1, budget);
    std::unordered_map<VertexId, int> dist;
    for (int r = 0; r <= rmax + 1; ++r)
        for (std::size_t i = layers.layer_start[static_cast<std::size_t>(r)];
             i < layers.layer_start[static_cast<std::size_t>(r) + 1]; ++i)
            dist.emplace(layers.vertices[i], r);
    std::vector<std::size_t> sizes;
    for (const auto& c : cuts) {
        std::set<EdgeKey> cut(c.edges.begin(), c.edges.end());
        std::unordered_set<VertexId> seen{center};
        std::deque<VertexId> q{center};
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop_front();
            DartList du = g.darts(u);
            for (int s = 0; s < static_cast<int>(du.size()); ++s) {
                if (cut.count(edge_key(g, u, s))) continue;
                VertexId w = du[static_cast<std::size_t>(s)].to;
                auto it = dist.find(w);
                if (it == dist.end() || it->second > c.radius)
                    throw Error(ErrorCode::NotSeparating, "cutset at radius " + std::to_string(c.radius) +
                                                              " does not separate the center");
                if (seen.insert(w).second) q.push_back(w);
            }
        }
        sizes.push_back(cut.size());
    }
    NashWilliamsResult out;
    out.partial_sums = nash_williams_sums(sizes);
    std::vector<std::pair<double, double>> rv;
    for (std::size_t i = 0; i < out.partial_sums.size(); ++i) rv.push_back({static_cast<double>(i + 1), out.partial_sums[i]});
    if (rv.size() >= 5) out.trend = classify_type(rv, cfg);
    return out;
}

WalkStats random_walk_escape(const GraphOracle& g, VertexId center, int radius, std::size_t trials, std::uint64_t seed,
                             double z, std::size_t budget) {
    if (radius < 1 || trials < 1) throw Error(ErrorCode::BadArgument, "walk needs radius >= 1 and trials >= 1");
    LocalBall lb = local_ball(g, center, radius, budget);
    const std::size_t n = lb.layers.vertices.size();
    std::vector<std::size_t> start(n + 1, 0);
    std::vector<std::uint32_t> nbr;
    for (std::size_t i = 0; i < n; ++i) {
        if (lb.dist[i] < radius)
            for (const Dart& d : g.darts(lb.layers.vertices[i])) nbr.push_back(lb.index.at(d.to));
        start[i + 1] = nbr.size();
    }
    WalkStats st;
    st.seed = seed;
    st.trials = trials;
    st.radius = radius;
    st.z = z;
    constexpr std::size_t kBlock = 4096;
    for (std::size_t block = 0; block * kBlock < trials; ++block) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(block)};
        std::mt19937_64 rng(seq);
        std::size_t end = std::min(trials, (block + 1) * kBlock);
        for (std::size_t t = block * kBlock; t < end; ++t) {
            std::size_t pos = 0;
            for (;;) {
                std::size_t deg = start[pos + 1] - start[pos];
                std::uniform_int_distribution<std::size_t> pick(0, deg - 1);
                pos = nbr[start[pos] + pick(rng)];
                if (lb.dist[pos] == radius) {
                    ++st.escaped;
                    break;
                }
                if (pos == 0) break;
            }
        }
    }
    st.p_hat = static_cast<double>(st.escaped) / static_cast<double>(trials);
    st.sigma = std::sqrt(st.p_hat * (1 - st.p_hat) / static_cast<double>(trials));
    st.half_width = z * st.sigma;
    return st;
}

}  // namespace speiser
