#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "speiser/types.hpp"

namespace speiser::acceptance {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

PathFamilyResult brute_force_extremal_length(const Network& net, const std::vector<std::uint32_t>& sources,
                                             const std::vector<std::uint32_t>& targets, std::size_t max_paths) {
    std::vector<char> is_source(net.n, 0), is_target(net.n, 0);
    for (auto s : sources) is_source[s] = 1;
    for (auto t : targets) is_target[t] = 1;
    PathFamilyResult out;
    for (auto s : sources)
        if (is_target[s]) return out;  // a path of length zero

    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> adj(net.n);
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        auto [a, b] = net.edges[e];
        adj[a].push_back({e, b});
        adj[b].push_back({e, a});
    }

    std::vector<std::vector<std::size_t>> paths;
    std::vector<std::size_t> stack;
    std::vector<char> visited(net.n, 0);
    auto dfs = [&](auto&& self, std::uint32_t v) -> void {
        for (auto [e, w] : adj[v]) {
            if (visited[w] || is_source[w]) continue;
            stack.push_back(e);
            if (is_target[w]) {
                paths.push_back(stack);
                if (paths.size() > max_paths) throw Error(ErrorCode::BadArgument, "too many paths to enumerate");
            } else {
                visited[w] = 1;
                self(self, w);
                visited[w] = 0;
            }
            stack.pop_back();
        }
    };
    for (auto s : sources) {
        visited[s] = 1;
        dfs(dfs, s);
        visited[s] = 0;
    }
    out.paths = paths.size();
    if (paths.empty()) {
        out.lambda = std::numeric_limits<double>::infinity();
        out.converged = true;
        return out;
    }

    // Hildreth: mu = A^T y with y >= 0, one projection per path constraint.
    std::vector<double> mu(net.edges.size(), 0.0), y(paths.size(), 0.0);
    const std::size_t max_sweeps = 500'000;
    for (std::size_t sweep = 0; sweep < max_sweeps; ++sweep) {
        double biggest = 0.0;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            double s = 0.0;
            for (auto e : paths[i]) s += mu[e];
            double delta = std::max(-y[i], (1.0 - s) / static_cast<double>(paths[i].size()));
            if (delta == 0.0) continue;
            y[i] += delta;
            for (auto e : paths[i]) mu[e] += delta;
            biggest = std::max(biggest, std::abs(delta));
        }
        out.sweeps = sweep + 1;
        if (biggest < 1e-14) {
            out.converged = true;
            break;
        }
    }
    double energy = 0.0;
    for (double m : mu) energy += m * m;
    out.lambda = 1.0 / energy;
    return out;
}

SeriesInstance random_series_network(std::mt19937_64& rng, bool pure_chain, std::size_t max_edges) {
    for (;;) {
        SeriesInstance inst;
        inst.pure_chain = pure_chain;
        const int k = uniform(rng, 2, 5);
        std::vector<std::vector<std::uint32_t>> junction(static_cast<std::size_t>(k) + 1);
        std::uint32_t next = 0;
        for (int i = 0; i <= k; ++i) {
            bool end = i == 0 || i == k;
            int size = pure_chain ? 1 : uniform(rng, 1, end ? 2 : 3);
            for (int j = 0; j < size; ++j) junction[static_cast<std::size_t>(i)].push_back(next++);
        }
        const std::size_t per_part = std::max<std::size_t>(3, max_edges / static_cast<std::size_t>(k));
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            const auto& in = junction[static_cast<std::size_t>(i)];
            const auto& out = junction[static_cast<std::size_t>(i) + 1];
            std::vector<std::uint32_t> global(in);
            global.insert(global.end(), out.begin(), out.end());
            std::vector<int> group(global.size(), 2);
            std::fill(group.begin(), group.begin() + static_cast<std::ptrdiff_t>(in.size()), 0);
            std::fill(group.begin() + static_cast<std::ptrdiff_t>(in.size()), group.end(), 1);
            int interior = uniform(rng, 0, 3);
            for (int j = 0; j < interior; ++j) {
                global.push_back(next++);
                group.push_back(2);
            }
            SeriesInstance::Part part;
            part.net.n = global.size();
            for (std::uint32_t j = 0; j < in.size(); ++j) part.in.push_back(j);
            for (std::uint32_t j = 0; j < out.size(); ++j) part.out.push_back(static_cast<std::uint32_t>(in.size()) + j);
            UnionFind uf(global.size());
            std::size_t components = global.size();
            auto draw = [&]() {
                for (;;) {
                    auto a = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(global.size()) - 1));
                    auto b = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(global.size()) - 1));
                    if (a == b || (group[a] == group[b] && group[a] != 2)) continue;
                    part.net.edges.push_back({a, b});
                    if (uf.unite(a, b)) --components;
                    return;
                }
            };
            while (components > 1) draw();
            int extra = uniform(rng, 0, 3);
            for (int j = 0; j < extra; ++j) draw();
            if (part.net.edges.size() > per_part) ok = false;
            for (auto [a, b] : part.net.edges) inst.whole.edges.push_back({global[a], global[b]});
            inst.parts.push_back(std::move(part));
        }
        if (!ok || inst.whole.edges.size() > max_edges) continue;
        inst.whole.n = next;
        inst.first = junction.front();
        inst.last = junction.back();
        return inst;
    }
}

RandomInstance random_connected_instance(std::mt19937_64& rng, std::size_t max_edges) {
    RandomInstance inst;
    const int n = uniform(rng, 3, 8);
    inst.net.n = static_cast<std::size_t>(n);
    UnionFind uf(inst.net.n);
    int components = n;
    while (components > 1) {
        auto a = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
        auto b = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
        if (a == b) continue;
        inst.net.edges.push_back({a, b});
        if (uf.unite(a, b)) --components;
    }
    const auto target_edges = static_cast<std::size_t>(uniform(rng, static_cast<int>(inst.net.edges.size()),
                                                               static_cast<int>(std::max(inst.net.edges.size(), max_edges))));
    while (inst.net.edges.size() < std::min(target_edges, max_edges)) {
        auto a = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
        auto b = static_cast<std::uint32_t>(uniform(rng, 0, n - 1));
        if (a != b) inst.net.edges.push_back({a, b});
    }
    std::vector<std::uint32_t> order(inst.net.n);
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    const int ns = uniform(rng, 1, std::min(2, n - 1));
    const int nt = uniform(rng, 1, std::min(2, n - ns));
    inst.sources.assign(order.begin(), order.begin() + ns);
    inst.targets.assign(order.begin() + ns, order.begin() + ns + nt);
    return inst;
}

int affordable_radius(const GraphOracle& g, std::size_t budget, int max_radius) {
    std::unordered_set<VertexId> seen{g.seed()};
    std::vector<VertexId> layer{g.seed()};
    int r = 0;
    while (r < max_radius && !layer.empty()) {
        std::vector<VertexId> next;
        for (VertexId v : layer)
            for (const Dart& d : g.darts(v))
                if (seen.insert(d.to).second) next.push_back(d.to);
        if (seen.size() > budget) break;
        layer.swap(next);
        ++r;
    }
    return r;
}

}  // namespace speiser::acceptance
