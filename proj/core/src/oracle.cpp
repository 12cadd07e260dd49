#include "speiser/oracle.hpp"

#include <cstdlib>
#include <deque>

namespace speiser {

std::optional<FaceSize> GraphOracle::face_hint(VertexId, int) const { return std::nullopt; }
int GraphOracle::parity(VertexId) const { return -1; }
std::string GraphOracle::describe(VertexId v) const { return std::to_string(v); }

std::size_t default_vertex_budget() {
    if (const char* env = std::getenv("SPEISER_VERTEX_BUDGET")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(env, &end, 10);
        if (end != env && n > 0) return static_cast<std::size_t>(n);
    }
    return 4'000'000;
}

std::size_t default_walk_budget() { return 4096; }

Corner next_corner(const GraphOracle& g, Corner k) {
    auto dv = g.darts(k.v);
    const Dart& d = dv[static_cast<std::size_t>((k.c + 1) % static_cast<int>(dv.size()))];
    return {d.to, d.back};
}

Corner prev_corner(const GraphOracle& g, Corner k) {
    auto dv = g.darts(k.v);
    const Dart& d = dv[static_cast<std::size_t>(k.c)];
    int deg = static_cast<int>(g.darts(d.to).size());
    return {d.to, (d.back - 1 + deg) % deg};
}

std::optional<FaceSize> walk_face(const GraphOracle& g, VertexId v, int corner, std::size_t max_len) {
    DartList cd = g.darts(v);
    const int s0 = (corner + 1) % static_cast<int>(cd.size());
    int slot = s0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const Dart d = cd[static_cast<std::size_t>(slot)];
        cd = g.darts(d.to);
        slot = (d.back + 1) % static_cast<int>(cd.size());
        if (d.to == v && slot == s0) return FaceSize::of_length(static_cast<std::int64_t>(len));
    }
    return std::nullopt;
}

FaceSize corner_face(const GraphOracle& g, VertexId v, int corner, std::size_t walk_budget) {
    if (auto hint = g.face_hint(v, corner)) return *hint;
    if (auto f = walk_face(g, v, corner, walk_budget)) return *f;
    throw Error(ErrorCode::UnknownFaceSize,
                "face at corner " + std::to_string(corner) + " of " + g.describe(v) + " not closed within walk budget");
}

BfsLayers bfs_layers(const GraphOracle& g, VertexId center, int radius, std::size_t budget) {
    if (radius < 0) throw Error(ErrorCode::BadArgument, "negative radius");
    BfsLayers out;
    out.center = center;
    out.radius = radius;
    std::unordered_map<VertexId, char> seen;
    seen.reserve(1024);
    out.vertices.push_back(center);
    seen.emplace(center, 1);
    out.layer_start = {0, 1};
    for (int r = 0; r < radius; ++r) {
        std::size_t lo = out.layer_start[static_cast<std::size_t>(r)], hi = out.layer_start[static_cast<std::size_t>(r) + 1];
        for (std::size_t i = lo; i < hi; ++i) {
            for (const Dart& d : g.darts(out.vertices[i])) {
                if (seen.emplace(d.to, 1).second) {
                    out.vertices.push_back(d.to);
                    if (out.vertices.size() > budget)
                        throw Error(ErrorCode::OracleDivergence,
                                    "ball of radius " + std::to_string(radius) + " exceeds vertex budget " +
                                        std::to_string(budget));
                }
            }
        }
        out.layer_start.push_back(out.vertices.size());
    }
    return out;
}

std::vector<std::size_t> Ball::boundary_vertices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < boundary.size(); ++i)
        if (boundary[i]) out.push_back(i);
    return out;
}

Ball ball(const GraphOracle& g, VertexId center, int radius, std::size_t budget) {
    BfsLayers layers = bfs_layers(g, center, radius, budget);
    Ball b;
    b.center = center;
    b.radius = radius;
    const std::size_t n = layers.vertices.size();
    b.index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) b.index.emplace(layers.vertices[i], i);
    b.dist.assign(n, 0);
    for (int r = 0; r <= radius; ++r)
        for (std::size_t i = layers.layer_start[static_cast<std::size_t>(r)];
             i < layers.layer_start[static_cast<std::size_t>(r) + 1]; ++i)
            b.dist[i] = r;

    std::vector<DartList> full(n);
    std::vector<std::vector<int>> local_slot(n);  // full slot -> local slot or -1
    b.full_degree.assign(n, 0);
    b.boundary.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        full[i] = g.darts(layers.vertices[i]);
        b.full_degree[i] = static_cast<int>(full[i].size());
        local_slot[i].assign(full[i].size(), -1);
        int k = 0;
        for (std::size_t s = 0; s < full[i].size(); ++s)
            if (b.index.count(full[i][s].to)) local_slot[i][s] = k++;
        if (k < b.full_degree[i]) b.boundary[i] = 1;
    }
    std::vector<std::vector<std::pair<int, int>>> darts(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 0; s < full[i].size(); ++s) {
            if (local_slot[i][s] < 0) continue;
            std::size_t j = b.index.at(full[i][s].to);
            darts[i].push_back({static_cast<int>(j), local_slot[j][static_cast<std::size_t>(full[i][s].back)]});
        }
    }
    b.subgraph = RotationGraph::from_darts(layers.vertices, darts);

    // A traced face is genuine only if every turn uses the true rotation successor.
    b.faces = trace_faces(b.subgraph);
    for (auto& f : b.faces) {
        for (std::size_t h : f.boundary) {
            std::size_t t = b.subgraph.twin(h);
            std::size_t w = b.subgraph.vertex_of(t);
            if (!b.boundary[w]) continue;
            // full slot of twin, then check its full successor is present
            int lt = b.subgraph.slot_of(t);
            int ft = -1;
            for (std::size_t s = 0; s < local_slot[w].size(); ++s)
                if (local_slot[w][s] == lt) ft = static_cast<int>(s);
            int succ = (ft + 1) % b.full_degree[w];
            if (local_slot[w][static_cast<std::size_t>(succ)] < 0) {
                f.truncated = true;
                break;
            }
        }
    }
    return b;
}

FiniteOracle::FiniteOracle(RotationGraph g, std::string name, std::vector<int> parity)
    : g_(std::move(g)), name_(std::move(name)), parity_(std::move(parity)) {
    for (std::size_t i = 0; i < g_.vertex_count(); ++i) index_.emplace(g_.id(i), i);
}

std::size_t FiniteOracle::local(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw Error(ErrorCode::BadArgument, "unknown vertex " + std::to_string(v));
    return it->second;
}

DartList FiniteOracle::darts(VertexId v) const {
    std::size_t i = local(v);
    DartList out;
    for (int s = 0; s < g_.degree(i); ++s) {
        std::size_t t = g_.twin(g_.half_edge(i, s));
        out.push_back({g_.id(g_.vertex_of(t)), g_.slot_of(t)});
    }
    return out;
}

int FiniteOracle::parity(VertexId v) const {
    if (parity_.empty()) return -1;
    return parity_[local(v)];
}

}  // namespace speiser
