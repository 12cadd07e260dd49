#include "speiser/speiser.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <numeric>

namespace speiser {

namespace {

std::size_t finite_vertex_count(const GraphOracle& g) {
    if (auto f = dynamic_cast<const FiniteOracle*>(&g)) return f->graph().vertex_count();
    return 0;
}

}  // namespace

SpeiserValidation validate_speiser(std::shared_ptr<const GraphOracle> g, int q, int radius,
                                   std::optional<VertexId> center) {
    if (q < 3) throw Error(ErrorCode::BadDegree, "Speiser graphs need q >= 3, got " + std::to_string(q));
    SpeiserValidation out;
    VertexId c = center.value_or(g->seed());
    std::size_t nfin = finite_vertex_count(*g);
    if (g->is_finite() && nfin) radius = static_cast<int>(nfin);
    BfsLayers layers = bfs_layers(*g, c, radius);
    out.vertices_checked = layers.vertices.size();
    if (g->is_finite() && nfin && layers.vertices.size() != nfin)
        out.violations.push_back({ErrorCode::Disconnected, c, "graph is not connected"});

    std::unordered_map<VertexId, int> parity;
    parity.reserve(layers.vertices.size());
    bool oracle_parity = g->parity(c) >= 0;
    if (oracle_parity) {
        for (VertexId v : layers.vertices) parity[v] = g->parity(v);
    } else {
        parity[c] = 0;
        for (VertexId v : layers.vertices) {
            for (const Dart& d : g->darts(v))
                if (!parity.count(d.to)) parity[d.to] = 1 - parity[v];
        }
    }
    for (VertexId v : layers.vertices) {
        DartList dv = g->darts(v);
        if (static_cast<int>(dv.size()) != q)
            out.violations.push_back({ErrorCode::NotHomogeneous, v,
                                      "degree " + std::to_string(dv.size()) + " at " + g->describe(v)});
        for (const Dart& d : dv) {
            auto it = parity.find(d.to);
            if (it != parity.end() && it->second == parity[v]) {
                out.violations.push_back({ErrorCode::NotBipartite, v, "edge " + g->describe(v) + " - " + g->describe(d.to)});
                break;
            }
        }
        for (int k = 0; k < static_cast<int>(dv.size()); ++k) {
            FaceSize f = corner_face(*g, v, k);
            ++out.faces_checked;
            if (f.infinite) {
                ++out.infinite_corners;
                continue;
            }
            if (f.length % 2 != 0)
                out.violations.push_back({ErrorCode::OddFace, v,
                                          "face of length " + std::to_string(f.length) + " at " + g->describe(v)});
        }
    }
    out.ok = out.violations.empty();
    if (out.ok) {
        SpeiserGraph sg;
        sg.oracle = g;
        sg.q = q;
        sg.center = c;
        sg.checked_radius = radius;
        sg.parity = std::move(parity);
        out.graph = std::move(sg);
    }
    return out;
}

SpeiserGraph validate_speiser_or_throw(std::shared_ptr<const GraphOracle> g, int q, int radius,
                                       std::optional<VertexId> center) {
    auto v = validate_speiser(std::move(g), q, radius, center);
    if (!v.ok) throw Error(v.violations.front().code, v.violations.front().detail);
    return *v.graph;
}

namespace {

// Union-find over corners with label offsets modulo q.
struct OffsetUnionFind {
    std::vector<std::size_t> parent;
    std::vector<int> offset;  // label(x) = label(parent) + offset
    int q;
    explicit OffsetUnionFind(std::size_t n, int q_) : parent(n), offset(n, 0), q(q_) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<std::size_t, int> find(std::size_t x) {
        int acc = 0;
        std::size_t r = x;
        while (parent[r] != r) {
            acc = (acc + offset[r]) % q;
            r = parent[r];
        }
        // path compression
        std::size_t y = x;
        int rem = acc;
        while (parent[y] != y) {
            std::size_t p = parent[y];
            int o = offset[y];
            parent[y] = r;
            offset[y] = rem;
            rem = ((rem - o) % q + q) % q;
            y = p;
        }
        return {r, acc};
    }
    // require label(b) = label(a) + delta
    bool unite(std::size_t a, std::size_t b, int delta) {
        auto [ra, oa] = find(a);
        auto [rb, ob] = find(b);
        delta = ((delta % q) + q) % q;
        if (ra == rb) return ((oa + delta - ob) % q + q) % q == 0;
        parent[rb] = ra;
        offset[rb] = ((oa + delta - ob) % q + q) % q;
        return true;
    }
};

}  // namespace

Labeling label_faces(const GraphOracle& g, const std::vector<VertexId>& region, int q, Corner anchor, int anchor_label,
                     const std::unordered_map<VertexId, int>* parity) {
    std::unordered_map<VertexId, std::size_t> index;
    std::vector<std::size_t> base;
    std::vector<DartList> dl;
    std::size_t total = 0;
    for (VertexId v : region) {
        index.emplace(v, base.size());
        base.push_back(total);
        dl.push_back(g.darts(v));
        total += dl.back().size();
    }
    auto par = [&](VertexId v) {
        if (parity) {
            auto it = parity->find(v);
            if (it != parity->end()) return it->second;
        }
        int p = g.parity(v);
        if (p < 0) throw Error(ErrorCode::NotValidated, "labeling needs vertex parity");
        return p;
    };
    OffsetUnionFind uf(total + 1, q);  // last slot pins the absolute label
    const std::size_t pin = total;
    for (std::size_t i = 0; i < region.size(); ++i) {
        VertexId v = region[i];
        int deg = static_cast<int>(dl[i].size());
        int step = par(v) == 0 ? 1 : -1;
        for (int c = 0; c < deg; ++c) {
            std::size_t a = base[i] + static_cast<std::size_t>(c);
            std::size_t b = base[i] + static_cast<std::size_t>((c + 1) % deg);
            if (!uf.unite(a, b, step))
                throw Error(ErrorCode::InconsistentLabeling, "rotation cycle at " + g.describe(v) + " breaks the cyclic order");
            Corner n = next_corner(g, {v, c});
            auto it = index.find(n.v);
            if (it == index.end()) continue;
            if (!uf.unite(a, base[it->second] + static_cast<std::size_t>(n.c), 0))
                throw Error(ErrorCode::InconsistentLabeling, "face through " + g.describe(v) + " receives two labels");
        }
    }
    auto ai = index.find(anchor.v);
    if (ai == index.end()) throw Error(ErrorCode::BadArgument, "anchor outside region");
    if (!uf.unite(pin, base[ai->second] + static_cast<std::size_t>(anchor.c), anchor_label))
        throw Error(ErrorCode::InconsistentLabeling, "anchor conflicts");

    Labeling out;
    out.q = q;
    auto [pin_root, pin_off] = uf.find(pin);
    std::unordered_map<std::size_t, char> classes;
    for (std::size_t i = 0; i < region.size(); ++i) {
        int deg = static_cast<int>(dl[i].size());
        std::vector<int> labels(static_cast<std::size_t>(deg), -1);
        for (int c = 0; c < deg; ++c) {
            auto [r, o] = uf.find(base[i] + static_cast<std::size_t>(c));
            classes.emplace(r, 1);
            if (r == pin_root) labels[static_cast<std::size_t>(c)] = ((o - pin_off) % q + q) % q;
        }
        std::vector<int> edges(static_cast<std::size_t>(deg), -1);
        for (int s = 0; s < deg; ++s) {
            int l1 = labels[static_cast<std::size_t>((s - 1 + deg) % deg)], l2 = labels[static_cast<std::size_t>(s)];
            if (l1 < 0 || l2 < 0) continue;
            if ((l1 + 1) % q == l2) edges[static_cast<std::size_t>(s)] = l1;
            else if ((l2 + 1) % q == l1) edges[static_cast<std::size_t>(s)] = l2;
        }
        out.corner_label.emplace(region[i], std::move(labels));
        out.edge_label.emplace(region[i], std::move(edges));
    }
    out.face_classes = classes.size();
    return out;
}

Rational excess(const GraphOracle& g, VertexId v, std::size_t walk_budget) {
    DartList dv = g.darts(v);
    Rational e(2);
    for (int c = 0; c < static_cast<int>(dv.size()); ++c) {
        FaceSize f = corner_face(g, v, c, walk_budget);
        if (f.infinite) e -= 1;
        else e -= Rational(1) - Rational(2, f.length);
    }
    return e;
}

double MeanExcessProfile::limsup_estimate() const {
    double m = -1e300;
    std::size_t n = records.size();
    for (std::size_t i = n > static_cast<std::size_t>(window) ? n - static_cast<std::size_t>(window) : 0; i < n; ++i)
        m = std::max(m, to_double(records[i].average));
    return m;
}

double MeanExcessProfile::liminf_estimate() const {
    double m = 1e300;
    std::size_t n = records.size();
    for (std::size_t i = n > static_cast<std::size_t>(window) ? n - static_cast<std::size_t>(window) : 0; i < n; ++i)
        m = std::min(m, to_double(records[i].average));
    return m;
}

std::vector<std::pair<int, Rational>> MeanExcessProfile::subsequence(int j) const {
    std::vector<std::pair<int, Rational>> out;
    for (const auto& r : records)
        if (((r.radius % window) + window) % window == j) out.push_back({r.radius, r.average});
    return out;
}

MeanExcessProfile mean_excess_over_layers(const GraphOracle& g, const BfsLayers& layers, int window) {
    MeanExcessProfile p;
    p.center = layers.center;
    p.window = window;
    Rational sum(0);
    for (int r = 0; r + 1 < static_cast<int>(layers.layer_start.size()); ++r) {
        // accumulate per layer with a common denominator to keep rational arithmetic cheap
        std::int64_t num = 0;
        const std::int64_t den = 2520;  // lcm(1..10); larger face sizes fall back to exact addition
        Rational spill(0);
        for (std::size_t i = layers.layer_start[static_cast<std::size_t>(r)];
             i < layers.layer_start[static_cast<std::size_t>(r) + 1]; ++i) {
            Rational e = excess(g, layers.vertices[i]);
            if (den % e.denominator() == 0) num += e.numerator() * (den / e.denominator());
            else spill += e;
        }
        sum += Rational(num, den) + spill;
        MeanExcessRecord rec;
        rec.radius = r;
        rec.vertex_count = layers.layer_start[static_cast<std::size_t>(r) + 1];
        rec.sum = sum;
        rec.average = sum / Rational(static_cast<std::int64_t>(rec.vertex_count));
        p.records.push_back(rec);
    }
    return p;
}

MeanExcessProfile mean_excess_profile(const GraphOracle& g, VertexId center, int max_radius, int window,
                                      std::size_t budget) {
    if (window < 1) throw Error(ErrorCode::BadArgument, "window must be positive");
    BfsLayers layers = bfs_layers(g, center, max_radius, budget);
    return mean_excess_over_layers(g, layers, window);
}

void write_profile_csv(std::ostream& out, const MeanExcessProfile& p) {
    out << "radius,vertex_count,sum_num,sum_den,avg_num,avg_den,avg_float\n";
    for (const auto& r : p.records) {
        out << r.radius << ',' << r.vertex_count << ',' << r.sum.numerator() << ',' << r.sum.denominator() << ','
            << r.average.numerator() << ',' << r.average.denominator() << ',' << std::setprecision(12)
            << to_double(r.average) << '\n';
    }
}

ExcessBound ball_excess_bound(const GraphOracle& g, VertexId center, int radius, std::size_t budget) {
    BfsLayers layers = bfs_layers(g, center, radius, budget);
    ExcessBound out;
    out.sum = Rational(0);
    for (VertexId v : layers.vertices) out.sum += excess(g, v);
    out.vertex_count = layers.vertices.size();
    out.bound_ok = out.sum <= Rational(2);
    return out;
}

}  // namespace speiser
