#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "doctest.h"
#include "fixtures.hpp"
#include "speiser/export.hpp"
#include "speiser/extension.hpp"
#include "speiser/generators.hpp"
#include "speiser/potential.hpp"
#include "speiser/speiser.hpp"

using namespace speiser;

namespace {

std::multiset<VertexId> neighbour_multiset(const GraphOracle& g, VertexId v) {
    std::multiset<VertexId> out;
    for (const Dart& d : g.darts(v)) out.insert(d.to);
    return out;
}

std::unordered_map<VertexId, int> distances(const GraphOracle& g, VertexId c, int r) {
    const BfsLayers l = bfs_layers(g, c, r);
    std::unordered_map<VertexId, int> d;
    for (int k = 0; k <= r; ++k)
        for (std::size_t i = k ? l.layer_start[static_cast<std::size_t>(k)] : 0; i < l.count_within(k); ++i) d[l.vertices[i]] = k;
    return d;
}

// Infinite corners of the small ball, grouped into faces by walking each
// face boundary while it stays inside the large ball.
std::size_t infinite_face_classes(const GraphOracle& g, int small, int large) {
    const auto inner = distances(g, g.seed(), small);
    const auto outer = distances(g, g.seed(), large);
    std::map<std::pair<VertexId, int>, std::size_t> id;
    std::vector<std::size_t> parent;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto node = [&](Corner k) {
        auto [it, fresh] = id.emplace(std::pair{k.v, k.c}, parent.size());
        if (fresh) parent.push_back(parent.size());
        return it->second;
    };
    std::vector<Corner> seeds;
    for (const auto& [v, d] : inner)
        for (int c = 0; c < static_cast<int>(g.darts(v).size()); ++c)
            if (corner_face(g, v, c).infinite) seeds.push_back({v, c});
    for (const Corner& s : seeds) {
        Corner k = s;
        for (int dir = 0; dir < 2; ++dir) {
            k = s;
            for (int step = 0; step < 20000; ++step) {
                const Corner n = dir == 0 ? next_corner(g, k) : prev_corner(g, k);
                if (!outer.count(n.v)) break;
                parent[find(node(k))] = find(node(n));
                k = n;
            }
        }
    }
    std::set<std::size_t> roots;
    for (const Corner& s : seeds) roots.insert(find(node(s)));
    return roots.size();
}

}  // namespace

TEST_CASE("half-plane lattice neighbours") {
    const auto g = half_plane_lattice();
    using L = HalfPlaneLattice;
    CHECK(neighbour_multiset(*g, L::encode(0, 0)) == std::multiset<VertexId>{L::encode(1, 0), L::encode(-1, 0), L::encode(0, 1)});
    CHECK(g->darts(L::encode(5, 3)).size() == 4);
    CHECK(L::decode(L::encode(-7, 12)) == std::pair<std::int64_t, std::int64_t>{-7, 12});
}

TEST_CASE("half-cylinder lattices") {
    using L = HalfPlaneLattice;
    const auto c2 = half_cylinder_lattice(2);
    CHECK(neighbour_multiset(*c2, L::encode(0, 0)) == std::multiset<VertexId>{L::encode(1, 0), L::encode(1, 0), L::encode(0, 1)});

    const auto c6 = half_cylinder_lattice(6);
    for (std::int64_t x = 0; x < 6; ++x)
        CHECK(neighbour_multiset(*c6, L::encode(x, 1)) ==
              std::multiset<VertexId>{L::encode((x + 1) % 6, 1), L::encode((x + 5) % 6, 1), L::encode(x, 0), L::encode(x, 2)});
    for (int r = 0; r <= 6; ++r) {
        std::size_t want = 0;
        for (int x = 0; x < 6; ++x)
            for (int y = 0; y <= r; ++y) want += std::min(x, 6 - x) + y <= r;
        CHECK(ball(*c6, L::encode(0, 0), r).size() == want);
    }

    try {
        half_cylinder_lattice(1);
        FAIL("expected BadCircumference");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadCircumference);
    }
}

TEST_CASE("tr-hexagon graph") {
    const auto g = gen_tr_hexagon();
    const SpeiserValidation v = validate_speiser(g, 3, 8);
    CHECK(v.ok);
    CHECK(v.infinite_corners > 0);
    CHECK(infinite_face_classes(*g, 6, 20) == 2);
    for (VertexId x : bfs_layers(*g, g->seed(), 6).vertices)
        for (int c = 0; c < 3; ++c) {
            const FaceSize f = corner_face(*g, x, c);
            if (!f.infinite) CHECK(f.length <= 6);
        }
}

TEST_CASE("extending tr-hexagon with n=4 grafts only the infinite faces") {
    const SpeiserGraph sg = validate_speiser_or_throw(gen_tr_hexagon(), 3, 6);
    const ExtendedGraph ext = extend(sg, 4);
    const auto& g = *ext.oracle;
    for (VertexId x : bfs_layers(*sg.oracle, sg.oracle->seed(), 6).vertices)
        for (int c = 0; c < 3; ++c) CHECK(g.grafted(x, c) == corner_face(*sg.oracle, x, c).infinite);
    for (VertexId x : bfs_layers(g, g.seed(), 8).vertices) {
        const int deg = static_cast<int>(g.darts(x).size());
        CHECK(deg <= (is_lattice_vertex(x) ? 4 : 5));
        for (int c = 0; c < deg; ++c) {
            const FaceSize f = corner_face(g, x, c);
            CHECK(!f.infinite);
            CHECK(f.length <= 6);
        }
    }
}

TEST_CASE("theta graph with n=1 grafts a two-cycle half-cylinder on every 2-gon") {
    const SpeiserGraph sg = validate_speiser_or_throw(fixtures::theta_oracle(), 3, 1);
    const ExtendedGraph ext = extend(sg, 1);
    const auto& g = *ext.oracle;
    const VertexId u = sg.oracle->seed();
    CHECK(g.darts(u).size() == 6);
    std::set<VertexId> ring1;
    for (int c = 0; c < 3; ++c) CHECK(g.grafted(u, c));
    for (const Dart& d : g.darts(u))
        if (is_lattice_vertex(d.to)) {
            const LatticeVertex lv = decode_lattice(d.to);
            CHECK(lv.ring == 1);
            ring1.insert(d.to);
            CHECK(g.darts(d.to).size() == 4);
        }
    CHECK(ring1.size() == 3);
    for (VertexId w : ring1) {
        // two parallel edges to the other ring-1 vertex of the same face
        std::map<VertexId, int> mult;
        for (const Dart& d : g.darts(w)) ++mult[d.to];
        int doubled = 0;
        for (const auto& [to, m] : mult)
            if (m == 2) {
                ++doubled;
                CHECK(decode_lattice(to).ring == 1);
            }
        CHECK(doubled == 1);
    }
}

TEST_CASE("extension without grafts leaves the graph unchanged") {
    const SpeiserGraph sg = validate_speiser_or_throw(fixtures::theta_oracle(), 3, 1);
    const ExtendedGraph ext = extend(sg, 2);
    const Ball a = ball(*sg.oracle, sg.oracle->seed(), 3);
    const Ball b = ball(*ext.oracle, ext.oracle->seed(), 3);
    CHECK(a.subgraph == b.subgraph);
    for (VertexId v : b.subgraph.ids()) CHECK(!is_lattice_vertex(v));
}

TEST_CASE("canonical families") {
    const auto lam = make_family("modular-lambda");
    const SpeiserValidation v = validate_speiser(lam.oracle, 3, 5);
    CHECK(v.ok);
    CHECK(v.infinite_corners == v.faces_checked);
    CHECK(parse_canonical_tag("TREE_3") == CanonicalTag::TREE_3);
    CHECK_THROWS_AS(make_family("no-such-family"), Error);
    const auto t = gen_canonical(CanonicalTag::TREE_3);
    CHECK(resistance_to_sphere(*t, t->seed(), 20).value == doctest::Approx(2.0 / 3.0).epsilon(1e-5));
}

TEST_CASE("gamma4 is a degree-4 Speiser graph with faces of at most 6 edges") {
    const Family f = make_family("gamma4");
    CHECK(f.q == 4);
    CHECK(validate_speiser(f.oracle, 4, 6).ok);
    for (VertexId x : bfs_layers(*f.oracle, f.oracle->seed(), 6).vertices)
        for (int c = 0; c < 4; ++c) {
            const FaceSize fs = corner_face(*f.oracle, x, c);
            CHECK(!fs.infinite);
            CHECK(fs.length <= 6);
        }
}

TEST_CASE("gamma-star join positions") {
    const auto g = gen_gamma_star();
    const std::vector<std::int64_t> want{0, 3, 10, 25, 56, 119, 246, 501, 1012, 2035};
    for (std::size_t m = 0; m < want.size(); ++m) CHECK(g->join_position(static_cast<std::int64_t>(m)) == want[m]);
}

TEST_CASE("appendix-A series") {
    std::vector<std::int64_t> l;
    for (int n = 1; n <= 60; ++n) l.push_back((std::int64_t{1} << n) + 1);
    CHECK(l == default_appendix_lengths(60));
    const AppendixSeries s = appendix_series(l);
    REQUIRE(s.log_partial.size() == 60);
    CHECK(s.log_partial[59] - s.log_partial[39] < 1e-6);
    // sum (2^k + 1) / 2^k = n + 1 - 2^-n
    for (int n = 1; n <= 60; ++n)
        CHECK(s.linear_partial[static_cast<std::size_t>(n - 1)] == doctest::Approx(n + 1 - std::ldexp(1.0, -n)));

    try {
        gen_appendixA({3, 4, 9});
        FAIL("expected EvenSubdivision");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EvenSubdivision);
    }
}

TEST_CASE("appendix-A resistance matches series-parallel reduction") {
    // a completed path of l edges is l - (l-1)/2 single edges and (l-1)/2 doubled ones
    const auto l = default_appendix_lengths(6);
    for (bool completed : {true, false}) {
        const auto g = gen_appendixA(l, completed);
        double want = 0;
        for (int n = 1; n <= 4; ++n) {
            const double ln = static_cast<double>(l[static_cast<std::size_t>(n - 1)]);
            want += (completed ? (3 * ln + 1) / 4 : ln) / (3 * std::ldexp(1.0, n - 1));
        }
        CHECK(appendix_resistance(l, 4, completed) == doctest::Approx(want));
        const double got = resistance_to_sphere(*g, g->seed(), static_cast<int>(g->level_radius(4))).value;
        CHECK(got == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("counterexample 3") {
    for (int s : {1, 2, 3}) {
        CAPTURE(s);
        const auto g = gen_counterexample3(s);
        const SpeiserValidation v = validate_speiser(g, 4, 6);
        CHECK(v.ok);
        const auto dist = distances(*g, g->seed(), 7);
        std::set<VertexId> images;
        std::size_t positive = 0;
        for (const auto& [x, d] : dist) {
            if (d > 6) continue;
            for (int c = 0; c < 4; ++c) {
                const FaceSize f = corner_face(*g, x, c);
                REQUIRE(!f.infinite);
                CHECK((f.length == 2 || f.length == 4 || f.length == 6));
            }
            if (excess(*g, x) <= Rational(0)) continue;
            ++positive;
            const VertexId y = g->sigma(x);
            CHECK(excess(*g, y) < Rational(0));
            images.insert(y);
        }
        CHECK(images.size() == positive);
    }
}

TEST_CASE("graph JSON export is deterministic and round-trips") {
    const auto g = gen_tr_hexagon();
    const Ball b = ball(*g, g->seed(), 5);
    std::ostringstream a1, a2;
    write_graph_json(a1, *g, b, {3, nullptr, "tr-hexagon"});
    write_graph_json(a2, *g, ball(*g, g->seed(), 5), {3, nullptr, "tr-hexagon"});
    CHECK(a1.str() == a2.str());

    std::istringstream in(a1.str());
    const ImportedGraph im = read_graph_json(in);
    CHECK(im.q == 3);
    CHECK(im.graph.vertex_count() == b.size());
    CHECK(im.graph.edge_count() == b.subgraph.edge_count());
    CHECK(canonical_code(im.graph) == canonical_code(b.subgraph));
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(im.names[i] == std::to_string(b.subgraph.id(i)));

    std::ostringstream b1, b2;
    write_graph_json(b1, im);
    std::istringstream in2(b1.str());
    write_graph_json(b2, read_graph_json(in2));
    CHECK(b1.str() == b2.str());
}

TEST_CASE("malformed graph JSON is rejected") {
    for (const char* text : {"{", "[]", R"({"vertices": 3})", R"({"vertices": [{"id": "0"}], "edges": []})",
                             R"({"vertices": [{"id": "0", "rotation": ["e0"]}], "edges": [{"id": "e0", "ends": ["0"]}]})"}) {
        CAPTURE(text);
        std::istringstream in(text);
        try {
            read_graph_json(in);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::BadArgument);
        }
    }
}
