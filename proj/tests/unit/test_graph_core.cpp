#include <algorithm>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "speiser/extension.hpp"
#include "speiser/generators.hpp"
#include "speiser/oracle.hpp"
#include "speiser/rotation_graph.hpp"

using namespace speiser;

namespace {

std::vector<std::size_t> face_lengths(const RotationGraph& g) {
    std::vector<std::size_t> out;
    for (const auto& f : trace_faces(g)) out.push_back(f.length());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> degrees(const RotationGraph& g) {
    std::vector<int> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) out.push_back(g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

// Independent face count: orbits of h -> rotation successor of twin(h), by hand.
std::size_t count_orbits(const RotationGraph& g) {
    std::vector<char> seen(g.half_edge_count(), 0);
    std::size_t n = 0;
    for (std::size_t h0 = 0; h0 < g.half_edge_count(); ++h0) {
        if (seen[h0]) continue;
        ++n;
        for (std::size_t h = h0; !seen[h];) {
            seen[h] = 1;
            const std::size_t t = g.twin(h);
            const std::size_t v = g.vertex_of(t);
            const int s = (g.slot_of(t) + 1) % g.degree(v);
            h = g.half_edge(v, s);
        }
    }
    return n;
}

std::set<VertexId> neighbours(const GraphOracle& g, VertexId v) {
    std::set<VertexId> out;
    for (const Dart& d : g.darts(v)) out.insert(d.to);
    return out;
}

}  // namespace

TEST_CASE("single edge has one face of length two") {
    const RotationGraph g = fixtures::single_edge();
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(face_lengths(g) == std::vector<std::size_t>{2});
    CHECK(euler_characteristic(g) == 2);
}

TEST_CASE("six-cycle has two hexagonal faces and a two-vertex dual") {
    const RotationGraph g = fixtures::cycle(6);
    CHECK(face_lengths(g) == std::vector<std::size_t>{6, 6});
    CHECK(count_orbits(g) == 2);
    CHECK(euler_characteristic(g) == 2);
    const RotationGraph d = dual(g);
    CHECK(d.vertex_count() == 2);
    CHECK(d.edge_count() == 6);
    CHECK(degrees(d) == std::vector<int>{6, 6});
}

TEST_CASE("theta graph has three two-gons and a triangle dual") {
    const RotationGraph g = fixtures::theta();
    CHECK(face_lengths(g) == std::vector<std::size_t>{2, 2, 2});
    CHECK(count_orbits(g) == 3);
    const RotationGraph d = dual(g);
    CHECK(d.vertex_count() == 3);
    CHECK(d.edge_count() == 3);
    CHECK(degrees(d) == std::vector<int>{2, 2, 2});
    CHECK(face_lengths(d) == std::vector<std::size_t>{3, 3});
    CHECK(canonical_code(d) == canonical_code(fixtures::cycle(3)));
}

TEST_CASE("tetrahedron is self-dual") {
    const RotationGraph g = fixtures::tetrahedron();
    CHECK(face_lengths(g) == std::vector<std::size_t>{3, 3, 3, 3});
    CHECK(euler_characteristic(g) == 2);
    const RotationGraph d = dual(g);
    CHECK(degrees(d) == std::vector<int>{3, 3, 3, 3});
    CHECK(canonical_code(d) == canonical_code(g));
    CHECK(canonical_code(dual(d)) == canonical_code(g));
}

TEST_CASE("twin and rotation are consistent") {
    for (const RotationGraph& g : {fixtures::theta(), fixtures::tetrahedron(), fixtures::cycle(5)}) {
        for (std::size_t h = 0; h < g.half_edge_count(); ++h) {
            CHECK(g.twin(g.twin(h)) == h);
            CHECK(g.twin(h) != h);
            CHECK(g.edge_of(h) == g.edge_of(g.twin(h)));
            CHECK(g.head(h) == g.vertex_of(g.twin(h)));
        }
        CHECK(face_index(g, trace_faces(g)).size() == g.half_edge_count());
        CHECK(component_count(g) == 1);
    }
}

TEST_CASE("canonical code ignores the input order but not the orientation") {
    const RotationGraph a = fixtures::tetrahedron();
    const RotationGraph b = build_rotation_graph(
        {{"3", {"c", "e", "f"}}, {"2", {"b", "d", "e"}}, {"1", {"a", "f", "d"}}, {"0", {"b", "c", "a"}}},
        {{"f", {"3", "1"}}, {"e", {"2", "3"}}, {"d", {"1", "2"}}, {"c", {"0", "3"}}, {"b", {"0", "2"}}, {"a", {"0", "1"}}});
    CHECK(canonical_code(a) == canonical_code(b));
    const RotationGraph c = build_rotation_graph({{"u", {"a", "b", "c"}}, {"v", {"a", "b", "c"}}},
                                                 {{"a", {"u", "v"}}, {"b", {"u", "v"}}, {"c", {"u", "v"}}});
    CHECK(count_orbits(c) == 1);
    CHECK(canonical_code(c) != canonical_code(fixtures::theta()));
}

TEST_CASE("malformed rotation systems are rejected") {
    CHECK_THROWS_AS(build_rotation_graph({{"u", {"a"}}, {"v", {}}}, {{"a", {"u", "v"}}}), Error);
    CHECK_THROWS_AS(build_rotation_graph({{"u", {"a", "a"}}, {"v", {"a"}}}, {{"a", {"u", "v"}}}), Error);
    CHECK_THROWS_AS(build_rotation_graph({{"u", {"a"}}}, {{"a", {"u", "u"}}}), Error);
}

TEST_CASE("dual of a graph with an infinite face throws") {
    const Ball b = ball(*make_family("grid-z2").oracle, GridOracle::encode(0, 0), 2);
    CHECK_THROWS_AS(dual(b.subgraph, b.faces), Error);
}

TEST_CASE("ball of radius zero is the center alone") {
    const auto g = make_family("tree-3").oracle;
    const Ball b = ball(*g, g->seed(), 0);
    CHECK(b.size() == 1);
    CHECK(b.subgraph.edge_count() == 0);
    CHECK(b.boundary_vertices() == std::vector<std::size_t>{0});
}

TEST_CASE("half-plane lattice balls") {
    const auto g = half_plane_lattice();
    const Ball b1 = ball(*g, HalfPlaneLattice::encode(0, 0), 1);
    CHECK(b1.size() == 4);
    CHECK(b1.subgraph.edge_count() == 3);
    // lattice points with |x| + y <= r and y >= 0
    for (int r = 0; r <= 6; ++r) CHECK(ball(*g, HalfPlaneLattice::encode(0, 0), r).size() == std::size_t((r + 1) * (r + 1)));
}

TEST_CASE("trivalent tree ball of radius three") {
    const auto g = make_family("tree-3").oracle;
    CHECK(ball(*g, g->seed(), 3).size() == 22);
    CHECK(bfs_layers(*g, g->seed(), 3).count_within(2) == 10);
}

TEST_CASE("half-cylinder wraps around") {
    const auto g = half_cylinder_lattice(6);
    const std::set<VertexId> want{HalfPlaneLattice::encode(4, 0), HalfPlaneLattice::encode(0, 0),
                                  HalfPlaneLattice::encode(5, 1)};
    CHECK(neighbours(*g, HalfPlaneLattice::encode(5, 0)) == want);
}

TEST_CASE("grid ball has one truncated outer face and square inner faces") {
    const Ball b = ball(*make_family("grid-z2").oracle, GridOracle::encode(0, 0), 3);
    CHECK(b.size() == 25);
    std::size_t truncated = 0;
    for (const auto& f : b.faces) {
        if (f.truncated) ++truncated;
        else CHECK(f.length() == 4);
    }
    CHECK(truncated == 1);
}

TEST_CASE("face walks agree with trace_faces on a finite oracle") {
    const auto g = std::make_shared<FiniteOracle>(fixtures::tetrahedron());
    for (std::size_t v = 0; v < 4; ++v)
        for (int c = 0; c < 3; ++c) {
            const auto f = walk_face(*g, g->graph().id(v), c, 100);
            REQUIRE(f.has_value());
            CHECK(!f->infinite);
            CHECK(f->length == 3);
            const Corner k{g->graph().id(v), c};
            CHECK(prev_corner(*g, next_corner(*g, k)) == k);
        }
}
