#pragma once

#include <memory>
#include <string>
#include <vector>

#include "speiser/oracle.hpp"
#include "speiser/rotation_graph.hpp"

namespace fixtures {

using speiser::EdgeSpec;
using speiser::RotationGraph;
using speiser::VertexSpec;
using speiser::build_rotation_graph;

inline RotationGraph single_edge() {
    return build_rotation_graph({{"u", {"a"}}, {"v", {"a"}}}, {{"a", {"u", "v"}}});
}

inline RotationGraph cycle(int n) {
    std::vector<VertexSpec> vs;
    std::vector<EdgeSpec> es;
    for (int i = 0; i < n; ++i) {
        const std::string prev = "e" + std::to_string((i + n - 1) % n);
        const std::string next = "e" + std::to_string(i);
        vs.push_back({"v" + std::to_string(i), {prev, next}});
        es.push_back({next, {"v" + std::to_string(i), "v" + std::to_string((i + 1) % n)}});
    }
    return build_rotation_graph(vs, es);
}

inline RotationGraph path(int edges) {
    std::vector<VertexSpec> vs;
    std::vector<EdgeSpec> es;
    for (int i = 0; i <= edges; ++i) {
        std::vector<std::string> rot;
        if (i > 0) rot.push_back("e" + std::to_string(i - 1));
        if (i < edges) rot.push_back("e" + std::to_string(i));
        vs.push_back({"v" + std::to_string(i), rot});
        if (i < edges) es.push_back({"e" + std::to_string(i), {"v" + std::to_string(i), "v" + std::to_string(i + 1)}});
    }
    return build_rotation_graph(vs, es);
}

// Two vertices joined by three edges; the rotation at v is reversed so the
// embedding is planar.
inline RotationGraph theta() {
    return build_rotation_graph({{"u", {"a", "b", "c"}}, {"v", {"a", "c", "b"}}},
                                {{"a", {"u", "v"}}, {"b", {"u", "v"}}, {"c", {"u", "v"}}});
}

// Vertex 0 in the middle, 1, 2, 3 counter-clockwise around it.
inline RotationGraph tetrahedron() {
    return build_rotation_graph({{"0", {"a", "b", "c"}}, {"1", {"d", "a", "f"}}, {"2", {"e", "b", "d"}}, {"3", {"f", "c", "e"}}},
                                {{"a", {"0", "1"}}, {"b", {"0", "2"}}, {"c", {"0", "3"}},
                                 {"d", {"1", "2"}}, {"e", {"2", "3"}}, {"f", {"3", "1"}}});
}

// Theta graph with u a cross vertex and v a circle vertex.
inline std::shared_ptr<const speiser::GraphOracle> theta_oracle() {
    return std::make_shared<speiser::FiniteOracle>(theta(), "theta", std::vector<int>{0, 1});
}

}  // namespace fixtures
