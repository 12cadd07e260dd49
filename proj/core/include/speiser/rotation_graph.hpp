#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "speiser/types.hpp"

namespace speiser {

struct EdgeSpec {
    std::string id;
    std::string ends[2];
};

struct VertexSpec {
    std::string id;
    std::vector<std::string> rotation;  // incident edge ids, counter-clockwise
};

// Finite planar multigraph with a rotation system.  Half-edges of vertex v
// occupy slots first(v) .. first(v)+degree(v)-1 in counter-clockwise order.
class RotationGraph {
public:
    RotationGraph() = default;

    // darts[v] lists (local target index, back slot) in counter-clockwise order.
    static RotationGraph from_darts(std::vector<VertexId> ids,
                                    const std::vector<std::vector<std::pair<int, int>>>& darts);

    std::size_t vertex_count() const { return ids_.size(); }
    std::size_t half_edge_count() const { return he_vertex_.size(); }
    std::size_t edge_count() const { return he_vertex_.size() / 2; }

    VertexId id(std::size_t v) const { return ids_[v]; }
    const std::vector<VertexId>& ids() const { return ids_; }
    int degree(std::size_t v) const { return static_cast<int>(first_[v + 1] - first_[v]); }
    std::size_t half_edge(std::size_t v, int slot) const { return first_[v] + static_cast<std::size_t>(slot); }

    std::size_t vertex_of(std::size_t h) const { return he_vertex_[h]; }
    int slot_of(std::size_t h) const { return static_cast<int>(h - first_[he_vertex_[h]]); }
    std::size_t twin(std::size_t h) const { return he_twin_[h]; }
    std::size_t edge_of(std::size_t h) const { return he_edge_[h]; }
    std::size_t head(std::size_t h) const { return he_vertex_[he_twin_[h]]; }
    std::size_t rotation_next(std::size_t h) const;
    // Face successor: rotation successor of the twin.
    std::size_t face_next(std::size_t h) const { return rotation_next(he_twin_[h]); }

    bool operator==(const RotationGraph&) const = default;

private:
    friend RotationGraph build_rotation_graph(const std::vector<VertexSpec>&, const std::vector<EdgeSpec>&);
    void finalize_edges();

    std::vector<VertexId> ids_;
    std::vector<std::size_t> first_{0};
    std::vector<std::size_t> he_vertex_;
    std::vector<std::size_t> he_twin_;
    std::vector<std::size_t> he_edge_;
};

// Validates vertex rotations against the edge list.  Vertex ids are minted
// in input order.  Throws LoopEdge, AsymmetricAdjacency, RotationNotCyclic.
RotationGraph build_rotation_graph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges);

struct FaceRecord {
    std::size_t id = 0;
    std::vector<std::size_t> boundary;  // half-edges in face order
    bool infinite = false;
    bool truncated = false;
    std::size_t length() const { return boundary.size(); }
    // Half-size k for a face with 2k edges; meaningless when infinite.
    Rational half_size() const { return Rational(static_cast<std::int64_t>(boundary.size()), 2); }
};

std::vector<FaceRecord> trace_faces(const RotationGraph& g);

// Map from half-edge to the index of its face in trace_faces order.
std::vector<std::size_t> face_index(const RotationGraph& g, const std::vector<FaceRecord>& faces);

// |V| - |E| + |F| summed over connected components, minus 2 per extra component.
long euler_characteristic(const RotationGraph& g);

std::size_t component_count(const RotationGraph& g);

// Dual graph: one vertex per face, one edge crossing each primal edge.
// Throws InfiniteFace if any face is flagged infinite or truncated.
RotationGraph dual(const RotationGraph& g, const std::vector<FaceRecord>& faces);
RotationGraph dual(const RotationGraph& g);

// Isomorphism-invariant code of a connected rotation graph (orientation preserving).
std::vector<std::size_t> canonical_code(const RotationGraph& g);

}  // namespace speiser
