#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "speiser/rotation_graph.hpp"
#include "speiser/types.hpp"

namespace speiser {

struct FaceSize {
    bool infinite = false;
    std::int64_t length = 0;  // number of boundary edges when finite
    static FaceSize of_length(std::int64_t n) { return {false, n}; }
    static FaceSize unbounded() { return {true, 0}; }
};

// Lazy access to a (possibly infinite) planar graph.  darts(v) lists the
// half-edges at v in counter-clockwise order.  Corner c of v lies between
// slots c and c+1; its face contains the dart in slot c+1.
class GraphOracle {
public:
    virtual ~GraphOracle() = default;
    virtual std::string name() const = 0;
    virtual VertexId seed() const = 0;
    virtual bool is_finite() const { return false; }
    virtual DartList darts(VertexId v) const = 0;
    // Known face size for corner c of v, or nothing to fall back on a face walk.
    virtual std::optional<FaceSize> face_hint(VertexId v, int corner) const;
    // 0 for a cross vertex, 1 for a circle vertex, -1 when the family has no parity.
    virtual int parity(VertexId v) const;
    virtual std::string describe(VertexId v) const;
};

std::size_t default_vertex_budget();
std::size_t default_walk_budget();

// Next corner along the same face, and the previous one.
struct Corner {
    VertexId v = 0;
    int c = 0;
    bool operator==(const Corner&) const = default;
};
Corner next_corner(const GraphOracle& g, Corner k);
Corner prev_corner(const GraphOracle& g, Corner k);

// Face walk from a corner without consulting hints; nothing if it does not
// close within max_len darts.
std::optional<FaceSize> walk_face(const GraphOracle& g, VertexId v, int corner, std::size_t max_len);

// Resolves the face at a corner: oracle hint, then a face walk of at most
// walk_budget darts.  Throws UnknownFaceSize when neither succeeds.
FaceSize corner_face(const GraphOracle& g, VertexId v, int corner, std::size_t walk_budget = default_walk_budget());

// Vertices within the radius in discovery order, split into distance layers.
struct BfsLayers {
    VertexId center = 0;
    int radius = 0;
    std::vector<VertexId> vertices;
    std::vector<std::size_t> layer_start;  // layer r occupies [layer_start[r], layer_start[r+1])
    std::size_t count_within(int r) const { return layer_start[static_cast<std::size_t>(r) + 1]; }
};
BfsLayers bfs_layers(const GraphOracle& g, VertexId center, int radius, std::size_t budget = default_vertex_budget());

struct Ball {
    VertexId center = 0;
    int radius = 0;
    RotationGraph subgraph;             // induced, ids in discovery order
    std::vector<int> dist;              // by local index
    std::vector<int> full_degree;       // degree in the whole graph
    std::vector<char> boundary;         // deg_ball < deg_graph
    std::vector<FaceRecord> faces;      // traced in the subgraph, truncated ones flagged
    std::unordered_map<VertexId, std::size_t> index;

    std::size_t size() const { return subgraph.vertex_count(); }
    std::vector<std::size_t> boundary_vertices() const;
};

Ball ball(const GraphOracle& g, VertexId center, int radius, std::size_t budget = default_vertex_budget());

// Oracle view of a finite rotation graph; vertex ids are the graph's ids.
class FiniteOracle : public GraphOracle {
public:
    explicit FiniteOracle(RotationGraph g, std::string name = "finite", std::vector<int> parity = {});
    std::string name() const override { return name_; }
    VertexId seed() const override { return g_.vertex_count() ? g_.id(0) : 0; }
    bool is_finite() const override { return true; }
    DartList darts(VertexId v) const override;
    int parity(VertexId v) const override;
    const RotationGraph& graph() const { return g_; }
    std::size_t local(VertexId v) const;

private:
    RotationGraph g_;
    std::string name_;
    std::vector<int> parity_;
    std::unordered_map<VertexId, std::size_t> index_;
};

}  // namespace speiser
