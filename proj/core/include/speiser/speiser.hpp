#pragma once

#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "speiser/oracle.hpp"

namespace speiser {

struct Violation {
    ErrorCode code;
    VertexId vertex = 0;
    std::string detail;
};

struct SpeiserGraph {
    std::shared_ptr<const GraphOracle> oracle;
    int q = 0;
    VertexId center = 0;
    int checked_radius = 0;
    std::unordered_map<VertexId, int> parity;  // on the validated region
};

struct SpeiserValidation {
    bool ok = false;
    std::vector<Violation> violations;
    std::size_t vertices_checked = 0;
    std::size_t faces_checked = 0;
    std::size_t infinite_corners = 0;
    std::optional<SpeiserGraph> graph;
};

// Checks degree q, bipartiteness and even finite faces on the ball of the
// given radius (the whole graph when the oracle is finite).  q < 3 throws BadDegree.
SpeiserValidation validate_speiser(std::shared_ptr<const GraphOracle> g, int q, int radius,
                                   std::optional<VertexId> center = std::nullopt);
SpeiserGraph validate_speiser_or_throw(std::shared_ptr<const GraphOracle> g, int q, int radius,
                                       std::optional<VertexId> center = std::nullopt);

struct Labeling {
    int q = 0;
    // label index 0..q-1 (a_1..a_q) of corner c at each vertex
    std::unordered_map<VertexId, std::vector<int>> corner_label;
    // label of the edge in slot s at each vertex; -1 when a side is unlabeled
    std::unordered_map<VertexId, std::vector<int>> edge_label;
    std::size_t face_classes = 0;  // independently labeled components; 1 when the region is connected
};

// Propagates labels from an anchor corner: counter-clockwise around a cross
// vertex labels increase by one, around a circle vertex they decrease.
Labeling label_faces(const GraphOracle& g, const std::vector<VertexId>& region, int q, Corner anchor,
                     int anchor_label = 0, const std::unordered_map<VertexId, int>* parity = nullptr);

Rational excess(const GraphOracle& g, VertexId v, std::size_t walk_budget = default_walk_budget());

struct MeanExcessRecord {
    int radius = 0;
    std::size_t vertex_count = 0;
    Rational sum;
    Rational average;
};

struct MeanExcessProfile {
    VertexId center = 0;
    int window = 4;
    std::vector<MeanExcessRecord> records;
    double limsup_estimate() const;
    double liminf_estimate() const;
    // Averages of the radii congruent to j modulo the window, in increasing radius.
    std::vector<std::pair<int, Rational>> subsequence(int j) const;
};

MeanExcessProfile mean_excess_profile(const GraphOracle& g, VertexId center, int max_radius, int window = 4,
                                      std::size_t budget = default_vertex_budget());

// Mean-excess profile over an arbitrary nested exhaustion given as layers.
MeanExcessProfile mean_excess_over_layers(const GraphOracle& g, const BfsLayers& layers, int window = 4);

void write_profile_csv(std::ostream& out, const MeanExcessProfile& p);

struct ExcessBound {
    Rational sum;
    std::size_t vertex_count = 0;
    bool bound_ok = false;
};
ExcessBound ball_excess_bound(const GraphOracle& g, VertexId center, int radius,
                              std::size_t budget = default_vertex_budget());

}  // namespace speiser
