#pragma once

#include <memory>

#include "speiser/speiser.hpp"

namespace speiser {

// Half-plane lattice Z x Z_{>=0}.  Rotation at (x,y): east, north, west, south.
class HalfPlaneLattice : public GraphOracle {
public:
    std::string name() const override { return "half-plane"; }
    VertexId seed() const override { return encode(0, 0); }
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId v, int corner) const override;
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;

    static VertexId encode(std::int64_t x, std::int64_t y);
    static std::pair<std::int64_t, std::int64_t> decode(VertexId v);
};

// Half-cylinder lattice, the half-plane lattice with x taken modulo n.
class HalfCylinderLattice : public GraphOracle {
public:
    explicit HalfCylinderLattice(int n);
    std::string name() const override { return "half-cylinder-" + std::to_string(n_); }
    VertexId seed() const override { return HalfPlaneLattice::encode(0, 0); }
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId v, int corner) const override;
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;
    int circumference() const { return n_; }

private:
    int n_;
};

std::shared_ptr<const GraphOracle> half_plane_lattice();
std::shared_ptr<const GraphOracle> half_cylinder_lattice(int n);

// Lattice vertex ids: top bit set, then ring, corner and base id.
struct LatticeVertex {
    VertexId base = 0;
    int corner = 0;
    int ring = 0;  // >= 1
};
constexpr int kRingBits = 13;
constexpr int kCornerBits = 4;
constexpr int kBaseBits = 46;
bool is_lattice_vertex(VertexId v);
VertexId encode_lattice(const LatticeVertex& l);
LatticeVertex decode_lattice(VertexId v);

// Speiser graph with half-cylinders grafted onto faces of half-size >= n and
// half-planes onto infinite faces.  Ring-1 lattice vertices sit below the face
// corners; at a base vertex the vertical edge of corner c follows slot c.
class ExtendedOracle : public GraphOracle {
public:
    ExtendedOracle(std::shared_ptr<const GraphOracle> base, int n);
    std::string name() const override;
    VertexId seed() const override { return base_->seed(); }
    bool is_finite() const override { return false; }
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId v, int corner) const override;
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;

    const GraphOracle& base() const { return *base_; }
    int n() const { return n_; }
    bool grafted(VertexId v, int corner) const;

private:
    struct Layout {
        DartList base_darts;
        std::vector<int> pos;         // original slot -> extended slot
        std::vector<int> vertical;    // corner -> extended slot, -1 when not grafted
        std::vector<int> original;    // extended slot -> original slot, or -(corner+1) for verticals
    };
    Layout layout(VertexId v) const;

    std::shared_ptr<const GraphOracle> base_;
    int n_;
};

struct ExtendedGraph {
    SpeiserGraph base;
    int n = 1;
    std::shared_ptr<const ExtendedOracle> oracle;
};

ExtendedGraph extend(const SpeiserGraph& sg, int n);

}  // namespace speiser
