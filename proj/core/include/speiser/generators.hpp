#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "speiser/extension.hpp"
#include "speiser/potential.hpp"
#include "speiser/speiser.hpp"

namespace speiser {

enum class CanonicalTag { LINE_Z, GRID_Z2, TREE_3, HALF_PLANE, SINE, MODULAR_LAMBDA };

CanonicalTag parse_canonical_tag(const std::string& s);
std::shared_ptr<const GraphOracle> gen_canonical(CanonicalTag tag);

// Two-way infinite path.
class LineOracle : public GraphOracle {
public:
    std::string name() const override { return "line-z"; }
    VertexId seed() const override { return encode(0); }
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId, int) const override { return FaceSize::unbounded(); }
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;
    static VertexId encode(std::int64_t x);
    static std::int64_t decode(VertexId v);
};

// Square lattice Z^2, rotation east, north, west, south.
class GridOracle : public GraphOracle {
public:
    std::string name() const override { return "grid-z2"; }
    VertexId seed() const override { return encode(0, 0); }
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId, int) const override { return FaceSize::of_length(4); }
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;
    static VertexId encode(std::int64_t x, std::int64_t y);
    static std::pair<std::int64_t, std::int64_t> decode(VertexId v);
};

// Trivalent tree.  The root lists its three children; every other vertex
// lists its parent and then its two children.
class TrivalentTreeOracle : public GraphOracle {
public:
    explicit TrivalentTreeOracle(std::string name = "tree-3") : name_(std::move(name)) {}
    std::string name() const override { return name_; }
    VertexId seed() const override { return 0; }
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId, int) const override { return FaceSize::unbounded(); }
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;
    static int depth(VertexId v) { return static_cast<int>(v >> 40); }

private:
    std::string name_;
};

// Line complex of sin: a bi-infinite ladder whose squares alternate between
// the critical values -1 and 1, with one logarithmic face above and one below.
class SineOracle : public GraphOracle {
public:
    std::string name() const override { return "sine"; }
    VertexId seed() const override { return encode(0, 0); }
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId v, int corner) const override;
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;
    static VertexId encode(std::int64_t x, int side);
    static std::pair<std::int64_t, int> decode(VertexId v);
};

// Counterexample 1: hexagons along a bi-infinite line, hexagon i carrying a
// binary tree of |i|+1 generations.  Adjacent hexagons share an edge; leaf
// hexagons get an inner chord and an outer 2-gon.
class TrHexagonOracle : public GraphOracle {
public:
    enum class Side { One, Alternate };
    struct Hex {
        int i = 0;
        int d = 0;               // 0 on the line
        std::uint64_t path = 0;  // d-1 bits, 0 = left child
    };
    struct Vertex {
        Hex h;
        int j = 0;  // 2..5 once canonical
    };

    explicit TrHexagonOracle(Side side = Side::One) : side_(side) {}
    std::string name() const override { return side_ == Side::One ? "tr-hexagon" : "tr-hexagon-alternate"; }
    VertexId seed() const override;
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId v, int corner) const override;
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;

    Side side() const { return side_; }
    int child_slot(int i) const;
    int right_slot(int i) const { return 6 - child_slot(i); }
    static bool is_leaf(const Hex& h) { return h.d > 0 && h.d == std::abs(h.i) + 1; }
    static int tr_distance(const Hex& h) { return std::abs(h.i) + h.d; }
    Vertex canon(Hex h, int j) const;
    VertexId id(Hex h, int j) const { return encode(canon(h, j)); }
    static VertexId encode(const Vertex& v);
    static Vertex decode(VertexId v);

private:
    using Nbrs = boost::container::small_vector<Vertex, 3>;
    bool child_at(const Hex& h, int s, Hex& c) const;
    Nbrs nbrs(const Vertex& v) const;
    Side side_;
};

// Exhaustion of the hexagon graph by hexagon layers: a hexagon at tree
// distance t contributes its two vertices nearest the line at layer 2t-1 and
// the other two at layer 2t.
BfsLayers tr_hexagon_layers(const TrHexagonOracle& g, int max_layer, std::size_t budget = default_vertex_budget());

// Comparison graph for counterexample 1: coarse lattice Z x Z_{>=0} above, fine
// lattice Z x Z_{<=0} below, joined at x = +-P_m, with nested bridges on the
// fine boundary standing in for the binary trees.
class GammaStarOracle : public GraphOracle {
public:
    GammaStarOracle();
    std::string name() const override { return "gamma-star"; }
    VertexId seed() const override { return encode_upper(0, 0); }
    DartList darts(VertexId v) const override;
    std::string describe(VertexId v) const override;
    int parity(VertexId v) const override;

    static VertexId encode_upper(std::int64_t m, std::int64_t y);
    static VertexId encode_lower(std::int64_t x, std::int64_t y);
    static bool is_upper(VertexId v);
    static std::pair<std::int64_t, std::int64_t> coords(VertexId v);

    // Join position P_m (negative m mirrored).
    std::int64_t join_position(std::int64_t m) const;
    // Annulus level of a vertex.
    int level(VertexId v) const;
    // Partner of a fine boundary position along its bridge, with the bridge height.
    std::optional<std::pair<std::int64_t, int>> bridge(std::int64_t x) const;
    static constexpr int kMaxLevel = 20;

private:
    bool has_up(std::int64_t x) const;
    std::optional<std::int64_t> join_index(std::int64_t x) const;
    std::vector<std::int64_t> P_;
};

// Block length of a bridge subtree of the given height.
std::int64_t gamma_star_block(int height);

enum class BridgeDensity {
    CountRule,  // size-k bridge gets 1/2^(l-1), l = number of size-k bridges in the annulus
    Height,     // bridge of height h gets bridge_base^h
};

struct GammaStarDensities {
    double fine_base = 0.5;  // fine edges of annulus i get fine_base^i
    double coarse = 1.0;     // coarse lattice edges and join edges
    BridgeDensity bridges = BridgeDensity::CountRule;
    double bridge_base = 0.5;
};

// Annulus i holds the edges whose endpoint levels have maximum i.  Sources are
// its level i-1 vertices, targets its level-i vertices next to level i+1.
DensityAssignment gamma_star_annulus(const GammaStarOracle& g, int i, const GammaStarDensities& dens = {});

// Appendix-A family: the trivalent tree with each level-n edge replaced by a
// path of l_n edges.  When completed, consecutive interior path vertices are
// paired by a parallel edge so that every vertex has degree 3.
class AppendixAOracle : public GraphOracle {
public:
    explicit AppendixAOracle(std::vector<std::int64_t> l, bool completed = true);
    std::string name() const override { return completed_ ? "appendix-a" : "appendix-a-tree"; }
    VertexId seed() const override { return 0; }
    DartList darts(VertexId v) const override;
    std::optional<FaceSize> face_hint(VertexId v, int corner) const override;
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;

    const std::vector<std::int64_t>& lengths() const { return l_; }
    std::int64_t l(int n) const;
    // Combinatorial distance of the depth-n branch vertices from the root.
    std::int64_t level_radius(int n) const;
    int max_depth() const { return static_cast<int>(l_.size()); }
    bool completed() const { return completed_; }

private:
    struct Node {
        int n = 0;       // depth of the tree node the path leads to
        int b = 0;       // root branch
        std::uint64_t path = 0;
        std::int64_t k = 0;  // 0 for the branch vertex, else position on the incoming path
    };
    static VertexId encode(const Node& x);
    static Node decode(VertexId v);
    std::vector<std::int64_t> l_;  // l_[n-1] = l_n
    std::vector<std::int64_t> radius_;
    bool completed_;
};

std::vector<std::int64_t> default_appendix_lengths(int depth);

struct AppendixSeries {
    std::vector<double> log_partial;    // partial sums of log(l_n)/2^n
    std::vector<double> linear_partial; // partial sums of l_n/2^n
};
AppendixSeries appendix_series(const std::vector<std::int64_t>& l);

// Closed-form resistance from the root to the depth-N branch vertices: the
// completed graph, and the plain subdivided tree.
double appendix_resistance(const std::vector<std::int64_t>& l, int depth, bool completed);

// Counterexample 3: pants gadgets on the internal nodes of the tree T, leaf
// discs with s rings ending in a core of two 2-gons.
class Counterexample3Oracle : public GraphOracle {
public:
    explicit Counterexample3Oracle(int s);
    std::string name() const override { return "counterexample3-s" + std::to_string(s_); }
    VertexId seed() const override;
    DartList darts(VertexId v) const override;
    int parity(VertexId v) const override;
    std::string describe(VertexId v) const override;
    int s() const { return s_; }

    struct Node {
        bool hanging = false;
        int n = 0;               // ray index, or the ray vertex a hanging tree hangs from
        int d = 0;               // depth inside the hanging tree (1 = its root)
        std::uint64_t path = 0;  // d-1 bits
    };
    struct Vertex {
        Node node;
        int ring = 0;  // 0 = boundary circle; 1..s inside a leaf disc
        int side = 0;  // 0 = top (a), 1 = bottom (b)
    };
    static bool is_leaf(const Node& x) { return x.hanging ? x.d == x.n : x.n == 0; }
    static VertexId encode(const Vertex& v);
    static Vertex decode(VertexId v);
    // Vertex sigma(w) for a positive-excess vertex w, the matching boundary vertex.
    VertexId sigma(VertexId v) const;

private:
    // parent node and whether x is its left child
    static std::pair<Node, bool> parent(const Node& x);
    static Node left_child(const Node& x);
    static Node right_child(const Node& x);
    int s_;
};

struct FamilyInfo {
    std::string tag;
    std::string summary;
    std::string params;
};
const std::vector<FamilyInfo>& family_catalog();

struct Family {
    std::shared_ptr<const GraphOracle> oracle;
    int q = 0;  // 0 when the family is not a Speiser graph
};

// Builds a family by name with string parameters, e.g. {"s","3"}.
Family make_family(const std::string& tag, const std::map<std::string, std::string>& params = {});

std::shared_ptr<const GraphOracle> gen_tr_hexagon(TrHexagonOracle::Side side = TrHexagonOracle::Side::One);
ExtendedGraph gen_gamma4(TrHexagonOracle::Side side = TrHexagonOracle::Side::One, int radius = 6);
std::shared_ptr<const GammaStarOracle> gen_gamma_star();
std::shared_ptr<const AppendixAOracle> gen_appendixA(const std::vector<std::int64_t>& l, bool completed = true);
std::shared_ptr<const Counterexample3Oracle> gen_counterexample3(int s);

}  // namespace speiser
