#include "speiser/generators.hpp"

namespace speiser {

namespace {

// 46 bits in total, so ids fit the base field of lattice vertex ids.
constexpr int kSideBits = 1, kRingBits3 = 5, kPathBits3 = 28, kDepthBits3 = 5, kRayBits = 6;
constexpr int kRingShift = kSideBits;
constexpr int kPathShift3 = kRingShift + kRingBits3;
constexpr int kDepthShift3 = kPathShift3 + kPathBits3;
constexpr int kRayShift = kDepthShift3 + kDepthBits3;
constexpr int kHangingShift = kRayShift + kRayBits;

}  // namespace

Counterexample3Oracle::Counterexample3Oracle(int s) : s_(s) {
    if (s < 1 || s >= (1 << kRingBits3)) throw Error(ErrorCode::BadArgument, "ring count s must be in [1, 31]");
}

VertexId Counterexample3Oracle::encode(const Vertex& v) {
    const Node& x = v.node;
    if (x.n >= (1 << kRayBits) || x.d > kPathBits3 + 1)
        throw Error(ErrorCode::OracleDivergence, "tree node outside the id range");
    return (static_cast<VertexId>(x.hanging) << kHangingShift) | (static_cast<VertexId>(x.n) << kRayShift) |
           (static_cast<VertexId>(x.d) << kDepthShift3) | (x.path << kPathShift3) |
           (static_cast<VertexId>(v.ring) << kRingShift) | static_cast<VertexId>(v.side);
}

Counterexample3Oracle::Vertex Counterexample3Oracle::decode(VertexId id) {
    Vertex v;
    v.side = static_cast<int>(id & 1u);
    v.ring = static_cast<int>((id >> kRingShift) & ((1u << kRingBits3) - 1));
    v.node.path = (id >> kPathShift3) & ((VertexId{1} << kPathBits3) - 1);
    v.node.d = static_cast<int>((id >> kDepthShift3) & ((1u << kDepthBits3) - 1));
    v.node.n = static_cast<int>((id >> kRayShift) & ((1u << kRayBits) - 1));
    v.node.hanging = ((id >> kHangingShift) & 1u) != 0;
    return v;
}

VertexId Counterexample3Oracle::seed() const { return encode(Vertex{Node{false, 1, 0, 0}, 0, 0}); }

std::pair<Counterexample3Oracle::Node, bool> Counterexample3Oracle::parent(const Node& x) {
    if (!x.hanging) return {Node{false, x.n + 1, 0, 0}, true};
    if (x.d == 1) return {Node{false, x.n, 0, 0}, false};
    return {Node{true, x.n, x.d - 1, x.path >> 1}, (x.path & 1u) == 0};
}

Counterexample3Oracle::Node Counterexample3Oracle::left_child(const Node& x) {
    if (!x.hanging) return Node{false, x.n - 1, 0, 0};
    return Node{true, x.n, x.d + 1, x.path << 1};
}

Counterexample3Oracle::Node Counterexample3Oracle::right_child(const Node& x) {
    if (!x.hanging) return Node{true, x.n, 1, 0};
    return Node{true, x.n, x.d + 1, (x.path << 1) | 1u};
}

// Every circle vertex lists: outward arc, the two circle edges around the
// inward arc.  Top: outward, left, inward, right.  Bottom: outward, right,
// inward, left.  Pants arcs join parent top to left-child top, parent bottom
// to right-child bottom, and left-child bottom to right-child top.
DartList Counterexample3Oracle::darts(VertexId id) const {
    Vertex v = decode(id);
    const Node& x = v.node;
    auto at = [](const Node& n, int ring, int side) { return encode(Vertex{n, ring, side}); };
    DartList out(4);
    if (v.ring == 0) {
        auto [p, is_left] = parent(x);
        if (v.side == 0) out[0] = is_left ? Dart{at(p, 0, 0), 2} : Dart{at(left_child(p), 0, 1), 0};
        else out[0] = is_left ? Dart{at(right_child(p), 0, 0), 0} : Dart{at(p, 0, 1), 2};
    } else {
        out[0] = {at(x, v.ring - 1, v.side), 2};
    }
    out[1] = {at(x, v.ring, 1 - v.side), 3};
    out[3] = {at(x, v.ring, 1 - v.side), 1};
    if (v.ring == 0 && !is_leaf(x)) {
        out[2] = v.side == 0 ? Dart{at(left_child(x), 0, 0), 0} : Dart{at(right_child(x), 0, 1), 0};
    } else if (v.ring < s_) {
        out[2] = {at(x, v.ring + 1, v.side), 0};
    } else {
        out[2] = {at(x, v.ring, 1 - v.side), 2};
    }
    return out;
}

int Counterexample3Oracle::parity(VertexId id) const {
    Vertex v = decode(id);
    int p = v.node.hanging ? v.node.n + v.node.d : v.node.n;
    return (p + v.ring + v.side) % 2;
}

std::string Counterexample3Oracle::describe(VertexId id) const {
    Vertex v = decode(id);
    std::string s = v.node.hanging ? "T(" + std::to_string(v.node.n) + ",d" + std::to_string(v.node.d) + ","
                                   : "v(" + std::to_string(v.node.n);
    if (v.node.hanging)
        for (int k = v.node.d - 2; k >= 0; --k) s += ((v.node.path >> k) & 1u) ? 'R' : 'L';
    s += ")";
    s += v.side ? ".b" : ".a";
    return s + std::to_string(v.ring);
}

VertexId Counterexample3Oracle::sigma(VertexId id) const {
    Vertex v = decode(id);
    if (!is_leaf(v.node) || v.ring != s_) throw Error(ErrorCode::BadArgument, "sigma is defined on core vertices only");
    v.ring = 0;
    return encode(v);
}

std::shared_ptr<const Counterexample3Oracle> gen_counterexample3(int s) {
    return std::make_shared<Counterexample3Oracle>(s);
}

}  // namespace speiser
