#include "speiser/generators.hpp"

#include <algorithm>
#include <bit>

namespace speiser {

namespace {

constexpr int kLineOffset = 512;
constexpr int kPathBits = 33;

}  // namespace

int TrHexagonOracle::child_slot(int i) const {
    if (side_ == Side::One) return 2;
    return (((i % 2) + 2) % 2) == 0 ? 4 : 2;
}

// Vertices 0 and 1 of a hexagon belong to the hexagon sharing edge 0 with it.
TrHexagonOracle::Vertex TrHexagonOracle::canon(Hex h, int j) const {
    j = ((j % 6) + 6) % 6;
    if (j >= 2) return {h, j};
    int slot;
    if (h.d == 0) {
        slot = right_slot(h.i - 1);
        h = Hex{h.i - 1, 0, 0};
    } else if (h.d == 1) {
        slot = child_slot(h.i);
        h = Hex{h.i, 0, 0};
    } else {
        slot = (h.path & 1u) ? 4 : 2;
        h = Hex{h.i, h.d - 1, h.path >> 1};
    }
    return {h, j == 0 ? slot + 1 : slot};
}

VertexId TrHexagonOracle::encode(const Vertex& v) {
    if (std::abs(v.h.i) >= kLineOffset || v.h.d > kPathBits)
        throw Error(ErrorCode::OracleDivergence, "hexagon outside the id range");
    std::uint64_t p = v.h.d == 0 ? 0 : ((std::uint64_t{1} << (v.h.d - 1)) | v.h.path);
    return (static_cast<VertexId>(v.h.i + kLineOffset) << (kPathBits + 3)) | (p << 3) | static_cast<VertexId>(v.j);
}

TrHexagonOracle::Vertex TrHexagonOracle::decode(VertexId id) {
    Vertex v;
    v.j = static_cast<int>(id & 7u);
    std::uint64_t p = (id >> 3) & ((std::uint64_t{1} << kPathBits) - 1);
    v.h.i = static_cast<int>(id >> (kPathBits + 3)) - kLineOffset;
    v.h.d = p == 0 ? 0 : static_cast<int>(std::bit_width(p));
    v.h.path = p == 0 ? 0 : p ^ (std::uint64_t{1} << (v.h.d - 1));
    return v;
}

VertexId TrHexagonOracle::seed() const { return id(Hex{0, 0, 0}, child_slot(0)); }

bool TrHexagonOracle::child_at(const Hex& h, int s, Hex& c) const {
    if (h.d == 0) {
        if (s == child_slot(h.i)) {
            c = Hex{h.i, 1, 0};
            return true;
        }
        if (s == right_slot(h.i)) {
            c = Hex{h.i + 1, 0, 0};
            return true;
        }
        return false;
    }
    if (is_leaf(h)) return false;
    if (s == 2) {
        c = Hex{h.i, h.d + 1, h.path << 1};
        return true;
    }
    if (s == 4) {
        c = Hex{h.i, h.d + 1, (h.path << 1) | 1u};
        return true;
    }
    return false;
}

// Rotation of a canonical vertex.  A vertex starting a shared edge s meets the
// neighbour's vertex 2; the vertex ending it meets the neighbour's vertex 5.
TrHexagonOracle::Nbrs TrHexagonOracle::nbrs(const Vertex& v) const {
    const Hex& h = v.h;
    int j = v.j;
    if (is_leaf(h)) {
        switch (j) {
            case 2: return {canon(h, 3), canon(h, 5), canon(h, 1)};
            case 5: return {canon(h, 0), canon(h, 2), canon(h, 4)};
            case 3: return {canon(h, 4), canon(h, 2), canon(h, 4)};
            case 4: return {canon(h, 5), canon(h, 3), canon(h, 3)};
        }
    }
    Hex c;
    if (child_at(h, j, c)) return {canon(h, j + 1), canon(h, j - 1), canon(c, 2)};
    if (child_at(h, j - 1, c)) return {canon(h, j + 1), canon(h, j - 1), canon(c, 5)};
    throw Error(ErrorCode::BadArgument, "not a canonical hexagon vertex: " + describe(encode(v)));
}

DartList TrHexagonOracle::darts(VertexId id) const {
    Vertex v = decode(id);
    Nbrs nv = nbrs(v);
    DartList out;
    for (int s = 0; s < 3; ++s) {
        VertexId w = encode(nv[static_cast<std::size_t>(s)]);
        // the m-th parallel edge from v to w pairs with the m-th one back
        int m = 0;
        for (int a = 0; a < s; ++a)
            if (encode(nv[static_cast<std::size_t>(a)]) == w) ++m;
        Nbrs nw = nbrs(nv[static_cast<std::size_t>(s)]);
        int back = -1;
        for (int a = 0, seen = 0; a < 3; ++a) {
            if (encode(nw[static_cast<std::size_t>(a)]) != id) continue;
            if (seen++ == m) {
                back = a;
                break;
            }
        }
        if (back < 0) throw Error(ErrorCode::AsymmetricAdjacency, "hexagon rotation not symmetric at " + describe(id));
        out.push_back({w, back});
    }
    return out;
}

// Finite faces have at most six edges, so a walk that does not close within
// twelve darts runs along one of the two logarithmic faces.
std::optional<FaceSize> TrHexagonOracle::face_hint(VertexId v, int corner) const {
    if (auto f = walk_face(*this, v, corner, 12)) return f;
    return FaceSize::unbounded();
}

int TrHexagonOracle::parity(VertexId id) const {
    Vertex v = decode(id);
    return ((v.h.i + v.h.d + v.j) % 2 + 2) % 2;
}

std::string TrHexagonOracle::describe(VertexId id) const {
    Vertex v = decode(id);
    std::string s = "hex(" + std::to_string(v.h.i);
    if (v.h.d > 0) {
        s += ",";
        for (int k = v.h.d - 2; k >= 0; --k) s += ((v.h.path >> k) & 1u) ? 'R' : 'L';
        s += "d" + std::to_string(v.h.d);
    }
    return s + ")." + std::to_string(v.j);
}

BfsLayers tr_hexagon_layers(const TrHexagonOracle& g, int max_layer, std::size_t budget) {
    using Hex = TrHexagonOracle::Hex;
    std::vector<std::vector<VertexId>> layers(static_cast<std::size_t>(max_layer) + 1);
    std::size_t total = 0;
    auto put = [&](int layer, const Hex& h, int j) {
        if (layer > max_layer) return;
        layers[static_cast<std::size_t>(layer)].push_back(g.id(h, j));
        if (++total > budget) throw Error(ErrorCode::OracleDivergence, "hexagon layers exceed vertex budget");
    };
    const int tmax = (max_layer + 1) / 2;
    // hexagon 0: its child edge and both line edges
    {
        Hex h0{0, 0, 0};
        int c = g.child_slot(0), r = g.right_slot(0);
        put(0, h0, c);
        put(1, h0, c + 1);
        put(0, h0, 0);
        put(1, h0, 1);
        put(0, h0, r);
        put(1, h0, r + 1);
    }
    for (int i = -tmax; i <= tmax; ++i) {
        int a = std::abs(i);
        Hex line{i, 0, 0};
        if (i != 0) {
            int c = g.child_slot(i);
            put(2 * a - 1, line, c);
            put(2 * a, line, c + 1);
            int o = i > 0 ? g.right_slot(i) : 0;
            put(2 * a - 1, line, o);
            put(2 * a, line, o + 1);
        }
        for (int d = 1; d <= a + 1 && a + d <= tmax; ++d) {
            int t = a + d;
            for (std::uint64_t p = 0; p < (std::uint64_t{1} << (d - 1)); ++p) {
                Hex h{i, d, p};
                put(2 * t - 1, h, 2);
                put(2 * t - 1, h, 5);
                put(2 * t, h, 3);
                put(2 * t, h, 4);
            }
        }
    }
    BfsLayers out;
    out.center = g.seed();
    out.radius = max_layer;
    out.layer_start.push_back(0);
    for (auto& l : layers) {
        out.vertices.insert(out.vertices.end(), l.begin(), l.end());
        out.layer_start.push_back(out.vertices.size());
    }
    return out;
}

std::shared_ptr<const GraphOracle> gen_tr_hexagon(TrHexagonOracle::Side side) {
    return std::make_shared<TrHexagonOracle>(side);
}

ExtendedGraph gen_gamma4(TrHexagonOracle::Side side, int radius) {
    SpeiserGraph sg = validate_speiser_or_throw(gen_tr_hexagon(side), 3, radius);
    return extend(sg, 4);
}

}  // namespace speiser
