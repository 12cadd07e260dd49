#include "speiser/extension.hpp"

namespace speiser {

namespace {

constexpr VertexId kLatticeFlag = VertexId{1} << 63;
constexpr std::int64_t kOffset = std::int64_t{1} << 31;

}  // namespace

VertexId HalfPlaneLattice::encode(std::int64_t x, std::int64_t y) {
    return (static_cast<VertexId>(x + kOffset) << 32) | static_cast<VertexId>(y);
}

std::pair<std::int64_t, std::int64_t> HalfPlaneLattice::decode(VertexId v) {
    return {static_cast<std::int64_t>(v >> 32) - kOffset, static_cast<std::int64_t>(v & 0xffffffffu)};
}

DartList HalfPlaneLattice::darts(VertexId v) const {
    auto [x, y] = decode(v);
    DartList d;
    d.push_back({encode(x + 1, y), 2});
    d.push_back({encode(x, y + 1), 3});
    d.push_back({encode(x - 1, y), 0});
    if (y > 0) d.push_back({encode(x, y - 1), 1});
    return d;
}

std::optional<FaceSize> HalfPlaneLattice::face_hint(VertexId v, int corner) const {
    auto [x, y] = decode(v);
    (void)x;
    if (y == 0 && corner == 2) return FaceSize::unbounded();
    return FaceSize::of_length(4);
}

int HalfPlaneLattice::parity(VertexId v) const {
    auto [x, y] = decode(v);
    return static_cast<int>(((x + y) % 2 + 2) % 2);
}

std::string HalfPlaneLattice::describe(VertexId v) const {
    auto [x, y] = decode(v);
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

HalfCylinderLattice::HalfCylinderLattice(int n) : n_(n) {
    if (n < 2) throw Error(ErrorCode::BadCircumference, "half-cylinder needs circumference >= 2, got " + std::to_string(n));
}

DartList HalfCylinderLattice::darts(VertexId v) const {
    auto [x, y] = HalfPlaneLattice::decode(v);
    DartList d;
    d.push_back({HalfPlaneLattice::encode((x + 1) % n_, y), 2});
    d.push_back({HalfPlaneLattice::encode(x, y + 1), 3});
    d.push_back({HalfPlaneLattice::encode((x - 1 + n_) % n_, y), 0});
    if (y > 0) d.push_back({HalfPlaneLattice::encode(x, y - 1), 1});
    return d;
}

std::optional<FaceSize> HalfCylinderLattice::face_hint(VertexId v, int corner) const {
    auto [x, y] = HalfPlaneLattice::decode(v);
    (void)x;
    if (y == 0 && corner == 2) return FaceSize::of_length(n_);
    return FaceSize::of_length(4);
}

int HalfCylinderLattice::parity(VertexId v) const {
    if (n_ % 2) return -1;
    auto [x, y] = HalfPlaneLattice::decode(v);
    return static_cast<int>((x + y) % 2);
}

std::string HalfCylinderLattice::describe(VertexId v) const {
    auto [x, y] = HalfPlaneLattice::decode(v);
    return "(" + std::to_string(x) + " mod " + std::to_string(n_) + "," + std::to_string(y) + ")";
}

std::shared_ptr<const GraphOracle> half_plane_lattice() { return std::make_shared<HalfPlaneLattice>(); }
std::shared_ptr<const GraphOracle> half_cylinder_lattice(int n) { return std::make_shared<HalfCylinderLattice>(n); }

bool is_lattice_vertex(VertexId v) { return (v & kLatticeFlag) != 0; }

VertexId encode_lattice(const LatticeVertex& l) {
    if (l.base >> kBaseBits) throw Error(ErrorCode::BadArgument, "base id too large for lattice encoding");
    if (l.ring < 1 || l.ring >= (1 << kRingBits)) throw Error(ErrorCode::OracleDivergence, "lattice ring out of range");
    if (l.corner < 0 || l.corner >= (1 << kCornerBits)) throw Error(ErrorCode::BadArgument, "corner out of range");
    return kLatticeFlag | (static_cast<VertexId>(l.ring) << (kBaseBits + kCornerBits)) |
           (static_cast<VertexId>(l.corner) << kBaseBits) | l.base;
}

LatticeVertex decode_lattice(VertexId v) {
    LatticeVertex l;
    l.base = v & ((VertexId{1} << kBaseBits) - 1);
    l.corner = static_cast<int>((v >> kBaseBits) & ((1u << kCornerBits) - 1));
    l.ring = static_cast<int>((v >> (kBaseBits + kCornerBits)) & ((1u << kRingBits) - 1));
    return l;
}

ExtendedOracle::ExtendedOracle(std::shared_ptr<const GraphOracle> base, int n) : base_(std::move(base)), n_(n) {
    if (!base_) throw Error(ErrorCode::NotValidated, "no base graph");
    if (n < 1) throw Error(ErrorCode::BadArgument, "extension parameter must be >= 1");
}

std::string ExtendedOracle::name() const { return base_->name() + "-ext" + std::to_string(n_); }

bool ExtendedOracle::grafted(VertexId v, int corner) const {
    FaceSize f = corner_face(*base_, v, corner);
    return f.infinite || f.length >= 2 * n_;
}

ExtendedOracle::Layout ExtendedOracle::layout(VertexId v) const {
    Layout l;
    l.base_darts = base_->darts(v);
    int deg = static_cast<int>(l.base_darts.size());
    l.pos.assign(static_cast<std::size_t>(deg), 0);
    l.vertical.assign(static_cast<std::size_t>(deg), -1);
    int k = 0;
    for (int s = 0; s < deg; ++s) {
        l.pos[static_cast<std::size_t>(s)] = k++;
        l.original.push_back(s);
        if (grafted(v, s)) {
            l.vertical[static_cast<std::size_t>(s)] = k++;
            l.original.push_back(-(s + 1));
        }
    }
    return l;
}

DartList ExtendedOracle::darts(VertexId v) const {
    DartList out;
    if (!is_lattice_vertex(v)) {
        Layout l = layout(v);
        for (int s : l.original) {
            if (s >= 0) {
                const Dart& d = l.base_darts[static_cast<std::size_t>(s)];
                Layout lt = layout(d.to);
                out.push_back({d.to, lt.pos[static_cast<std::size_t>(d.back)]});
            } else {
                out.push_back({encode_lattice({v, -s - 1, 1}), 1});
            }
        }
        return out;
    }
    LatticeVertex lv = decode_lattice(v);
    Corner here{lv.base, lv.corner};
    Corner east = next_corner(*base_, here);
    Corner west = prev_corner(*base_, here);
    out.push_back({encode_lattice({east.v, east.c, lv.ring}), 2});
    if (lv.ring == 1) {
        Layout l = layout(lv.base);
        out.push_back({lv.base, l.vertical[static_cast<std::size_t>(lv.corner)]});
    } else {
        out.push_back({encode_lattice({lv.base, lv.corner, lv.ring - 1}), 3});
    }
    out.push_back({encode_lattice({west.v, west.c, lv.ring}), 0});
    out.push_back({encode_lattice({lv.base, lv.corner, lv.ring + 1}), 1});
    return out;
}

std::optional<FaceSize> ExtendedOracle::face_hint(VertexId v, int corner) const {
    if (is_lattice_vertex(v)) return FaceSize::of_length(4);
    Layout l = layout(v);
    int s = l.original[static_cast<std::size_t>(corner)];
    int next = l.original[(static_cast<std::size_t>(corner) + 1) % l.original.size()];
    if (s < 0 || next < 0) return FaceSize::of_length(4);
    return corner_face(*base_, v, s);
}

int ExtendedOracle::parity(VertexId v) const {
    if (!is_lattice_vertex(v)) return base_->parity(v);
    LatticeVertex lv = decode_lattice(v);
    int p = base_->parity(lv.base);
    if (p < 0) return -1;
    return (p + lv.ring) % 2;
}

std::string ExtendedOracle::describe(VertexId v) const {
    if (!is_lattice_vertex(v)) return base_->describe(v);
    LatticeVertex lv = decode_lattice(v);
    return "ext[" + base_->describe(lv.base) + " corner " + std::to_string(lv.corner) + " ring " +
           std::to_string(lv.ring) + "]";
}

ExtendedGraph extend(const SpeiserGraph& sg, int n) {
    if (!sg.oracle) throw Error(ErrorCode::NotValidated, "extend needs a validated Speiser graph");
    ExtendedGraph out;
    out.base = sg;
    out.n = n;
    out.oracle = std::make_shared<ExtendedOracle>(sg.oracle, n);
    return out;
}

}  // namespace speiser
