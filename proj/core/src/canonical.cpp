#include "speiser/generators.hpp"

#include <cstdlib>

namespace speiser {

namespace {

constexpr std::int64_t kOffset = std::int64_t{1} << 31;
constexpr std::int64_t kGridOffset = std::int64_t{1} << 22;

}  // namespace

CanonicalTag parse_canonical_tag(const std::string& s) {
    static const std::map<std::string, CanonicalTag> tags = {
        {"LINE_Z", CanonicalTag::LINE_Z},       {"line-z", CanonicalTag::LINE_Z},
        {"GRID_Z2", CanonicalTag::GRID_Z2},     {"grid-z2", CanonicalTag::GRID_Z2},
        {"TREE_3", CanonicalTag::TREE_3},       {"tree-3", CanonicalTag::TREE_3},
        {"HALF_PLANE", CanonicalTag::HALF_PLANE}, {"half-plane", CanonicalTag::HALF_PLANE},
        {"SINE", CanonicalTag::SINE},           {"sine", CanonicalTag::SINE},
        {"MODULAR_LAMBDA", CanonicalTag::MODULAR_LAMBDA}, {"modular-lambda", CanonicalTag::MODULAR_LAMBDA},
    };
    auto it = tags.find(s);
    if (it == tags.end()) throw Error(ErrorCode::UnknownTag, "unknown family '" + s + "'");
    return it->second;
}

std::shared_ptr<const GraphOracle> gen_canonical(CanonicalTag tag) {
    switch (tag) {
        case CanonicalTag::LINE_Z: return std::make_shared<LineOracle>();
        case CanonicalTag::GRID_Z2: return std::make_shared<GridOracle>();
        case CanonicalTag::TREE_3: return std::make_shared<TrivalentTreeOracle>("tree-3");
        case CanonicalTag::HALF_PLANE: return half_plane_lattice();
        case CanonicalTag::SINE: return std::make_shared<SineOracle>();
        case CanonicalTag::MODULAR_LAMBDA: return std::make_shared<TrivalentTreeOracle>("modular-lambda");
    }
    throw Error(ErrorCode::UnknownTag, "unknown canonical tag");
}

VertexId LineOracle::encode(std::int64_t x) { return static_cast<VertexId>(x + kOffset); }
std::int64_t LineOracle::decode(VertexId v) { return static_cast<std::int64_t>(v) - kOffset; }

DartList LineOracle::darts(VertexId v) const {
    std::int64_t x = decode(v);
    return {{encode(x + 1), 1}, {encode(x - 1), 0}};
}

int LineOracle::parity(VertexId v) const { return static_cast<int>(((decode(v) % 2) + 2) % 2); }
std::string LineOracle::describe(VertexId v) const { return std::to_string(decode(v)); }

// Grid ids fit in 46 bits so that extensions can address them.
VertexId GridOracle::encode(std::int64_t x, std::int64_t y) {
    if (std::abs(x) >= kGridOffset || std::abs(y) >= kGridOffset)
        throw Error(ErrorCode::OracleDivergence, "grid coordinate exceeds id range");
    return (static_cast<VertexId>(x + kGridOffset) << 23) | static_cast<VertexId>(y + kGridOffset);
}

std::pair<std::int64_t, std::int64_t> GridOracle::decode(VertexId v) {
    return {static_cast<std::int64_t>(v >> 23) - kGridOffset,
            static_cast<std::int64_t>(v & ((VertexId{1} << 23) - 1)) - kGridOffset};
}

DartList GridOracle::darts(VertexId v) const {
    auto [x, y] = decode(v);
    return {{encode(x + 1, y), 2}, {encode(x, y + 1), 3}, {encode(x - 1, y), 0}, {encode(x, y - 1), 1}};
}

int GridOracle::parity(VertexId v) const {
    auto [x, y] = decode(v);
    return static_cast<int>((((x + y) % 2) + 2) % 2);
}

std::string GridOracle::describe(VertexId v) const {
    auto [x, y] = decode(v);
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

// Tree ids: depth from bit 40, root branch in bits 38-39, then the path.
DartList TrivalentTreeOracle::darts(VertexId v) const {
    int d = depth(v);
    auto make = [](int depth, std::uint64_t branch, std::uint64_t path) {
        if (depth > 38) throw Error(ErrorCode::OracleDivergence, "tree depth exceeds id range");
        return (static_cast<VertexId>(depth) << 40) | (branch << 38) | path;
    };
    if (d == 0) return {{make(1, 0, 0), 0}, {make(1, 1, 0), 0}, {make(1, 2, 0), 0}};
    std::uint64_t branch = (v >> 38) & 3u;
    std::uint64_t path = v & ((std::uint64_t{1} << 38) - 1);
    DartList out;
    if (d == 1) out.push_back({0, static_cast<int>(branch)});
    else out.push_back({make(d - 1, branch, path >> 1), 1 + static_cast<int>(path & 1u)});
    out.push_back({make(d + 1, branch, path << 1), 0});
    out.push_back({make(d + 1, branch, (path << 1) | 1u), 0});
    return out;
}

int TrivalentTreeOracle::parity(VertexId v) const { return depth(v) % 2; }

std::string TrivalentTreeOracle::describe(VertexId v) const {
    int d = depth(v);
    if (d == 0) return "root";
    std::string s = std::to_string((v >> 38) & 3u);
    std::uint64_t path = v & ((std::uint64_t{1} << 38) - 1);
    for (int k = d - 2; k >= 0; --k) s += ((path >> k) & 1u) ? 'R' : 'L';
    return s;
}

VertexId SineOracle::encode(std::int64_t x, int side) {
    return (static_cast<VertexId>(x + kOffset) << 1) | static_cast<VertexId>(side);
}

std::pair<std::int64_t, int> SineOracle::decode(VertexId v) {
    return {static_cast<std::int64_t>(v >> 1) - kOffset, static_cast<int>(v & 1u)};
}

// Bottom rail: east, rung, west.  Top rail: east, west, rung.
DartList SineOracle::darts(VertexId v) const {
    auto [x, s] = decode(v);
    if (s == 0) return {{encode(x + 1, 0), 2}, {encode(x, 1), 2}, {encode(x - 1, 0), 0}};
    return {{encode(x + 1, 1), 1}, {encode(x - 1, 1), 0}, {encode(x, 0), 1}};
}

std::optional<FaceSize> SineOracle::face_hint(VertexId v, int corner) const {
    auto [x, s] = decode(v);
    (void)x;
    bool log_face = (s == 0 && corner == 2) || (s == 1 && corner == 0);
    return log_face ? FaceSize::unbounded() : FaceSize::of_length(4);
}

int SineOracle::parity(VertexId v) const {
    auto [x, s] = decode(v);
    return static_cast<int>((((x + s) % 2) + 2) % 2);
}

std::string SineOracle::describe(VertexId v) const {
    auto [x, s] = decode(v);
    return "(" + std::to_string(x) + (s ? ",top)" : ",bottom)");
}

const std::vector<FamilyInfo>& family_catalog() {
    static const std::vector<FamilyInfo> catalog = {
        {"line-z", "two-way infinite path", ""},
        {"grid-z2", "square lattice, a Speiser graph with q=4", ""},
        {"tree-3", "trivalent tree", ""},
        {"half-plane", "half-plane lattice Z x Z_+", ""},
        {"half-cylinder", "half-cylinder lattice", "n=<circumference>"},
        {"sine", "line complex of sin, q=3", ""},
        {"modular-lambda", "line complex of the modular function, trivalent tree, q=3", ""},
        {"tr-hexagon", "counterexample 1, q=3", "side=one|alternate"},
        {"gamma4", "extension of tr-hexagon with n=4, q=4", "side=one|alternate"},
        {"gamma-star", "coarse/fine lattice comparison graph for counterexample 1", ""},
        {"appendix-a", "subdivided trivalent tree, q=3", "depth=<N> l=<l1,l2,...> completed=1|0"},
        {"counterexample3", "pants and leaf-disc gadgets on the tree T, q=4", "s=<rings>"},
        {"extended", "extension of another family", "base=<family> n=<n> plus base parameters"},
    };
    return catalog;
}

namespace {

std::string param(const std::map<std::string, std::string>& p, const std::string& key, const std::string& def) {
    auto it = p.find(key);
    return it == p.end() ? def : it->second;
}

int int_param(const std::map<std::string, std::string>& p, const std::string& key, int def) {
    auto it = p.find(key);
    if (it == p.end()) return def;
    try {
        return std::stoi(it->second);
    } catch (const std::exception&) {
        throw Error(ErrorCode::BadArgument, "parameter " + key + " is not an integer: " + it->second);
    }
}

TrHexagonOracle::Side parse_side(const std::string& s) {
    if (s == "one") return TrHexagonOracle::Side::One;
    if (s == "alternate") return TrHexagonOracle::Side::Alternate;
    throw Error(ErrorCode::BadArgument, "side must be one or alternate");
}

std::vector<std::int64_t> parse_lengths(const std::string& s) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoll(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Family make_family(const std::string& tag, const std::map<std::string, std::string>& params) {
    if (tag == "half-cylinder") return {half_cylinder_lattice(int_param(params, "n", 6)), 0};
    if (tag == "tr-hexagon") return {gen_tr_hexagon(parse_side(param(params, "side", "one"))), 3};
    if (tag == "gamma4") return {gen_gamma4(parse_side(param(params, "side", "one"))).oracle, 4};
    if (tag == "gamma-star") return {gen_gamma_star(), 0};
    if (tag == "appendix-a") {
        std::vector<std::int64_t> l = params.count("l") ? parse_lengths(params.at("l"))
                                                        : default_appendix_lengths(int_param(params, "depth", 12));
        bool completed = int_param(params, "completed", 1) != 0;
        return {gen_appendixA(l, completed), completed ? 3 : 0};
    }
    if (tag == "counterexample3") return {gen_counterexample3(int_param(params, "s", 2)), 4};
    if (tag == "extended") {
        auto base_params = params;
        base_params.erase("base");
        base_params.erase("n");
        Family base = make_family(param(params, "base", "tr-hexagon"), base_params);
        if (base.q == 0) throw Error(ErrorCode::NotValidated, "extension needs a Speiser base family");
        SpeiserGraph sg = validate_speiser_or_throw(base.oracle, base.q, 4);
        return {extend(sg, int_param(params, "n", 1)).oracle, 0};
    }
    CanonicalTag t = parse_canonical_tag(tag);
    int q = 0;
    if (t == CanonicalTag::GRID_Z2) q = 4;
    if (t == CanonicalTag::TREE_3 || t == CanonicalTag::SINE || t == CanonicalTag::MODULAR_LAMBDA) q = 3;
    return {gen_canonical(t), q};
}

}  // namespace speiser
