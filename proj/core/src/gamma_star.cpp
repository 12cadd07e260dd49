#include "speiser/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <unordered_map>

namespace speiser {

namespace {

constexpr VertexId kUpperFlag = VertexId{1} << 62;
constexpr std::int64_t kXOffset = std::int64_t{1} << 30;

}  // namespace

std::int64_t gamma_star_block(int height) { return (std::int64_t{1} << (height + 2)) - 2; }

GammaStarOracle::GammaStarOracle() {
    P_.push_back(0);
    for (int i = 1; i <= kMaxLevel + 1; ++i) P_.push_back(P_.back() + 1 + gamma_star_block(i - 1));
}

VertexId GammaStarOracle::encode_upper(std::int64_t m, std::int64_t y) {
    return kUpperFlag | (static_cast<VertexId>(m + kXOffset) << 31) | static_cast<VertexId>(y);
}

VertexId GammaStarOracle::encode_lower(std::int64_t x, std::int64_t y) {
    return (static_cast<VertexId>(x + kXOffset) << 31) | static_cast<VertexId>(-y);
}

bool GammaStarOracle::is_upper(VertexId v) { return (v & kUpperFlag) != 0; }

std::pair<std::int64_t, std::int64_t> GammaStarOracle::coords(VertexId v) {
    std::int64_t x = static_cast<std::int64_t>((v & ~kUpperFlag) >> 31) - kXOffset;
    std::int64_t y = static_cast<std::int64_t>(v & ((VertexId{1} << 31) - 1));
    return {x, is_upper(v) ? y : -y};
}

std::int64_t GammaStarOracle::join_position(std::int64_t m) const {
    std::int64_t a = std::abs(m);
    if (a > kMaxLevel) throw Error(ErrorCode::OracleDivergence, "gamma-star level out of range");
    return m < 0 ? -P_[static_cast<std::size_t>(a)] : P_[static_cast<std::size_t>(a)];
}

std::optional<std::int64_t> GammaStarOracle::join_index(std::int64_t x) const {
    std::int64_t a = std::abs(x);
    auto it = std::lower_bound(P_.begin(), P_.end(), a);
    if (it == P_.end() || *it != a) return std::nullopt;
    std::int64_t m = it - P_.begin();
    return x < 0 ? -m : m;
}

// Blocks between consecutive join positions hold nested bridges: a node of
// height h starting at a has the bridge a -> a+1+L_{h-1} over its first child.
std::optional<std::pair<std::int64_t, int>> GammaStarOracle::bridge(std::int64_t x) const {
    std::int64_t a = std::abs(x);
    auto it = std::lower_bound(P_.begin(), P_.end(), a);
    if (it == P_.end()) throw Error(ErrorCode::OracleDivergence, "gamma-star position out of range");
    if (*it == a) return std::nullopt;
    int i = static_cast<int>(it - P_.begin());
    int h = i - 1;
    std::int64_t start = P_[static_cast<std::size_t>(i) - 1] + 1;
    while (h > 0) {
        std::int64_t child = gamma_star_block(h - 1);
        std::int64_t end = start + 1 + child;
        std::int64_t sign = x < 0 ? -1 : 1;
        if (a == start) return std::make_pair(sign * end, h);
        if (a == end) return std::make_pair(sign * start, h);
        if (a < end) {
            start = start + 1;
        } else {
            start = end + 1;
        }
        --h;
    }
    return std::nullopt;
}

bool GammaStarOracle::has_up(std::int64_t x) const { return join_index(x).has_value() || bridge(x).has_value(); }

DartList GammaStarOracle::darts(VertexId v) const {
    auto [x, y] = coords(v);
    DartList out;
    if (is_upper(v)) {
        out.push_back({encode_upper(x + 1, y), 2});
        out.push_back({encode_upper(x, y + 1), 3});
        out.push_back({encode_upper(x - 1, y), 0});
        if (y > 0) out.push_back({encode_upper(x, y - 1), 1});
        else out.push_back({encode_lower(join_position(x), 0), 1});
        return out;
    }
    if (y < 0) {
        out.push_back({encode_lower(x + 1, y), 2});
        out.push_back({encode_lower(x, y + 1), y + 1 < 0 ? 3 : (has_up(x) ? 3 : 2)});
        out.push_back({encode_lower(x - 1, y), 0});
        out.push_back({encode_lower(x, y - 1), 1});
        return out;
    }
    out.push_back({encode_lower(x + 1, 0), has_up(x + 1) ? 2 : 1});
    if (auto m = join_index(x)) out.push_back({encode_upper(*m, 0), 3});
    else if (auto b = bridge(x)) out.push_back({encode_lower(b->first, 0), 1});
    out.push_back({encode_lower(x - 1, 0), 0});
    out.push_back({encode_lower(x, -1), 1});
    return out;
}

int GammaStarOracle::parity(VertexId v) const {
    auto [x, y] = coords(v);
    int p = static_cast<int>(((x + y) % 2 + 2) % 2);
    return is_upper(v) ? p : 1 - p;
}

int GammaStarOracle::level(VertexId v) const {
    auto [x, y] = coords(v);
    if (is_upper(v)) return static_cast<int>(std::max(std::abs(x), y));
    std::int64_t rho = std::max(std::abs(x), std::abs(y));
    auto it = std::lower_bound(P_.begin(), P_.end(), rho);
    if (it == P_.end()) throw Error(ErrorCode::OracleDivergence, "gamma-star position out of range");
    return static_cast<int>(it - P_.begin());
}

std::string GammaStarOracle::describe(VertexId v) const {
    auto [x, y] = coords(v);
    return std::string(is_upper(v) ? "U(" : "F(") + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::shared_ptr<const GammaStarOracle> gen_gamma_star() { return std::make_shared<GammaStarOracle>(); }

}  // namespace speiser

namespace speiser {

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

DensityAssignment gamma_star_annulus(const GammaStarOracle& g, int i, const GammaStarDensities& dens) {
    if (i < 1 || i >= GammaStarOracle::kMaxLevel) throw Error(ErrorCode::BadArgument, "annulus index out of range");
    DensityAssignment out;
    out.label = "A" + std::to_string(i);
    std::vector<VertexId> ring;
    for (std::int64_t m = -i; m <= i; ++m)
        for (std::int64_t y = 0; y <= i; ++y)
            if (std::max(std::abs(m), y) == i) ring.push_back(GammaStarOracle::encode_upper(m, y));
    const std::int64_t lo = g.join_position(i - 1), hi = g.join_position(i);
    for (std::int64_t x = -hi; x <= hi; ++x)
        for (std::int64_t y = 0; y >= -hi; --y)
            if (std::max(std::abs(x), -y) > lo) ring.push_back(GammaStarOracle::encode_lower(x, y));

    std::unordered_map<VertexId, std::uint32_t> index;
    index.reserve(ring.size() * 2);
    auto local = [&](VertexId v) {
        auto [it, fresh] = index.emplace(v, static_cast<std::uint32_t>(index.size()));
        if (fresh && g.level(v) == i - 1) out.sources.push_back(it->second);
        return it->second;
    };
    const double fine = std::pow(dens.fine_base, i);
    std::vector<std::pair<std::size_t, std::int64_t>> bridge_edges;  // edge index, size
    for (VertexId v : ring) {
        std::uint32_t a = local(v);
        bool target = false;
        DartList dv = g.darts(v);
        for (const Dart& d : dv) {
            int lw = g.level(d.to);
            if (lw > i) {
                target = true;
                continue;
            }
            if (lw == i && d.to < v) continue;  // added from the other end
            std::uint32_t b = local(d.to);
            double mu;
            bool up_v = GammaStarOracle::is_upper(v), up_w = GammaStarOracle::is_upper(d.to);
            if (up_v || up_w) {
                mu = dens.coarse;
            } else {
                auto [xv, yv] = GammaStarOracle::coords(v);
                auto [xw, yw] = GammaStarOracle::coords(d.to);
                if (yv == 0 && yw == 0 && std::abs(xv - xw) > 1) {
                    mu = std::pow(dens.bridge_base, g.bridge(std::abs(xv) < std::abs(xw) ? xv : xw)->second);
                    bridge_edges.push_back({out.edges.size(), std::abs(xv - xw)});
                } else {
                    mu = fine;
                }
            }
            out.edges.push_back({a, b, mu, mix(std::min(v, d.to)) ^ mix(std::max(v, d.to) + 0x51ull)});
        }
        if (target) out.targets.push_back(a);
    }
    if (dens.bridges == BridgeDensity::CountRule) {
        std::map<std::int64_t, int> count;
        for (auto [e, k] : bridge_edges) ++count[k];
        for (auto [e, k] : bridge_edges) out.edges[e].mu = std::ldexp(1.0, 1 - count[k]);
    }
    out.n = index.size();
    return out;
}

}  // namespace speiser
