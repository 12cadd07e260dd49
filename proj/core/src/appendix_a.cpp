#include "speiser/generators.hpp"

#include <cmath>

namespace speiser {

namespace {

constexpr int kDepthShift = 40;
constexpr int kBranchShift = 38;
constexpr int kPathShift = 20;
constexpr int kMaxDepth = 19;

}  // namespace

std::vector<std::int64_t> default_appendix_lengths(int depth) {
    std::vector<std::int64_t> l;
    for (int n = 1; n <= depth; ++n) l.push_back((std::int64_t{1} << n) + 1);
    return l;
}

AppendixSeries appendix_series(const std::vector<std::int64_t>& l) {
    AppendixSeries s;
    double a = 0, b = 0;
    for (std::size_t n = 1; n <= l.size(); ++n) {
        double p = std::ldexp(1.0, static_cast<int>(n));
        a += std::log(static_cast<double>(l[n - 1])) / p;
        b += static_cast<double>(l[n - 1]) / p;
        s.log_partial.push_back(a);
        s.linear_partial.push_back(b);
    }
    return s;
}

// Level n has 3*2^(n-1) parallel paths.  A completed path alternates single
// edges and doubled pairs: (l+1)/2 unit resistors and (l-1)/2 halves.
double appendix_resistance(const std::vector<std::int64_t>& l, int depth, bool completed) {
    double r = 0;
    for (int n = 1; n <= depth; ++n) {
        double ln = static_cast<double>(l.at(static_cast<std::size_t>(n) - 1));
        double path = completed ? (3 * ln + 1) / 4 : ln;
        r += path / (3 * std::ldexp(1.0, n - 1));
    }
    return r;
}

AppendixAOracle::AppendixAOracle(std::vector<std::int64_t> l, bool completed) : l_(std::move(l)), completed_(completed) {
    if (l_.empty()) throw Error(ErrorCode::BadArgument, "empty subdivision sequence");
    if (static_cast<int>(l_.size()) > kMaxDepth) throw Error(ErrorCode::BadArgument, "subdivision sequence too long");
    radius_.push_back(0);
    for (std::int64_t x : l_) {
        if (x < 1 || x >= (std::int64_t{1} << kPathShift)) throw Error(ErrorCode::BadArgument, "subdivision length out of range");
        if (completed_ && x % 2 == 0)
            throw Error(ErrorCode::EvenSubdivision, "subdivision lengths must be odd, got " + std::to_string(x));
        radius_.push_back(radius_.back() + x);
    }
}

std::int64_t AppendixAOracle::l(int n) const {
    if (n < 1 || n > static_cast<int>(l_.size()))
        throw Error(ErrorCode::OracleDivergence, "depth " + std::to_string(n) + " beyond the subdivision sequence");
    return l_[static_cast<std::size_t>(n) - 1];
}

std::int64_t AppendixAOracle::level_radius(int n) const { return radius_.at(static_cast<std::size_t>(n)); }

VertexId AppendixAOracle::encode(const Node& x) {
    return (static_cast<VertexId>(x.n) << kDepthShift) | (static_cast<VertexId>(x.b) << kBranchShift) |
           (x.path << kPathShift) | static_cast<VertexId>(x.k);
}

AppendixAOracle::Node AppendixAOracle::decode(VertexId v) {
    Node x;
    x.n = static_cast<int>(v >> kDepthShift);
    x.b = static_cast<int>((v >> kBranchShift) & 3u);
    x.path = (v >> kPathShift) & ((VertexId{1} << (kBranchShift - kPathShift)) - 1);
    x.k = static_cast<std::int64_t>(v & ((VertexId{1} << kPathShift) - 1));
    return x;
}

DartList AppendixAOracle::darts(VertexId v) const {
    Node x = decode(v);
    DartList out;
    // first vertex on the path towards child node (n+1, b, p), with the slot pointing back
    auto down = [&](int n, int b, std::uint64_t p) -> Dart {
        Node c{n, b, p, l(n) == 1 ? 0 : 1};
        int back = c.k == 0 ? 0 : (completed_ ? 2 : 1);
        return {encode(c), back};
    };
    if (x.n == 0) {
        for (int b = 0; b < 3; ++b) out.push_back(down(1, b, 0));
        return out;
    }
    const std::int64_t ln = l(x.n);
    auto parent_slot = [&]() { return x.n == 1 ? x.b : 1 + static_cast<int>(x.path & 1u); };
    auto parent_branch = [&]() {
        return x.n == 1 ? VertexId{0} : encode(Node{x.n - 1, x.b, x.path >> 1, 0});
    };
    if (x.k == 0) {
        if (ln == 1) out.push_back({parent_branch(), parent_slot()});
        else out.push_back({encode(Node{x.n, x.b, x.path, ln - 1}), 0});
        out.push_back(down(x.n + 1, x.b, x.path << 1));
        out.push_back(down(x.n + 1, x.b, (x.path << 1) | 1u));
        return out;
    }
    Node next = x, prev = x;
    next.k = x.k + 1 == ln ? 0 : x.k + 1;
    prev.k = x.k - 1;
    Dart to_next{encode(next), 0};
    Dart to_prev{0, 0};
    if (prev.k == 0) to_prev = {parent_branch(), parent_slot()};
    else to_prev = {encode(prev), 0};
    if (!completed_) {
        if (next.k != 0) to_next.back = 1;
        out.push_back(to_next);
        out.push_back(to_prev);
        return out;
    }
    if (x.k % 2 == 1) {
        // next is the partner across the 2-gon
        out.push_back({encode(next), 2});
        out.push_back({encode(next), 1});
        out.push_back(to_prev);
    } else {
        if (next.k != 0) to_next.back = 2;
        out.push_back(to_next);
        out.push_back({encode(prev), 1});
        out.push_back({encode(prev), 0});
    }
    return out;
}

std::optional<FaceSize> AppendixAOracle::face_hint(VertexId v, int corner) const {
    Node x = decode(v);
    if (completed_ && x.k > 0 && corner == (x.k % 2 == 1 ? 0 : 1)) return FaceSize::of_length(2);
    return FaceSize::unbounded();
}

int AppendixAOracle::parity(VertexId v) const {
    Node x = decode(v);
    std::int64_t d = x.k == 0 ? radius_.at(static_cast<std::size_t>(x.n)) : radius_.at(static_cast<std::size_t>(x.n) - 1) + x.k;
    return static_cast<int>(d % 2);
}

std::string AppendixAOracle::describe(VertexId v) const {
    Node x = decode(v);
    if (x.n == 0) return "root";
    std::string s = "node(" + std::to_string(x.b);
    for (int k = x.n - 2; k >= 0; --k) s += ((x.path >> k) & 1u) ? 'R' : 'L';
    s += ")";
    if (x.k) s += ".path" + std::to_string(x.k);
    return s;
}

std::shared_ptr<const AppendixAOracle> gen_appendixA(const std::vector<std::int64_t>& l, bool completed) {
    return std::make_shared<AppendixAOracle>(l, completed);
}

}  // namespace speiser
