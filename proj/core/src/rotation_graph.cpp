#include "speiser/rotation_graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <unordered_map>

namespace speiser {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case ErrorCode::RotationNotCyclic: return "RotationNotCyclic";
        case ErrorCode::InfiniteFace: return "InfiniteFace";
        case ErrorCode::OracleDivergence: return "OracleDivergence";
        case ErrorCode::UnknownFaceSize: return "UnknownFaceSize";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::OddFace: return "OddFace";
        case ErrorCode::BadDegree: return "BadDegree";
        case ErrorCode::InconsistentLabeling: return "InconsistentLabeling";
        case ErrorCode::BadCircumference: return "BadCircumference";
        case ErrorCode::NotValidated: return "NotValidated";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::SolverStall: return "SolverStall";
        case ErrorCode::TooFewEntries: return "TooFewEntries";
        case ErrorCode::OverlappingAnnuli: return "OverlappingAnnuli";
        case ErrorCode::Inadmissible: return "Inadmissible";
        case ErrorCode::NotSeparating: return "NotSeparating";
        case ErrorCode::NotDisjoint: return "NotDisjoint";
        case ErrorCode::UnknownTag: return "UnknownTag";
        case ErrorCode::BadBridgeRule: return "BadBridgeRule";
        case ErrorCode::EvenSubdivision: return "EvenSubdivision";
        case ErrorCode::WindowTooSmall: return "WindowTooSmall";
        case ErrorCode::BadArgument: return "BadArgument";
    }
    return "Unknown";
}

double to_double(const Rational& q) {
    return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

std::size_t RotationGraph::rotation_next(std::size_t h) const {
    std::size_t v = he_vertex_[h];
    return h + 1 == first_[v + 1] ? first_[v] : h + 1;
}

void RotationGraph::finalize_edges() {
    he_edge_.assign(he_vertex_.size(), 0);
    std::size_t next = 0;
    for (std::size_t h = 0; h < he_vertex_.size(); ++h) {
        if (he_twin_[h] > h) {
            he_edge_[h] = next;
            he_edge_[he_twin_[h]] = next;
            ++next;
        }
    }
}

RotationGraph RotationGraph::from_darts(std::vector<VertexId> ids,
                                        const std::vector<std::vector<std::pair<int, int>>>& darts) {
    RotationGraph g;
    g.ids_ = std::move(ids);
    g.first_.assign(1, 0);
    for (const auto& list : darts) g.first_.push_back(g.first_.back() + list.size());
    g.he_vertex_.resize(g.first_.back());
    g.he_twin_.resize(g.first_.back());
    for (std::size_t v = 0; v < darts.size(); ++v) {
        for (std::size_t s = 0; s < darts[v].size(); ++s) {
            auto [to, back] = darts[v][s];
            std::size_t h = g.first_[v] + s;
            g.he_vertex_[h] = v;
            if (to < 0 || static_cast<std::size_t>(to) >= darts.size())
                throw Error(ErrorCode::AsymmetricAdjacency, "dart target out of range");
            if (static_cast<std::size_t>(to) == v) throw Error(ErrorCode::LoopEdge, "loop at vertex");
            const auto& other = darts[static_cast<std::size_t>(to)];
            if (back < 0 || static_cast<std::size_t>(back) >= other.size() ||
                other[static_cast<std::size_t>(back)] != std::pair<int, int>{static_cast<int>(v), static_cast<int>(s)})
                throw Error(ErrorCode::AsymmetricAdjacency, "reverse dart mismatch");
            g.he_twin_[h] = g.first_[static_cast<std::size_t>(to)] + static_cast<std::size_t>(back);
        }
    }
    g.finalize_edges();
    return g;
}

RotationGraph build_rotation_graph(const std::vector<VertexSpec>& vertices, const std::vector<EdgeSpec>& edges) {
    std::unordered_map<std::string, std::size_t> vindex, eindex;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!vindex.emplace(vertices[i].id, i).second)
            throw Error(ErrorCode::AsymmetricAdjacency, "duplicate vertex id " + vertices[i].id);
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (!eindex.emplace(e.id, i).second) throw Error(ErrorCode::AsymmetricAdjacency, "duplicate edge id " + e.id);
        if (e.ends[0] == e.ends[1]) throw Error(ErrorCode::LoopEdge, "edge " + e.id + " is a loop");
        for (const auto& end : e.ends)
            if (!vindex.count(end)) throw Error(ErrorCode::AsymmetricAdjacency, "edge " + e.id + " has unknown end " + end);
    }

    RotationGraph g;
    g.ids_.resize(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) g.ids_[i] = i;
    g.first_.assign(1, 0);
    for (const auto& v : vertices) g.first_.push_back(g.first_.back() + v.rotation.size());
    g.he_vertex_.resize(g.first_.back());
    g.he_twin_.resize(g.first_.back());

    // half-edge of edge i at ends[0] and ends[1]
    std::vector<std::array<std::size_t, 2>> ends(edges.size(), {SIZE_MAX, SIZE_MAX});
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const auto& rot = vertices[v].rotation;
        for (std::size_t s = 0; s < rot.size(); ++s) {
            auto it = eindex.find(rot[s]);
            if (it == eindex.end())
                throw Error(ErrorCode::AsymmetricAdjacency, "vertex " + vertices[v].id + " lists unknown edge " + rot[s]);
            std::size_t e = it->second;
            std::size_t h = g.first_[v] + s;
            g.he_vertex_[h] = v;
            int side = -1;
            if (vindex[edges[e].ends[0]] == v) side = 0;
            else if (vindex[edges[e].ends[1]] == v) side = 1;
            if (side < 0)
                throw Error(ErrorCode::AsymmetricAdjacency,
                            "vertex " + vertices[v].id + " lists edge " + rot[s] + " that does not end there");
            if (ends[e][static_cast<std::size_t>(side)] != SIZE_MAX)
                throw Error(ErrorCode::RotationNotCyclic, "edge " + rot[s] + " repeated in rotation of " + vertices[v].id);
            ends[e][static_cast<std::size_t>(side)] = h;
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (ends[e][0] == SIZE_MAX || ends[e][1] == SIZE_MAX)
            throw Error(ErrorCode::AsymmetricAdjacency, "edge " + edges[e].id + " missing from a rotation");
        g.he_twin_[ends[e][0]] = ends[e][1];
        g.he_twin_[ends[e][1]] = ends[e][0];
    }
    g.finalize_edges();
    return g;
}

std::vector<FaceRecord> trace_faces(const RotationGraph& g) {
    std::vector<FaceRecord> faces;
    std::vector<char> seen(g.half_edge_count(), 0);
    for (std::size_t h0 = 0; h0 < g.half_edge_count(); ++h0) {
        if (seen[h0]) continue;
        FaceRecord f;
        f.id = faces.size();
        for (std::size_t h = h0; !seen[h]; h = g.face_next(h)) {
            seen[h] = 1;
            f.boundary.push_back(h);
        }
        faces.push_back(std::move(f));
    }
    return faces;
}

std::vector<std::size_t> face_index(const RotationGraph& g, const std::vector<FaceRecord>& faces) {
    std::vector<std::size_t> idx(g.half_edge_count(), 0);
    for (const auto& f : faces)
        for (auto h : f.boundary) idx[h] = f.id;
    return idx;
}

std::size_t component_count(const RotationGraph& g) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::size_t count = 0;
    for (std::size_t s = 0; s < g.vertex_count(); ++s) {
        if (seen[s]) continue;
        ++count;
        std::deque<std::size_t> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            for (int k = 0; k < g.degree(v); ++k) {
                std::size_t w = g.head(g.half_edge(v, k));
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
            }
        }
    }
    return count;
}

long euler_characteristic(const RotationGraph& g) {
    // isolated vertices have no half-edges and therefore no traced face
    long isolated = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) ++isolated;
    long f = static_cast<long>(trace_faces(g).size()) + isolated;
    long chi = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) + f;
    return chi - 2 * (static_cast<long>(component_count(g)) - 1);
}

RotationGraph dual(const RotationGraph& g, const std::vector<FaceRecord>& faces) {
    for (const auto& f : faces)
        if (f.infinite || f.truncated) throw Error(ErrorCode::InfiniteFace, "face " + std::to_string(f.id) + " is not closed");
    auto fidx = face_index(g, faces);
    // position of each half-edge within its face, reversed so the dual rotation is counter-clockwise
    std::vector<int> pos(g.half_edge_count(), 0);
    for (const auto& f : faces) {
        int m = static_cast<int>(f.boundary.size());
        for (int i = 0; i < m; ++i) pos[f.boundary[static_cast<std::size_t>(i)]] = m - 1 - i;
    }
    std::vector<std::vector<std::pair<int, int>>> darts(faces.size());
    for (const auto& f : faces) darts[f.id].resize(f.boundary.size());
    for (std::size_t h = 0; h < g.half_edge_count(); ++h) {
        std::size_t t = g.twin(h);
        darts[fidx[h]][static_cast<std::size_t>(pos[h])] = {static_cast<int>(fidx[t]), pos[t]};
    }
    std::vector<VertexId> ids(faces.size());
    for (std::size_t i = 0; i < faces.size(); ++i) ids[i] = i;
    return RotationGraph::from_darts(std::move(ids), darts);
}

RotationGraph dual(const RotationGraph& g) { return dual(g, trace_faces(g)); }

std::vector<std::size_t> canonical_code(const RotationGraph& g) {
    std::vector<std::size_t> best;
    const std::size_t n = g.vertex_count();
    for (std::size_t h0 = 0; h0 < g.half_edge_count(); ++h0) {
        std::vector<std::size_t> number(n, SIZE_MAX), entry(n, 0), order;
        std::deque<std::size_t> q;
        std::size_t v0 = g.vertex_of(h0);
        number[v0] = 0;
        entry[v0] = h0;
        order.push_back(v0);
        q.push_back(v0);
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            std::size_t h = entry[v];
            for (int k = 0; k < g.degree(v); ++k, h = g.rotation_next(h)) {
                std::size_t w = g.head(h);
                if (number[w] == SIZE_MAX) {
                    number[w] = order.size();
                    entry[w] = g.twin(h);
                    order.push_back(w);
                    q.push_back(w);
                }
            }
        }
        std::vector<std::size_t> code{order.size()};
        for (std::size_t v : order) {
            int d = g.degree(v);
            code.push_back(static_cast<std::size_t>(d));
            std::size_t h = entry[v];
            for (int k = 0; k < d; ++k, h = g.rotation_next(h)) {
                std::size_t t = g.twin(h);
                std::size_t w = g.vertex_of(t);
                int off = (g.slot_of(t) - g.slot_of(entry[w]) + g.degree(w)) % g.degree(w);
                code.push_back(number[w]);
                code.push_back(static_cast<std::size_t>(off));
            }
        }
        if (best.empty() || code < best) best = std::move(code);
    }
    if (best.empty()) best.push_back(n);
    return best;
}

}  // namespace speiser
