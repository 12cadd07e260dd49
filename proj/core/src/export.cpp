#include "speiser/export.hpp"

#include "speiser/extension.hpp"

#include <istream>
#include <ostream>
#include <unordered_map>

#include "json.hpp"

namespace speiser {

namespace {

using nlohmann::ordered_json;

std::string edge_name(std::size_t e) { return "e" + std::to_string(e); }

const char* kind_name(int parity) { return parity == 0 ? "x" : "o"; }

ordered_json rotation_json(const RotationGraph& g, std::size_t v) {
    ordered_json rot = ordered_json::array();
    for (int s = 0; s < g.degree(v); ++s) rot.push_back(edge_name(g.edge_of(g.half_edge(v, s))));
    return rot;
}

}  // namespace

void write_graph_json(std::ostream& os, const GraphOracle& g, const Ball& b, const ExportOptions& opt) {
    const RotationGraph& sg = b.subgraph;
    ordered_json doc;
    doc["family"] = opt.family.empty() ? g.name() : opt.family;
    doc["center"] = std::to_string(b.center);
    doc["radius"] = b.radius;
    if (opt.q > 0) doc["q"] = opt.q;

    ordered_json vertices = ordered_json::array();
    for (std::size_t v = 0; v < sg.vertex_count(); ++v) {
        ordered_json jv;
        VertexId id = sg.id(v);
        jv["id"] = std::to_string(id);
        if (int p = g.parity(id); p >= 0) jv["kind"] = kind_name(p);
        jv["rotation"] = rotation_json(sg, v);
        if (b.boundary[v]) jv["boundary"] = true;
        if (is_lattice_vertex(id)) {
            LatticeVertex l = decode_lattice(id);
            jv["ext"] = {{"face", std::to_string(l.base)}, {"ring", l.ring}, {"angle", l.corner}};
        }
        vertices.push_back(std::move(jv));
    }
    doc["vertices"] = std::move(vertices);

    ordered_json edges = ordered_json::array();
    std::vector<char> seen(sg.edge_count(), 0);
    for (std::size_t h = 0; h < sg.half_edge_count(); ++h) {
        std::size_t e = sg.edge_of(h);
        if (seen[e]) continue;
        seen[e] = 1;
        edges.push_back({{"id", edge_name(e)},
                         {"ends", {std::to_string(sg.id(sg.vertex_of(h))), std::to_string(sg.id(sg.head(h)))}}});
    }
    doc["edges"] = std::move(edges);

    if (opt.labels) {
        ordered_json labels = ordered_json::object();
        for (const FaceRecord& f : b.faces) {
            if (f.truncated) continue;
            for (std::size_t h : f.boundary) {
                std::size_t v = sg.vertex_of(h);
                if (b.boundary[v]) continue;
                auto it = opt.labels->corner_label.find(sg.id(v));
                if (it == opt.labels->corner_label.end()) continue;
                int deg = sg.degree(v);
                int corner = (sg.slot_of(h) + deg - 1) % deg;
                labels["f" + std::to_string(f.id)] = "a" + std::to_string(it->second[static_cast<std::size_t>(corner)] + 1);
                break;
            }
        }
        doc["face_labels"] = std::move(labels);
    }
    os << doc.dump(1) << '\n';
}

void write_rotation_graph_json(std::ostream& os, const RotationGraph& g, int q) {
    ordered_json doc;
    if (q > 0) doc["q"] = q;
    ordered_json vertices = ordered_json::array();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        vertices.push_back({{"id", std::to_string(g.id(v))}, {"rotation", rotation_json(g, v)}});
    doc["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    std::vector<char> seen(g.edge_count(), 0);
    for (std::size_t h = 0; h < g.half_edge_count(); ++h) {
        std::size_t e = g.edge_of(h);
        if (seen[e]) continue;
        seen[e] = 1;
        edges.push_back({{"id", edge_name(e)},
                         {"ends", {std::to_string(g.id(g.vertex_of(h))), std::to_string(g.id(g.head(h)))}}});
    }
    doc["edges"] = std::move(edges);
    os << doc.dump(1) << '\n';
}

void write_graph_dot(std::ostream& os, const GraphOracle& g, const Ball& b) {
    const RotationGraph& sg = b.subgraph;
    os << "graph \"" << g.name() << "\" {\n  node [shape=circle, label=\"\", width=0.15];\n";
    for (std::size_t v = 0; v < sg.vertex_count(); ++v) {
        VertexId id = sg.id(v);
        os << "  v" << id;
        int p = g.parity(id);
        std::string attrs;
        if (p == 0) attrs = "style=filled, fillcolor=black";
        if (is_lattice_vertex(id)) attrs += std::string(attrs.empty() ? "" : ", ") + "shape=point";
        if (id == b.center) attrs += std::string(attrs.empty() ? "" : ", ") + "color=red, penwidth=2";
        if (!attrs.empty()) os << " [" << attrs << "]";
        os << ";\n";
    }
    for (std::size_t h = 0; h < sg.half_edge_count(); ++h) {
        if (sg.twin(h) < h) continue;
        os << "  v" << sg.id(sg.vertex_of(h)) << " -- v" << sg.id(sg.head(h)) << ";\n";
    }
    os << "}\n";
}

void write_rotation_graph_dot(std::ostream& os, const RotationGraph& g) {
    os << "graph G {\n";
    for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  v" << g.id(v) << ";\n";
    for (std::size_t h = 0; h < g.half_edge_count(); ++h) {
        if (g.twin(h) < h) continue;
        os << "  v" << g.id(g.vertex_of(h)) << " -- v" << g.id(g.head(h)) << ";\n";
    }
    os << "}\n";
}

void write_graph_json(std::ostream& os, const ImportedGraph& g) {
    const RotationGraph& rg = g.graph;
    ordered_json doc;
    if (g.q > 0) doc["q"] = g.q;
    ordered_json vertices = ordered_json::array();
    for (std::size_t v = 0; v < rg.vertex_count(); ++v) {
        ordered_json jv;
        jv["id"] = g.names[v];
        if (g.parity[v] >= 0) jv["kind"] = kind_name(g.parity[v]);
        jv["rotation"] = rotation_json(rg, v);
        vertices.push_back(std::move(jv));
    }
    doc["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    std::vector<char> seen(rg.edge_count(), 0);
    for (std::size_t h = 0; h < rg.half_edge_count(); ++h) {
        std::size_t e = rg.edge_of(h);
        if (seen[e]) continue;
        seen[e] = 1;
        edges.push_back({{"id", edge_name(e)}, {"ends", {g.names[rg.vertex_of(h)], g.names[rg.head(h)]}}});
    }
    doc["edges"] = std::move(edges);
    os << doc.dump(1) << '\n';
}

void write_graph_dot(std::ostream& os, const ImportedGraph& g) {
    const RotationGraph& rg = g.graph;
    os << "graph G {\n  node [shape=circle, label=\"\", width=0.15];\n";
    for (std::size_t v = 0; v < rg.vertex_count(); ++v) {
        os << "  \"" << g.names[v] << '"';
        if (g.parity[v] == 0) os << " [style=filled, fillcolor=black]";
        os << ";\n";
    }
    for (std::size_t h = 0; h < rg.half_edge_count(); ++h) {
        if (rg.twin(h) < h) continue;
        os << "  \"" << g.names[rg.vertex_of(h)] << "\" -- \"" << g.names[rg.head(h)] << "\";\n";
    }
    os << "}\n";
}

ImportedGraph read_graph_json(std::istream& is) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadArgument, std::string("graph JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
        throw Error(ErrorCode::BadArgument, "graph JSON needs \"vertices\" and \"edges\"");
    ImportedGraph out;
    std::vector<VertexSpec> vs;
    std::vector<EdgeSpec> es;
    try {
        out.q = doc.value("q", 0);
        for (const auto& jv : doc.at("vertices")) {
            VertexSpec v;
            v.id = jv.at("id").get<std::string>();
            v.rotation = jv.at("rotation").get<std::vector<std::string>>();
            std::string kind = jv.value("kind", std::string());
            out.parity.push_back(kind == "x" ? 0 : kind == "o" ? 1 : -1);
            out.names.push_back(v.id);
            vs.push_back(std::move(v));
        }
        for (const auto& je : doc.at("edges")) {
            EdgeSpec e;
            e.id = je.at("id").get<std::string>();
            const auto& ends = je.at("ends");
            if (!ends.is_array() || ends.size() != 2) throw Error(ErrorCode::BadArgument, "edge needs two ends");
            e.ends[0] = ends[0].get<std::string>();
            e.ends[1] = ends[1].get<std::string>();
            es.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::BadArgument, std::string("graph JSON: ") + e.what());
    }
    out.graph = build_rotation_graph(vs, es);
    return out;
}

}  // namespace speiser
