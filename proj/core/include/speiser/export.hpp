#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "speiser/oracle.hpp"
#include "speiser/rotation_graph.hpp"
#include "speiser/speiser.hpp"

namespace speiser {

struct ExportOptions {
    int q = 0;                         // written when positive
    const Labeling* labels = nullptr;  // face labels for closed faces, when given
    std::string family;
};

// Graph JSON: {"family", "center", "radius", "q"?, "vertices": [{"id", "kind"?, "rotation",
// "boundary"?, "ext"?}], "edges": [{"id", "ends"}], "face_labels"?}.  Vertex ids are decimal
// strings, edge ids "e<k>" in discovery order, so output is a function of the ball alone.
void write_graph_json(std::ostream& os, const GraphOracle& g, const Ball& b, const ExportOptions& opt = {});
void write_rotation_graph_json(std::ostream& os, const RotationGraph& g, int q = 0);

void write_graph_dot(std::ostream& os, const GraphOracle& g, const Ball& b);
void write_rotation_graph_dot(std::ostream& os, const RotationGraph& g);

struct ImportedGraph {
    RotationGraph graph;
    int q = 0;
    std::vector<int> parity;  // by vertex index, -1 when absent
    std::vector<std::string> names;
};

// Reads the JSON written above.  Throws BadArgument on malformed input and the
// build_rotation_graph errors on inconsistent rotations.
ImportedGraph read_graph_json(std::istream& is);

// Writers that keep the imported vertex ids and kinds.
void write_graph_json(std::ostream& os, const ImportedGraph& g);
void write_graph_dot(std::ostream& os, const ImportedGraph& g);

}  // namespace speiser
