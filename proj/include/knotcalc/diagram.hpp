#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotcalc/numeric.hpp"

namespace knotcalc {

// A knot diagram as a PD code. Each crossing lists its four edge labels
// counterclockwise starting at the incoming under-strand; edges are labeled
// 1..2n in order along the strand.
struct PlanarDiagram {
    std::vector<std::array<int, 4>> crossings;
    // derived on parse:
    std::vector<int> over_in_slot;  // 1 or 3
    std::vector<int> sign;          // +1 / -1 per crossing

    int size() const { return int(crossings.size()); }
    int num_edges() const { return 2 * size(); }
};

// Accepts whitespace-separated X[a,b,c,d] tokens or a JSON array of
// 4-element integer arrays.
PlanarDiagram parse_pd(const std::string& text);

struct FaceSet {
    int verts = 0, edges = 0;
    std::vector<std::vector<int>> faces;        // edge labels along each face
    std::vector<std::array<int, 4>> dart_face;  // face id of each dart (crossing, slot)

    int count() const { return int(faces.size()); }
};

FaceSet faces(const PlanarDiagram& d);

bool is_alternating(const PlanarDiagram& d);

struct Shading {
    FaceSet fs;
    std::vector<int> color;  // per face: 1 white, 0 black
    int whites = 0, blacks = 0;
};

// The unique checkerboard coloring with the white regions to the left of
// each overpass; fails with NotAlternating when the local rule conflicts.
Shading shade(const PlanarDiagram& d);

// Multigraph of white regions. Vertex 0 is the distinguished v0 (the white
// region incident to edge label 1).
struct WhiteGraph {
    struct Edge {
        int u = 0, v = 0;
        int pos = 0, neg = 0;  // crossing multiplicities by sign
    };
    int vertices = 0;
    std::vector<Edge> edges;
    int mu = 0;              // number of negative crossings
    int crossing_count = 0;

    int multiplicity(int u, int v) const;
};

WhiteGraph white_graph(const PlanarDiagram& d);

// eta[v] in {0,1}, eta[0] = 0: parity of distance from v0's class in the
// oriented-resolution graph (positive-crossing edges contracted).
struct EtaColoring {
    std::vector<int> eta;
};

EtaColoring eta_coloring(const WhiteGraph& w);

std::string white_graph_to_json(const WhiteGraph& w);
WhiteGraph white_graph_from_json(const std::string& text);

} // namespace knotcalc
