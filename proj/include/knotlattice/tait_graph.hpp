#pragma once

#include "knotlattice/diagram.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace knotlattice {

/// Integer vector indexed by graph edges, relative to reference orientations.
using OrientedEdgeVector = std::vector<long long>;

struct GraphEdge {
    int tail = 0, head = 0;
    int weight = 0;   // +1 or -1
    int crossing = -1; // originating crossing id, -1 for abstract graphs
};

/// Embedded multigraph: rotation lists hold edge ends counterclockwise around
/// each vertex; end 0 is the tail end, end 1 the head end.  Loops and parallel
/// edges are allowed.
struct PlaneMultigraph {
    int vertex_count = 0;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<std::pair<int, int>>> rotation;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Validates the rotation system and the per-piece Euler count; throws
/// NonPlanar / InternalConventionError on malformed input.
void verify_embedding(const PlaneMultigraph& g);

bool graph_connected(const PlaneMultigraph& g);
std::vector<int> bridge_edges(const PlaneMultigraph& g);

/// Faces as cyclic dart sequences (dart = 2*edge + end, the outgoing half-edge
/// at that end's vertex).
std::vector<std::vector<int>> graph_faces(const PlaneMultigraph& g);

/// Tait graph of a colored connected diagram: one vertex per face of the
/// chosen color, one edge per crossing.  White edge weight is +1 at type-b
/// crossings and -1 at type-a; Black weights are negated, so the Black Gram
/// matrix represents the pairing of the black surface directly.
PlaneMultigraph tait_graph(const LinkDiagram& d, const Coloring& col, Color color);

/// Planar dual with negated weights; involutive up to relabeling.
PlaneMultigraph planar_dual(const PlaneMultigraph& g);

/// Oriented face boundary cycles C_1..C_f of a connected bridgeless plane
/// multigraph.  Every oriented edge occurs in exactly one cycle and the cycles
/// sum to zero.
std::vector<OrientedEdgeVector> face_cycles(const PlaneMultigraph& g);

/// Canonical encoding of the embedded graph (weights included), equal for two
/// graphs iff they are isomorphic as weighted embedded multigraphs.
std::string canonical_embedding_code(const PlaneMultigraph& g);

std::string graph_to_json(const PlaneMultigraph& g);
PlaneMultigraph graph_from_json(const std::string& text);

} // namespace knotlattice
