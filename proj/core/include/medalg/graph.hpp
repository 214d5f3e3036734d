#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "medalg/algebra.hpp"

namespace medalg {

/// Undirected Hasse diagram of a basepoint order. Edges are normalized as
/// (smaller index, larger index) and sorted.
struct CoveringGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::optional<Element> basepoint;
};

CoveringGraph covering_graph(const MedianAlgebra& a, Element p);

/// Smallest vertex triple whose three pairwise geodesic intervals do not meet
/// in exactly one vertex. Intervals use breadth-first distances:
/// v in I(a,b) iff d(a,v) + d(v,b) = d(a,b). Throws DisconnectedGraph.
std::optional<Triple> median_graph_witness(const CoveringGraph& g);
bool is_median_graph(const CoveringGraph& g);

/// Deterministic DOT text: vertices in index order, each edge once with the
/// smaller endpoint first. Labels, when given, must match the vertex count
/// (LabelMismatch otherwise) and are emitted quoted.
std::string export_dot(const CoveringGraph& g,
                       const std::vector<std::string>& labels = {});

}  // namespace medalg
