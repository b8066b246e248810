#pragma once

#include <surfcut/embedded_graph.hpp>

#include <unordered_map>

namespace surfcut {

/// Medial graph: one degree-4 vertex per edge of g, embedded on the same
/// surface. Medial edge weights are 0.
EmbeddedGraph medial_graph(const EmbeddedGraph& g);

/// Barycentric subdivision: a vertex on each edge and in each face, corner
/// triangles all around. Original edge halves carry half the original weight,
/// all other new edges weight 0.
EmbeddedGraph barycentric_subdivision(const EmbeddedGraph& g);

struct SuperposeResult {
    EmbeddedGraph map;
    // Sub-edges descending from each original edge (the two halves, in order
    // tail-of-min-dart first); medial edges are everything else.
    std::unordered_map<EdgeId, std::vector<EdgeId>> halves_of;
    std::vector<EdgeId> medial_edges;
};

/// Superposition of g with its medial graph: original edges are split at the
/// medial vertices (weights halved), medial edges added at `new_edge_weight`.
SuperposeResult superpose_with_medial(const EmbeddedGraph& g, const Rational& new_edge_weight);

struct TriangulateResult {
    EmbeddedGraph map;
    std::vector<EdgeId> added_edges;
    // old edge id -> new edge id (edge set otherwise unchanged)
    std::unordered_map<EdgeId, EdgeId> edge_map;
};

/// Splits every face of degree >= 4 with chords of weight `heavy_weight`,
/// preferring chords between corners not already adjacent. Faces must have
/// degree >= 3 (pre-subdivide loops and multi-edges first).
TriangulateResult triangulate(const EmbeddedGraph& g, const Rational& heavy_weight);

/// Subdivides every edge once: a new vertex in the middle, half weights.
struct SubdivideResult {
    EmbeddedGraph map;
    std::unordered_map<EdgeId, std::vector<EdgeId>> halves_of;
};
SubdivideResult subdivide_all_edges(const EmbeddedGraph& g);

struct ContractResult {
    EmbeddedGraph map;
    // old vertex index -> new vertex index
    std::vector<int> vertex_map;
    // old edge id -> new edge id for edges that survive (-1 for contracted
    // or deleted-loop edges)
    std::unordered_map<EdgeId, EdgeId> edge_map;
};

/// Contracts the non-loop edges of S in the map (rotation orders merged at
/// the identified vertex) and deletes the loops of S. Genus never increases.
ContractResult contract_edges(const EmbeddedGraph& g, const std::set<EdgeId>& s);

struct RestrictResult {
    EmbeddedGraph map;
    // new dart id -> old dart id and back
    std::vector<DartId> to_host;
    std::unordered_map<DartId, DartId> from_host;
};

/// Sub-map induced by an edge subset, with the inherited rotation. The edge
/// set must span a connected subgraph.
RestrictResult restrict_to_edges(const EmbeddedGraph& g, const std::set<EdgeId>& edges);

struct CutOpenComponent {
    EmbeddedGraph map;
    int boundary_face_index = -1;       // the unique cut-boundary face, if unique
    std::vector<int> boundary_faces;    // all cut-boundary faces of `map`
    std::vector<DartId> to_host;        // new dart -> host dart (boundary copies map
                                        // to the host dart of the H edge they copy)
    std::vector<char> is_boundary_dart; // per new dart
    std::vector<char> is_outward_dart;  // boundary copies facing the cut side
};

/// Cuts the surface along the edges of H and returns one planar-with-boundary
/// map per piece. Interior darts keep their host identity via to_host;
/// each H edge appears as two boundary copies (one per side).
std::vector<CutOpenComponent> cut_open(const EmbeddedGraph& g, const std::set<EdgeId>& h);

} // namespace surfcut
