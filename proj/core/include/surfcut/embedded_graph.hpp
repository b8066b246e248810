#pragma once

#include <surfcut/rational.hpp>
#include <surfcut/errors.hpp>

#include <vector>
#include <set>
#include <cstdint>

namespace surfcut {

using DartId = int;
using EdgeId = int;    // canonical id of an edge: the smaller of its two dart ids
using VertexId = int;  // canonical id of a vertex: the smallest dart id in its rotation orbit
using FaceId = int;    // canonical id of a face: the smallest dart id in its face orbit

/// Dart-based combinatorial map of a graph cellularly embedded on an
/// orientable surface. rotation(d) is the next dart counterclockwise around
/// the vertex d emanates from; twin(d) is the reversal of d. Faces are the
/// orbits of rotation o twin. Immutable after construction.
class EmbeddedGraph {
public:
    /// Placeholder; only maps coming out of build() are usable.
    EmbeddedGraph() = default;

    /// Validates the permutations, traces vertices and faces, and computes the
    /// Euler genus. Weights are per edge, indexed by the edge's minimal dart id;
    /// edges absent from `weights` get weight 0.
    static EmbeddedGraph build(std::vector<DartId> rotation,
                               std::vector<DartId> twin,
                               const std::vector<std::pair<EdgeId, Rational>>& weights);

    int dart_count() const { return static_cast<int>(rotation_.size()); }
    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int face_count() const { return f_; }
    int euler_genus() const { return genus_; }

    DartId rotation(DartId d) const { return rotation_[d]; }
    DartId rotation_prev(DartId d) const { return rotation_prev_[d]; }
    DartId twin(DartId d) const { return twin_[d]; }
    /// Next dart along the facial walk: rotation(twin(d)).
    DartId next_on_face(DartId d) const { return rotation_[twin_[d]]; }
    DartId prev_on_face(DartId d) const { return twin_[rotation_prev_[d]]; }

    EdgeId edge_of(DartId d) const { return d < twin_[d] ? d : twin_[d]; }

    /// Dense vertex index in [0, vertex_count).
    int vertex_index(DartId d) const { return vertex_index_[d]; }
    /// Dense face index in [0, face_count).
    int face_index(DartId d) const { return face_index_[d]; }
    VertexId vertex_id(int vertex_index) const { return vertex_min_dart_[vertex_index]; }
    FaceId face_id(int face_index) const { return face_min_dart_[face_index]; }

    int degree(int vertex_index) const { return vertex_degree_[vertex_index]; }
    int face_degree(int face_index) const { return face_degree_[face_index]; }

    const Rational& weight(EdgeId e) const { return weights_[e]; }
    Rational total_weight() const;

    /// All edge ids (minimal dart per edge), ascending.
    std::vector<EdgeId> edges() const;
    /// Darts of vertex `vertex_index` in rotation order, starting at the
    /// minimal dart id.
    std::vector<DartId> darts_of_vertex(int vertex_index) const;
    /// Darts of face `face_index` in facial-walk order, starting at the
    /// minimal dart id.
    std::vector<DartId> darts_of_face(int face_index) const;

    bool is_loop(EdgeId e) const { return vertex_index_[e] == vertex_index_[twin_[e]]; }

private:
    void trace();

    std::vector<DartId> rotation_;
    std::vector<DartId> rotation_prev_;
    std::vector<DartId> twin_;
    std::vector<Rational> weights_;  // indexed by dart id, meaningful at edge ids
    std::vector<int> vertex_index_;
    std::vector<int> face_index_;
    std::vector<DartId> vertex_min_dart_;
    std::vector<DartId> face_min_dart_;
    std::vector<int> vertex_degree_;
    std::vector<int> face_degree_;
    int n_ = 0, m_ = 0, f_ = 0, genus_ = 0;
};

struct Face {
    std::vector<DartId> darts;  // facial walk
    int degree = 0;
};

/// Candidate solution: a set of edges of a host map plus its exact length.
struct EdgeSubset {
    std::set<EdgeId> edges;
    Rational length;

    static EdgeSubset of(const EmbeddedGraph& g, const std::set<EdgeId>& edges);
};

/// Subgraph given as edges plus isolated vertices (needed because the
/// genus-0 cut graph is a single vertex).
struct Subgraph {
    std::set<EdgeId> edges;
    std::set<VertexId> isolated_vertices;
};

/// Connected piece of the surface obtained by cutting along a subgraph.
struct SurfacePiece {
    int genus = 0;            // Euler genus of the piece
    int boundary_cycles = 0;
    bool is_disk = false;

    std::vector<int> face_indices;  // faces of the host map inside this piece
};

std::vector<Face> trace_faces(const EmbeddedGraph& g);

int euler_genus(const EmbeddedGraph& g);

/// Cuts the surface along the subgraph H (edges + punctures at isolated
/// vertices) and returns the connected pieces.
std::vector<SurfacePiece> cut_along(const EmbeddedGraph& g, const Subgraph& h);

} // namespace surfcut
