#pragma once

#include <surfcut/embedded_graph.hpp>

#include <map>
#include <set>
#include <unordered_map>
#include <vector>

namespace surfcut {

/// Unrooted decomposition tree: internal nodes have degree 3, leaves degree 1
/// and carry a label (an edge or vertex of the decomposed graph).
struct DecompTree {
    std::vector<std::vector<int>> adj;
    std::vector<int> leaf_label;  // -1 on internal nodes

    int node_count() const { return static_cast<int>(adj.size()); }
    bool is_leaf(int v) const { return adj[v].size() == 1; }
    /// All tree edges as (min node, max node) pairs, sorted.
    std::vector<std::pair<int, int>> edges() const;
    /// Labels of the leaves on `u`'s side of tree edge (u, v), ascending.
    std::vector<int> side_labels(int u, int v) const;
};

struct BranchDecomposition {
    DecompTree tree;
    int width = 0;  // max |mid(e)| over tree edges

    /// mid(e): vertices of g incident to leaf edges on both sides.
    std::vector<int> mid_set(const EmbeddedGraph& g, int u, int v) const;
    int compute_width(const EmbeddedGraph& g) const;
};

struct CarvingDecomposition {
    DecompTree tree;  // leaf labels are vertex indices of the carved graph
    int width = 0;    // max cut size (edges crossing) over tree edges
    bool is_bond = false;

    int compute_width(const EmbeddedGraph& m) const;
};

/// Closed curve on the surface meeting g only at vertices: an alternating
/// cyclic walk of vertices and faces of g.
struct Noose {
    struct Point {
        bool is_vertex;
        int index;  // vertex index or face index of g
    };
    std::vector<Point> walk;

    std::vector<int> vertices() const;
};

/// theta(N) = sum over vertices covered >= 2 times of (cover count - 1).
int theta_of_nooses(const std::vector<Noose>& nooses);

struct ScdEdgeData {
    std::vector<int> mid;         // mid(e), ascending vertex indices
    std::vector<Noose> nooses;    // boundary nooses of the two regions
    int theta = 0;
    bool two_regions = false;     // complement of the nooses has exactly 2 pieces
    int region_genus[2] = {0, 0}; // Euler genus of each region (boundaries capped)
    int boundary_cycles[2] = {0, 0};
    // Euler characteristic (V - E) of the union of boundary curves drawn on
    // the surface; 0 exactly when the nooses are disjoint simple circles
    int curve_chi = 0;
    bool curves_simple = false;
    std::vector<EdgeId> side_edges[2];
};

struct SurfaceCutDecomposition {
    BranchDecomposition branch;
    std::map<std::pair<int, int>, ScdEdgeData> per_edge;
    int noose_cap = 0;
    int theta_cap = 0;
};

struct PolyhedralizeResult {
    EmbeddedGraph map;
    // original edge -> ordered chain of light sub-edges realizing it
    std::unordered_map<EdgeId, std::vector<EdgeId>> chains_of;
    std::set<EdgeId> heavy_edges;  // everything that is not an original chain edge
};

/// Subdivides until loop- and multi-edge-free, superposes the medial graph
/// twice (heavy new edges), and fan-triangulates. Solutions avoiding heavy
/// edges correspond length-preservingly to solutions of g via chains_of.
PolyhedralizeResult polyhedralize(const EmbeddedGraph& g, const Rational& heavy_weight);

/// Report-style polyhedrality checks (exhaustive pieces are O(n^2)-ish and
/// meant for test-scale maps).
struct PolyhedralReport {
    bool simple = false;
    bool triangulated = false;
    bool three_connected = false;
    bool noose_girth_ok = false;  // no non-contractible noose through <= 2 vertices
};
PolyhedralReport check_polyhedral(const EmbeddedGraph& g);

/// Greedy branch decomposition (merge clusters sharing boundary, local
/// improvement); width recorded, not optimal. Requires m >= 2.
BranchDecomposition branch_decomposition(const EmbeddedGraph& g);

/// Same tree, each leaf e replaced by the medial vertex v_e.
CarvingDecomposition medial_carving_from_branch(const BranchDecomposition& bd,
                                                const EmbeddedGraph& g,
                                                const EmbeddedGraph& medial);

/// Bond carving of `m`: both sides of every tree edge induce connected
/// subgraphs. Bond inputs pass through unchanged; otherwise the carving is
/// rebuilt by recursive connected bisection.
CarvingDecomposition to_bond_carving(const CarvingDecomposition& cd, const EmbeddedGraph& m);

/// True iff every tree edge of cd has both leaf sides connected in m.
bool check_bond(const CarvingDecomposition& cd, const EmbeddedGraph& m);

/// Radial (vertex-face incidence) map of g with back-references.
struct RadialMap {
    EmbeddedGraph map;
    std::vector<int> vertex_of;   // radial vertex -> g vertex index or -1
    std::vector<int> face_of;     // radial vertex -> g face index or -1
    std::vector<EdgeId> quad_edge;  // radial face -> g edge id
    std::unordered_map<EdgeId, int> quad_of_edge;  // inverse
};
RadialMap radial_map(const EmbeddedGraph& g);

/// SCD from a bond carving of the medial graph: the same tree read as a
/// branch decomposition of g, with per-edge nooses extracted from the radial
/// map. Caps default to |N| <= 2g+2 and theta <= 4g+4 (0 genus floor of 1 pair).
SurfaceCutDecomposition surface_cut_from_bond(const CarvingDecomposition& bond,
                                              const EmbeddedGraph& g,
                                              int noose_cap = -1, int theta_cap = -1);

/// Validates the SCD definition invariants on every tree edge; throws
/// NooseExtractionFailure / NoosesCapExceeded on violation.
void validate_scd(const SurfaceCutDecomposition& scd, const EmbeddedGraph& g);

/// Convenience: branch -> medial carving -> bond -> SCD, validated.
SurfaceCutDecomposition build_scd(const EmbeddedGraph& g, int noose_cap = -1,
                                  int theta_cap = -1);

} // namespace surfcut
