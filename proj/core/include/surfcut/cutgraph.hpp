#pragma once

#include <surfcut/embedded_graph.hpp>

#include <optional>

namespace surfcut {

/// Certificate that cutting the surface along H leaves a single disk.
struct CutCertificate {
    int face_count = 0;       // pieces of the surface cut along H
    long long euler_lhs = 0;  // v_H - e_H + face_count
    long long euler_rhs = 0;  // 2 - g
    bool valid = false;
};

/// Validity test for a cut graph given as edges plus isolated vertices
/// (the isolated-vertex form covers the genus-0 single-vertex solution).
CutCertificate is_cut_graph(const EmbeddedGraph& g, const Subgraph& h);

struct ReductionRecord {
    EdgeId edge = -1;                // edge id in the reduced map
    std::vector<EdgeId> host_path;   // the host edges it contracts, in order
};

struct ReducedGraph {
    // Empty when everything was pruned away (e.g. a bare path).
    std::optional<EmbeddedGraph> map;
    std::vector<ReductionRecord> contraction_log;
    // reduced vertex index -> host vertex index
    std::vector<int> to_host_vertex;
    Rational total_length;
};

/// Degree-1 pruning (except at boundary vertices) followed by contraction of
/// maximal paths through degree-2 vertices into single weighted edges.
/// Degree-2 vertices carrying a loop are irreducible and stay. The edge set
/// must span a connected subgraph.
ReducedGraph reduce(const EmbeddedGraph& g, const std::set<EdgeId>& h,
                    const std::set<VertexId>& boundary);

/// True iff the reduced cut graph has < 4g vertices and < 6g edges. Rejects
/// maps that are not actually reduced.
bool check_reduced_bounds(const ReducedGraph& r, int genus);

/// Greedy tree-cotree bootstrap: shortest-path tree from `root` plus
/// non-tree edges in increasing (weight + tree-distance) order that keep the
/// complement connected, then leaf pruning. Genus 0 yields the empty edge
/// set, read as the single-vertex cut graph at vertex id 0.
EdgeSubset baseline_cut_graph(const EmbeddedGraph& g, int root_vertex_index = 0);

/// Exhaustive minimum cut graph; ties broken by lexicographically smallest
/// edge-id set. Throws BudgetExceeded when m(G) > edge_budget.
EdgeSubset exact_cut_graph(const EmbeddedGraph& g, int edge_budget = 16);

/// From a subgraph whose pieces are all disks, removes heaviest edges
/// bordering two distinct pieces until one piece remains, then prunes
/// dangling trees. Result is a valid cut graph contained in H.
EdgeSubset prune_to_single_face(const EmbeddedGraph& g, const EdgeSubset& h);

} // namespace surfcut
