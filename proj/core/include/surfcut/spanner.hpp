#pragma once

#include <surfcut/derived_maps.hpp>
#include <surfcut/embedded_graph.hpp>
#include <surfcut/mortar.hpp>

#include <set>
#include <vector>

namespace surfcut {

/// Minimum-length Steiner tree connecting the terminal vertices of `m`,
/// as an edge subset of `m`. Exact (Dreyfus-Wagner); cost is exponential in
/// the number of terminals only.
EdgeSubset brick_steiner_tree(const EmbeddedGraph& m, const std::vector<int>& terminals);

struct Spanner {
    EdgeSubset host_edges;     // spanner edges, in host edge ids
    Rational factor_witness;   // length(spanner) / length(baseline cut graph)
    bool heuristic = false;    // true when the portal count exceeded the cap
};

/// Union, over every brick and every nonempty subset of its portals, of an
/// optimal Steiner tree for that subset inside the brick, plus the mortar.
/// When a brick has more than `theta_cap` portals only subsets of size <= 4
/// are used and the result is flagged heuristic.
Spanner build_spanner(const EmbeddedGraph& g, const MortarGraph& mg,
                      const std::vector<Brick>& bricks,
                      const std::vector<std::vector<int>>& portals,
                      const ApproxParams& params, long long theta_cap = 12);

struct ContractionChoice {
    std::vector<std::set<EdgeId>> classes;  // edge classes by face level mod k
    int chosen_class = -1;                  // index of the lightest class
    std::set<EdgeId> chosen;
    Rational chosen_length = 0;
};

/// Partitions the edges of `gspan` into k classes by the BFS level of their
/// faces (distance from a root face across edges) taken mod k, and picks the
/// lightest class. By pigeonhole its length is at most total/k.
ContractionChoice contraction_partition(const EmbeddedGraph& gspan, int k);

struct ContractLift {
    ContractResult contracted;
    std::set<EdgeId> lifted;  // the contracted class, to re-add on lifting
    Rational lift_cost = 0;
};

/// Contracts the lightest partition class of `gspan`.
ContractLift contract_lightest(const EmbeddedGraph& gspan, int k);

} // namespace surfcut
