#pragma once

#include <surfcut/derived_maps.hpp>
#include <surfcut/embedded_graph.hpp>

#include <set>
#include <vector>

namespace surfcut {

/// Approximation-scheme parameters; all derived values are exact rationals
/// or integers so runs are reproducible.
struct ApproxParams {
    Rational epsilon;        // > 0
    Rational alpha;          // mortar length factor (measured / supplied)
    long long kappa = 1;     // supercolumn spacing
    long long gamma = 1;     // joining-vertex bound
    long long theta = 1;     // portals per brick
    long long k_contraction = 2;
    Rational spanner_factor; // f(g, eps)
};

/// kappa = ceil((1+floor(log2(g+2))^2) / eps^3), gamma = ceil(kappa / eps^2.5),
/// theta = ceil(gamma * alpha / eps); throws NonPositiveEpsilon.
ApproxParams derive_params(int genus, const Rational& epsilon, const Rational& measured_alpha);

/// Mortar graph: a subgraph of G containing the baseline cut graph plus
/// columns (shortest paths in the cut-open disk); every kappa-th column is a
/// supercolumn. Faces of the mortar partition G into bricks.
struct MortarGraph {
    EdgeSubset subgraph;                  // host edge ids, includes the baseline
    EdgeSubset baseline;                  // the cut graph it was sliced along
    std::vector<CutOpenComponent> disk;   // G cut open along the baseline (1 piece)
    std::vector<EdgeSubset> columns;      // all columns, walk order
    std::vector<EdgeSubset> supercolumns; // every kappa-th column
    Rational length;                      // = subgraph.length
    Rational supercolumn_length;
};

MortarGraph build_mortar(const EmbeddedGraph& g, const ApproxParams& params);

/// Brick: one face of the mortar graph, cut open into a planar map. The
/// boundary walk decomposes into four (possibly empty) runs N, E, S, W in
/// order; N and S lie on columns (0-short by construction), E and W on the
/// slice boundary.
struct Brick {
    EmbeddedGraph map;
    std::vector<DartId> north, east, south, west;  // boundary darts, walk order
    std::vector<int> s_marks;                      // vertex indices on S
    std::vector<DartId> to_host;                   // brick dart -> host dart
    int boundary_face = -1;
};

std::vector<Brick> extract_bricks(const EmbeddedGraph& g, const MortarGraph& mg,
                                  const ApproxParams& params);

struct BrickPropertyReport {
    bool north_zero_short = false;
    bool south_eps_short = false;
    bool marks_ok = false;      // property-4 inequality at the emitted marks
    bool marks_within_cap = false;  // |s_marks| <= kappa + 1
    std::vector<std::string> violations;
};

BrickPropertyReport check_brick_properties(const Brick& b, const Rational& epsilon,
                                           long long kappa);

/// Greedy portal placement along the brick boundary from its minimal-id
/// vertex: at most theta portals, and every boundary vertex is within
/// boundary-distance l(dB)/theta of a portal (verified by the caller/tests).
std::vector<int> select_portals(const Brick& b, long long theta);

/// B+(MG, theta): the mortar map with every brick re-embedded in its face
/// and connected through zero-weight portal edges; `contracted` additionally
/// contracts the E and W boundary runs of every brick copy.
struct BrickCopyGraph {
    EmbeddedGraph map;                  // uncontracted B+
    std::set<EdgeId> portal_edges;      // weight-0 edges of `map`
    std::set<EdgeId> mortar_edges;      // mortar-copy edges of `map`
    std::vector<int> vertex_map;        // V(G) -> V(map), -1 if absent
    std::vector<int> brick_of_vertex;   // V(map) -> brick index, -1 on mortar
    std::vector<DartId> host_dart;      // dart of map -> host dart, -1 for portals
    EmbeddedGraph contracted;           // after E/W contraction
    std::vector<int> contract_vertex_map;  // V(map) -> V(contracted), -1 if gone
};

BrickCopyGraph brick_copy(const EmbeddedGraph& g, const MortarGraph& mg,
                          const std::vector<Brick>& bricks,
                          const std::vector<std::vector<int>>& portals,
                          const ApproxParams& params);

} // namespace surfcut
