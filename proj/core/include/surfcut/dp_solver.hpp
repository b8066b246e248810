#pragma once

#include <surfcut/cutgraph.hpp>
#include <surfcut/embedded_graph.hpp>
#include <surfcut/scdecomp.hpp>

#include <map>
#include <string>
#include <vector>

namespace surfcut {

/// Abstract combinatorial map that a partial solution induces on a region:
/// reduced (no internal degree-1 or degree-2 vertices), boundary-attached
/// vertices only on the region boundary.
struct RegionMap {
    std::string canonical;           // canonical encoding, see canonical_region_map
    int internal_high_degree_count = 0;
    std::vector<int> boundary_vertices;  // ascending host vertex indices
};

/// Assignment of a RegionMap's boundary vertices to boundary slots of the
/// region. Slots are keyed by host vertex; repeated occurrences on the
/// region boundary are distinct slots re-identified during gluing.
struct BoundaryPosition {
    std::vector<std::pair<int, int>> assignment;  // (boundary vertex, slot)
};

/// Enumerates isomorphism-distinct region maps with at most `boundary`
/// boundary-attached leaves: no degree-2 vertices, at most 4g vertices of
/// degree >= 3, degree-1 vertices only boundary-attached, plus at most one
/// isolated vertex (the genus-0 solution). Exhaustive and exponential;
/// throws BoundaryTooLarge above the edge cap.
std::vector<RegionMap> enumerate_region_maps(int boundary, int genus, int max_edges = 4);

struct DpEntry {
    Rational length;
    std::vector<EdgeId> edges;  // witness, ascending
};

/// Table at a decomposition-tree edge: canonical signature of the induced
/// (RegionMap, BoundaryPosition) pair -> best realizing partial subgraph.
struct DPTable {
    std::map<std::string, DpEntry> entries;
};

struct DpCaps {
    std::size_t max_table_entries = 200000;  // per-edge cap; WidthCapExceeded beyond
    int boundary_cap = 64;                   // BoundaryTooLarge beyond
    // total generated states per solve (counts bound-pruned states too, so
    // churny searches fail fast instead of spinning); WidthCapExceeded beyond
    std::size_t max_states = 5000000;
    // deterministic work budget: every generated state is charged 1 plus the
    // size of its edge set, so large maps cannot stretch a state budget into
    // hours; WidthCapExceeded beyond
    std::size_t max_work = 5000000;
};

struct DpStats {
    std::map<std::pair<int, int>, std::size_t> table_sizes;  // tree edge -> entries
    std::size_t peak_entries = 0;
    std::size_t states_generated = 0;
    std::size_t states_pruned_by_bound = 0;
    std::size_t work_units = 0;
};

/// Base case: the region around a single edge of g. Two entries: the edge
/// excluded (empty map, length 0) and included (single-edge map with its
/// endpoints on the boundary, length = weight).
DPTable leaf_table(const EmbeddedGraph& g, EdgeId e, const std::vector<int>& mid);

/// Recurrence: all unions of one entry per child, re-reduced against the
/// parent mid set; minimum length per signature, ties by lexicographically
/// smallest witness. Entries longer than `upper_bound` are dropped.
DPTable merge_tables(const EmbeddedGraph& g, const DPTable& t1, const DPTable& t2,
                     const std::vector<int>& parent_mid, const Rational& upper_bound,
                     const DpCaps& caps, DpStats* stats = nullptr);

/// Bottom-up DP over the decomposition tree of a validated SCD; returns the
/// minimum-length cut graph (certified by is_cut_graph; lexicographic
/// tie-break). Genus 0 returns the empty edge set (single-vertex solution).
EdgeSubset solve(const EmbeddedGraph& g, const SurfaceCutDecomposition& scd,
                 const DpCaps& caps = {}, DpStats* stats = nullptr,
                 const EdgeSubset* warm_start = nullptr);

/// Canonical signature of the partial subgraph `s` on host `g` against the
/// boundary vertex set `mid`: prunes internal degree-1 vertices, contracts
/// internal degree-2 paths, and encodes the resulting map with boundary
/// vertices labeled by (host vertex, host dart) and internal ones unlabeled.
/// Exposed for tests.
std::string partial_signature(const EmbeddedGraph& g, const std::vector<EdgeId>& s,
                              const std::vector<int>& mid);

} // namespace surfcut
