#pragma once

#include <surfcut/embedded_graph.hpp>

#include <cstdint>

namespace surfcut {

enum class WeightModel {
    Unit,     // every edge weight 1
    Uniform,  // independent integer weights in [1, max_weight]
    Metric,   // w(uv) = r(u) + r(v) for random vertex potentials r in [1, max_weight]
};

struct GenParams {
    int genus = 0;            // Euler genus, even (orientable)
    int target_n = 1;         // exact number of vertices of the output
    WeightModel model = WeightModel::Unit;
    std::int64_t max_weight = 100;
    std::uint64_t seed = 0;
};

/// Deterministically generates a connected cellularly embedded graph of exactly
/// the requested Euler genus: the canonical one-vertex system of loops, refined
/// by seeded vertex splits (raising the vertex count to target_n) interleaved
/// with seeded face splits.
EmbeddedGraph generate_instance(const GenParams& params);

} // namespace surfcut
