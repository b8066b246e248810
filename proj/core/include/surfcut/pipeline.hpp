#pragma once

#include <surfcut/dp_solver.hpp>
#include <surfcut/map_io.hpp>
#include <surfcut/mortar.hpp>
#include <surfcut/spanner.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace surfcut {

enum class PipelineMode { Exact, Approx, SpannerOnly };

struct StageTiming {
    std::string stage;
    double seconds = 0;
};

struct PipelineOptions {
    Rational epsilon = 1;
    PipelineMode mode = PipelineMode::Approx;
    Rational alpha = 2;          // assumed baseline-to-optimum ratio
    long long theta_override = -1;   // portals per brick; -1 = derived value
    long long k_override = -1;       // contraction modulus; -1 = derived value
    long long theta_cap = 8;         // portals per brick are clamped to this
    int oracle_budget = 16;          // edge budget for the exact mode
    DpCaps dp_caps;
    DpStats* dp_stats = nullptr;     // optional dynamic-program statistics sink
    std::uint64_t seed = 0;          // echoed into the report
};

struct PipelineReport {
    int n = 0, m = 0, genus = 0;
    std::uint64_t seed = 0;
    std::string mode;
    std::string epsilon;

    // per-stage lengths (rationals as strings, lowest terms)
    std::string baseline_length;
    std::string mortar_length;
    std::string supercolumn_length;
    std::string spanner_length;
    std::string contracted_weight;
    std::string dp_value;
    std::string final_length;

    // measured constants
    std::string alpha;            // assumed baseline ratio
    std::string spanner_factor;   // length(spanner)/length(baseline)
    long long theta = 0;
    long long k = 0;
    long long bricks = 0;
    long long portals_total = 0;

    bool certificate_valid = false;
    bool pigeonhole_ok = false;
    bool dp_solution_lifted = false;  // false = fell back to the pruned spanner
    bool spanner_heuristic = false;

    std::vector<StageTiming> timings;
};

struct PipelineResult {
    PipelineReport report;
    Solution solution;
};

/// Full approximation pipeline: mortar -> bricks -> portals -> spanner ->
/// contraction -> dynamic program -> lift and prune -> certify. Exact mode
/// runs the budgeted oracle instead; spanner-only stops after the spanner.
PipelineResult run_pipeline(const EmbeddedGraph& g, const PipelineOptions& opts);

/// Stable machine-readable report: `key value` lines. The timing section is
/// separated by a `[timing]` line; golden hashes cover only what precedes it.
std::string report_machine(const PipelineReport& r);
std::string report_human(const PipelineReport& r);

} // namespace surfcut
