#include <surfcut/cutgraph.hpp>
#include <surfcut/errors.hpp>
#include <surfcut/pipeline.hpp>
#include <surfcut/scdecomp.hpp>

#include <chrono>
#include <sstream>

namespace surfcut {

namespace {

class StageClock {
public:
    explicit StageClock(std::vector<StageTiming>& out) : out_(out) {}
    void start(const std::string& name) {
        name_ = name;
        t0_ = std::chrono::steady_clock::now();
    }
    void stop() {
        if (name_.empty()) return;
        auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
        out_.push_back({name_, dt});
        name_.clear();
    }

private:
    std::vector<StageTiming>& out_;
    std::string name_;
    std::chrono::steady_clock::time_point t0_;
};

std::string rs(const Rational& r) { return rational_to_string(r); }

} // namespace

PipelineResult run_pipeline(const EmbeddedGraph& g, const PipelineOptions& opts) {
    PipelineResult res;
    PipelineReport& rep = res.report;
    rep.n = g.vertex_count();
    rep.m = g.edge_count();
    rep.genus = g.euler_genus();
    rep.seed = opts.seed;
    rep.epsilon = rs(opts.epsilon);
    rep.alpha = rs(opts.alpha);
    rep.mode = opts.mode == PipelineMode::Exact      ? "exact"
               : opts.mode == PipelineMode::Approx   ? "approx"
                                                     : "spanner-only";
    StageClock clock(rep.timings);

    if (g.euler_genus() == 0) {
        res.solution.vertex = 0;
        res.solution.length = 0;
        rep.baseline_length = rep.final_length = rep.dp_value = "0";
        rep.certificate_valid = true;
        rep.pigeonhole_ok = true;
        return res;
    }

    if (opts.mode == PipelineMode::Exact) {
        clock.start("oracle");
        auto opt = exact_cut_graph(g, opts.oracle_budget);
        clock.stop();
        res.solution.edges = opt.edges;
        res.solution.length = opt.length;
        rep.final_length = rep.dp_value = rs(opt.length);
        Subgraph sub;
        sub.edges = opt.edges;
        rep.certificate_valid = is_cut_graph(g, sub).valid;
        rep.pigeonhole_ok = true;
        if (!rep.certificate_valid)
            fail(ErrorCode::NotACutGraph, "oracle solution failed certification");
        return res;
    }

    ApproxParams params = derive_params(g.euler_genus(), opts.epsilon, opts.alpha);
    if (opts.theta_override > 0) params.theta = opts.theta_override;
    if (opts.k_override > 1) params.k_contraction = opts.k_override;
    if (params.theta > opts.theta_cap) params.theta = opts.theta_cap;
    rep.theta = params.theta;
    rep.k = params.k_contraction;

    clock.start("mortar");
    auto mg = build_mortar(g, params);
    clock.stop();
    rep.baseline_length = rs(mg.baseline.length);
    rep.mortar_length = rs(mg.length);
    rep.supercolumn_length = rs(mg.supercolumn_length);

    clock.start("bricks");
    auto bricks = extract_bricks(g, mg, params);
    std::vector<std::vector<int>> portals;
    for (const auto& b : bricks) portals.push_back(select_portals(b, params.theta));
    clock.stop();
    rep.bricks = static_cast<long long>(bricks.size());
    for (const auto& p : portals) rep.portals_total += static_cast<long long>(p.size());

    clock.start("spanner");
    auto sp = build_spanner(g, mg, bricks, portals, params);
    clock.stop();
    rep.spanner_length = rs(sp.host_edges.length);
    rep.spanner_factor = rs(sp.factor_witness);
    rep.spanner_heuristic = sp.heuristic;

    auto finish_with = [&](const EdgeSubset& cand, bool lifted) {
        auto pruned = prune_to_single_face(g, cand);
        Subgraph sub;
        sub.edges = pruned.edges;
        rep.certificate_valid = is_cut_graph(g, sub).valid;
        rep.dp_solution_lifted = lifted;
        rep.final_length = rs(pruned.length);
        res.solution.edges = pruned.edges;
        res.solution.length = pruned.length;
    };

    if (opts.mode == PipelineMode::SpannerOnly) {
        clock.start("prune");
        finish_with(sp.host_edges, false);
        clock.stop();
        rep.pigeonhole_ok = true;
        return res;
    }

    clock.start("contract");
    auto rest = restrict_to_edges(g, sp.host_edges.edges);
    auto cl = contract_lightest(rest.map, static_cast<int>(params.k_contraction));
    clock.stop();
    rep.contracted_weight = rs(cl.lift_cost);
    rep.pigeonhole_ok =
        cl.lift_cost * Rational(params.k_contraction) <= sp.host_edges.length;

    EdgeSubset dp;
    bool dp_ok = true;
    clock.start("dp");
    try {
        if (cl.contracted.map.euler_genus() == 0) {
            dp = EdgeSubset{{}, Rational(0)};
        } else {
            auto scd = build_scd(cl.contracted.map);
            dp = solve(cl.contracted.map, scd, opts.dp_caps, opts.dp_stats);
        }
    } catch (const Error&) {
        dp_ok = false;  // fall back to the spanner below
    }
    clock.stop();
    if (dp_ok) rep.dp_value = rs(dp.length);

    clock.start("lift");
    bool lifted_ok = false;
    if (dp_ok) {
        // contracted edge id -> spanner-map edge id
        std::map<EdgeId, EdgeId> inv;
        for (const auto& [olde, newe] : cl.contracted.edge_map) inv[newe] = olde;
        std::set<EdgeId> host;
        bool mapped = true;
        for (EdgeId e : dp.edges) {
            auto it = inv.find(e);
            if (it == inv.end()) {
                mapped = false;
                break;
            }
            host.insert(g.edge_of(rest.to_host[it->second]));
        }
        for (EdgeId e : cl.lifted) host.insert(g.edge_of(rest.to_host[e]));
        if (mapped) {
            auto cand = EdgeSubset::of(g, host);
            auto pruned = prune_to_single_face(g, cand);
            Subgraph sub;
            sub.edges = pruned.edges;
            if (is_cut_graph(g, sub).valid) {
                finish_with(cand, true);
                lifted_ok = true;
            }
        }
    }
    if (!lifted_ok) finish_with(sp.host_edges, false);
    clock.stop();
    return res;
}

std::string report_machine(const PipelineReport& r) {
    std::ostringstream os;
    os << "n " << r.n << "\n";
    os << "m " << r.m << "\n";
    os << "genus " << r.genus << "\n";
    os << "seed " << r.seed << "\n";
    os << "mode " << r.mode << "\n";
    os << "epsilon " << r.epsilon << "\n";
    os << "alpha " << r.alpha << "\n";
    os << "theta " << r.theta << "\n";
    os << "k " << r.k << "\n";
    os << "bricks " << r.bricks << "\n";
    os << "portals_total " << r.portals_total << "\n";
    auto emit = [&](const char* key, const std::string& v) {
        os << key << " " << (v.empty() ? "-" : v) << "\n";
    };
    emit("baseline_length", r.baseline_length);
    emit("mortar_length", r.mortar_length);
    emit("supercolumn_length", r.supercolumn_length);
    emit("spanner_length", r.spanner_length);
    emit("spanner_factor", r.spanner_factor);
    emit("contracted_weight", r.contracted_weight);
    emit("dp_value", r.dp_value);
    emit("final_length", r.final_length);
    os << "certificate_valid " << (r.certificate_valid ? 1 : 0) << "\n";
    os << "pigeonhole_ok " << (r.pigeonhole_ok ? 1 : 0) << "\n";
    os << "dp_solution_lifted " << (r.dp_solution_lifted ? 1 : 0) << "\n";
    os << "spanner_heuristic " << (r.spanner_heuristic ? 1 : 0) << "\n";
    os << "[timing]\n";
    for (const auto& t : r.timings) os << "time_" << t.stage << " " << t.seconds << "\n";
    return os.str();
}

std::string report_human(const PipelineReport& r) {
    std::ostringstream os;
    os << "instance: n=" << r.n << " m=" << r.m << " genus=" << r.genus << " seed=" << r.seed
       << "\n";
    os << "mode " << r.mode << ", epsilon " << r.epsilon << ", theta " << r.theta << ", k "
       << r.k << "\n";
    if (!r.baseline_length.empty()) os << "baseline cut graph length  " << r.baseline_length << "\n";
    if (!r.mortar_length.empty()) os << "mortar graph length        " << r.mortar_length << "\n";
    if (!r.spanner_length.empty())
        os << "spanner length             " << r.spanner_length << " (factor " << r.spanner_factor
           << ")\n";
    if (!r.contracted_weight.empty()) os << "contracted weight          " << r.contracted_weight << "\n";
    if (!r.dp_value.empty()) os << "dp value                   " << r.dp_value << "\n";
    os << "final length               " << r.final_length << "\n";
    os << "certificate " << (r.certificate_valid ? "valid" : "INVALID") << ", pigeonhole "
       << (r.pigeonhole_ok ? "ok" : "VIOLATED") << ", dp lift "
       << (r.dp_solution_lifted ? "used" : "fallback") << "\n";
    for (const auto& t : r.timings) os << "  " << t.stage << ": " << t.seconds << "s\n";
    return os.str();
}

} // namespace surfcut
