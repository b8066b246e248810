#include <CLI11.hpp>

#include <surfcut/cutgraph.hpp>
#include <surfcut/errors.hpp>
#include <surfcut/generator.hpp>
#include <surfcut/map_io.hpp>
#include <surfcut/pipeline.hpp>
#include <surfcut/scdecomp.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

namespace {

using namespace surfcut;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitCaps = 3;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case ErrorCode::ParseError:
            return kExitParse;
        case ErrorCode::BudgetExceeded:
        case ErrorCode::WidthCapExceeded:
        case ErrorCode::NoosesCapExceeded:
        case ErrorCode::BoundaryTooLarge:
        case ErrorCode::InfeasibleParameters:
        case ErrorCode::NonPositiveEpsilon:
        case ErrorCode::HeavyWeightTooSmall:
            return kExitCaps;
        default:
            return kExitInvalid;
    }
}

int thread_budget() {
    if (const char* env = std::getenv("SURFCUT_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

WeightModel parse_model(const std::string& s) {
    if (s == "unit") return WeightModel::Unit;
    if (s == "uniform") return WeightModel::Uniform;
    if (s == "metric") return WeightModel::Metric;
    fail(ErrorCode::ParseError, "unknown weight model: " + s);
}

Rational req_rational(const std::string& text) {
    auto r = parse_rational(text);
    if (!r) fail(ErrorCode::ParseError, "bad rational: " + text);
    return *r;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::ParseError, "cannot open for writing: " + path);
    out << body;
}

std::string darts_line(const std::vector<DartId>& ds) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ds.size(); ++i) os << (i ? " " : "") << ds[i];
    return os.str();
}

struct SolveArgs {
    std::string map_path, out_path, report_path, machine_path;
    std::string epsilon = "1";
    std::string mode = "approx";
    std::string dump_mortar, dump_spanner, dump_dp_stats;
    long long theta = -1, k = -1, theta_cap = 8;
    int oracle_budget = 16;
};

int cmd_solve(const SolveArgs& a) {
    auto g = read_map_file(a.map_path);
    PipelineOptions opts;
    opts.epsilon = req_rational(a.epsilon);
    opts.mode = a.mode == "exact"          ? PipelineMode::Exact
                : a.mode == "spanner-only" ? PipelineMode::SpannerOnly
                                           : PipelineMode::Approx;
    opts.theta_override = a.theta;
    opts.k_override = a.k;
    opts.theta_cap = a.theta_cap;
    opts.oracle_budget = a.oracle_budget;
    DpStats stats;
    if (!a.dump_dp_stats.empty()) opts.dp_stats = &stats;

    auto res = run_pipeline(g, opts);

    if (!a.dump_mortar.empty() || !a.dump_spanner.empty()) {
        ApproxParams params = derive_params(g.euler_genus(), opts.epsilon, opts.alpha);
        if (opts.theta_override > 0) params.theta = opts.theta_override;
        if (params.theta > opts.theta_cap) params.theta = opts.theta_cap;
        auto mg = build_mortar(g, params);
        auto bricks = extract_bricks(g, mg, params);
        if (!a.dump_mortar.empty()) {
            std::ostringstream os;
            for (const auto& b : bricks)
                os << "brick " << b.boundary_face << " N " << darts_line(b.north) << " E "
                   << darts_line(b.east) << " S " << darts_line(b.south) << " W "
                   << darts_line(b.west) << "\n";
            write_file(a.dump_mortar, os.str());
        }
        if (!a.dump_spanner.empty()) {
            std::vector<std::vector<int>> portals;
            for (const auto& b : bricks) portals.push_back(select_portals(b, params.theta));
            auto sp = build_spanner(g, mg, bricks, portals, params);
            std::ostringstream os;
            for (EdgeId e : sp.host_edges.edges) os << "edge " << e << "\n";
            os << "length " << rational_to_string(sp.host_edges.length) << "\n";
            os << "factor " << rational_to_string(sp.factor_witness) << "\n";
            write_file(a.dump_spanner, os.str());
        }
    }
    if (!a.dump_dp_stats.empty()) {
        std::ostringstream os;
        os << "peak_entries " << stats.peak_entries << "\n";
        os << "states_generated " << stats.states_generated << "\n";
        os << "states_pruned_by_bound " << stats.states_pruned_by_bound << "\n";
        os << "tables " << stats.table_sizes.size() << "\n";
        for (const auto& [key, size] : stats.table_sizes)
            os << "table_" << key.first << "_" << key.second << " " << size << "\n";
        write_file(a.dump_dp_stats, os.str());
    }

    if (!a.out_path.empty()) write_solution_file(res.solution, a.out_path);
    if (!a.machine_path.empty()) write_file(a.machine_path, report_machine(res.report));
    std::string human = report_human(res.report);
    if (!a.report_path.empty())
        write_file(a.report_path, human);
    else
        std::cout << human;
    return res.report.certificate_valid ? kExitOk : kExitInvalid;
}

int cmd_verify(const std::string& map_path, const std::string& sol_path) {
    auto g = read_map_file(map_path);
    auto s = read_solution_file(sol_path);
    Subgraph sub;
    sub.edges = s.edges;
    if (s.vertex) sub.isolated_vertices.insert(*s.vertex);
    for (EdgeId e : s.edges)
        if (e < 0 || e >= g.dart_count() || g.edge_of(e) != e)
            fail(ErrorCode::ParseError, "solution references a non-edge id");
    auto cert = is_cut_graph(g, sub);
    Rational len = 0;
    for (EdgeId e : s.edges) len += g.weight(e);
    std::cout << "faces_after_cut " << cert.face_count << "\n";
    std::cout << "euler_lhs " << cert.euler_lhs << "\n";
    std::cout << "euler_rhs " << cert.euler_rhs << "\n";
    std::cout << "declared_length " << rational_to_string(s.length) << "\n";
    std::cout << "recomputed_length " << rational_to_string(len) << "\n";
    std::cout << "valid " << (cert.valid && len == s.length ? 1 : 0) << "\n";
    return (cert.valid && len == s.length) ? kExitOk : kExitInvalid;
}

struct CompareArgs {
    std::string map_path;
    std::string epsilon = "1";
    std::vector<std::uint64_t> seeds;
    int genus = 2, target_n = 4;
    std::string model = "uniform";
    long long max_weight = 9;
    int oracle_budget = 16;
    std::string out_csv;
};

int cmd_compare(const CompareArgs& a) {
    std::vector<std::string> rows(a.seeds.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::atomic<int> fail_code{kExitOk};
    auto work = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= a.seeds.size() || failed) return;
            try {
                EmbeddedGraph g = a.map_path.empty()
                                      ? generate_instance({a.genus, a.target_n,
                                                           parse_model(a.model), a.max_weight,
                                                           a.seeds[i]})
                                      : read_map_file(a.map_path);
                PipelineOptions eo;
                eo.mode = PipelineMode::Exact;
                eo.oracle_budget = a.oracle_budget;
                eo.seed = a.seeds[i];
                auto exact = run_pipeline(g, eo);
                PipelineOptions ao;
                ao.mode = PipelineMode::Approx;
                ao.epsilon = req_rational(a.epsilon);
                ao.seed = a.seeds[i];
                auto approx = run_pipeline(g, ao);
                Rational opt = req_rational(exact.report.final_length);
                Rational got = req_rational(approx.report.final_length);
                Rational ratio = opt > 0 ? got / opt : Rational(1);
                std::ostringstream os;
                os << a.seeds[i] << "," << rational_to_string(opt) << ","
                   << rational_to_string(got) << "," << rational_to_string(ratio) << ","
                   << approx.report.baseline_length << "," << approx.report.mortar_length << ","
                   << approx.report.spanner_length << "," << approx.report.contracted_weight
                   << "," << approx.report.dp_value;
                rows[i] = os.str();
            } catch (const Error& e) {
                failed = true;
                fail_code = exit_code_for(e);
                std::cerr << "seed " << a.seeds[i] << ": " << e.what() << "\n";
            }
        }
    };
    int nt = std::min<int>(thread_budget(), std::max<std::size_t>(a.seeds.size(), 1));
    std::vector<std::thread> pool;
    for (int t = 1; t < nt; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (failed) return fail_code;
    std::ostringstream os;
    os << "seed,opt,approx,ratio,baseline,mortar,spanner,contracted,dp\n";
    for (const auto& r : rows) os << r << "\n";
    if (a.out_csv.empty())
        std::cout << os.str();
    else
        write_file(a.out_csv, os.str());
    return kExitOk;
}

int cmd_bench(int genus, int max_n, const std::string& epsilon) {
    std::cout << "n,m,genus,stage,seconds\n";
    for (int n = 4; n <= max_n; n *= 2) {
        auto g = generate_instance({genus, n, WeightModel::Uniform, 9, 1});
        PipelineOptions opts;
        opts.epsilon = req_rational(epsilon);
        auto res = run_pipeline(g, opts);
        for (const auto& t : res.report.timings)
            std::cout << g.vertex_count() << "," << g.edge_count() << "," << g.euler_genus()
                      << "," << t.stage << "," << t.seconds << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surfcut: cut-graph approximation workbench for surface-embedded graphs"};
    app.require_subcommand(1);

    auto* geng = app.add_subcommand("generate", "generate a seeded instance");
    int g_genus = 0, g_n = 1;
    std::string g_model = "unit", g_out;
    long long g_maxw = 100;
    std::uint64_t g_seed = 0;
    geng->add_option("--genus", g_genus, "Euler genus (even)");
    geng->add_option("--n", g_n, "target vertex count");
    geng->add_option("--model", g_model, "unit|uniform|metric");
    geng->add_option("--max-weight", g_maxw, "weight bound for uniform/metric");
    geng->add_option("--seed", g_seed, "random seed");
    geng->add_option("--out", g_out, "output map file")->required();

    auto* solve = app.add_subcommand("solve", "run the pipeline on a map file");
    SolveArgs sa;
    solve->add_option("map", sa.map_path, "input map file")->required();
    solve->add_option("--epsilon", sa.epsilon, "approximation parameter p/q");
    solve->add_option("--mode", sa.mode, "approx|exact|spanner-only");
    solve->add_option("--out", sa.out_path, "solution file");
    solve->add_option("--report", sa.report_path, "human-readable report file");
    solve->add_option("--report-machine", sa.machine_path, "machine-readable report file");
    solve->add_option("--theta", sa.theta, "portals per brick override");
    solve->add_option("--theta-cap", sa.theta_cap, "hard portal cap");
    solve->add_option("--k", sa.k, "contraction modulus override");
    solve->add_option("--oracle-budget", sa.oracle_budget, "edge budget for exact mode");
    solve->add_option("--dump-mortar", sa.dump_mortar, "write brick boundary decomposition");
    solve->add_option("--dump-spanner", sa.dump_spanner, "write spanner edge list");
    solve->add_option("--dump-dp-stats", sa.dump_dp_stats, "write dynamic-program statistics");

    auto* verify = app.add_subcommand("verify", "re-certify a solution file");
    std::string v_map, v_sol;
    verify->add_option("map", v_map)->required();
    verify->add_option("solution", v_sol)->required();

    auto* compare = app.add_subcommand("compare", "oracle-vs-approx ratio table");
    CompareArgs ca;
    compare->add_option("map", ca.map_path, "fixed map file (otherwise generate per seed)");
    compare->add_option("--epsilon", ca.epsilon);
    compare->add_option("--seeds", ca.seeds, "list of seeds")->required();
    compare->add_option("--genus", ca.genus);
    compare->add_option("--n", ca.target_n);
    compare->add_option("--model", ca.model);
    compare->add_option("--max-weight", ca.max_weight);
    compare->add_option("--oracle-budget", ca.oracle_budget);
    compare->add_option("--out", ca.out_csv, "CSV output file");

    auto* bench = app.add_subcommand("bench", "timing table over instance sizes");
    int b_genus = 2, b_maxn = 64;
    std::string b_eps = "1";
    bench->add_option("--genus", b_genus);
    bench->add_option("--max-n", b_maxn);
    bench->add_option("--epsilon", b_eps);

    CLI11_PARSE(app, argc, argv);

    try {
        if (geng->parsed()) {
            auto g = surfcut::generate_instance(
                {g_genus, g_n, parse_model(g_model), g_maxw, g_seed});
            write_file(g_out, surfcut::write_map(g));
            return kExitOk;
        }
        if (solve->parsed()) return cmd_solve(sa);
        if (verify->parsed()) return cmd_verify(v_map, v_sol);
        if (compare->parsed()) return cmd_compare(ca);
        if (bench->parsed()) return cmd_bench(b_genus, b_maxn, b_eps);
    } catch (const surfcut::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
