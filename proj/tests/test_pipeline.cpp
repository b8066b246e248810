#include <doctest.h>

#include <surfcut/cutgraph.hpp>
#include <surfcut/generator.hpp>
#include <surfcut/pipeline.hpp>

#include "fixtures.hpp"

using namespace surfcut;

namespace {

std::string hashable_part(const std::string& machine) {
    return machine.substr(0, machine.find("[timing]"));
}

} // namespace

TEST_CASE("pipeline on a genus-0 map is the single-vertex solution") {
    auto g = fixtures::cube();
    PipelineOptions opts;
    auto res = run_pipeline(g, opts);
    CHECK(res.report.certificate_valid);
    CHECK(res.report.final_length == "0");
    CHECK(res.solution.vertex.has_value());
    CHECK(res.solution.edges.empty());
}

TEST_CASE("pipeline on the torus bouquet matches the exact oracle at epsilon 1") {
    auto g = fixtures::torus_bouquet();
    PipelineOptions opts;
    opts.epsilon = 1;
    auto approx = run_pipeline(g, opts);
    CHECK(approx.report.certificate_valid);
    CHECK(approx.report.pigeonhole_ok);
    CHECK(parse_rational(approx.report.final_length) == 8);

    PipelineOptions eo;
    eo.mode = PipelineMode::Exact;
    auto exact = run_pipeline(g, eo);
    CHECK(exact.report.final_length == approx.report.final_length);
}

TEST_CASE("pipeline output always certifies and respects the pigeonhole bound") {
    for (std::uint64_t seed : {3u, 11u, 19u}) {
        auto g = generate_instance({2, 6, WeightModel::Uniform, 9, seed});
        PipelineOptions opts;
        opts.epsilon = make_rational(1, 2);
        opts.seed = seed;
        auto res = run_pipeline(g, opts);
        CHECK(res.report.certificate_valid);
        CHECK(res.report.pigeonhole_ok);
        Subgraph sub;
        sub.edges = res.solution.edges;
        CHECK(is_cut_graph(g, sub).valid);
        // approx never beats the spanner bound from below 0
        CHECK(parse_rational(res.report.final_length) > 0);
    }
}

TEST_CASE("machine reports are deterministic outside the timing section") {
    auto g = generate_instance({4, 5, WeightModel::Uniform, 7, 42});
    PipelineOptions opts;
    opts.epsilon = make_rational(1, 2);
    auto a = run_pipeline(g, opts);
    auto b = run_pipeline(g, opts);
    CHECK(hashable_part(report_machine(a.report)) == hashable_part(report_machine(b.report)));
    CHECK(a.solution.edges == b.solution.edges);
    CHECK(report_machine(a.report).find("[timing]") != std::string::npos);
    CHECK(hashable_part(report_machine(a.report)).find("time_") == std::string::npos);
}

TEST_CASE("spanner-only mode emits the pruned spanner") {
    auto g = fixtures::torus_grid(2);
    PipelineOptions opts;
    opts.mode = PipelineMode::SpannerOnly;
    auto res = run_pipeline(g, opts);
    CHECK(res.report.certificate_valid);
    CHECK(!res.report.dp_solution_lifted);
    Subgraph sub;
    sub.edges = res.solution.edges;
    CHECK(is_cut_graph(g, sub).valid);
}
