#include <doctest.h>

#include <surfcut/cutgraph.hpp>
#include <surfcut/derived_maps.hpp>

#include "fixtures.hpp"

using namespace surfcut;

namespace {

// the map for "torus bouquet with loop b subdivided once": loop a (3) plus
// path b1 (2), b2 (4) through an extra vertex
EmbeddedGraph bouquet_b_subdivided() {
    // v: darts 0 (a), 1 (a'), 2 (b1 out), 3 (b2 in); u: 4 (b1 back), 5 (b2 out)
    std::vector<DartId> rot = {2, 3, 1, 0, 5, 4};
    std::vector<DartId> twin = {1, 0, 4, 5, 2, 3};
    return EmbeddedGraph::build(rot, twin, {{0, Rational(3)}, {2, Rational(2)}, {3, Rational(4)}});
}

} // namespace

TEST_CASE("is_cut_graph on the pinned examples") {
    auto sphere = fixtures::triangle_sphere();
    auto single_vertex = is_cut_graph(sphere, Subgraph{{}, {0}});
    CHECK(single_vertex.valid);
    CHECK(single_vertex.face_count == 1);
    CHECK(single_vertex.euler_lhs == 2);
    CHECK(single_vertex.euler_rhs == 2);

    auto torus = fixtures::torus_bouquet();
    auto just_a = is_cut_graph(torus, Subgraph{{0}, {}});
    CHECK(!just_a.valid);
    CHECK(just_a.face_count == 1);
    CHECK(just_a.euler_lhs == 1);
    CHECK(just_a.euler_rhs == 0);

    auto both = is_cut_graph(torus, Subgraph{{0, 2}, {}});
    CHECK(both.valid);

    CHECK_THROWS_AS(is_cut_graph(torus, Subgraph{}), Error);
}

TEST_CASE("certificates agree with cut_along piece shapes") {
    auto g = fixtures::torus_grid(3);
    std::vector<Subgraph> candidates = {
        Subgraph{{0, 4}, {}},
        Subgraph{{g.edge_of(0), g.edge_of(1), g.edge_of(2), g.edge_of(3)}, {}},
    };
    auto base = baseline_cut_graph(g);
    candidates.push_back(Subgraph{base.edges, {}});
    for (const auto& h : candidates) {
        auto cert = is_cut_graph(g, h);
        auto pieces = cut_along(g, h);
        bool one_disk = pieces.size() == 1 && pieces[0].is_disk;
        CHECK(cert.valid == one_disk);
    }
}

TEST_CASE("reduce prunes a bare path to nothing") {
    // path on 6 vertices along the sphere: take a triangle and keep 2 edges
    auto g = fixtures::triangle_sphere();
    auto r = reduce(g, {0, 2}, {});
    CHECK(!r.map.has_value());
    CHECK(r.total_length == Rational(0));
}

TEST_CASE("reduce keeps the bouquet fixed") {
    auto g = fixtures::torus_bouquet();
    auto r = reduce(g, {0, 2}, {});
    REQUIRE(r.map.has_value());
    CHECK(r.map->vertex_count() == 1);
    CHECK(r.map->edge_count() == 2);
    CHECK(r.total_length == Rational(8));
}

TEST_CASE("reduce contracts subdivided loops back to a bouquet") {
    auto g = fixtures::torus_bouquet(3, 5);
    auto s = subdivide_all_edges(subdivide_all_edges(g).map);
    auto se = s.map.edges();
    std::set<EdgeId> all(se.begin(), se.end());
    auto r = reduce(s.map, all, {});
    REQUIRE(r.map.has_value());
    CHECK(r.map->vertex_count() == 1);
    CHECK(r.map->edge_count() == 2);
    std::multiset<Rational> loop_weights;
    for (EdgeId e : r.map->edges()) loop_weights.insert(r.map->weight(e));
    CHECK(loop_weights == std::multiset<Rational>{Rational(3), Rational(5)});
    CHECK(r.total_length == Rational(8));
    // the log recovers host edges
    size_t logged = 0;
    for (const auto& rec : r.contraction_log) logged += rec.host_path.size();
    CHECK(logged == all.size());
}

TEST_CASE("reduce respects boundary vertices") {
    auto g = fixtures::triangle_sphere();
    // path 0--w--z anchored at both endpoints survives as one edge
    auto r = reduce(g, {0, 2}, {0, 4});
    REQUIRE(r.map.has_value());
    CHECK(r.map->vertex_count() == 2);
    CHECK(r.map->edge_count() == 1);
    CHECK(r.map->weight(0) == Rational(2));
}

TEST_CASE("check_reduced_bounds on canonical bouquets") {
    auto t = reduce(fixtures::torus_bouquet(), {0, 2}, {});
    CHECK(check_reduced_bounds(t, 2));
    auto g4 = fixtures::canonical_bouquet(4);
    auto e4 = g4.edges();
    std::set<EdgeId> all(e4.begin(), e4.end());
    CHECK(check_reduced_bounds(reduce(g4, all, {}), 4));

    // non-reduced input is rejected
    auto sub = subdivide_all_edges(fixtures::torus_bouquet());
    auto sube = sub.map.edges();
    std::set<EdgeId> se(sube.begin(), sube.end());
    ReducedGraph fake;
    fake.map = sub.map;
    CHECK_THROWS_AS(check_reduced_bounds(fake, 2), Error);
}

TEST_CASE("baseline cut graph on the pinned examples") {
    CHECK(baseline_cut_graph(fixtures::triangle_sphere()).edges.empty());

    auto b = baseline_cut_graph(fixtures::torus_bouquet(3, 5));
    CHECK(b.edges == std::set<EdgeId>{0, 2});
    CHECK(b.length == Rational(8));

    auto grid = fixtures::torus_grid(4);
    auto bg = baseline_cut_graph(grid);
    CHECK(is_cut_graph(grid, Subgraph{bg.edges, {}}).valid);
}

TEST_CASE("baseline is never shorter than the oracle") {
    auto g = fixtures::torus_grid(2);  // m = 8, oracle-solvable
    auto b = baseline_cut_graph(g);
    auto o = exact_cut_graph(g);
    CHECK(is_cut_graph(g, Subgraph{b.edges, {}}).valid);
    CHECK(is_cut_graph(g, Subgraph{o.edges, {}}).valid);
    CHECK(b.length >= o.length);
}

TEST_CASE("exact oracle on the pinned examples") {
    CHECK(exact_cut_graph(fixtures::triangle_sphere()).edges.empty());

    auto o = exact_cut_graph(fixtures::torus_bouquet(3, 5));
    CHECK(o.edges == std::set<EdgeId>{0, 2});
    CHECK(o.length == Rational(8));

    auto o2 = exact_cut_graph(bouquet_b_subdivided());
    CHECK(o2.edges == std::set<EdgeId>{0, 2, 3});
    CHECK(o2.length == Rational(9));

    CHECK_THROWS_AS(exact_cut_graph(fixtures::torus_grid(4)), Error);  // m = 32 over budget
}

TEST_CASE("oracle monotonicity under edge addition") {
    // the subdivided-b bouquet contains the bouquet's edge set: subdividing
    // is not edge addition, so build a direct pair instead: a torus grid and
    // the same grid with one edge weight reduced has OPT no larger
    auto g = fixtures::torus_grid(2);
    auto o = exact_cut_graph(g);
    // adding a parallel cheap edge can only help: emulate by a second map
    // with one weight lowered
    std::vector<std::pair<EdgeId, Rational>> w;
    std::vector<DartId> rot(g.dart_count()), twin(g.dart_count());
    for (int d = 0; d < g.dart_count(); ++d) {
        rot[d] = g.rotation(d);
        twin[d] = g.twin(d);
    }
    for (EdgeId e : g.edges()) w.emplace_back(e, e == 0 ? Rational(0) : g.weight(e));
    auto cheaper = EmbeddedGraph::build(rot, twin, w);
    CHECK(exact_cut_graph(cheaper).length <= o.length);
}

TEST_CASE("prune_to_single_face on the pinned examples") {
    // already a cut graph: unchanged
    auto torus = fixtures::torus_bouquet(3, 5);
    auto pruned = prune_to_single_face(torus, EdgeSubset::of(torus, {0, 2}));
    CHECK(pruned.edges == std::set<EdgeId>{0, 2});

    // sphere triangle: heaviest edge removed, path pruned away
    auto sphere = fixtures::triangle_sphere(1, 2, 3);
    auto p = prune_to_single_face(sphere, EdgeSubset::of(sphere, {0, 1, 2}));
    CHECK(p.edges.empty());
    CHECK(p.length == Rational(0));

    // bouquet plus a chord that splits the face: chord removed
    std::vector<DartId> rot = {4, 3, 1, 5, 2, 0};
    std::vector<DartId> twin = {1, 0, 3, 2, 5, 4};
    auto chorded = EmbeddedGraph::build(rot, twin,
                                        {{0, Rational(3)}, {2, Rational(5)}, {4, Rational(7)}});
    REQUIRE(chorded.euler_genus() == 2);
    REQUIRE(chorded.face_count() == 2);
    auto pc = prune_to_single_face(chorded, EdgeSubset::of(chorded, {0, 2, 4}));
    CHECK(pc.edges == std::set<EdgeId>{0, 2});
    CHECK(pc.length == Rational(8));

    // non-disk pieces are rejected
    CHECK_THROWS_AS(prune_to_single_face(torus, EdgeSubset::of(torus, {0})), Error);
}

TEST_CASE("prune result bounded between oracle and input") {
    auto g = fixtures::torus_grid(2);
    auto o = exact_cut_graph(g);
    std::set<EdgeId> rich = o.edges;
    rich.insert(g.edges()[0]);
    rich.insert(g.edges()[3]);
    auto pieces = cut_along(g, Subgraph{rich, {}});
    bool all_disks = true;
    for (const auto& p : pieces) all_disks = all_disks && p.is_disk;
    if (all_disks) {
        auto pr = prune_to_single_face(g, EdgeSubset::of(g, rich));
        CHECK(pr.length >= o.length);
        CHECK(pr.length <= EdgeSubset::of(g, rich).length);
        CHECK(is_cut_graph(g, Subgraph{pr.edges, {}}).valid);
    }
}
