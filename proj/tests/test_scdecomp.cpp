#include <doctest.h>

#include <surfcut/cutgraph.hpp>
#include <surfcut/derived_maps.hpp>
#include <surfcut/errors.hpp>
#include <surfcut/scdecomp.hpp>

#include "fixtures.hpp"

#include <algorithm>
#include <set>

using namespace surfcut;

TEST_CASE("branch decomposition of a two-edge path has width 1") {
    auto g = fixtures::from_neighbor_lists({{1}, {0, 2}, {1}});
    auto bd = branch_decomposition(g);
    CHECK(bd.width == 1);
    std::set<int> labels;
    for (int i = 0; i < bd.tree.node_count(); ++i)
        if (bd.tree.leaf_label[i] >= 0) labels.insert(bd.tree.leaf_label[i]);
    auto ev = g.edges();
    CHECK(labels == std::set<int>(ev.begin(), ev.end()));
}

TEST_CASE("branch decomposition of K4 has width 3") {
    auto g = fixtures::from_neighbor_lists({{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}});
    auto bd = branch_decomposition(g);
    CHECK(bd.width == 3);
    // every tree leaf carries a distinct edge, internal nodes have degree 3
    int leaves = 0;
    for (int i = 0; i < bd.tree.node_count(); ++i) {
        if (bd.tree.leaf_label[i] >= 0) {
            ++leaves;
            CHECK(bd.tree.adj[i].size() == 1);
        } else {
            CHECK((bd.tree.adj[i].size() == 3 || bd.tree.adj[i].empty()));
        }
    }
    CHECK(leaves == g.edge_count());
}

TEST_CASE("theta counts repeated noose-vertex visits") {
    auto vtx = [](int i) { return Noose::Point{true, i}; };
    auto fc = [](int i) { return Noose::Point{false, i}; };
    SUBCASE("two nooses sharing two vertices give theta 2") {
        Noose n1{{vtx(0), fc(0), vtx(1), fc(1)}};
        Noose n2{{vtx(0), fc(2), vtx(1), fc(3)}};
        CHECK(theta_of_nooses({n1, n2}) == 2);
    }
    SUBCASE("three nooses through one common vertex give theta 2") {
        Noose n1{{vtx(0), fc(0)}};
        Noose n2{{vtx(0), fc(1)}};
        Noose n3{{vtx(0), fc(2)}};
        CHECK(theta_of_nooses({n1, n2, n3}) == 2);
    }
    SUBCASE("disjoint nooses give theta 0") {
        Noose n1{{vtx(0), fc(0), vtx(1), fc(1)}};
        Noose n2{{vtx(2), fc(2), vtx(3), fc(3)}};
        CHECK(theta_of_nooses({n1, n2}) == 0);
    }
}

TEST_CASE("radial map of the triangle is the vertex-face incidence quad map") {
    auto g = fixtures::triangle_sphere();
    auto R = radial_map(g);
    CHECK(R.map.vertex_count() == 5);  // 3 vertices + 2 faces
    CHECK(R.map.edge_count() == 6);    // one edge per corner
    CHECK(R.map.face_count() == 3);    // one quad per edge
    CHECK(R.map.euler_genus() == 0);
    std::set<EdgeId> quad_labels(R.quad_edge.begin(), R.quad_edge.end());
    auto ev = g.edges();
    CHECK(quad_labels == std::set<EdgeId>(ev.begin(), ev.end()));
    for (int fi = 0; fi < R.map.face_count(); ++fi) {
        CHECK(R.map.face_degree(fi) == 4);
        CHECK(R.quad_of_edge.at(R.quad_edge[fi]) == fi);
    }
    // each radial vertex is exactly one of: original vertex, face
    for (int v = 0; v < R.map.vertex_count(); ++v)
        CHECK(((R.vertex_of[v] >= 0) ^ (R.face_of[v] >= 0)));
}

TEST_CASE("radial map of the torus bouquet keeps the surface") {
    auto g = fixtures::torus_bouquet();
    auto R = radial_map(g);
    CHECK(R.map.vertex_count() == 2);
    CHECK(R.map.edge_count() == 4);
    CHECK(R.map.face_count() == 2);
    CHECK(R.map.euler_genus() == 2);
    std::set<EdgeId> quad_labels(R.quad_edge.begin(), R.quad_edge.end());
    CHECK(quad_labels == std::set<EdgeId>{0, 2});
}

TEST_CASE("bond carving construction on the cube's medial graph") {
    auto g = fixtures::cube();
    auto medial = medial_graph(g);
    auto bd = branch_decomposition(g);
    auto cd = medial_carving_from_branch(bd, g, medial);
    auto bond = to_bond_carving(cd, medial);
    CHECK(bond.is_bond);
    CHECK(check_bond(bond, medial));
    CHECK(bond.width >= 2);
    // leaves enumerate all medial vertices
    std::set<int> labels;
    for (int i = 0; i < bond.tree.node_count(); ++i)
        if (bond.tree.leaf_label[i] >= 0) labels.insert(bond.tree.leaf_label[i]);
    CHECK(static_cast<int>(labels.size()) == medial.vertex_count());
}

TEST_CASE("surface cut decomposition of the torus bouquet") {
    auto g = fixtures::torus_bouquet();
    auto scd = build_scd(g);
    CHECK(scd.per_edge.size() == 1);
    const auto& data = scd.per_edge.begin()->second;
    CHECK(data.two_regions);
    CHECK(data.mid == std::vector<int>{0});
    CHECK(data.nooses.size() == 1);
    CHECK(data.theta == 1);  // the noose passes the vertex twice
    CHECK(data.region_genus[0] == 0);
    CHECK(data.region_genus[1] == 0);
    CHECK(!data.curves_simple);
    CHECK(data.side_edges[0].size() + data.side_edges[1].size() == 2);
}

TEST_CASE("surface cut decomposition of torus grids validates") {
    for (int k : {2, 3}) {
        auto g = fixtures::torus_grid(k);
        auto scd = build_scd(g, 100, 100);
        CHECK(scd.per_edge.size() == scd.branch.tree.edges().size());
        for (const auto& [e, data] : scd.per_edge) {
            CHECK(data.two_regions);
            CHECK(!data.nooses.empty());
            CHECK(!data.mid.empty());
            for (const Noose& n : data.nooses)
                for (int v : n.vertices())
                    CHECK(std::count(data.mid.begin(), data.mid.end(), v) == 1);
        }
    }
}

TEST_CASE("polyhedralize preserves genus and edge lengths via chains") {
    auto g = fixtures::torus_bouquet();  // baseline cut graph has length 8
    auto poly = polyhedralize(g, Rational(17));
    CHECK(poly.map.euler_genus() == 2);
    for (EdgeId e : g.edges()) {
        const auto& chain = poly.chains_of.at(e);
        CHECK(!chain.empty());
        Rational total = 0;
        for (EdgeId c : chain) {
            total += poly.map.weight(c);
            CHECK(!poly.heavy_edges.count(c));
        }
        CHECK(total == g.weight(e));
    }
    for (EdgeId e : poly.heavy_edges) CHECK(poly.map.weight(e) >= Rational(17) / 2);
    for (int fi = 0; fi < poly.map.face_count(); ++fi) CHECK(poly.map.face_degree(fi) == 3);
}

TEST_CASE("polyhedralize rejects a heavy weight at or below the baseline length") {
    auto g = fixtures::torus_bouquet();
    CHECK_THROWS_AS(polyhedralize(g, Rational(8)), Error);
    try {
        polyhedralize(g, Rational(8));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HeavyWeightTooSmall);
    }
}

TEST_CASE("polyhedral checks on the polyhedralized cube") {
    auto g = fixtures::cube();
    auto poly = polyhedralize(g, Rational(25));
    auto rep = check_polyhedral(poly.map);
    CHECK(rep.simple);
    CHECK(rep.triangulated);
    CHECK(rep.three_connected);
    CHECK(rep.noose_girth_ok);
}

TEST_CASE("polyhedral checks detect failures") {
    auto cube = fixtures::cube();
    auto rep = check_polyhedral(cube);
    CHECK(rep.simple);
    CHECK(!rep.triangulated);  // quadrilateral faces
    CHECK(rep.three_connected);
    auto bouquet = fixtures::torus_bouquet();
    CHECK(!check_polyhedral(bouquet).simple);
}
