#include <doctest.h>

#include "fixtures.hpp"

using namespace surfcut;

TEST_CASE("triangle on the sphere traces two faces") {
    auto g = fixtures::triangle_sphere(2, 3, 5);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 2);
    CHECK(g.euler_genus() == 0);
    CHECK(g.total_weight() == Rational(10));
    for (int fi = 0; fi < g.face_count(); ++fi) CHECK(g.face_degree(fi) == 3);
    auto faces = trace_faces(g);
    int darts_seen = 0;
    for (const auto& f : faces) darts_seen += f.degree;
    CHECK(darts_seen == g.dart_count());
}

TEST_CASE("torus bouquet has one square face and Euler genus 2") {
    auto g = fixtures::torus_bouquet();
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 2);
    CHECK(g.face_count() == 1);
    CHECK(g.face_degree(0) == 4);
    CHECK(g.euler_genus() == 2);
    CHECK(g.is_loop(0));
    CHECK(g.edges() == std::vector<EdgeId>{0, 2});
    CHECK(g.degree(0) == 4);
}

TEST_CASE("canonical bouquets hit every even genus") {
    for (int eg = 2; eg <= 8; eg += 2) {
        auto g = fixtures::canonical_bouquet(eg);
        CHECK(g.euler_genus() == eg);
        CHECK(g.face_count() == 1);
        CHECK(g.vertex_count() == 1);
    }
}

TEST_CASE("K5 with ascending rotations embeds with Euler genus 4") {
    // ascending neighbor order at every vertex yields exactly 3 faces
    auto g = fixtures::k5();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 10);
    CHECK(g.face_count() == 3);
    CHECK(g.euler_genus() == 4);
}

TEST_CASE("cube: six quadrilateral faces on the sphere") {
    auto g = fixtures::cube();
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    CHECK(g.face_count() == 6);
    CHECK(g.euler_genus() == 0);
    for (int fi = 0; fi < g.face_count(); ++fi) CHECK(g.face_degree(fi) == 4);
}

TEST_CASE("torus grid is a quadrangulation of genus 2") {
    auto g = fixtures::torus_grid(4);
    CHECK(g.vertex_count() == 16);
    CHECK(g.edge_count() == 32);
    CHECK(g.face_count() == 16);
    CHECK(g.euler_genus() == 2);
    for (int fi = 0; fi < g.face_count(); ++fi) CHECK(g.face_degree(fi) == 4);
}

TEST_CASE("build rejects malformed maps") {
    CHECK_THROWS_WITH_AS(EmbeddedGraph::build({0, 1}, {0, 1}, {}), doctest::Contains("FixedPointTwin"),
                         Error);
    // twin not an involution
    CHECK_THROWS_AS(EmbeddedGraph::build({1, 2, 3, 0}, {1, 2, 3, 0}, {}), Error);
    // rotation not a permutation
    CHECK_THROWS_AS(EmbeddedGraph::build({0, 0, 1, 2}, {1, 0, 3, 2}, {}), Error);
    // domain mismatch
    CHECK_THROWS_AS(EmbeddedGraph::build({0, 1}, {1, 0, 3, 2}, {}), Error);
    // empty
    CHECK_THROWS_AS(EmbeddedGraph::build({}, {}, {}), Error);
    // negative weight
    CHECK_THROWS_AS(EmbeddedGraph::build({2, 3, 1, 0}, {1, 0, 3, 2}, {{0, Rational(-1)}}), Error);
    // disconnected: two separate one-edge spheres
    CHECK_THROWS_AS(EmbeddedGraph::build({1, 0, 3, 2}, {1, 0, 3, 2}, {}), Error);
}

TEST_CASE("error codes reach the caller") {
    try {
        EmbeddedGraph::build({0, 1}, {0, 1}, {});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FixedPointTwin);
    }
}

TEST_CASE("cut along one loop of the torus leaves an annulus") {
    auto g = fixtures::torus_bouquet();
    auto pieces = cut_along(g, Subgraph{{0}, {}});
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].genus == 0);
    CHECK(pieces[0].boundary_cycles == 2);
    CHECK(!pieces[0].is_disk);
}

TEST_CASE("cut along both loops of the torus leaves a disk") {
    auto g = fixtures::torus_bouquet();
    auto pieces = cut_along(g, Subgraph{{0, 2}, {}});
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].is_disk);
}

TEST_CASE("cut along the whole triangle splits the sphere in two disks") {
    auto g = fixtures::triangle_sphere();
    auto pieces = cut_along(g, Subgraph{{0, 1, 2}, {}});
    REQUIRE(pieces.size() == 2);
    for (const auto& p : pieces) CHECK(p.is_disk);
}

TEST_CASE("cut along a single sphere edge leaves a disk") {
    auto g = fixtures::triangle_sphere();
    auto pieces = cut_along(g, Subgraph{{0}, {}});
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].genus == 0);
    CHECK(pieces[0].boundary_cycles == 1);
    CHECK(pieces[0].is_disk);
}

TEST_CASE("puncturing the sphere at a vertex leaves a disk") {
    auto g = fixtures::triangle_sphere();
    auto pieces = cut_along(g, Subgraph{{}, {0}});
    REQUIRE(pieces.size() == 1);
    CHECK(pieces[0].boundary_cycles == 1);
    CHECK(pieces[0].is_disk);
}

TEST_CASE("cutting along nothing is rejected") {
    auto g = fixtures::triangle_sphere();
    CHECK_THROWS_AS(cut_along(g, Subgraph{}), Error);
}

TEST_CASE("canonical ids are minimal orbit darts") {
    auto g = fixtures::triangle_sphere();
    CHECK(g.vertex_id(g.vertex_index(0)) == 0);
    CHECK(g.edge_of(3) == 0);
    auto dv = g.darts_of_vertex(g.vertex_index(4));
    CHECK(dv.front() == 4);
}
