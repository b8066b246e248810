#include <doctest.h>

#include <surfcut/map_io.hpp>

#include "fixtures.hpp"

using namespace surfcut;

TEST_CASE("map files round-trip bit-exactly") {
    for (const auto& g : {fixtures::torus_bouquet(Rational(3), Rational(5, 2)),
                          fixtures::triangle_sphere(2, 3, 5), fixtures::torus_grid(3)}) {
        std::string text = write_map(g);
        auto g2 = read_map_string(text);
        CHECK(write_map(g2) == text);
        CHECK(g2.euler_genus() == g.euler_genus());
        CHECK(g2.total_weight() == g.total_weight());
    }
}

TEST_CASE("map parser rejects malformed input") {
    CHECK_THROWS_AS(read_map_string(""), Error);
    CHECK_THROWS_AS(read_map_string("graph 4\n"), Error);
    CHECK_THROWS_AS(read_map_string("map x\n"), Error);
    CHECK_THROWS_AS(read_map_string("map 2\ndart 0 twin 1 next 0\n"), Error);  // missing dart 1
    CHECK_THROWS_AS(read_map_string("map 2\ndart 0 twin 1 next 0\ndart 1 twin 0 next 1\n"
                                    "weight 0 1/0\n"),
                    Error);
    try {
        read_map_string("map nope\n");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
    }
}

TEST_CASE("comments and duplicate darts") {
    auto g = read_map_string("# a loop on the sphere\nmap 2\ndart 0 twin 1 next 0\n"
                             "dart 1 twin 0 next 1\nweight 0 7/3\n");
    CHECK(g.edge_count() == 1);
    CHECK(g.weight(0) == Rational(7, 3));
    CHECK_THROWS_AS(read_map_string("map 2\ndart 0 twin 1 next 0\ndart 0 twin 1 next 0\n"),
                    Error);
}

TEST_CASE("solution files round-trip") {
    Solution s;
    s.edges = {0, 2, 5};
    s.length = Rational(17, 4);
    std::string text = write_solution(s);
    auto s2 = read_solution_string(text);
    CHECK(s2.edges == s.edges);
    CHECK(s2.length == s.length);
    CHECK(write_solution(s2) == text);

    Solution sv;
    sv.vertex = 0;
    sv.length = 0;
    auto sv2 = read_solution_string(write_solution(sv));
    CHECK(sv2.edges.empty());
    REQUIRE(sv2.vertex.has_value());
    CHECK(*sv2.vertex == 0);
    CHECK(write_solution(sv2) == write_solution(sv));
}

TEST_CASE("solution parser consistency checks") {
    CHECK_THROWS_AS(read_solution_string("cutgraph 2\nedge 0\nlength 1/1\n"), Error);
    CHECK_THROWS_AS(read_solution_string("cutgraph 0\n"), Error);
    CHECK_THROWS_AS(read_solution_string("edge 0\n"), Error);
}

TEST_CASE("rational formatting is canonical") {
    CHECK(rational_to_string(Rational(4, 2)) == "2/1");
    CHECK(rational_to_string(Rational(-3, 6)) == "-1/2");
    CHECK(*parse_rational("10") == Rational(10));
    CHECK(*parse_rational("6/4") == Rational(3, 2));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("a/b").has_value());
    CHECK(ceil_sqrt_rational(BigInt(9), BigInt(1)) == 3);
    CHECK(ceil_sqrt_rational(BigInt(10), BigInt(1)) == 4);
    CHECK(ceil_sqrt_rational(BigInt(1), BigInt(4)) == 1);
    CHECK(ceil_sqrt_rational(BigInt(97), BigInt(3)) == 6);  // sqrt(32.33) in (5,6]
}
