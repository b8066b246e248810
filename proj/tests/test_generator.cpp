#include <surfcut/generator.hpp>
#include <surfcut/map_io.hpp>

#include <doctest.h>

#include "fixtures.hpp"

using namespace surfcut;

TEST_CASE("genus 0 with one vertex is the single loop on the sphere") {
    GenParams p;
    p.genus = 0;
    p.target_n = 1;
    auto g = generate_instance(p);
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.euler_genus() == 0);
}

TEST_CASE("generation is deterministic per seed, bytes included") {
    GenParams p;
    p.genus = 2;
    p.target_n = 50;
    p.seed = 7;
    p.model = WeightModel::Uniform;
    auto a = write_map(generate_instance(p));
    auto b = write_map(generate_instance(p));
    CHECK(a == b);
    p.seed = 8;
    CHECK(write_map(generate_instance(p)) != a);
}

TEST_CASE("generated genus and vertex count always match the request") {
    for (int genus : {0, 2, 4, 6}) {
        for (int n : {1, 2, 9, 40}) {
            for (std::uint64_t seed : {1ULL, 5ULL, 23ULL}) {
                GenParams p;
                p.genus = genus;
                p.target_n = n;
                p.seed = seed;
                p.model = WeightModel::Metric;
                p.max_weight = 9;
                auto g = generate_instance(p);
                CHECK(g.euler_genus() == genus);
                CHECK(g.vertex_count() == n);
                for (EdgeId e : g.edges()) {
                    CHECK(g.weight(e) >= 1);
                    CHECK(g.weight(e) <= 18);
                }
            }
        }
    }
}

TEST_CASE("unit model yields unit weights; uniform respects the cap") {
    GenParams p;
    p.genus = 4;
    p.target_n = 12;
    p.seed = 3;
    auto g = generate_instance(p);
    for (EdgeId e : g.edges()) CHECK(g.weight(e) == 1);
    p.model = WeightModel::Uniform;
    p.max_weight = 5;
    auto h = generate_instance(p);
    bool nonunit = false;
    for (EdgeId e : h.edges()) {
        CHECK(h.weight(e) >= 1);
        CHECK(h.weight(e) <= 5);
        nonunit = nonunit || h.weight(e) != 1;
    }
    CHECK(nonunit);
}

TEST_CASE("infeasible generator parameters are rejected") {
    GenParams p;
    p.genus = 3;
    CHECK_THROWS_AS(generate_instance(p), Error);
    p.genus = -2;
    CHECK_THROWS_AS(generate_instance(p), Error);
    p.genus = 2;
    p.target_n = 0;
    CHECK_THROWS_AS(generate_instance(p), Error);
}
