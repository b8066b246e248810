#pragma once

#include <surfcut/embedded_graph.hpp>

#include <map>
#include <vector>

namespace fixtures {

using namespace surfcut;

// one vertex, loops a (darts 0/1) and b (darts 2/3), rotation (a, b, a', b'):
// the canonical torus polygon, one face of degree 4, Euler genus 2
inline EmbeddedGraph torus_bouquet(Rational wa = 3, Rational wb = 5) {
    std::vector<DartId> rot = {2, 3, 1, 0};
    std::vector<DartId> twin = {1, 0, 3, 2};
    return EmbeddedGraph::build(rot, twin, {{0, wa}, {2, wb}});
}

// canonical polygon bouquet of Euler genus eg (eg even): eg loops, rotation
// (a1, b1, a1', b1', a2, ...)
inline EmbeddedGraph canonical_bouquet(int eg) {
    int pairs = eg / 2;
    std::vector<DartId> rot(4 * pairs), twin(4 * pairs);
    std::vector<DartId> order;
    for (int i = 0; i < pairs; ++i) {
        twin[4 * i] = 4 * i + 1;
        twin[4 * i + 1] = 4 * i;
        twin[4 * i + 2] = 4 * i + 3;
        twin[4 * i + 3] = 4 * i + 2;
        order.insert(order.end(), {4 * i, 4 * i + 2, 4 * i + 1, 4 * i + 3});
    }
    for (size_t i = 0; i < order.size(); ++i) rot[order[i]] = order[(i + 1) % order.size()];
    std::vector<std::pair<EdgeId, Rational>> w;
    for (int i = 0; i < pairs; ++i) {
        w.emplace_back(4 * i, 1);
        w.emplace_back(4 * i + 2, 1);
    }
    return EmbeddedGraph::build(rot, twin, w);
}

// simple-graph builder from cyclic neighbor lists (no loops/multi-edges)
inline EmbeddedGraph from_neighbor_lists(const std::vector<std::vector<int>>& nbrs,
                                         Rational unit_weight = 1) {
    std::map<std::pair<int, int>, DartId> dart_of;
    int d = 0;
    for (size_t u = 0; u < nbrs.size(); ++u)
        for (int v : nbrs[u]) dart_of[{static_cast<int>(u), v}] = d++;
    std::vector<DartId> rot(d), twin(d);
    std::vector<std::pair<EdgeId, Rational>> w;
    for (size_t u = 0; u < nbrs.size(); ++u) {
        for (size_t i = 0; i < nbrs[u].size(); ++i) {
            int v = nbrs[u][i];
            DartId x = dart_of[{static_cast<int>(u), v}];
            rot[x] = dart_of[{static_cast<int>(u), nbrs[u][(i + 1) % nbrs[u].size()]}];
            twin[x] = dart_of[{v, static_cast<int>(u)}];
            if (x < twin[x]) w.emplace_back(x, unit_weight);
        }
    }
    return EmbeddedGraph::build(rot, twin, w);
}

// triangle on the sphere: u--w--z, two faces
inline EmbeddedGraph triangle_sphere(Rational w01 = 1, Rational w02 = 1, Rational w12 = 1) {
    // u: darts 0 (to w), 1 (to z); w: 2 (to z), 3 (to u); z: 4 (to u), 5 (to w)
    std::vector<DartId> rot = {1, 0, 3, 2, 5, 4};
    std::vector<DartId> twin = {3, 4, 5, 0, 1, 2};
    return EmbeddedGraph::build(rot, twin, {{0, w01}, {1, w02}, {2, w12}});
}

inline EmbeddedGraph cube() {
    return from_neighbor_lists({{1, 4, 3},
                                {2, 5, 0},
                                {3, 6, 1},
                                {0, 7, 2},
                                {0, 5, 7},
                                {1, 6, 4},
                                {2, 7, 5},
                                {3, 4, 6}});
}

inline EmbeddedGraph k5() {
    std::vector<std::vector<int>> nbrs(5);
    for (int u = 0; u < 5; ++u)
        for (int v = 0; v < 5; ++v)
            if (u != v) nbrs[u].push_back(v);
    return from_neighbor_lists(nbrs);
}

// k x k unit grid on the torus: vertex (i,j) has darts 4v..4v+3 toward
// east, north, west, south
inline EmbeddedGraph torus_grid(int k, Rational unit_weight = 1) {
    auto vid = [&](int i, int j) { return ((i % k + k) % k) * k + ((j % k + k) % k); };
    const int n = k * k;
    std::vector<DartId> rot(4 * n), twin(4 * n);
    std::vector<std::pair<EdgeId, Rational>> w;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            int v = vid(i, j);
            for (int s = 0; s < 4; ++s) rot[4 * v + s] = 4 * v + (s + 1) % 4;
            twin[4 * v + 0] = 4 * vid(i, j + 1) + 2;  // east meets west
            twin[4 * v + 2] = 4 * vid(i, j - 1) + 0;
            twin[4 * v + 1] = 4 * vid(i - 1, j) + 3;  // north meets south
            twin[4 * v + 3] = 4 * vid(i + 1, j) + 1;
        }
    }
    for (int d = 0; d < 4 * n; ++d)
        if (d < twin[d]) w.emplace_back(d, unit_weight);
    return EmbeddedGraph::build(rot, twin, w);
}

} // namespace fixtures
