#include <surfcut/cutgraph.hpp>
#include <surfcut/derived_maps.hpp>
#include <surfcut/errors.hpp>
#include <surfcut/scdecomp.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>

namespace surfcut {

// ---------------------------------------------------------------- DecompTree

std::vector<std::pair<int, int>> DecompTree::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < node_count(); ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> DecompTree::side_labels(int u, int v) const {
    std::vector<int> out;
    std::vector<char> seen(node_count(), 0);
    seen[v] = 1;
    std::vector<int> stack = {u};
    seen[u] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (leaf_label[x] >= 0) out.push_back(leaf_label[x]);
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> BranchDecomposition::mid_set(const EmbeddedGraph& g, int u, int v) const {
    auto a = tree.side_labels(u, v);
    std::set<int> in_a(a.begin(), a.end());
    std::vector<char> touch_a(g.vertex_count(), 0), touch_b(g.vertex_count(), 0);
    for (EdgeId e : g.edges()) {
        auto& t = in_a.count(e) ? touch_a : touch_b;
        t[g.vertex_index(e)] = 1;
        t[g.vertex_index(g.twin(e))] = 1;
    }
    std::vector<int> mid;
    for (int i = 0; i < g.vertex_count(); ++i)
        if (touch_a[i] && touch_b[i]) mid.push_back(i);
    return mid;
}

int BranchDecomposition::compute_width(const EmbeddedGraph& g) const {
    int w = 0;
    for (auto [u, v] : tree.edges())
        w = std::max(w, static_cast<int>(mid_set(g, u, v).size()));
    return w;
}

int CarvingDecomposition::compute_width(const EmbeddedGraph& m) const {
    int w = 0;
    for (auto [u, v] : tree.edges()) {
        auto a = tree.side_labels(u, v);
        std::vector<char> in_a(m.vertex_count(), 0);
        for (int x : a) in_a[x] = 1;
        int cut = 0;
        for (EdgeId e : m.edges())
            if (in_a[m.vertex_index(e)] != in_a[m.vertex_index(m.twin(e))]) ++cut;
        w = std::max(w, cut);
    }
    return w;
}

std::vector<int> Noose::vertices() const {
    std::vector<int> out;
    for (const Point& p : walk)
        if (p.is_vertex) out.push_back(p.index);
    return out;
}

int theta_of_nooses(const std::vector<Noose>& nooses) {
    std::map<int, int> count;
    for (const Noose& n : nooses)
        for (int v : n.vertices()) ++count[v];
    int theta = 0;
    for (auto [v, c] : count)
        if (c >= 2) theta += c - 1;
    return theta;
}

// ------------------------------------------------------------ polyhedralize

namespace {

bool edges_simple(const EmbeddedGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (EdgeId e : g.edges()) {
        int u = g.vertex_index(e), v = g.vertex_index(g.twin(e));
        if (u == v) return false;  // loop
        auto key = std::minmax(u, v);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

} // namespace

PolyhedralizeResult polyhedralize(const EmbeddedGraph& g, const Rational& heavy_weight) {
    Rational base = baseline_cut_graph(g).length;
    if (heavy_weight <= base)
        fail(ErrorCode::HeavyWeightTooSmall,
             "heavy weight " + rational_to_string(heavy_weight) +
                 " does not exceed the baseline cut graph length " + rational_to_string(base));

    PolyhedralizeResult res;
    res.map = g;
    for (EdgeId e : g.edges()) res.chains_of[e] = {e};

    auto apply_split = [&](const std::unordered_map<EdgeId, std::vector<EdgeId>>& halves) {
        for (auto& [orig, chain] : res.chains_of) {
            std::vector<EdgeId> next;
            for (EdgeId e : chain) {
                const auto& h = halves.at(e);
                next.insert(next.end(), h.begin(), h.end());
            }
            chain = std::move(next);
        }
    };

    // remove loops and multi-edges (at most two rounds)
    for (int round = 0; round < 2 && !edges_simple(res.map); ++round) {
        auto sub = subdivide_all_edges(res.map);
        apply_split(sub.halves_of);
        res.map = std::move(sub.map);
    }
    for (int round = 0; round < 2; ++round) {
        auto sup = superpose_with_medial(res.map, heavy_weight);
        apply_split(sup.halves_of);
        res.map = std::move(sup.map);
    }
    auto tri = triangulate(res.map, heavy_weight);
    for (auto& [orig, chain] : res.chains_of)
        for (EdgeId& e : chain) e = tri.edge_map.at(e);
    res.map = std::move(tri.map);

    std::set<EdgeId> light;
    for (const auto& [orig, chain] : res.chains_of) light.insert(chain.begin(), chain.end());
    auto all = res.map.edges();
    for (EdgeId e : all)
        if (!light.count(e)) res.heavy_edges.insert(e);
    return res;
}

PolyhedralReport check_polyhedral(const EmbeddedGraph& g) {
    PolyhedralReport rep;
    rep.simple = edges_simple(g);
    rep.triangulated = true;
    for (int fi = 0; fi < g.face_count(); ++fi)
        rep.triangulated = rep.triangulated && g.face_degree(fi) == 3;

    // exhaustive 2-cut search (test-scale)
    const int n = g.vertex_count();
    auto connected_without = [&](int skip1, int skip2) {
        std::vector<char> seen(n, 0);
        int start = -1, want = 0;
        for (int i = 0; i < n; ++i) {
            if (i == skip1 || i == skip2) continue;
            ++want;
            if (start < 0) start = i;
        }
        if (start < 0) return true;
        std::vector<int> stack = {start};
        seen[start] = 1;
        int got = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (DartId d : g.darts_of_vertex(v)) {
                int w = g.vertex_index(g.twin(d));
                if (w == skip1 || w == skip2 || seen[w]) continue;
                seen[w] = 1;
                ++got;
                stack.push_back(w);
            }
        }
        return got == want;
    };
    if (n <= 3) {
        rep.three_connected = rep.simple;
    } else {
        rep.three_connected = true;
        for (int u = 0; u < n && rep.three_connected; ++u)
            for (int v = u + 1; v < n && rep.three_connected; ++v)
                if (!connected_without(u, v)) rep.three_connected = false;
    }

    // short non-contractible nooses: radial cycles through <= 2 original
    // vertices that do not bound a disk
    RadialMap R = radial_map(g);
    auto contractible = [&](const std::set<EdgeId>& cycle) {
        auto comps = cut_open(R.map, cycle);
        if (comps.size() != 2) return false;  // non-separating
        for (const auto& c : comps)
            if (c.map.euler_genus() == 0 && c.boundary_faces.size() == 1) return true;
        return false;
    };
    rep.noose_girth_ok = true;
    // corners grouped by (vertex, face) incidence
    std::map<std::pair<int, int>, std::vector<EdgeId>> inc;
    for (EdgeId e : R.map.edges()) {
        int a = R.map.vertex_index(e), b = R.map.vertex_index(R.map.twin(e));
        int vv = R.vertex_of[a] >= 0 ? R.vertex_of[a] : R.vertex_of[b];
        int ff = R.face_of[a] >= 0 ? R.face_of[a] : R.face_of[b];
        inc[{vv, ff}].push_back(e);
    }
    // length-1 nooses: two distinct corners at the same (v, f)
    for (const auto& [key, list] : inc) {
        if (!rep.noose_girth_ok) break;
        for (std::size_t i = 0; i < list.size() && rep.noose_girth_ok; ++i)
            for (std::size_t j = i + 1; j < list.size() && rep.noose_girth_ok; ++j)
                if (!contractible({list[i], list[j]})) rep.noose_girth_ok = false;
    }
    // length-2 nooses: v - f1 - w - f2 - v with distinct corners
    std::map<std::pair<int, int>, std::vector<int>> faces_of_pair;  // (u,w) -> faces
    std::map<std::pair<int, int>, char> have;
    for (const auto& [key, list] : inc) have[{key.first, key.second}] = 1;
    if (rep.noose_girth_ok) {
        std::vector<std::pair<int, int>> keys;
        for (const auto& [key, list] : inc) keys.push_back(key);
        for (std::size_t i = 0; i < keys.size() && rep.noose_girth_ok; ++i) {
            for (std::size_t j = i + 1; j < keys.size() && rep.noose_girth_ok; ++j) {
                auto [u, f1] = keys[i];
                auto [w, f2] = keys[j];
                if (u == w || f1 == f2) continue;
                if (!have.count({u, f2}) || !have.count({w, f1})) continue;
                // one corner instance per incidence (cap instance fan-out)
                std::set<EdgeId> cyc = {inc[{u, f1}][0], inc[{w, f1}][0], inc[{w, f2}][0],
                                        inc[{u, f2}][0]};
                if (cyc.size() != 4) continue;
                if (!contractible(cyc)) rep.noose_girth_ok = false;
            }
        }
    }
    return rep;
}

// ----------------------------------------------------- branch decomposition

BranchDecomposition branch_decomposition(const EmbeddedGraph& g) {
    auto edge_list = g.edges();
    const int m = static_cast<int>(edge_list.size());
    if (m < 2) fail(ErrorCode::InfeasibleParameters, "branch decomposition needs m >= 2");

    DecompTree tree;
    struct Cluster {
        int node;                 // tree node representing the cluster
        std::set<int> boundary;   // vertices shared with the rest
        std::set<int> vertices;   // all touched vertices
        EdgeId min_edge;
        bool alive = true;
    };
    std::vector<Cluster> cl;
    std::vector<int> vertex_edge_count(g.vertex_count(), 0);
    for (EdgeId e : edge_list) {
        ++vertex_edge_count[g.vertex_index(e)];
        if (g.vertex_index(e) != g.vertex_index(g.twin(e)))
            ++vertex_edge_count[g.vertex_index(g.twin(e))];
    }
    std::vector<std::set<int>> clusters_at(g.vertex_count());
    for (int i = 0; i < m; ++i) {
        EdgeId e = edge_list[i];
        Cluster c;
        c.node = tree.node_count();
        tree.adj.emplace_back();
        tree.leaf_label.push_back(i);
        c.vertices = {g.vertex_index(e), g.vertex_index(g.twin(e))};
        c.min_edge = e;
        cl.push_back(std::move(c));
        for (int v : cl.back().vertices) clusters_at[v].insert(i);
    }
    // a vertex is on a cluster's boundary while some other cluster touches it
    auto recompute_boundary = [&](int ci) {
        cl[ci].boundary.clear();
        for (int v : cl[ci].vertices)
            if (clusters_at[v].size() > 1) cl[ci].boundary.insert(v);
    };
    for (int i = 0; i < m; ++i) recompute_boundary(i);

    int alive = m;
    while (alive > 1) {
        // candidate pairs: clusters sharing a vertex; fallback: arbitrary pair
        long best_score = -1;
        std::pair<int, int> best = {-1, -1};
        auto consider = [&](int a, int b) {
            if (a == b || !cl[a].alive || !cl[b].alive) return;
            if (a > b) std::swap(a, b);
            std::set<int> merged_vertices = cl[a].vertices;
            merged_vertices.insert(cl[b].vertices.begin(), cl[b].vertices.end());
            long bd = 0;
            for (int v : merged_vertices) {
                std::size_t others = clusters_at[v].size() - clusters_at[v].count(a) -
                                     clusters_at[v].count(b);
                if (others > 0) ++bd;
            }
            if (best_score < 0 || bd < best_score ||
                (bd == best_score &&
                 std::min(cl[a].min_edge, cl[b].min_edge) <
                     std::min(cl[best.first].min_edge, cl[best.second].min_edge))) {
                best_score = bd;
                best = {a, b};
            }
        };
        for (int v = 0; v < g.vertex_count(); ++v) {
            const auto& s = clusters_at[v];
            if (s.size() < 2) continue;
            // examine pairs at this vertex (bounded fan-out: adjacent pairs)
            for (auto it = s.begin(); it != s.end(); ++it) {
                auto jt = std::next(it);
                if (jt != s.end()) consider(*it, *jt);
            }
            consider(*s.begin(), *s.rbegin());
        }
        if (best.first < 0) {
            int a = -1, b = -1;
            for (int i = 0; i < static_cast<int>(cl.size()) && b < 0; ++i)
                if (cl[i].alive) (a < 0 ? a : b) = i;
            best = {a, b};
        }
        auto [a, b] = best;
        int nn = tree.node_count();
        tree.adj.emplace_back();
        tree.leaf_label.push_back(-1);
        tree.adj[nn].push_back(cl[a].node);
        tree.adj[nn].push_back(cl[b].node);
        tree.adj[cl[a].node].push_back(nn);
        tree.adj[cl[b].node].push_back(nn);
        Cluster merged;
        merged.node = nn;
        merged.vertices = cl[a].vertices;
        merged.vertices.insert(cl[b].vertices.begin(), cl[b].vertices.end());
        merged.min_edge = std::min(cl[a].min_edge, cl[b].min_edge);
        cl[a].alive = cl[b].alive = false;
        for (int v : cl[a].vertices) clusters_at[v].erase(a);
        for (int v : cl[b].vertices) clusters_at[v].erase(b);
        int ci = static_cast<int>(cl.size());
        for (int v : merged.vertices) clusters_at[v].insert(ci);
        cl.push_back(std::move(merged));
        recompute_boundary(ci);
        --alive;
    }
    // the final merge node has tree degree 2; splice it out to keep leaves
    // degree 1 and internal nodes degree 3
    int root = cl.back().node;
    if (tree.adj[root].size() == 2) {
        int x = tree.adj[root][0], y = tree.adj[root][1];
        auto unlink = [&](int from, int to) {
            auto& v = tree.adj[from];
            v.erase(std::find(v.begin(), v.end(), to));
        };
        unlink(x, root);
        unlink(y, root);
        tree.adj[root].clear();
        tree.adj[x].push_back(y);
        tree.adj[y].push_back(x);
        // root stays as an isolated orphan node; mark it clearly
        tree.leaf_label[root] = -1;
    }

    BranchDecomposition bd;
    bd.tree = std::move(tree);
    // leaf labels currently index into edge_list; relabel to edge ids
    for (int i = 0; i < bd.tree.node_count(); ++i)
        if (bd.tree.leaf_label[i] >= 0) bd.tree.leaf_label[i] = edge_list[bd.tree.leaf_label[i]];
    bd.width = bd.compute_width(g);
    return bd;
}

// --------------------------------------------------------- medial carvings

CarvingDecomposition medial_carving_from_branch(const BranchDecomposition& bd,
                                                const EmbeddedGraph& g,
                                                const EmbeddedGraph& medial) {
    CarvingDecomposition cd;
    cd.tree = bd.tree;
    for (int i = 0; i < cd.tree.node_count(); ++i)
        if (cd.tree.leaf_label[i] >= 0)
            cd.tree.leaf_label[i] = medial.vertex_index(2 * cd.tree.leaf_label[i]);
    cd.width = cd.compute_width(medial);
    cd.is_bond = false;
    (void)g;
    return cd;
}

namespace {

std::vector<std::vector<int>> adjacency_of(const EmbeddedGraph& m) {
    std::vector<std::vector<int>> adj(m.vertex_count());
    for (EdgeId e : m.edges()) {
        int u = m.vertex_index(e), v = m.vertex_index(m.twin(e));
        adj[u].push_back(v);
        if (u != v) adj[v].push_back(u);
    }
    return adj;
}

bool set_connected(const std::vector<std::vector<int>>& adj, const std::vector<char>& in,
                   int representative, int want) {
    if (want == 0) return true;
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack = {representative};
    seen[representative] = 1;
    int got = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++got;
                stack.push_back(w);
            }
    }
    return got == want;
}

} // namespace

bool check_bond(const CarvingDecomposition& cd, const EmbeddedGraph& m) {
    auto adj = adjacency_of(m);
    for (auto [u, v] : cd.tree.edges()) {
        for (int side = 0; side < 2; ++side) {
            auto labels = side == 0 ? cd.tree.side_labels(u, v) : cd.tree.side_labels(v, u);
            if (labels.empty()) return false;
            std::vector<char> in(m.vertex_count(), 0);
            for (int x : labels) in[x] = 1;
            if (!set_connected(adj, in, labels[0], static_cast<int>(labels.size()))) return false;
        }
    }
    return true;
}

CarvingDecomposition to_bond_carving(const CarvingDecomposition& cd, const EmbeddedGraph& m) {
    if (check_bond(cd, m)) {
        CarvingDecomposition out = cd;
        out.is_bond = true;
        return out;
    }
    auto adj = adjacency_of(m);
    const int n = m.vertex_count();

    DecompTree tree;
    auto new_node = [&](int label) {
        tree.adj.emplace_back();
        tree.leaf_label.push_back(label);
        return tree.node_count() - 1;
    };

    // recursive connected bisection; K = complement of S, already connected
    std::function<int(std::vector<int>&)> build = [&](std::vector<int>& S) -> int {
        if (S.size() == 1) return new_node(S[0]);
        std::vector<char> inS(n, 0);
        for (int v : S) inS[v] = 1;

        // BFS spanning tree of m[S]
        std::vector<int> parent(n, -2), order;
        std::queue<int> q;
        q.push(S[0]);
        parent[S[0]] = -1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            order.push_back(v);
            for (int w : adj[v])
                if (inS[w] && parent[w] == -2) {
                    parent[w] = v;
                    q.push(w);
                }
        }
        // subtree sizes in reverse BFS order
        std::vector<int> sub(n, 0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            sub[*it] += 1;
            if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
        }
        // candidates: cut below each non-root vertex; prefer balance
        std::vector<int> cands;
        for (int v : order)
            if (parent[v] >= 0) cands.push_back(v);
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            long half = static_cast<long>(S.size());
            long da = std::abs(2L * sub[a] - half), db = std::abs(2L * sub[b] - half);
            return da < db || (da == db && a < b);
        });
        auto collect_below = [&](int x) {
            std::vector<int> part;
            std::vector<int> stack = {x};
            std::vector<char> seen(n, 0);
            seen[x] = 1;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                part.push_back(v);
                for (int w : adj[v])
                    if (inS[w] && parent[w] == v && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            return part;
        };
        auto feasible = [&](const std::vector<int>& part) {
            // both part and (S \ part) + complement-of-S must stay connected
            std::vector<char> inP(n, 0);
            for (int v : part) inP[v] = 1;
            if (!set_connected(adj, inP, part[0], static_cast<int>(part.size()))) return false;
            std::vector<char> rest(n, 0);
            int rep = -1, want = 0;
            for (int v = 0; v < n; ++v)
                if (!inP[v]) {
                    rest[v] = 1;
                    ++want;
                    if (rep < 0) rep = v;
                }
            return want == 0 || set_connected(adj, rest, rep, want);
        };
        auto complement_side_feasible = [&](const std::vector<int>& part) {
            // the other side of the new tree edge: (S \ part) + complement
            std::vector<char> inP(n, 0);
            for (int v : part) inP[v] = 1;
            std::vector<char> other(n, 0);
            int rep = -1, want = 0;
            for (int v : S)
                if (!inP[v]) {
                    other[v] = 1;
                    ++want;
                    if (rep < 0) rep = v;
                }
            if (want == 0) return false;
            if (!set_connected(adj, other, rep, want)) return false;
            return true;
        };
        std::vector<int> chosen;
        for (int x : cands) {
            auto part = collect_below(x);
            if (part.size() == S.size()) continue;
            if (feasible(part) && complement_side_feasible(part)) {
                chosen = std::move(part);
                break;
            }
        }
        if (chosen.empty()) {
            // no fully feasible split: fall back to the most balanced one
            auto part = collect_below(cands[0]);
            chosen = std::move(part);
        }
        std::vector<char> inC(n, 0);
        for (int v : chosen) inC[v] = 1;
        std::vector<int> rest;
        for (int v : S)
            if (!inC[v]) rest.push_back(v);
        int a = build(chosen), b = build(rest);
        int nn = new_node(-1);
        tree.adj[nn].push_back(a);
        tree.adj[nn].push_back(b);
        tree.adj[a].push_back(nn);
        tree.adj[b].push_back(nn);
        return nn;
    };

    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    int root = build(all);
    // splice out the degree-2 root
    if (tree.adj[root].size() == 2) {
        int x = tree.adj[root][0], y = tree.adj[root][1];
        auto unlink = [&](int from, int to) {
            auto& v = tree.adj[from];
            v.erase(std::find(v.begin(), v.end(), to));
        };
        unlink(x, root);
        unlink(y, root);
        tree.adj[root].clear();
        tree.adj[x].push_back(y);
        tree.adj[y].push_back(x);
    }

    CarvingDecomposition out;
    out.tree = std::move(tree);
    out.width = out.compute_width(m);
    out.is_bond = check_bond(out, m);
    return out;
}

// --------------------------------------------------------------- radial map

RadialMap radial_map(const EmbeddedGraph& g) {
    EmbeddedGraph b = barycentric_subdivision(g);
    std::set<EdgeId> spokes;
    for (int a = 0; a < g.dart_count(); ++a) spokes.insert(b.edge_of(6 * a + 2));
    auto r = restrict_to_edges(b, spokes);

    RadialMap R;
    R.map = std::move(r.map);
    R.vertex_of.assign(R.map.vertex_count(), -1);
    R.face_of.assign(R.map.vertex_count(), -1);
    for (int d = 0; d < R.map.dart_count(); ++d) {
        DartId h = r.to_host[d];
        int c = h / 6;
        if (h % 6 == 3)
            R.vertex_of[R.map.vertex_index(d)] = g.vertex_index(c);
        else
            R.face_of[R.map.vertex_index(d)] = g.face_index(c);
    }

    // label quads: pieces of barycentric faces glued across non-spoke edges
    // correspond to g's edges (the four corner triangles around each v_e)
    std::vector<int> piece(b.face_count());
    std::iota(piece.begin(), piece.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (piece[x] != x) {
            piece[x] = piece[piece[x]];
            x = piece[x];
        }
        return x;
    };
    for (int d = 0; d < b.dart_count(); ++d)
        if (!spokes.count(b.edge_of(d))) {
            int x = find(b.face_index(d)), y = find(b.face_index(b.twin(d)));
            if (x != y) piece[x] = y;
        }
    // the piece containing barycentric dart 6a+1 (a half at v_e) is edge_of(a)'s
    std::vector<EdgeId> edge_of_piece(b.face_count(), -1);
    for (EdgeId e : g.edges()) edge_of_piece[find(b.face_index(6 * e + 1))] = e;

    R.quad_edge.assign(R.map.face_count(), -1);
    for (int fi = 0; fi < R.map.face_count(); ++fi) {
        DartId d = R.map.darts_of_face(fi)[0];
        EdgeId e = edge_of_piece[find(b.face_index(r.to_host[d]))];
        if (e < 0) fail(ErrorCode::Internal, "radial quad without an owning edge");
        R.quad_edge[fi] = e;
        R.quad_of_edge[e] = fi;
    }
    return R;
}

// ------------------------------------------------- surface cut decomposition

namespace {

// boundary walks of the radial-quad region split: orbits of sigma_H . twin
std::vector<std::vector<DartId>> boundary_orbits(const EmbeddedGraph& r,
                                                 const std::vector<char>& in_h) {
    std::vector<std::vector<DartId>> orbits;
    std::vector<char> seen(r.dart_count(), 0);
    auto sigma = [&](DartId x) {
        DartId y = r.rotation(x);
        while (!in_h[y]) y = r.rotation(y);
        return y;
    };
    for (int d = 0; d < r.dart_count(); ++d) {
        if (!in_h[d] || seen[d]) continue;
        orbits.emplace_back();
        DartId x = d;
        while (!seen[x]) {
            seen[x] = 1;
            orbits.back().push_back(x);
            x = sigma(r.twin(x));
        }
    }
    return orbits;
}

} // namespace

SurfaceCutDecomposition surface_cut_from_bond(const CarvingDecomposition& bond,
                                              const EmbeddedGraph& g, int noose_cap,
                                              int theta_cap) {
    const int genus = g.euler_genus();
    SurfaceCutDecomposition scd;
    scd.noose_cap = noose_cap >= 0 ? noose_cap : 2 * genus + 2;
    scd.theta_cap = theta_cap >= 0 ? theta_cap : 4 * genus + 4;

    EmbeddedGraph medial = medial_graph(g);
    std::vector<EdgeId> edge_of_medial_vertex(medial.vertex_count(), -1);
    for (EdgeId e : g.edges()) edge_of_medial_vertex[medial.vertex_index(2 * e)] = e;

    scd.branch.tree = bond.tree;
    for (int i = 0; i < scd.branch.tree.node_count(); ++i)
        if (scd.branch.tree.leaf_label[i] >= 0)
            scd.branch.tree.leaf_label[i] = edge_of_medial_vertex[scd.branch.tree.leaf_label[i]];
    scd.branch.width = scd.branch.compute_width(g);

    RadialMap R = radial_map(g);
    // flanking edges of each radial spoke: spoke of corner c separates
    // edge_of(rot^-1(c)) from edge_of(c)
    std::map<EdgeId, std::pair<EdgeId, EdgeId>> flank_of;
    {
        EmbeddedGraph b = barycentric_subdivision(g);
        std::set<EdgeId> spokes;
        for (int a = 0; a < g.dart_count(); ++a) spokes.insert(b.edge_of(6 * a + 2));
        auto r2 = restrict_to_edges(b, spokes);
        for (int c = 0; c < g.dart_count(); ++c) {
            DartId rd = r2.from_host.at(6 * c + 2);
            EdgeId re = R.map.edge_of(rd);
            flank_of[re] = {g.edge_of(g.rotation_prev(c)), g.edge_of(c)};
        }
    }

    for (auto [u, v] : scd.branch.tree.edges()) {
        ScdEdgeData data;
        data.mid = scd.branch.mid_set(g, u, v);
        auto a_labels = scd.branch.tree.side_labels(u, v);
        auto b_labels = scd.branch.tree.side_labels(v, u);
        data.side_edges[0] = std::vector<EdgeId>(a_labels.begin(), a_labels.end());
        data.side_edges[1] = std::vector<EdgeId>(b_labels.begin(), b_labels.end());
        std::set<EdgeId> in_a(a_labels.begin(), a_labels.end());

        std::set<EdgeId> h;
        std::vector<char> in_h(R.map.dart_count(), 0);
        for (const auto& [re, fl] : flank_of) {
            if (in_a.count(fl.first) != in_a.count(fl.second)) {
                h.insert(re);
                in_h[re] = in_h[R.map.twin(re)] = 1;
            }
        }
        if (h.empty()) {
            data.two_regions = false;
            scd.per_edge[{u, v}] = std::move(data);
            continue;
        }
        auto pieces = cut_along(R.map, Subgraph{h, {}});
        data.two_regions = pieces.size() == 2;
        if (data.two_regions) {
            // match pieces to sides via quad labels
            for (const auto& p : pieces) {
                bool all_a = true, all_b = true;
                for (int fi : p.face_indices) {
                    if (in_a.count(R.quad_edge[fi]))
                        all_b = false;
                    else
                        all_a = false;
                }
                if (!(all_a ^ all_b)) {
                    data.two_regions = false;
                    break;
                }
            }
        }
        if (data.two_regions) {
            int first_is_a = in_a.count(R.quad_edge[pieces[0].face_indices[0]]) ? 0 : 1;
            data.region_genus[0] = pieces[first_is_a].genus;
            data.region_genus[1] = pieces[1 - first_is_a].genus;
            data.boundary_cycles[0] = pieces[first_is_a].boundary_cycles;
            data.boundary_cycles[1] = pieces[1 - first_is_a].boundary_cycles;
            // Euler characteristic of the cut curve as a subgraph of the
            // radial map, plus simplicity (every touched vertex degree 2)
            std::vector<int> deg(R.map.vertex_count(), 0);
            for (int d = 0; d < R.map.dart_count(); ++d)
                if (in_h[d]) ++deg[R.map.vertex_index(d)];
            int vc = 0;
            data.curves_simple = true;
            for (int c : deg) {
                if (c > 0) ++vc;
                if (c != 0 && c != 2) data.curves_simple = false;
            }
            data.curve_chi = vc - static_cast<int>(h.size());
            // boundary orbits; each circle traced once per side -> dedupe
            auto orbits = boundary_orbits(R.map, in_h);
            // each circle is traced once per side; keep one trace per edge set
            std::set<EdgeId> claimed;
            for (const auto& o : orbits) {
                bool seen = false;
                for (DartId x : o) seen = seen || claimed.count(R.map.edge_of(x));
                if (seen) continue;
                for (DartId x : o) claimed.insert(R.map.edge_of(x));
                Noose n;
                for (DartId x : o) {
                    int rv = R.map.vertex_index(x);
                    if (R.vertex_of[rv] >= 0)
                        n.walk.push_back({true, R.vertex_of[rv]});
                    else
                        n.walk.push_back({false, R.face_of[rv]});
                }
                data.nooses.push_back(std::move(n));
            }
            data.theta = theta_of_nooses(data.nooses);
        }
        scd.per_edge[{u, v}] = std::move(data);
    }
    return scd;
}

void validate_scd(const SurfaceCutDecomposition& scd, const EmbeddedGraph& g) {
    const int genus = g.euler_genus();
    for (const auto& [edge, data] : scd.per_edge) {
        auto tag = "tree edge (" + std::to_string(edge.first) + "," +
                   std::to_string(edge.second) + ")";
        if (!data.two_regions)
            fail(ErrorCode::NooseExtractionFailure, tag + ": nooses do not bound two regions");
        if (static_cast<int>(data.nooses.size()) > scd.noose_cap)
            fail(ErrorCode::NoosesCapExceeded,
                 tag + ": " + std::to_string(data.nooses.size()) + " nooses exceed cap " +
                     std::to_string(scd.noose_cap));
        if (data.theta > scd.theta_cap)
            fail(ErrorCode::NoosesCapExceeded, tag + ": theta " + std::to_string(data.theta) +
                                                   " exceeds cap " +
                                                   std::to_string(scd.theta_cap));
        std::set<int> mid(data.mid.begin(), data.mid.end());
        for (const Noose& n : data.nooses)
            for (int v : n.vertices())
                if (!mid.count(v))
                    fail(ErrorCode::NooseExtractionFailure,
                         tag + ": noose vertex " + std::to_string(v) + " outside mid(e)");
        // exact Euler surgery audit: gluing the two capped regions back
        // along the boundary curves must recover the host surface
        int chi_pieces = (2 - data.region_genus[0] - data.boundary_cycles[0]) +
                         (2 - data.region_genus[1] - data.boundary_cycles[1]);
        if (chi_pieces + data.curve_chi != 2 - genus)
            fail(ErrorCode::NooseExtractionFailure,
                 tag + ": Euler surgery audit failed: " + std::to_string(chi_pieces) + " + " +
                     std::to_string(data.curve_chi) + " != " + std::to_string(2 - genus));
        // when the boundary is a disjoint union of simple circles, the
        // classical identity must hold as well
        if (data.curves_simple) {
            int lhs = data.region_genus[0] + data.region_genus[1] +
                      2 * static_cast<int>(data.nooses.size());
            if (lhs != genus + 2)
                fail(ErrorCode::NooseExtractionFailure,
                     tag + ": genus audit failed: " + std::to_string(lhs) +
                         " != " + std::to_string(genus + 2));
        }
    }
}

SurfaceCutDecomposition build_scd(const EmbeddedGraph& g, int noose_cap, int theta_cap) {
    auto bd = branch_decomposition(g);
    auto medial = medial_graph(g);
    auto cd = medial_carving_from_branch(bd, g, medial);
    auto bond = to_bond_carving(cd, medial);
    auto scd = surface_cut_from_bond(bond, g, noose_cap, theta_cap);
    validate_scd(scd, g);
    return scd;
}

} // namespace surfcut
