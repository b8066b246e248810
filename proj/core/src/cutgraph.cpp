#include <surfcut/cutgraph.hpp>
#include <surfcut/derived_maps.hpp>

#include <algorithm>
#include <numeric>
#include <queue>

namespace surfcut {

namespace {

struct UnionFind {
    std::vector<int> parent;
    int components;

    explicit UnionFind(int n) : parent(n), components(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        --components;
        return true;
    }
};

// pieces of the surface cut along the darts flagged in `in_h`
int piece_count(const EmbeddedGraph& g, const std::vector<char>& in_h) {
    UnionFind uf(g.face_count());
    for (int e = 0; e < g.dart_count(); ++e) {
        if (g.twin(e) < e || in_h[e]) continue;
        uf.unite(g.face_index(e), g.face_index(g.twin(e)));
    }
    return uf.components;
}

std::vector<char> dart_flags(const EmbeddedGraph& g, const std::set<EdgeId>& edges) {
    std::vector<char> in_h(g.dart_count(), 0);
    for (EdgeId e : edges) {
        if (e < 0 || e >= g.dart_count() || g.twin(e) < e)
            fail(ErrorCode::PermutationDomainMismatch, "not an edge id: " + std::to_string(e));
        in_h[e] = in_h[g.twin(e)] = 1;
    }
    return in_h;
}

} // namespace

CutCertificate is_cut_graph(const EmbeddedGraph& g, const Subgraph& h) {
    auto in_h = dart_flags(g, h.edges);
    std::vector<char> has_vertex(g.vertex_count(), 0);
    long long e_h = static_cast<long long>(h.edges.size());
    for (int d = 0; d < g.dart_count(); ++d)
        if (in_h[d]) has_vertex[g.vertex_index(d)] = 1;
    for (VertexId v : h.isolated_vertices) {
        if (v < 0 || v >= g.dart_count())
            fail(ErrorCode::PermutationDomainMismatch, "bad vertex id");
        has_vertex[g.vertex_index(v)] = 1;
    }
    long long v_h = std::count(has_vertex.begin(), has_vertex.end(), 1);
    if (v_h == 0) fail(ErrorCode::EmptySubgraph, "cut graph candidate has no vertices");

    CutCertificate cert;
    cert.face_count = piece_count(g, in_h);
    cert.euler_lhs = v_h - e_h + cert.face_count;
    cert.euler_rhs = 2 - g.euler_genus();
    cert.valid = cert.face_count == 1 && cert.euler_lhs == cert.euler_rhs;
    return cert;
}

ReducedGraph reduce(const EmbeddedGraph& g, const std::set<EdgeId>& h,
                    const std::set<VertexId>& boundary) {
    auto alive = dart_flags(g, h);
    std::vector<char> is_boundary(g.vertex_count(), 0);
    for (VertexId v : boundary) is_boundary[g.vertex_index(v)] = 1;

    std::vector<int> deg(g.vertex_count(), 0);
    for (int d = 0; d < g.dart_count(); ++d)
        if (alive[d]) ++deg[g.vertex_index(d)];

    // rule 1: strip degree-1 vertices off the boundary-free part
    std::queue<int> q;
    for (int vi = 0; vi < g.vertex_count(); ++vi)
        if (deg[vi] == 1 && !is_boundary[vi]) q.push(vi);
    while (!q.empty()) {
        int vi = q.front();
        q.pop();
        if (deg[vi] != 1 || is_boundary[vi]) continue;
        for (DartId d : g.darts_of_vertex(vi)) {
            if (!alive[d]) continue;
            alive[d] = alive[g.twin(d)] = 0;
            --deg[vi];
            int wi = g.vertex_index(g.twin(d));
            if (--deg[wi] == 1 && !is_boundary[wi]) q.push(wi);
        }
    }

    ReducedGraph res;
    res.total_length = Rational(0);
    if (std::count(alive.begin(), alive.end(), 1) == 0) return res;

    // rule 2: contract maximal paths through suppressible degree-2 vertices.
    // A vertex is suppressible when it has degree 2, is not on the boundary,
    // and its two darts are not twins (a lone loop stays).
    std::vector<char> suppress(g.vertex_count(), 0);
    auto two_darts = [&](int vi, DartId& a, DartId& b) {
        a = b = -1;
        for (DartId d : g.darts_of_vertex(vi)) {
            if (!alive[d]) continue;
            (a < 0 ? a : b) = d;
        }
    };
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        if (deg[vi] != 2 || is_boundary[vi]) continue;
        DartId a, b;
        two_darts(vi, a, b);
        if (g.twin(a) != b) suppress[vi] = 1;
    }
    // bare circles of suppressible vertices keep their minimum-id vertex as
    // an anchor so the circle survives as a single loop
    {
        std::vector<char> seen(g.dart_count(), 0);
        for (int d = 0; d < g.dart_count(); ++d) {
            if (!alive[d] || seen[d] || !suppress[g.vertex_index(d)]) continue;
            // walk the chain; if every vertex it meets is suppressible it is a circle
            bool circle = true;
            int anchor = g.vertex_index(d);
            DartId x = d;
            std::vector<DartId> chain;
            do {
                seen[x] = seen[g.twin(x)] = 1;
                chain.push_back(x);
                int wi = g.vertex_index(g.twin(x));
                if (!suppress[wi]) { circle = false; break; }
                if (wi < 0) break;
                anchor = std::min(anchor, wi);
                DartId a, b;
                two_darts(wi, a, b);
                x = (a == g.twin(x)) ? b : a;
            } while (x != d);
            if (circle) suppress[anchor] = 0;
        }
    }

    // assemble: anchors keep their darts; every dart leaving an anchor opens
    // a chain that is one reduced edge
    std::vector<DartId> chain_partner(g.dart_count(), -1);
    std::vector<std::vector<EdgeId>> chain_path(g.dart_count());
    std::vector<Rational> chain_weight(g.dart_count(), Rational(0));
    std::vector<DartId> starts;
    for (int d = 0; d < g.dart_count(); ++d) {
        if (!alive[d] || suppress[g.vertex_index(d)]) continue;
        starts.push_back(d);
        if (chain_partner[d] >= 0) continue;
        std::vector<EdgeId> path;
        Rational w(0);
        DartId x = d;
        while (true) {
            path.push_back(g.edge_of(x));
            w += g.weight(g.edge_of(x));
            int wi = g.vertex_index(g.twin(x));
            if (!suppress[wi]) break;
            DartId a, b;
            two_darts(wi, a, b);
            x = (a == g.twin(x)) ? b : a;
        }
        DartId other = g.twin(x);
        chain_partner[d] = other;
        chain_partner[other] = d;
        chain_path[std::min(d, other)] = path;
        chain_weight[std::min(d, other)] = w;
    }

    std::vector<int> newid(g.dart_count(), -1);
    for (size_t i = 0; i < starts.size(); ++i) newid[starts[i]] = static_cast<int>(i);
    const int nd = static_cast<int>(starts.size());
    if (nd == 0) return res;
    std::vector<DartId> rot(nd), twin(nd);
    std::vector<std::pair<EdgeId, Rational>> wts;
    for (int i = 0; i < nd; ++i) {
        DartId d = starts[i];
        DartId y = g.rotation(d);
        while (!alive[y]) y = g.rotation(y);
        rot[i] = newid[y];
        twin[i] = newid[chain_partner[d]];
        if (twin[i] > i) {
            DartId key = std::min(d, chain_partner[d]);
            wts.emplace_back(i, chain_weight[key]);
            res.contraction_log.push_back({i, chain_path[key]});
            res.total_length += chain_weight[key];
        }
    }
    res.map = EmbeddedGraph::build(std::move(rot), std::move(twin), wts);
    res.to_host_vertex.assign(res.map->vertex_count(), -1);
    for (int i = 0; i < nd; ++i)
        res.to_host_vertex[res.map->vertex_index(i)] = g.vertex_index(starts[i]);
    return res;
}

bool check_reduced_bounds(const ReducedGraph& r, int genus) {
    if (!r.map) fail(ErrorCode::NotACutGraph, "empty graph is not a cut graph");
    const EmbeddedGraph& m = *r.map;
    for (int vi = 0; vi < m.vertex_count(); ++vi) {
        if (m.degree(vi) == 1)
            fail(ErrorCode::NotACutGraph, "reduced graph has a degree-1 vertex");
        if (m.degree(vi) == 2) {
            auto darts = m.darts_of_vertex(vi);
            if (m.twin(darts[0]) != darts[1])
                fail(ErrorCode::NotACutGraph, "reduced graph has a suppressible degree-2 vertex");
        }
    }
    return m.vertex_count() < 4 * genus && m.edge_count() < 6 * genus;
}

EdgeSubset baseline_cut_graph(const EmbeddedGraph& g, int root_vertex_index) {
    if (g.euler_genus() == 0) return EdgeSubset{};

    // shortest-path tree from the root, exact rational distances
    const int n = g.vertex_count();
    std::vector<Rational> dist(n, Rational(-1));
    std::vector<DartId> parent_dart(n, -1);  // dart pointing from parent to vertex
    using QE = std::pair<Rational, int>;
    auto cmp = [](const QE& a, const QE& b) {
        return a.first > b.first || (a.first == b.first && a.second > b.second);
    };
    std::priority_queue<QE, std::vector<QE>, decltype(cmp)> pq(cmp);
    dist[root_vertex_index] = 0;
    pq.push({Rational(0), root_vertex_index});
    std::vector<char> done(n, 0);
    while (!pq.empty()) {
        auto [dv, vi] = pq.top();
        pq.pop();
        if (done[vi]) continue;
        done[vi] = 1;
        for (DartId d : g.darts_of_vertex(vi)) {
            int wi = g.vertex_index(g.twin(d));
            Rational nd = dv + g.weight(g.edge_of(d));
            if (dist[wi] < 0 || nd < dist[wi] ||
                (nd == dist[wi] && parent_dart[wi] >= 0 && d < parent_dart[wi])) {
                if (done[wi]) continue;
                dist[wi] = nd;
                parent_dart[wi] = d;
                pq.push({nd, wi});
            }
        }
    }

    std::set<EdgeId> h;
    std::vector<char> in_tree(g.dart_count(), 0);
    for (int vi = 0; vi < n; ++vi) {
        if (parent_dart[vi] < 0) continue;
        h.insert(g.edge_of(parent_dart[vi]));
        in_tree[parent_dart[vi]] = in_tree[g.twin(parent_dart[vi])] = 1;
    }

    struct Cand {
        Rational key;
        EdgeId e;
    };
    std::vector<Cand> cands;
    for (EdgeId e : g.edges()) {
        if (in_tree[e]) continue;
        cands.push_back({g.weight(e) + dist[g.vertex_index(e)] + dist[g.vertex_index(g.twin(e))], e});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        return a.key < b.key || (a.key == b.key && a.e < b.e);
    });

    auto flags = dart_flags(g, h);
    int pieces = piece_count(g, flags);
    for (const Cand& c : cands) {
        if (!h.empty() && is_cut_graph(g, Subgraph{h, {}}).valid) break;
        flags[c.e] = flags[g.twin(c.e)] = 1;
        int p2 = piece_count(g, flags);
        if (p2 <= pieces) {
            h.insert(c.e);
            pieces = p2;
        } else {
            flags[c.e] = flags[g.twin(c.e)] = 0;
        }
    }
    if (!is_cut_graph(g, Subgraph{h, {}}).valid)
        fail(ErrorCode::Internal, "tree-cotree bootstrap failed to reach a cut graph");

    // prune dangling trees
    std::vector<int> deg(n, 0);
    for (int d = 0; d < g.dart_count(); ++d)
        if (flags[d]) ++deg[g.vertex_index(d)];
    std::queue<int> q;
    for (int vi = 0; vi < n; ++vi)
        if (deg[vi] == 1) q.push(vi);
    while (!q.empty()) {
        int vi = q.front();
        q.pop();
        if (deg[vi] != 1) continue;
        for (DartId d : g.darts_of_vertex(vi)) {
            if (!flags[d]) continue;
            flags[d] = flags[g.twin(d)] = 0;
            h.erase(g.edge_of(d));
            --deg[vi];
            int wi = g.vertex_index(g.twin(d));
            if (--deg[wi] == 1) q.push(wi);
        }
    }
    auto cert = is_cut_graph(g, Subgraph{h, {}});
    if (!cert.valid) fail(ErrorCode::Internal, "pruned baseline lost validity");
    return EdgeSubset::of(g, h);
}

EdgeSubset exact_cut_graph(const EmbeddedGraph& g, int edge_budget) {
    if (g.edge_count() > edge_budget)
        fail(ErrorCode::BudgetExceeded, "m=" + std::to_string(g.edge_count()) + " exceeds budget " +
                                            std::to_string(edge_budget));
    if (g.euler_genus() == 0) return EdgeSubset{};

    auto all = g.edges();
    const int m = static_cast<int>(all.size());
    std::optional<std::set<EdgeId>> best;
    Rational best_len(0);
    std::vector<char> in_h(g.dart_count(), 0);
    for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
        std::set<EdgeId> sub;
        Rational len(0);
        std::fill(in_h.begin(), in_h.end(), 0);
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1)) continue;
            sub.insert(all[i]);
            len += g.weight(all[i]);
            in_h[all[i]] = in_h[g.twin(all[i])] = 1;
        }
        if (best && len > best_len) continue;
        auto cert = is_cut_graph(g, Subgraph{sub, {}});
        if (!cert.valid) continue;
        if (!best || len < best_len ||
            (len == best_len && std::lexicographical_compare(sub.begin(), sub.end(),
                                                             best->begin(), best->end()))) {
            best = sub;
            best_len = len;
        }
    }
    if (!best) fail(ErrorCode::Internal, "no valid cut graph exists on a positive-genus map");
    return EdgeSubset::of(g, *best);
}

EdgeSubset prune_to_single_face(const EmbeddedGraph& g, const EdgeSubset& h) {
    if (g.euler_genus() == 0 && h.edges.empty()) return EdgeSubset{};
    auto pieces_of = [&](const std::set<EdgeId>& edges) {
        return cut_along(g, Subgraph{edges, {}});
    };
    {
        auto pieces = pieces_of(h.edges);
        for (const auto& p : pieces)
            if (!p.is_disk)
                fail(ErrorCode::NotADiskDecomposition,
                     "piece with genus " + std::to_string(p.genus) + " and " +
                         std::to_string(p.boundary_cycles) + " boundary cycles");
    }
    std::set<EdgeId> cur = h.edges;
    while (true) {
        auto flags = dart_flags(g, cur);
        UnionFind uf(g.face_count());
        for (int e = 0; e < g.dart_count(); ++e) {
            if (g.twin(e) < e || flags[e]) continue;
            uf.unite(g.face_index(e), g.face_index(g.twin(e)));
        }
        if (uf.components == 1) break;
        EdgeId pick = -1;
        for (EdgeId e : cur) {
            if (uf.find(g.face_index(e)) == uf.find(g.face_index(g.twin(e)))) continue;
            if (pick < 0 || g.weight(e) > g.weight(pick) ||
                (g.weight(e) == g.weight(pick) && e < pick))
                pick = e;
        }
        if (pick < 0)
            fail(ErrorCode::NotADiskDecomposition, "no edge separates two pieces");
        cur.erase(pick);
    }
    // dangling trees
    std::vector<int> deg(g.vertex_count(), 0);
    auto flags = dart_flags(g, cur);
    for (int d = 0; d < g.dart_count(); ++d)
        if (flags[d]) ++deg[g.vertex_index(d)];
    std::queue<int> q;
    for (int vi = 0; vi < g.vertex_count(); ++vi)
        if (deg[vi] == 1) q.push(vi);
    while (!q.empty()) {
        int vi = q.front();
        q.pop();
        if (deg[vi] != 1) continue;
        for (DartId d : g.darts_of_vertex(vi)) {
            if (!flags[d]) continue;
            flags[d] = flags[g.twin(d)] = 0;
            cur.erase(g.edge_of(d));
            --deg[vi];
            int wi = g.vertex_index(g.twin(d));
            if (--deg[wi] == 1) q.push(wi);
        }
    }
    if (g.euler_genus() > 0 && !is_cut_graph(g, Subgraph{cur, {}}).valid)
        fail(ErrorCode::Internal, "pruning lost cut-graph validity");
    return EdgeSubset::of(g, cur);
}

} // namespace surfcut
