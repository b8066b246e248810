#include <surfcut/cutgraph.hpp>
#include <surfcut/errors.hpp>
#include <surfcut/spanner.hpp>

#include <algorithm>
#include <limits>
#include <queue>

namespace surfcut {

namespace {

struct Back {
    // how dp[mask][v] was achieved: either a merge of two submasks at v, or
    // an edge step from a neighbor
    int sub = 0;        // nonzero: merge with submask `sub` (rest is mask^sub)
    DartId via = -1;    // >= 0: dart from the predecessor vertex toward v
};

struct DwState {
    std::vector<std::vector<Rational>> dp;  // [mask][v], -1 = infinity
    std::vector<std::vector<Back>> back;
    std::vector<int> terminals;
};

bool better(const Rational& cand, const Rational& cur) { return cur < 0 || cand < cur; }

DwState dreyfus_wagner(const EmbeddedGraph& m, const std::vector<int>& terminals) {
    const int n = m.vertex_count();
    const int t = static_cast<int>(terminals.size());
    DwState st;
    st.terminals = terminals;
    st.dp.assign(std::size_t(1) << t, std::vector<Rational>(n, Rational(-1)));
    st.back.assign(std::size_t(1) << t, std::vector<Back>(n));
    for (int i = 0; i < t; ++i) st.dp[std::size_t(1) << i][terminals[i]] = 0;
    for (std::size_t mask = 1; mask < (std::size_t(1) << t); ++mask) {
        auto& dpm = st.dp[mask];
        auto& bkm = st.back[mask];
        // merges of proper submask pairs
        for (std::size_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
            std::size_t rest = mask ^ sub;
            if (sub > rest) continue;  // each pair once
            for (int v = 0; v < n; ++v) {
                if (st.dp[sub][v] < 0 || st.dp[rest][v] < 0) continue;
                Rational cand = st.dp[sub][v] + st.dp[rest][v];
                if (better(cand, dpm[v])) {
                    dpm[v] = cand;
                    bkm[v] = Back{static_cast<int>(sub), -1};
                }
            }
        }
        // shortest-path relaxation over the graph, recording parent darts
        using Item = std::pair<Rational, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
        for (int v = 0; v < n; ++v)
            if (dpm[v] >= 0) q.push({dpm[v], v});
        std::vector<char> done(n, 0);
        while (!q.empty()) {
            auto [d, v] = q.top();
            q.pop();
            if (done[v] || d != dpm[v]) continue;
            done[v] = 1;
            for (DartId x : m.darts_of_vertex(v)) {
                int w = m.vertex_index(m.twin(x));
                Rational nd = d + m.weight(m.edge_of(x));
                if (better(nd, dpm[w]) || (nd == dpm[w] && bkm[w].via >= 0 && x < bkm[w].via &&
                                           !done[w])) {
                    if (done[w]) continue;
                    dpm[w] = nd;
                    bkm[w] = Back{0, x};
                    q.push({nd, w});
                }
            }
        }
    }
    return st;
}

void collect_tree(const EmbeddedGraph& m, const DwState& st, std::size_t mask, int v,
                  std::set<EdgeId>& out) {
    if (mask == 0) return;
    const Back& b = st.back[mask][v];
    if (b.via >= 0) {
        out.insert(m.edge_of(b.via));
        collect_tree(m, st, mask, m.vertex_index(b.via), out);
    } else if (b.sub != 0) {
        collect_tree(m, st, std::size_t(b.sub), v, out);
        collect_tree(m, st, mask ^ std::size_t(b.sub), v, out);
    }
    // singleton terminal mask at its own vertex: base case, nothing to add
}

} // namespace

EdgeSubset brick_steiner_tree(const EmbeddedGraph& m, const std::vector<int>& terminals) {
    if (terminals.empty()) return EdgeSubset{{}, Rational(0)};
    std::vector<int> ts(terminals.begin(), terminals.end());
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    if (ts.size() == 1) return EdgeSubset{{}, Rational(0)};
    auto st = dreyfus_wagner(m, ts);
    std::size_t full = (std::size_t(1) << ts.size()) - 1;
    std::size_t rest = full ^ 1u;
    if (st.dp[rest][ts[0]] < 0)
        fail(ErrorCode::DisconnectedTerminals, "terminals lie in different components");
    std::set<EdgeId> edges;
    collect_tree(m, st, rest, ts[0], edges);
    return EdgeSubset::of(m, edges);
}

Spanner build_spanner(const EmbeddedGraph& g, const MortarGraph& mg,
                      const std::vector<Brick>& bricks,
                      const std::vector<std::vector<int>>& portals,
                      const ApproxParams& params, long long theta_cap) {
    (void)params;
    Spanner sp;
    std::set<EdgeId> host(mg.subgraph.edges.begin(), mg.subgraph.edges.end());
    for (std::size_t bi = 0; bi < bricks.size(); ++bi) {
        const Brick& b = bricks[bi];
        std::vector<int> ts(portals[bi].begin(), portals[bi].end());
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
        const int t = static_cast<int>(ts.size());
        if (t <= 1) continue;
        std::set<EdgeId> brick_edges;
        if (t <= theta_cap) {
            auto st = dreyfus_wagner(b.map, ts);
            for (std::size_t mask = 1; mask < (std::size_t(1) << t); ++mask) {
                // skip singletons: a one-terminal tree is empty
                if ((mask & (mask - 1)) == 0) continue;
                int low = 0;
                while (!(mask & (std::size_t(1) << low))) ++low;
                std::size_t rest = mask ^ (std::size_t(1) << low);
                if (st.dp[rest][ts[low]] < 0) continue;
                collect_tree(b.map, st, rest, ts[low], brick_edges);
            }
        } else {
            sp.heuristic = true;
            // connected subsets of size <= 4 via plain enumeration
            for (int i = 0; i < t; ++i)
                for (int j = i + 1; j < t; ++j)
                    for (int k = j; k < t; ++k)
                        for (int l = k; l < t; ++l) {
                            std::vector<int> sub = {ts[i], ts[j], ts[k], ts[l]};
                            std::sort(sub.begin(), sub.end());
                            sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
                            auto tr = brick_steiner_tree(b.map, sub);
                            brick_edges.insert(tr.edges.begin(), tr.edges.end());
                        }
        }
        for (EdgeId e : brick_edges) host.insert(g.edge_of(b.to_host[e]));
    }
    sp.host_edges = EdgeSubset::of(g, host);
    Rational base = mg.baseline.length;
    sp.factor_witness = base > 0 ? sp.host_edges.length / base : Rational(0);
    return sp;
}

ContractionChoice contraction_partition(const EmbeddedGraph& gspan, int k) {
    if (k < 1) fail(ErrorCode::InfeasibleParameters, "contraction modulus must be positive");
    ContractionChoice out;
    out.classes.assign(k, {});
    const int f = gspan.face_count();
    // face adjacency BFS levels, rooted at the boundary face of the cut-open
    // disk for positive genus, at face 0 otherwise
    std::vector<int> face_id_of_dart(gspan.dart_count());
    std::vector<int> level;
    {
        std::map<int, int> dense;
        for (int d = 0; d < gspan.dart_count(); ++d) {
            int fi = gspan.face_index(d);
            if (!dense.count(fi)) {
                int id = static_cast<int>(dense.size());
                dense[fi] = id;
            }
            face_id_of_dart[d] = dense[fi];
        }
        level.assign(f, -1);
        int root = face_id_of_dart[0];
        std::queue<int> q;
        level[root] = 0;
        q.push(root);
        // adjacency via darts
        std::vector<std::vector<int>> adj(f);
        for (int d = 0; d < gspan.dart_count(); ++d)
            adj[face_id_of_dart[d]].push_back(face_id_of_dart[gspan.twin(d)]);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj[x])
                if (level[y] < 0) {
                    level[y] = level[x] + 1;
                    q.push(y);
                }
        }
    }
    std::vector<Rational> weight_of(k, Rational(0));
    for (EdgeId e : gspan.edges()) {
        int la = level[face_id_of_dart[e]];
        int lb = level[face_id_of_dart[gspan.twin(e)]];
        int l = std::min(la < 0 ? lb : la, lb < 0 ? la : lb);
        if (l < 0) l = 0;
        int cls = l % k;
        out.classes[cls].insert(e);
        weight_of[cls] += gspan.weight(e);
    }
    out.chosen_class = 0;
    for (int c = 1; c < k; ++c)
        if (weight_of[c] < weight_of[out.chosen_class]) out.chosen_class = c;
    out.chosen = out.classes[out.chosen_class];
    out.chosen_length = weight_of[out.chosen_class];
    return out;
}

ContractLift contract_lightest(const EmbeddedGraph& gspan, int k) {
    auto choice = contraction_partition(gspan, k);
    ContractLift out;
    out.contracted = contract_edges(gspan, choice.chosen);
    out.lifted = std::move(choice.chosen);
    out.lift_cost = choice.chosen_length;
    return out;
}

} // namespace surfcut
