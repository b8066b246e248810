#include <surfcut/cutgraph.hpp>
#include <surfcut/errors.hpp>
#include <surfcut/mortar.hpp>

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <set>

namespace surfcut {

// ------------------------------------------------------------------- params

namespace {

long long ceil_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = (num + den - 1) / den;
    return q.convert_to<long long>();
}

int floor_log2(long long x) {
    int l = 0;
    while (x >= 2) {
        x /= 2;
        ++l;
    }
    return l;
}

} // namespace

ApproxParams derive_params(int genus, const Rational& epsilon, const Rational& measured_alpha) {
    if (epsilon <= 0) fail(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
    ApproxParams p;
    p.epsilon = epsilon;
    p.alpha = measured_alpha;
    long long lg = floor_log2(genus + 2);
    Rational lgsq(1 + lg * lg);
    Rational eps3 = epsilon * epsilon * epsilon;
    p.kappa = std::max<long long>(1, ceil_rational(lgsq / eps3));
    // gamma = ceil(kappa * eps^(-5/2)) = ceil(sqrt(kappa^2 / eps^5))
    Rational eps5 = eps3 * epsilon * epsilon;
    Rational inside = Rational(p.kappa) * Rational(p.kappa) / eps5;
    BigInt gm = ceil_sqrt_rational(boost::multiprecision::numerator(inside),
                                  boost::multiprecision::denominator(inside));
    p.gamma = std::max<long long>(1, gm.convert_to<long long>());
    p.theta = std::max<long long>(1, ceil_rational(Rational(p.gamma) * measured_alpha / epsilon));
    p.spanner_factor = measured_alpha * lgsq / epsilon;
    p.k_contraction = std::max<long long>(2, ceil_rational(p.spanner_factor / epsilon));
    return p;
}

// ------------------------------------------------------------------- mortar

namespace {

// deterministic Dijkstra; returns (distance, parent dart into vertex)
void dijkstra(const EmbeddedGraph& m, const std::vector<int>& sources,
              std::vector<Rational>& dist, std::vector<DartId>& parent) {
    const int n = m.vertex_count();
    dist.assign(n, Rational(-1));
    parent.assign(n, -1);
    using Item = std::pair<Rational, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> q;
    for (int s : sources) {
        dist[s] = 0;
        q.push({Rational(0), s});
    }
    std::vector<char> done(n, 0);
    while (!q.empty()) {
        auto [d, v] = q.top();
        q.pop();
        if (done[v]) continue;
        done[v] = 1;
        for (DartId x : m.darts_of_vertex(v)) {
            int w = m.vertex_index(m.twin(x));
            Rational nd = d + m.weight(m.edge_of(x));
            if (dist[w] < 0 || nd < dist[w] ||
                (nd == dist[w] && parent[w] >= 0 && x < parent[w] && !done[w])) {
                if (done[w]) continue;
                dist[w] = nd;
                parent[w] = x;  // dart from v toward w
                q.push({nd, w});
            }
        }
    }
}

} // namespace

MortarGraph build_mortar(const EmbeddedGraph& g, const ApproxParams& params) {
    MortarGraph mg;
    mg.baseline = baseline_cut_graph(g);
    if (g.euler_genus() == 0) {
        mg.subgraph = EdgeSubset{{}, Rational(0)};
        mg.length = 0;
        mg.supercolumn_length = 0;
        return mg;
    }
    mg.disk = cut_open(g, mg.baseline.edges);
    if (mg.disk.size() != 1)
        fail(ErrorCode::Internal, "baseline cut graph did not open into one piece");
    const auto& comp = mg.disk[0];
    if (comp.boundary_faces.size() != 1 || comp.map.euler_genus() != 0)
        fail(ErrorCode::Internal, "cut-open piece is not a disk");
    const EmbeddedGraph& D = comp.map;
    auto walk = D.darts_of_face(comp.boundary_face_index);

    // root: minimal boundary vertex; Dijkstra tree of the disk from it
    int root = D.vertex_index(walk[0]);
    for (DartId d : walk) root = std::min(root, D.vertex_index(d));
    std::vector<Rational> dist;
    std::vector<DartId> parent;
    dijkstra(D, {root}, dist, parent);

    // column targets: boundary vertices at length-spacing l(dD)/q
    Rational boundary_len = 0;
    for (DartId d : walk) boundary_len += D.weight(D.edge_of(d));
    long long q = std::max<long long>(2, ceil_rational(Rational(4) / params.epsilon));
    Rational T = boundary_len / Rational(q);
    std::vector<int> targets;
    std::set<int> seen_target;
    Rational acc = T;  // first target right away at walk start
    for (DartId d : walk) {
        int v = D.vertex_index(d);
        if (acc >= T && v != root && !seen_target.count(v)) {
            targets.push_back(v);
            seen_target.insert(v);
            acc = 0;
        }
        acc += D.weight(D.edge_of(d));
    }

    std::set<EdgeId> mortar_edges(mg.baseline.edges.begin(), mg.baseline.edges.end());
    long long col_index = 0;
    for (int b : targets) {
        EdgeSubset col;
        for (int v = b; v != root && parent[v] >= 0; v = D.vertex_index(parent[v])) {
            EdgeId host = g.edge_of(comp.to_host[parent[v]]);
            if (col.edges.insert(host).second) col.length += g.weight(host);
        }
        mortar_edges.insert(col.edges.begin(), col.edges.end());
        mg.columns.push_back(col);
        if (col_index % std::max<long long>(1, params.kappa) == 0) {
            mg.supercolumns.push_back(col);
            mg.supercolumn_length += col.length;
        }
        ++col_index;
    }
    mg.subgraph = EdgeSubset::of(g, mortar_edges);
    mg.length = mg.subgraph.length;
    return mg;
}

// ------------------------------------------------------------------- bricks

namespace {

Rational brick_dist_to_set(const EmbeddedGraph& m, const std::vector<int>& sources, int v,
                           std::vector<Rational>& cache, bool& cached) {
    if (!cached) {
        std::vector<DartId> parent;
        dijkstra(m, sources, cache, parent);
        cached = true;
    }
    return cache[v];
}

} // namespace

std::vector<Brick> extract_bricks(const EmbeddedGraph& g, const MortarGraph& mg,
                                  const ApproxParams& params) {
    std::vector<Brick> out;
    if (mg.subgraph.edges.empty()) {
        // genus 0: one brick, the whole map, with an empty boundary frame
        Brick b;
        b.map = g;
        b.to_host.resize(g.dart_count());
        for (int d = 0; d < g.dart_count(); ++d) b.to_host[d] = d;
        out.push_back(std::move(b));
        return out;
    }
    // host distance from the slice boundary root side, for apex splitting
    auto comps = cut_open(g, mg.subgraph.edges);
    const auto& D = mg.disk[0];
    std::vector<Rational> ddist;
    std::vector<DartId> dparent;
    {
        auto bwalk = D.map.darts_of_face(D.boundary_face_index);
        int root = D.map.vertex_index(bwalk[0]);
        for (DartId d : bwalk) root = std::min(root, D.map.vertex_index(d));
        dijkstra(D.map, {root}, ddist, dparent);
    }
    std::vector<Rational> host_dist(g.vertex_count(), Rational(-1));
    for (int d = 0; d < D.map.dart_count(); ++d) {
        int hv = g.vertex_index(D.to_host[d]);
        int dv = D.map.vertex_index(d);
        if (ddist[dv] >= 0 && (host_dist[hv] < 0 || ddist[dv] < host_dist[hv]))
            host_dist[hv] = ddist[dv];
    }

    for (auto& comp : comps) {
        Brick b;
        if (comp.map.euler_genus() != 0 || comp.boundary_faces.size() != 1)
            fail(ErrorCode::NonPlanarBrick, "mortar face is not a disk");
        b.boundary_face = comp.boundary_face_index;
        b.map = comp.map;
        b.to_host = comp.to_host;
        auto walk = b.map.darts_of_face(b.boundary_face);
        const int L = static_cast<int>(walk.size());
        // classify boundary darts: slice (baseline) vs column
        std::vector<char> is_slice(L, 0);
        for (int i = 0; i < L; ++i)
            is_slice[i] = mg.baseline.edges.count(g.edge_of(b.to_host[walk[i]])) ? 1 : 0;
        // maximal cyclic runs
        struct Run {
            int start, len;
            bool slice;
        };
        std::vector<Run> runs;
        {
            int i = 0;
            while (i < L && L > 1 && is_slice[i] == is_slice[(i + L - 1) % L]) ++i;
            if (i == L || L == 1) {
                runs.push_back({0, L, is_slice[0] != 0});
            } else {
                int s = i, cnt = 0;
                while (cnt < L) {
                    int j = s, len = 0;
                    while (len < L - cnt && is_slice[(s + len) % L] == is_slice[s % L]) ++len;
                    runs.push_back({j % L, len, is_slice[s % L] != 0});
                    cnt += len;
                    s += len;
                }
            }
        }
        auto slice_of = [&](int start, int len) {
            std::vector<DartId> out_d;
            for (int t = 0; t < len; ++t) out_d.push_back(walk[(start + t) % L]);
            return out_d;
        };
        int col_runs = 0;
        for (const auto& r : runs)
            if (!r.slice) ++col_runs;
        if (col_runs == 0) {
            b.east = walk;
        } else if (col_runs == 1 && runs.size() <= 2) {
            // one column-side run: split at its apex (minimal slice distance)
            const Run* cr = nullptr;
            const Run* sr = nullptr;
            for (const auto& r : runs) (r.slice ? sr : cr) = &r;
            auto cd = slice_of(cr->start, cr->len);
            int split = 0;
            Rational bestd = -1;
            for (int t = 1; t < static_cast<int>(cd.size()); ++t) {
                int hv = g.vertex_index(b.to_host[cd[t]]);
                if (host_dist[hv] >= 0 && (bestd < 0 || host_dist[hv] < bestd)) {
                    bestd = host_dist[hv];
                    split = t;
                }
            }
            b.north.assign(cd.begin(), cd.begin() + split);
            b.south.assign(cd.begin() + split, cd.end());
            if (sr) b.east = slice_of(sr->start, sr->len);
        } else {
            // N and S are the two column runs with the smallest leading darts;
            // everything between them folds into E and W
            std::vector<int> cols;
            for (std::size_t i = 0; i < runs.size(); ++i)
                if (!runs[i].slice) cols.push_back(static_cast<int>(i));
            std::sort(cols.begin(), cols.end(), [&](int a, int bb) {
                return walk[runs[a].start] < walk[runs[bb].start];
            });
            int ni = cols[0], si = cols.size() > 1 ? cols[1] : cols[0];
            if (ni == si) si = -1;
            const Run& nr = runs[ni];
            b.north = slice_of(nr.start, nr.len);
            int after_n = (nr.start + nr.len) % L;
            if (si >= 0) {
                const Run& sr2 = runs[si];
                int gap1 = (sr2.start - after_n + L) % L;
                b.east = slice_of(after_n, gap1);
                b.south = slice_of(sr2.start, sr2.len);
                int after_s = (sr2.start + sr2.len) % L;
                int gap2 = (nr.start - after_s + L) % L;
                b.west = slice_of(after_s, gap2);
            } else {
                b.east = slice_of(after_n, L - nr.len);
            }
        }

        // property-4 marks on S, greedily
        if (!b.south.empty()) {
            std::vector<int> nset;
            for (DartId d : b.north) {
                nset.push_back(b.map.vertex_index(d));
                nset.push_back(b.map.vertex_index(b.map.twin(d)));
            }
            std::sort(nset.begin(), nset.end());
            nset.erase(std::unique(nset.begin(), nset.end()), nset.end());
            std::vector<Rational> to_n;
            bool cached = false;
            Rational since_mark = 0;
            int first = b.map.vertex_index(b.south.front());
            b.s_marks.push_back(first);
            for (DartId d : b.south) {
                since_mark += b.map.weight(b.map.edge_of(d));
                int v = b.map.vertex_index(b.map.twin(d));
                Rational dn = nset.empty()
                                  ? Rational(-1)
                                  : brick_dist_to_set(b.map, nset, v, to_n, cached);
                if (dn >= 0 && since_mark > params.epsilon * dn) {
                    b.s_marks.push_back(v);
                    since_mark = 0;
                }
            }
        }
        out.push_back(std::move(b));
    }
    return out;
}

// -------------------------------------------------------------- properties

namespace {

// path darts -> ordered vertex list (tails plus final head)
std::vector<int> path_vertices(const EmbeddedGraph& m, const std::vector<DartId>& path) {
    std::vector<int> vs;
    for (DartId d : path) vs.push_back(m.vertex_index(d));
    if (!path.empty()) vs.push_back(m.vertex_index(m.twin(path.back())));
    return vs;
}

} // namespace

BrickPropertyReport check_brick_properties(const Brick& b, const Rational& epsilon,
                                           long long kappa) {
    BrickPropertyReport rep;
    rep.north_zero_short = true;
    rep.south_eps_short = true;
    rep.marks_ok = true;
    auto check_short = [&](const std::vector<DartId>& path, const Rational& slack, bool& flag,
                           const char* name) {
        auto vs = path_vertices(b.map, path);
        std::vector<Rational> pref(vs.size(), Rational(0));
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            pref[i + 1] = pref[i] + b.map.weight(b.map.edge_of(path[i]));
        for (std::size_t i = 0; i < vs.size(); ++i) {
            std::vector<Rational> dist;
            std::vector<DartId> parent;
            dijkstra(b.map, {vs[i]}, dist, parent);
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                Rational along = pref[j] - pref[i];
                if (along > (Rational(1) + slack) * dist[vs[j]]) {
                    flag = false;
                    rep.violations.push_back(std::string(name) + " violation between positions " +
                                             std::to_string(i) + " and " + std::to_string(j));
                }
            }
        }
    };
    check_short(b.north, Rational(0), rep.north_zero_short, "N 0-short");
    check_short(b.south, epsilon, rep.south_eps_short, "S eps-short");

    if (!b.south.empty() && !b.north.empty()) {
        std::vector<int> nset;
        for (DartId d : b.north) {
            nset.push_back(b.map.vertex_index(d));
            nset.push_back(b.map.vertex_index(b.map.twin(d)));
        }
        std::sort(nset.begin(), nset.end());
        nset.erase(std::unique(nset.begin(), nset.end()), nset.end());
        std::vector<Rational> to_n;
        std::vector<DartId> parent;
        dijkstra(b.map, nset, to_n, parent);
        auto vs = path_vertices(b.map, b.south);
        std::vector<Rational> pref(vs.size(), Rational(0));
        for (std::size_t i = 0; i + 1 < vs.size(); ++i)
            pref[i + 1] = pref[i] + b.map.weight(b.map.edge_of(b.south[i]));
        std::set<int> marks(b.s_marks.begin(), b.s_marks.end());
        for (std::size_t i = 0; i < vs.size(); ++i) {
            Rational best = -1;
            for (std::size_t j = 0; j < vs.size(); ++j) {
                if (!marks.count(vs[j])) continue;
                Rational along = pref[i] > pref[j] ? pref[i] - pref[j] : pref[j] - pref[i];
                if (best < 0 || along < best) best = along;
            }
            if (best < 0) continue;
            if (to_n[vs[i]] >= 0 && best > epsilon * to_n[vs[i]]) {
                rep.marks_ok = false;
                rep.violations.push_back("mark spacing violation at S position " +
                                         std::to_string(i));
            }
        }
    }
    rep.marks_within_cap = static_cast<long long>(b.s_marks.size()) <= kappa + 1;
    return rep;
}

// ----------------------------------------------------------------- portals

std::vector<int> select_portals(const Brick& b, long long theta) {
    std::vector<DartId> boundary;
    for (const auto* side : {&b.north, &b.east, &b.south, &b.west})
        boundary.insert(boundary.end(), side->begin(), side->end());
    if (boundary.empty()) {
        // degenerate brick (genus-0 whole-map brick): portal at vertex 0
        return {0};
    }
    Rational total = 0;
    for (DartId d : boundary) total += b.map.weight(b.map.edge_of(d));
    const int L = static_cast<int>(boundary.size());
    // anchor at the occurrence of the minimal boundary vertex id
    int anchor = 0;
    for (int i = 1; i < L; ++i)
        if (b.map.vertex_index(boundary[i]) < b.map.vertex_index(boundary[anchor])) anchor = i;
    Rational T = theta > 0 ? total / Rational(theta) : total;
    std::set<int> portals = {b.map.vertex_index(boundary[anchor])};
    Rational c = 0;
    for (int t = 0; t < L; ++t) {
        DartId d = boundary[(anchor + t) % L];
        c += b.map.weight(b.map.edge_of(d));
        int head = b.map.vertex_index(b.map.twin(d));
        if (c >= T) {
            portals.insert(head);
            c = 0;
        }
    }
    return std::vector<int>(portals.begin(), portals.end());
}

// -------------------------------------------------------------- brick copy

BrickCopyGraph brick_copy(const EmbeddedGraph& g, const MortarGraph& mg,
                          const std::vector<Brick>& bricks,
                          const std::vector<std::vector<int>>& portals,
                          const ApproxParams& params) {
    (void)params;
    if (mg.subgraph.edges.empty()) fail(ErrorCode::Internal, "brick_copy needs a mortar graph");
    auto rest = restrict_to_edges(g, mg.subgraph.edges);
    const EmbeddedGraph& M = rest.map;

    // dart layout: [mortar | brick 0 | brick 1 | ... | portal darts]
    std::vector<int> offset(bricks.size() + 1);
    offset[0] = M.dart_count();
    for (std::size_t i = 0; i < bricks.size(); ++i)
        offset[i + 1] = offset[i] + bricks[i].map.dart_count();
    int nd = offset.back();

    struct PendingPortal {
        int brick;
        DartId brick_anchor;   // boundary dart at the portal vertex (brick-local)
        DartId mortar_anchor;  // mortar dart before which the portal dart goes
    };
    std::vector<PendingPortal> pend;
    auto next_on_face = [&](DartId h) {
        DartId c = M.rotation(M.twin(h));
        if (M.prev_on_face(c) == h) return c;
        c = M.twin(M.rotation_prev(h));
        if (M.prev_on_face(c) == h) return c;
        fail(ErrorCode::Internal, "face successor not found");
    };
    for (std::size_t bi = 0; bi < bricks.size(); ++bi) {
        const Brick& b = bricks[bi];
        auto walk = b.map.darts_of_face(b.boundary_face);
        const int L = static_cast<int>(walk.size());
        // the face of the mortar map that this brick fills: the unique face
        // of M shared as an option by every boundary edge of the brick
        std::set<int> region;
        for (int i = 0; i < L; ++i) {
            DartId hm = rest.from_host.at(g.edge_of(b.to_host[walk[i]]));
            std::set<int> opts = {M.face_index(hm), M.face_index(M.twin(hm))};
            if (i == 0)
                region = opts;
            else {
                std::set<int> inter;
                for (int x : opts)
                    if (region.count(x)) inter.insert(x);
                region = inter;
            }
        }
        if (region.empty()) fail(ErrorCode::Internal, "brick region face not found in mortar map");
        int rf = *region.begin();
        auto aligned = [&](DartId piece_dart) {
            DartId hm = rest.from_host.at(g.edge_of(b.to_host[piece_dart]));
            if (M.face_index(hm) == rf) return hm;
            return M.twin(hm);
        };
        for (int p : portals[bi]) {
            int pos = -1;
            for (int i = 0; i < L && pos < 0; ++i)
                if (b.map.vertex_index(walk[i]) == p) pos = i;
            if (pos < 0) fail(ErrorCode::Internal, "portal vertex not on brick boundary");
            DartId d_out = walk[pos], d_in = walk[(pos + L - 1) % L];
            // the corner of rf between the mortar copies of the two boundary
            // edges that meet at the portal; insertion before a face-walk
            // dart lands in that dart's clockwise corner
            DartId h_out = aligned(d_out), h_in = aligned(d_in);
            DartId anchor_m;
            if (L == 1 || h_out == h_in)
                anchor_m = next_on_face(h_out);
            else if (next_on_face(h_in) == h_out)
                anchor_m = h_out;
            else if (next_on_face(h_out) == h_in)
                anchor_m = h_in;
            else {
                // both edges appear twice on the region face; scan the face
                // walk of rf for a consecutive pair with the right edges
                auto fw = M.darts_of_face(rf);
                const int FL = static_cast<int>(fw.size());
                EdgeId ein = M.edge_of(rest.from_host.at(g.edge_of(b.to_host[d_in])));
                EdgeId eout = M.edge_of(rest.from_host.at(g.edge_of(b.to_host[d_out])));
                anchor_m = -1;
                for (int i = 0; i < FL; ++i) {
                    EdgeId a = M.edge_of(fw[i]), c = M.edge_of(fw[(i + 1) % FL]);
                    if ((a == ein && c == eout) || (a == eout && c == ein)) {
                        anchor_m = fw[(i + 1) % FL];
                        break;
                    }
                }
                if (anchor_m < 0) fail(ErrorCode::Internal, "portal corner not found");
            }
            pend.push_back({static_cast<int>(bi), d_out, anchor_m});
        }
    }

    const int total = nd + 2 * static_cast<int>(pend.size());
    std::vector<DartId> rot(total), twin(total);
    std::vector<std::pair<EdgeId, Rational>> wts;

    // per-vertex dart sequences with portal darts spliced in
    std::map<std::pair<int, int>, std::vector<std::pair<DartId, DartId>>> splice;
    // key (side 0=mortar / 1+brick index, local vertex) -> (before-dart, portal dart)
    for (std::size_t pi = 0; pi < pend.size(); ++pi) {
        DartId pb = nd + 2 * static_cast<int>(pi);      // brick side
        DartId pm = pb + 1;                             // mortar side
        const auto& pp = pend[pi];
        splice[{1 + pp.brick, bricks[pp.brick].map.vertex_index(pp.brick_anchor)}].push_back(
            {pp.brick_anchor, pb});
        splice[{0, M.vertex_index(pp.mortar_anchor)}].push_back({pp.mortar_anchor, pm});
        twin[pb] = pm;
        twin[pm] = pb;
        wts.emplace_back(std::min(pb, pm), Rational(0));
    }

    auto emit_vertex = [&](int side, int v, const EmbeddedGraph& part, int off) {
        auto cyc = part.darts_of_vertex(v);
        std::vector<DartId> full;
        auto it = splice.find({side, v});
        for (DartId d : cyc) {
            if (it != splice.end())
                for (const auto& [before, pd] : it->second)
                    if (before == d) full.push_back(pd);
            full.push_back(off + d);
        }
        for (std::size_t i = 0; i < full.size(); ++i)
            rot[full[i]] = full[(i + 1) % full.size()];
    };
    for (int v = 0; v < M.vertex_count(); ++v) emit_vertex(0, v, M, 0);
    for (std::size_t bi = 0; bi < bricks.size(); ++bi)
        for (int v = 0; v < bricks[bi].map.vertex_count(); ++v)
            emit_vertex(1 + static_cast<int>(bi), v, bricks[bi].map, offset[bi]);

    for (int d = 0; d < M.dart_count(); ++d) twin[d] = M.twin(d);
    for (std::size_t bi = 0; bi < bricks.size(); ++bi)
        for (int d = 0; d < bricks[bi].map.dart_count(); ++d)
            twin[offset[bi] + d] = offset[bi] + bricks[bi].map.twin(d);
    for (int d = 0; d < M.dart_count(); ++d)
        if (M.twin(d) > d) wts.emplace_back(d, M.weight(M.edge_of(d)));
    for (std::size_t bi = 0; bi < bricks.size(); ++bi)
        for (int d = 0; d < bricks[bi].map.dart_count(); ++d)
            if (bricks[bi].map.twin(d) > d)
                wts.emplace_back(offset[bi] + d, bricks[bi].map.weight(bricks[bi].map.edge_of(d)));

    BrickCopyGraph out;
    out.map = EmbeddedGraph::build(rot, twin, wts);
    out.host_dart.assign(total, -1);
    for (int d = 0; d < M.dart_count(); ++d) {
        out.host_dart[d] = rest.to_host[d];
        out.mortar_edges.insert(out.map.edge_of(d));
    }
    for (std::size_t bi = 0; bi < bricks.size(); ++bi)
        for (int d = 0; d < bricks[bi].map.dart_count(); ++d)
            out.host_dart[offset[bi] + d] = bricks[bi].to_host[d];
    for (int d = nd; d < total; ++d) out.portal_edges.insert(out.map.edge_of(d));

    out.vertex_map.assign(g.vertex_count(), -1);
    out.brick_of_vertex.assign(out.map.vertex_count(), -1);
    for (int d = 0; d < M.dart_count(); ++d)
        out.vertex_map[g.vertex_index(rest.to_host[d])] = out.map.vertex_index(d);
    for (std::size_t bi = 0; bi < bricks.size(); ++bi)
        for (int d = 0; d < bricks[bi].map.dart_count(); ++d) {
            int nv = out.map.vertex_index(offset[bi] + d);
            out.brick_of_vertex[nv] = static_cast<int>(bi);
            int hv = g.vertex_index(bricks[bi].to_host[d]);
            if (out.vertex_map[hv] < 0) out.vertex_map[hv] = nv;
        }

    // E/W contraction: brick-copy E/W edges plus their mortar copies
    std::set<EdgeId> ew;
    for (std::size_t bi = 0; bi < bricks.size(); ++bi) {
        for (const auto* side : {&bricks[bi].east, &bricks[bi].west}) {
            for (DartId d : *side) {
                ew.insert(out.map.edge_of(offset[bi] + d));
                EdgeId host = g.edge_of(bricks[bi].to_host[d]);
                auto it = rest.from_host.find(host);
                if (it != rest.from_host.end()) ew.insert(out.map.edge_of(it->second));
            }
        }
    }
    auto con = contract_edges(out.map, ew);
    out.contracted = std::move(con.map);
    out.contract_vertex_map = std::move(con.vertex_map);
    return out;
}

} // namespace surfcut
