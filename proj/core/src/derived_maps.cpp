#include <surfcut/derived_maps.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace surfcut {

namespace {

// faces connected through edges outside `in_h`, i.e. the pieces of the
// surface cut along H
std::pair<std::vector<int>, int> piece_partition(const EmbeddedGraph& g,
                                                 const std::vector<char>& in_h) {
    std::vector<int> parent(g.face_count());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    };
    for (int e = 0; e < g.dart_count(); ++e) {
        if (g.twin(e) < e || in_h[e]) continue;
        int a = find(g.face_index(e)), b = find(g.face_index(g.twin(e)));
        if (a != b) parent[a] = b;
    }
    std::vector<int> piece(g.face_count(), -1);
    int count = 0;
    for (int i = 0; i < g.face_count(); ++i) {
        int r = find(i);
        if (piece[r] < 0) piece[r] = count++;
        piece[i] = piece[r];
    }
    return {piece, count};
}

} // namespace

EmbeddedGraph medial_graph(const EmbeddedGraph& g) {
    const int d = g.dart_count();
    // darts 2c, 2c+1 for the medial edge at corner c (between dart c and
    // next_on_face(c)); 2c sits at the vertex for edge(c), 2c+1 at the vertex
    // for edge(next_on_face(c))
    std::vector<DartId> rot(2 * d, -1), twin(2 * d, -1);
    for (int c = 0; c < d; ++c) {
        twin[2 * c] = 2 * c + 1;
        twin[2 * c + 1] = 2 * c;
    }
    for (int e = 0; e < d; ++e) {
        if (g.twin(e) < e) continue;
        DartId a = e, b = g.twin(e);
        // counterclockwise around the midpoint of e
        DartId cyc[4] = {2 * a, 2 * g.prev_on_face(a) + 1, 2 * b, 2 * g.prev_on_face(b) + 1};
        for (int i = 0; i < 4; ++i) rot[cyc[i]] = cyc[(i + 1) % 4];
    }
    return EmbeddedGraph::build(std::move(rot), std::move(twin), {});
}

EmbeddedGraph barycentric_subdivision(const EmbeddedGraph& g) {
    const int d = g.dart_count();
    // per original dart a: 6a/6a+1 the half-edge tail(a)--v_edge, 6a+2/6a+3
    // the corner spoke v_face(a)--tail(a), 6a+4/6a+5 the spoke v_face(a)--v_edge(a)
    std::vector<DartId> rot(6 * d, -1), twin(6 * d, -1);
    std::vector<std::pair<EdgeId, Rational>> wts;
    for (int a = 0; a < d; ++a) {
        twin[6 * a] = 6 * a + 1;
        twin[6 * a + 1] = 6 * a;
        twin[6 * a + 2] = 6 * a + 3;
        twin[6 * a + 3] = 6 * a + 2;
        twin[6 * a + 4] = 6 * a + 5;
        twin[6 * a + 5] = 6 * a + 4;
        wts.emplace_back(6 * a, g.weight(g.edge_of(a)) / 2);
        // spokes stay at weight 0
        rot[6 * a] = 6 * g.rotation(a) + 3;
        rot[6 * g.rotation(a) + 3] = 6 * g.rotation(a);
    }
    for (int e = 0; e < d; ++e) {
        if (g.twin(e) < e) continue;
        DartId a = e, b = g.twin(e);
        DartId cyc[4] = {6 * a + 1, 6 * a + 5, 6 * b + 1, 6 * b + 5};
        for (int i = 0; i < 4; ++i) rot[cyc[i]] = cyc[(i + 1) % 4];
    }
    for (int fi = 0; fi < g.face_count(); ++fi) {
        auto walk = g.darts_of_face(fi);
        int k = static_cast<int>(walk.size());
        for (int i = 0; i < k; ++i) {
            DartId cur = walk[i], prv = walk[(i + k - 1) % k];
            rot[6 * cur + 4] = 6 * cur + 2;
            rot[6 * cur + 2] = 6 * prv + 4;
        }
    }
    return EmbeddedGraph::build(std::move(rot), std::move(twin), wts);
}

SuperposeResult superpose_with_medial(const EmbeddedGraph& g, const Rational& new_edge_weight) {
    const int d = g.dart_count();
    // per original dart a: 4a/4a+1 the half-edge tail(a)--v_edge(a), and
    // 4a+2/4a+3 the medial edge of corner a (from v_edge(a) to
    // v_edge(next_on_face(a)))
    std::vector<DartId> rot(4 * d, -1), twin(4 * d, -1);
    std::vector<std::pair<EdgeId, Rational>> wts;
    SuperposeResult res;
    for (int a = 0; a < d; ++a) {
        twin[4 * a] = 4 * a + 1;
        twin[4 * a + 1] = 4 * a;
        twin[4 * a + 2] = 4 * a + 3;
        twin[4 * a + 3] = 4 * a + 2;
        wts.emplace_back(4 * a, g.weight(g.edge_of(a)) / 2);
        wts.emplace_back(4 * a + 2, new_edge_weight);
        res.medial_edges.push_back(4 * a + 2);
        rot[4 * a] = 4 * g.rotation(a);
    }
    for (int e = 0; e < d; ++e) {
        if (g.twin(e) < e) continue;
        DartId a = e, b = g.twin(e);
        DartId cyc[6] = {4 * a + 1, 4 * g.prev_on_face(a) + 3, 4 * a + 2,
                         4 * b + 1, 4 * g.prev_on_face(b) + 3, 4 * b + 2};
        for (int i = 0; i < 6; ++i) rot[cyc[i]] = cyc[(i + 1) % 6];
        res.halves_of[e] = {4 * a, 4 * b};
    }
    res.map = EmbeddedGraph::build(std::move(rot), std::move(twin), wts);
    return res;
}

TriangulateResult triangulate(const EmbeddedGraph& g, const Rational& heavy_weight) {
    const int d = g.dart_count();
    std::vector<DartId> rot(d), twin(d);
    std::vector<Rational> wt(d, Rational(0));
    for (int i = 0; i < d; ++i) {
        rot[i] = g.rotation(i);
        twin[i] = g.twin(i);
    }
    for (int e = 0; e < d; ++e)
        if (g.twin(e) > e) wt[e] = g.weight(e);

    TriangulateResult res;
    for (int fi = 0; fi < g.face_count(); ++fi) {
        auto walk = g.darts_of_face(fi);
        const int k = static_cast<int>(walk.size());
        if (k < 3)
            fail(ErrorCode::FaceDegreeTooSmall,
                 "face of degree " + std::to_string(k) + "; subdivide first");
        if (k == 3) continue;
        // fan from the corner at the minimum-id vertex (ties by out-dart).
        // Corner i sits at the head of walk[i], with out-dart next_on_face(walk[i]).
        int apex = 0;
        auto corner_key = [&](int i) {
            DartId out = g.next_on_face(walk[i]);
            return std::pair<VertexId, DartId>(g.vertex_id(g.vertex_index(out)), out);
        };
        for (int i = 1; i < k; ++i)
            if (corner_key(i) < corner_key(apex)) apex = i;
        std::vector<DartId> in(k), out(k);
        for (int i = 0; i < k; ++i) {
            in[i] = walk[(apex + i) % k];
            out[i] = g.next_on_face(in[i]);
        }
        // chords a_j/b_j from corner 0 to corners j = 2..k-2
        std::vector<DartId> a(k, -1), b(k, -1);
        for (int j = 2; j <= k - 2; ++j) {
            a[j] = static_cast<DartId>(rot.size());
            b[j] = a[j] + 1;
            rot.resize(b[j] + 1, -1);
            twin.resize(b[j] + 1, -1);
            wt.resize(b[j] + 1, Rational(0));
            twin[a[j]] = b[j];
            twin[b[j]] = a[j];
            wt[a[j]] = heavy_weight;
            res.added_edges.push_back(a[j]);
            rot[twin[in[j]]] = b[j];
            rot[b[j]] = out[j];
        }
        rot[twin[in[0]]] = a[k - 2];
        for (int j = k - 2; j > 2; --j) rot[a[j]] = a[j - 1];
        rot[a[2]] = out[0];
    }
    std::vector<std::pair<EdgeId, Rational>> wts;
    for (int e = 0; e < static_cast<int>(rot.size()); ++e)
        if (twin[e] > e) wts.emplace_back(e, wt[e]);
    res.map = EmbeddedGraph::build(std::move(rot), std::move(twin), wts);
    for (int e = 0; e < d; ++e)
        if (g.twin(e) > e) res.edge_map[e] = e;
    return res;
}

SubdivideResult subdivide_all_edges(const EmbeddedGraph& g) {
    const int d = g.dart_count();
    std::vector<DartId> rot(2 * d), twin(2 * d);
    std::vector<std::pair<EdgeId, Rational>> wts;
    SubdivideResult res;
    for (int i = 0; i < d; ++i) rot[i] = g.rotation(i);
    int k = 0;
    for (int e = 0; e < d; ++e) {
        if (g.twin(e) < e) continue;
        DartId a = e, b = g.twin(e);
        DartId p = d + 2 * k, q = d + 2 * k + 1;
        ++k;
        twin[a] = p;
        twin[p] = a;
        twin[b] = q;
        twin[q] = b;
        rot[p] = q;
        rot[q] = p;
        wts.emplace_back(std::min(a, p), g.weight(e) / 2);
        wts.emplace_back(std::min(b, q), g.weight(e) / 2);
        res.halves_of[e] = {std::min(a, p), std::min(b, q)};
    }
    res.map = EmbeddedGraph::build(std::move(rot), std::move(twin), wts);
    return res;
}

ContractResult contract_edges(const EmbeddedGraph& g, const std::set<EdgeId>& s) {
    const int d = g.dart_count();
    std::vector<DartId> rot(d), rprev(d), twin(d);
    std::vector<char> alive(d, 1);
    for (int i = 0; i < d; ++i) {
        rot[i] = g.rotation(i);
        rprev[i] = g.rotation_prev(i);
        twin[i] = g.twin(i);
    }
    std::vector<int> uf(g.vertex_count());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) { uf[x] = uf[uf[x]]; x = uf[x]; }
        return x;
    };
    auto remove_dart = [&](DartId x) {
        if (rot[x] != x) {
            rot[rprev[x]] = rot[x];
            rprev[rot[x]] = rprev[x];
        }
        alive[x] = 0;
    };

    for (EdgeId e : s) {
        if (e < 0 || e >= d || g.twin(e) < e)
            fail(ErrorCode::PermutationDomainMismatch, "not an edge id: " + std::to_string(e));
        DartId a = e, b = twin[e];
        int u = find(g.vertex_index(a)), v = find(g.vertex_index(b));
        if (u == v) {
            // a loop by now: delete it
            remove_dart(a);
            remove_dart(b);
            continue;
        }
        // merge the two rotation cycles, dropping a and b
        DartId pa = rprev[a], na = rot[a], pb = rprev[b], nb = rot[b];
        if (na == a && nb == b) {
            // the map was this single edge
        } else if (na == a) {
            rot[pb] = nb;
            rprev[nb] = pb;
        } else if (nb == b) {
            rot[pa] = na;
            rprev[na] = pa;
        } else {
            rot[pa] = nb;
            rprev[nb] = pa;
            rot[pb] = na;
            rprev[na] = pb;
        }
        alive[a] = alive[b] = 0;
        uf[u] = v;
    }

    std::vector<DartId> newid(d, -1);
    int nd = 0;
    for (int i = 0; i < d; ++i)
        if (alive[i]) newid[i] = nd++;
    if (nd == 0) fail(ErrorCode::EmptyGraph, "contraction consumed the whole map");

    std::vector<DartId> nrot(nd), ntwin(nd);
    std::vector<std::pair<EdgeId, Rational>> wts;
    for (int i = 0; i < d; ++i) {
        if (!alive[i]) continue;
        nrot[newid[i]] = newid[rot[i]];
        ntwin[newid[i]] = newid[twin[i]];
        if (twin[i] > i) wts.emplace_back(newid[i], g.weight(i));
    }
    ContractResult res;
    res.map = EmbeddedGraph::build(std::move(nrot), std::move(ntwin), wts);
    if (res.map.euler_genus() > g.euler_genus())
        fail(ErrorCode::Internal, "contraction increased the genus");

    std::vector<DartId> class_dart(g.vertex_count(), -1);
    for (int i = 0; i < d; ++i)
        if (alive[i]) class_dart[find(g.vertex_index(i))] = i;
    res.vertex_map.assign(g.vertex_count(), -1);
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        DartId rep = class_dart[find(vi)];
        if (rep >= 0) res.vertex_map[vi] = res.map.vertex_index(newid[rep]);
    }
    for (int e = 0; e < d; ++e) {
        if (g.twin(e) < e) continue;
        res.edge_map[e] = alive[e] ? std::min(newid[e], newid[g.twin(e)]) : -1;
    }
    return res;
}

RestrictResult restrict_to_edges(const EmbeddedGraph& g, const std::set<EdgeId>& edges) {
    if (edges.empty()) fail(ErrorCode::EmptySubgraph, "restricting to no edges");
    const int d = g.dart_count();
    std::vector<char> in(d, 0);
    for (EdgeId e : edges) {
        if (e < 0 || e >= d || g.twin(e) < e)
            fail(ErrorCode::PermutationDomainMismatch, "not an edge id: " + std::to_string(e));
        in[e] = in[g.twin(e)] = 1;
    }
    RestrictResult res;
    std::vector<DartId> newid(d, -1);
    for (int i = 0; i < d; ++i) {
        if (!in[i]) continue;
        newid[i] = static_cast<int>(res.to_host.size());
        res.to_host.push_back(i);
        res.from_host[i] = newid[i];
    }
    const int nd = static_cast<int>(res.to_host.size());
    std::vector<DartId> rot(nd), twin(nd);
    std::vector<std::pair<EdgeId, Rational>> wts;
    for (int i = 0; i < d; ++i) {
        if (!in[i]) continue;
        DartId y = g.rotation(i);
        while (!in[y]) y = g.rotation(y);
        rot[newid[i]] = newid[y];
        twin[newid[i]] = newid[g.twin(i)];
        if (g.twin(i) > i) wts.emplace_back(newid[i], g.weight(i));
    }
    res.map = EmbeddedGraph::build(std::move(rot), std::move(twin), wts);
    return res;
}

std::vector<CutOpenComponent> cut_open(const EmbeddedGraph& g, const std::set<EdgeId>& h) {
    if (h.empty()) fail(ErrorCode::EmptySubgraph, "cutting open along no edges");
    const int d = g.dart_count();
    std::vector<char> in_h(d, 0);
    for (EdgeId e : h) {
        if (e < 0 || e >= d || g.twin(e) < e)
            fail(ErrorCode::PermutationDomainMismatch, "not an edge id: " + std::to_string(e));
        in_h[e] = in_h[g.twin(e)] = 1;
    }
    auto [piece_of_face, pieces] = piece_partition(g, in_h);

    // sector of a dart: the wedge between consecutive H darts it lies in.
    // Sector after H dart x gets the tail copy of x first and the head copy
    // of twin(next H dart) last, counterclockwise.
    struct Sector {
        DartId open;  // the H dart opening the wedge
        DartId close; // the next H dart around the vertex
        std::vector<DartId> interior;
        int piece;
    };
    std::vector<Sector> sectors;
    std::vector<char> vertex_on_h(g.vertex_count(), 0);
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        auto darts = g.darts_of_vertex(vi);
        bool any = false;
        for (DartId x : darts) any = any || in_h[x];
        if (!any) continue;
        vertex_on_h[vi] = 1;
        for (DartId x : darts) {
            if (!in_h[x]) continue;
            Sector s;
            s.open = x;
            DartId y = g.rotation(x);
            while (!in_h[y]) {
                s.interior.push_back(y);
                y = g.rotation(y);
            }
            s.close = y;
            // the wedge counterclockwise of x belongs to the faces on the
            // far side of x, i.e. the side of face(twin(x)) = face(close)
            s.piece = piece_of_face[g.face_index(s.close)];
            sectors.push_back(std::move(s));
        }
    }

    std::vector<CutOpenComponent> out(pieces);
    // assemble each component: interior darts by host id, then copy darts
    // ordered by the H dart they run along
    std::vector<int> interior_newid(d, -1);
    std::vector<int> tail_copy(d, -1), head_copy(d, -1);  // per H dart
    for (int p = 0; p < pieces; ++p) {
        auto& comp = out[p];
        for (int i = 0; i < d; ++i) {
            if (in_h[i] || piece_of_face[g.face_index(i)] != p) continue;
            interior_newid[i] = static_cast<int>(comp.to_host.size());
            comp.to_host.push_back(i);
            comp.is_boundary_dart.push_back(0);
        }
        for (int x = 0; x < d; ++x) {
            if (!in_h[x] || piece_of_face[g.face_index(x)] != p) continue;
            tail_copy[x] = static_cast<int>(comp.to_host.size());
            comp.to_host.push_back(x);
            comp.is_boundary_dart.push_back(1);
            head_copy[x] = static_cast<int>(comp.to_host.size());
            comp.to_host.push_back(g.twin(x));
            comp.is_boundary_dart.push_back(1);
        }
        const int nd = static_cast<int>(comp.to_host.size());
        std::vector<DartId> rot(nd, -1), twin(nd, -1);
        std::vector<std::pair<EdgeId, Rational>> wts;
        for (int x = 0; x < d; ++x) {
            if (!in_h[x] || piece_of_face[g.face_index(x)] != p) continue;
            twin[tail_copy[x]] = head_copy[x];
            twin[head_copy[x]] = tail_copy[x];
            wts.emplace_back(std::min(tail_copy[x], head_copy[x]), g.weight(g.edge_of(x)));
        }
        for (int i = 0; i < d; ++i) {
            if (interior_newid[i] < 0 || piece_of_face[g.face_index(i)] != p) continue;
            twin[interior_newid[i]] = interior_newid[g.twin(i)];
            if (g.twin(i) > i) wts.emplace_back(std::min(interior_newid[i], interior_newid[g.twin(i)]),
                                                g.weight(i));
            if (!vertex_on_h[g.vertex_index(i)])
                rot[interior_newid[i]] = interior_newid[g.rotation(i)];
        }
        for (const Sector& s : sectors) {
            if (s.piece != p) continue;
            std::vector<DartId> cyc;
            cyc.push_back(head_copy[g.twin(s.open)]);
            for (DartId x : s.interior) cyc.push_back(interior_newid[x]);
            cyc.push_back(tail_copy[s.close]);
            for (size_t i = 0; i < cyc.size(); ++i) rot[cyc[i]] = cyc[(i + 1) % cyc.size()];
        }
        std::vector<char> is_head(nd, 0);
        for (int x = 0; x < d; ++x)
            if (in_h[x] && head_copy[x] >= 0) is_head[head_copy[x]] = 1;
        comp.map = EmbeddedGraph::build(std::move(rot), std::move(twin), wts);
        // boundary faces: orbits made of outward-facing copies only; the copy
        // running alongside a cut dart keeps the interior on its left, so the
        // reversed copy is the one whose face is the cut disk
        comp.is_outward_dart.assign(is_head.begin(), is_head.end());
        for (int fi = 0; fi < comp.map.face_count(); ++fi) {
            bool all_outward = true;
            for (DartId x : comp.map.darts_of_face(fi))
                all_outward = all_outward && is_head[x];
            if (all_outward) comp.boundary_faces.push_back(fi);
        }
        comp.boundary_face_index =
            comp.boundary_faces.size() == 1 ? comp.boundary_faces[0] : -1;
        // reset scratch for the next piece
        for (DartId x : comp.to_host) {
            interior_newid[x] = -1;
        }
        for (int x = 0; x < d; ++x)
            if (in_h[x]) tail_copy[x] = head_copy[x] = -1;
    }
    return out;
}

} // namespace surfcut
