#include <surfcut/dp_solver.hpp>
#include <surfcut/errors.hpp>

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace surfcut {

// --------------------------------------------------------- partial reduction

namespace {

// Reduced view of a subset of host edges: chain-end darts plus the cyclic
// dart order at each surviving vertex. Internal degree-1 vertices pruned,
// internal degree-2 vertices contracted (cycles keep one vertex).
struct ReducedView {
    std::map<int, std::vector<DartId>> at_vertex;  // vertex -> alive darts, host rotation order
    std::map<DartId, DartId> link;                 // chain end -> other end
    std::map<DartId, int> vertex_of;               // chain end -> its vertex
};

ReducedView reduce_subset(const EmbeddedGraph& g, const std::vector<EdgeId>& s,
                          const std::set<int>& boundary) {
    ReducedView rv;
    std::map<int, std::vector<DartId>> full_order;  // host rotation order cache
    auto order_at = [&](int v) -> const std::vector<DartId>& {
        auto it = full_order.find(v);
        if (it == full_order.end()) it = full_order.emplace(v, g.darts_of_vertex(v)).first;
        return it->second;
    };
    std::set<DartId> in_s;
    for (EdgeId e : s) {
        in_s.insert(e);
        in_s.insert(g.twin(e));
    }
    for (DartId d : in_s) {
        int v = g.vertex_index(d);
        rv.vertex_of[d] = v;
        rv.link[d] = g.twin(d);
        if (!rv.at_vertex.count(v)) {
            auto& slot = rv.at_vertex[v];
            for (DartId x : order_at(v))
                if (in_s.count(x)) slot.push_back(x);
        }
    }

    auto remove_dart = [&](DartId d) {
        int v = rv.vertex_of.at(d);
        auto& lst = rv.at_vertex.at(v);
        lst.erase(std::find(lst.begin(), lst.end(), d));
        if (lst.empty()) rv.at_vertex.erase(v);
        rv.vertex_of.erase(d);
        rv.link.erase(d);
    };

    bool changed = true;
    std::set<int> irreducible;  // degree-2 cycle vertices
    while (changed) {
        changed = false;
        for (auto it = rv.at_vertex.begin(); it != rv.at_vertex.end(); ++it) {
            int v = it->first;
            if (boundary.count(v)) continue;
            if (it->second.size() == 1) {
                DartId d = it->second[0];
                DartId a = rv.link.at(d);
                remove_dart(d);
                remove_dart(a);
                changed = true;
                break;
            }
            if (it->second.size() == 2 && !irreducible.count(v)) {
                DartId d1 = it->second[0], d2 = it->second[1];
                if (rv.link.at(d1) == d2) {  // closed cycle through v only
                    irreducible.insert(v);
                    continue;
                }
                DartId a = rv.link.at(d1), b = rv.link.at(d2);
                rv.link[a] = b;
                rv.link[b] = a;
                remove_dart(d1);
                remove_dart(d2);
                changed = true;
                break;
            }
        }
    }
    return rv;
}

std::string encode_view(const EmbeddedGraph& g, const ReducedView& rv,
                        const std::set<int>& boundary) {
    // host rotation position of each alive dart within its vertex
    std::map<DartId, int> host_pos;
    for (const auto& [v, darts] : rv.at_vertex) {
        auto full = g.darts_of_vertex(v);
        for (DartId d : darts)
            host_pos[d] = static_cast<int>(std::find(full.begin(), full.end(), d) - full.begin());
    }
    auto rot_next = [&](DartId d) {
        const auto& lst = rv.at_vertex.at(rv.vertex_of.at(d));
        auto it = std::find(lst.begin(), lst.end(), d);
        ++it;
        return it == lst.end() ? lst.front() : *it;
    };

    // connected components over rotation + chain links
    std::map<DartId, int> comp;
    int nc = 0;
    for (const auto& [d, l] : rv.link) {
        if (comp.count(d)) continue;
        std::vector<DartId> stack = {d};
        comp[d] = nc;
        while (!stack.empty()) {
            DartId x = stack.back();
            stack.pop_back();
            for (DartId y : {rot_next(x), rv.link.at(x)})
                if (!comp.count(y)) {
                    comp[y] = nc;
                    stack.push_back(y);
                }
        }
        ++nc;
    }
    std::vector<std::vector<DartId>> members(nc);
    for (const auto& [d, c] : comp) members[c].push_back(d);

    auto encode_from = [&](DartId start) {
        std::map<DartId, int> rid;
        std::vector<DartId> order;
        rid[start] = 0;
        order.push_back(start);
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (DartId y : {rot_next(order[i]), rv.link.at(order[i])})
                if (!rid.count(y)) {
                    rid[y] = static_cast<int>(order.size());
                    order.push_back(y);
                }
        }
        std::ostringstream os;
        for (DartId d : order) {
            int v = rv.vertex_of.at(d);
            os << rid.at(rot_next(d)) << ',' << rid.at(rv.link.at(d)) << ',';
            if (boundary.count(v))
                os << v << '.' << host_pos.at(d);
            else
                os << '*';
            os << ';';
        }
        return os.str();
    };

    std::vector<std::string> encs;
    for (const auto& mem : members) {
        std::string best;
        for (DartId d : mem) {
            std::string e = encode_from(d);
            if (best.empty() || e < best) best = e;
        }
        encs.push_back(std::move(best));
    }
    std::sort(encs.begin(), encs.end());
    std::string out = "(";
    for (const auto& e : encs) out += e + "|";
    return out + ")";
}

} // namespace

std::string partial_signature(const EmbeddedGraph& g, const std::vector<EdgeId>& s,
                              const std::vector<int>& mid) {
    std::set<int> boundary(mid.begin(), mid.end());
    auto rv = reduce_subset(g, s, boundary);
    return encode_view(g, rv, boundary);
}

// ------------------------------------------------------------------- tables

DPTable leaf_table(const EmbeddedGraph& g, EdgeId e, const std::vector<int>& mid) {
    DPTable t;
    t.entries[partial_signature(g, {}, mid)] = {Rational(0), {}};
    DpEntry inc{g.weight(e), {e}};
    auto sig = partial_signature(g, {e}, mid);
    auto [it, fresh] = t.entries.emplace(sig, inc);
    if (!fresh && inc.length < it->second.length) it->second = inc;
    return t;
}

namespace {

void insert_entry(DPTable& t, std::string sig, DpEntry entry) {
    auto it = t.entries.find(sig);
    if (it == t.entries.end()) {
        t.entries.emplace(std::move(sig), std::move(entry));
    } else if (entry.length < it->second.length ||
               (entry.length == it->second.length && entry.edges < it->second.edges)) {
        it->second = std::move(entry);
    }
}

} // namespace

DPTable merge_tables(const EmbeddedGraph& g, const DPTable& t1, const DPTable& t2,
                     const std::vector<int>& parent_mid, const Rational& upper_bound,
                     const DpCaps& caps, DpStats* stats) {
    DPTable out;
    for (const auto& [s1, e1] : t1.entries) {
        for (const auto& [s2, e2] : t2.entries) {
            if (stats && ++stats->states_generated > caps.max_states)
                fail(ErrorCode::WidthCapExceeded,
                     "DP generated more than " + std::to_string(caps.max_states) + " states");
            Rational len = e1.length + e2.length;
            if (len > upper_bound) {
                if (stats) ++stats->states_pruned_by_bound;
                continue;
            }
            DpEntry merged;
            merged.length = len;
            merged.edges.resize(e1.edges.size() + e2.edges.size());
            std::merge(e1.edges.begin(), e1.edges.end(), e2.edges.begin(), e2.edges.end(),
                       merged.edges.begin());
            if (stats && (stats->work_units += 1 + merged.edges.size()) > caps.max_work)
                fail(ErrorCode::WidthCapExceeded,
                     "DP exceeded work budget of " + std::to_string(caps.max_work));
            auto sig = partial_signature(g, merged.edges, parent_mid);
            insert_entry(out, std::move(sig), std::move(merged));
            if (out.entries.size() > caps.max_table_entries)
                fail(ErrorCode::WidthCapExceeded,
                     "DP table exceeds " + std::to_string(caps.max_table_entries) + " entries");
        }
    }
    return out;
}

// -------------------------------------------------------------------- solve

EdgeSubset solve(const EmbeddedGraph& g, const SurfaceCutDecomposition& scd, const DpCaps& caps,
                 DpStats* stats, const EdgeSubset* warm_start) {
    if (g.euler_genus() == 0) return EdgeSubset{{}, Rational(0)};

    DpStats local_stats;  // the work cap needs a counter even without a caller sink
    if (!stats) stats = &local_stats;

    EdgeSubset best = baseline_cut_graph(g);
    if (warm_start && warm_start->length < best.length &&
        is_cut_graph(g, Subgraph{warm_start->edges, {}}).valid)
        best = *warm_start;
    const Rational ub = best.length;
    const DecompTree& tree = scd.branch.tree;

    auto mid_of = [&](int a, int b) -> const std::vector<int>& {
        return scd.per_edge.at({std::min(a, b), std::max(a, b)}).mid;
    };

    std::function<DPTable(int, int)> table_for = [&](int node, int parent) -> DPTable {
        const auto& mid = mid_of(node, parent);
        DPTable t;
        if (tree.leaf_label[node] >= 0) {
            t = leaf_table(g, tree.leaf_label[node], mid);
        } else {
            std::vector<int> kids;
            for (int y : tree.adj[node])
                if (y != parent) kids.push_back(y);
            if (kids.size() != 2) fail(ErrorCode::Internal, "decomposition tree not binary");
            DPTable a = table_for(kids[0], node);
            DPTable b = table_for(kids[1], node);
            t = merge_tables(g, a, b, mid, ub, caps, stats);
        }
        if (stats) {
            stats->table_sizes[{std::min(node, parent), std::max(node, parent)}] =
                t.entries.size();
            stats->peak_entries = std::max(stats->peak_entries, t.entries.size());
        }
        return t;
    };

    auto [ru, rv] = scd.per_edge.begin()->first;
    DPTable tu = table_for(ru, rv);
    DPTable tv = table_for(rv, ru);

    for (const auto& [s1, e1] : tu.entries) {
        for (const auto& [s2, e2] : tv.entries) {
            if (++stats->states_generated > caps.max_states)
                fail(ErrorCode::WidthCapExceeded,
                     "DP generated more than " + std::to_string(caps.max_states) + " states");
            Rational len = e1.length + e2.length;
            if (len > best.length) continue;
            std::set<EdgeId> cand(e1.edges.begin(), e1.edges.end());
            cand.insert(e2.edges.begin(), e2.edges.end());
            if (len == best.length && !(cand < best.edges)) continue;
            if (cand.empty()) continue;
            if ((stats->work_units += 1 + cand.size()) > caps.max_work)
                fail(ErrorCode::WidthCapExceeded,
                     "DP exceeded work budget of " + std::to_string(caps.max_work));
            if (is_cut_graph(g, Subgraph{cand, {}}).valid) {
                best.edges = std::move(cand);
                best.length = len;
            }
        }
    }
    return best;
}

// ------------------------------------------------------ map enumeration

namespace {

// canonical string of a tiny abstract map given rotation-successor and twin
// over darts 0..d-1 with per-vertex boundary marks
std::string canonical_abstract(const std::vector<int>& rot_next, const std::vector<int>& twin,
                               const std::vector<int>& vertex_of,
                               const std::vector<char>& boundary_mark) {
    const int d = static_cast<int>(rot_next.size());
    std::string best;
    for (int start = 0; start < d; ++start) {
        std::vector<int> rid(d, -1), order;
        rid[start] = 0;
        order.push_back(start);
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (int y : {rot_next[order[i]], twin[order[i]]})
                if (rid[y] < 0) {
                    rid[y] = static_cast<int>(order.size());
                    order.push_back(y);
                }
        }
        if (static_cast<int>(order.size()) != d) continue;  // disconnected: reject here
        std::ostringstream os;
        for (int x : order)
            os << rid[rot_next[x]] << ',' << rid[twin[x]] << ','
               << (boundary_mark[vertex_of[x]] ? 'b' : 'i') << ';';
        std::string e = os.str();
        if (best.empty() || e < best) best = e;
    }
    return best;
}

} // namespace

std::vector<RegionMap> enumerate_region_maps(int boundary, int genus, int max_edges) {
    if (boundary < 0 || genus < 0)
        fail(ErrorCode::InfeasibleParameters, "negative boundary or genus");
    if (boundary > 8 || max_edges > 4)
        fail(ErrorCode::BoundaryTooLarge,
             "region map enumeration infeasible beyond boundary 8 / 4 edges");

    // connected edge-bearing components up to isomorphism, with forced marks
    struct Comp {
        std::string canon;
        int high_degree = 0;  // vertices of degree >= 3
        int marks = 0;        // boundary-attached (degree-1) vertices
    };
    std::vector<Comp> comps;
    std::set<std::string> seen;
    for (int E = 1; E <= max_edges; ++E) {
        const int d = 2 * E;
        std::vector<int> twin(d);
        for (int i = 0; i < d; ++i) twin[i] = i ^ 1;
        // enumerate set partitions of darts into vertices with cyclic orders:
        // represent as rot_next derived from per-vertex orderings
        std::vector<int> assign(d, -1);  // dart -> vertex slot
        std::vector<std::vector<int>> slots;
        std::function<void()> emit = [&]() {
            std::vector<int> rot_next(d), vertex_of(d);
            for (std::size_t v = 0; v < slots.size(); ++v)
                for (std::size_t i = 0; i < slots[v].size(); ++i) {
                    rot_next[slots[v][i]] = slots[v][(i + 1) % slots[v].size()];
                    vertex_of[slots[v][i]] = static_cast<int>(v);
                }
            // invariants: no degree-2 vertices; degree-1 vertices marked
            int high = 0, marks = 0;
            std::vector<char> mark(slots.size(), 0);
            for (std::size_t v = 0; v < slots.size(); ++v) {
                std::size_t deg = slots[v].size();
                if (deg == 2) return;
                if (deg == 1) {
                    mark[v] = 1;
                    ++marks;
                }
                if (deg >= 3) ++high;
            }
            if (high > 4 * genus || marks > boundary) return;
            std::string c = canonical_abstract(rot_next, twin, vertex_of, mark);
            if (c.empty()) return;  // disconnected dart structure
            if (seen.insert(c).second) comps.push_back({c, high, marks});
        };
        std::function<void(int)> rec = [&](int dart) {
            if (dart == d) {
                emit();
                return;
            }
            // place dart into an existing vertex at any position, or a new one
            for (std::size_t v = 0; v < slots.size(); ++v) {
                for (std::size_t pos = 0; pos <= slots[v].size(); ++pos) {
                    slots[v].insert(slots[v].begin() + pos, dart);
                    rec(dart + 1);
                    slots[v].erase(slots[v].begin() + pos);
                }
            }
            slots.push_back({dart});
            rec(dart + 1);
            slots.pop_back();
        };
        rec(0);
    }

    // assemble maps: subsets of distinct components within budget, plus
    // isolated boundary vertices, plus the lone internal vertex
    std::vector<RegionMap> out;
    auto add = [&](const std::string& canon, int high, int iso_boundary, bool internal_vertex) {
        RegionMap m;
        m.canonical = canon + "+b" + std::to_string(iso_boundary) +
                      (internal_vertex ? "+v" : "");
        m.internal_high_degree_count = high;
        for (int i = 0; i < iso_boundary; ++i) m.boundary_vertices.push_back(i);
        out.push_back(std::move(m));
    };
    add("", 0, 0, false);  // empty map
    add("", 0, 0, true);   // single internal vertex (the genus-0 solution)
    for (int k = 1; k <= boundary; ++k) add("", 0, k, false);
    std::function<void(std::size_t, std::string, int, int)> pick =
        [&](std::size_t i, std::string canon, int high, int marks) {
            if (!canon.empty()) {
                for (int k = 0; marks + k <= boundary; ++k) add(canon, high, k, false);
            }
            for (std::size_t j = i; j < comps.size(); ++j) {
                if (high + comps[j].high_degree > 4 * genus) continue;
                if (marks + comps[j].marks > boundary) continue;
                pick(j + 1, canon + "[" + comps[j].canon + "]", high + comps[j].high_degree,
                     marks + comps[j].marks);
            }
        };
    pick(0, "", 0, 0);
    std::sort(out.begin(), out.end(),
              [](const RegionMap& a, const RegionMap& b) { return a.canonical < b.canonical; });
    return out;
}

} // namespace surfcut
