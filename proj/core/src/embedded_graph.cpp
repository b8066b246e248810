#include <surfcut/embedded_graph.hpp>

#include <algorithm>
#include <numeric>

namespace surfcut {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonInvolution: return "NonInvolution";
        case ErrorCode::FixedPointTwin: return "FixedPointTwin";
        case ErrorCode::PermutationDomainMismatch: return "PermutationDomainMismatch";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::NonCellular: return "NonCellular";
        case ErrorCode::OddGenusParityForOrientable: return "OddGenusParityForOrientable";
        case ErrorCode::EmptyGraph: return "EmptyGraph";
        case ErrorCode::EmptySubgraph: return "EmptySubgraph";
        case ErrorCode::FaceDegreeTooSmall: return "FaceDegreeTooSmall";
        case ErrorCode::NotACutGraph: return "NotACutGraph";
        case ErrorCode::NotADiskDecomposition: return "NotADiskDecomposition";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NonPlanarBrick: return "NonPlanarBrick";
        case ErrorCode::DisconnectedTerminals: return "DisconnectedTerminals";
        case ErrorCode::SpannerNotCutting: return "SpannerNotCutting";
        case ErrorCode::BrickPropertyViolation: return "BrickPropertyViolation";
        case ErrorCode::HeavyWeightTooSmall: return "HeavyWeightTooSmall";
        case ErrorCode::NooseExtractionFailure: return "NooseExtractionFailure";
        case ErrorCode::BoundaryTooLarge: return "BoundaryTooLarge";
        case ErrorCode::GluingMismatch: return "GluingMismatch";
        case ErrorCode::WidthCapExceeded: return "WidthCapExceeded";
        case ErrorCode::NoCutGraphMap: return "NoCutGraphMap";
        case ErrorCode::NoosesCapExceeded: return "NoosesCapExceeded";
        case ErrorCode::NonPositiveEpsilon: return "NonPositiveEpsilon";
        case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

std::string rational_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(s));
        }
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

BigInt ceil_sqrt_rational(const BigInt& num, const BigInt& den) {
    if (num <= 0 || den <= 0) fail(ErrorCode::Internal, "ceil_sqrt_rational needs positive input");
    // smallest t with t^2 * den >= num
    BigInt t = boost::multiprecision::sqrt(BigInt(num / den));
    while (t * t * den < num) ++t;
    while (t > 0 && (t - 1) * (t - 1) * den >= num) --t;
    return t;
}

EmbeddedGraph EmbeddedGraph::build(std::vector<DartId> rotation,
                                   std::vector<DartId> twin,
                                   const std::vector<std::pair<EdgeId, Rational>>& weights) {
    const int d = static_cast<int>(rotation.size());
    if (d == 0) fail(ErrorCode::EmptyGraph, "map has no darts");
    if (static_cast<int>(twin.size()) != d)
        fail(ErrorCode::PermutationDomainMismatch, "rotation and twin have different domains");
    if (d % 2 != 0)
        fail(ErrorCode::PermutationDomainMismatch, "odd number of darts");

    std::vector<char> seen(d, 0);
    for (int i = 0; i < d; ++i) {
        if (rotation[i] < 0 || rotation[i] >= d)
            fail(ErrorCode::PermutationDomainMismatch, "rotation target out of range");
        if (seen[rotation[i]])
            fail(ErrorCode::PermutationDomainMismatch, "rotation is not a permutation");
        seen[rotation[i]] = 1;
    }
    for (int i = 0; i < d; ++i) {
        if (twin[i] < 0 || twin[i] >= d)
            fail(ErrorCode::PermutationDomainMismatch, "twin target out of range");
        if (twin[i] == i) fail(ErrorCode::FixedPointTwin, "twin fixes dart " + std::to_string(i));
        if (twin[twin[i]] != i) fail(ErrorCode::NonInvolution, "twin is not an involution");
    }

    EmbeddedGraph g;
    g.rotation_ = std::move(rotation);
    g.twin_ = std::move(twin);
    g.rotation_prev_.assign(d, 0);
    for (int i = 0; i < d; ++i) g.rotation_prev_[g.rotation_[i]] = i;

    // connectivity under {rotation, twin}: cellular embeddings have connected graphs
    {
        std::vector<char> vis(d, 0);
        std::vector<int> stack{0};
        vis[0] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : {g.rotation_[x], g.twin_[x]}) {
                if (!vis[y]) { vis[y] = 1; stack.push_back(y); }
            }
        }
        if (std::find(vis.begin(), vis.end(), 0) != vis.end())
            fail(ErrorCode::NonCellular, "graph is disconnected");
    }

    g.weights_.assign(d, Rational(0));
    for (const auto& [e, w] : weights) {
        if (e < 0 || e >= d || g.twin_[e] < e)
            fail(ErrorCode::PermutationDomainMismatch,
                 "weight key " + std::to_string(e) + " is not an edge id");
        if (w < 0) fail(ErrorCode::NegativeWeight, "edge " + std::to_string(e));
        g.weights_[e] = w;
    }

    g.trace();
    return g;
}

void EmbeddedGraph::trace() {
    const int d = dart_count();
    m_ = d / 2;
    vertex_index_.assign(d, -1);
    face_index_.assign(d, -1);
    vertex_min_dart_.clear();
    face_min_dart_.clear();
    vertex_degree_.clear();
    face_degree_.clear();

    for (int i = 0; i < d; ++i) {
        if (vertex_index_[i] >= 0) continue;
        int idx = static_cast<int>(vertex_min_dart_.size());
        vertex_min_dart_.push_back(i);
        int deg = 0;
        for (int x = i; vertex_index_[x] < 0; x = rotation_[x]) {
            vertex_index_[x] = idx;
            ++deg;
        }
        vertex_degree_.push_back(deg);
    }
    for (int i = 0; i < d; ++i) {
        if (face_index_[i] >= 0) continue;
        int idx = static_cast<int>(face_min_dart_.size());
        face_min_dart_.push_back(i);
        int deg = 0;
        for (int x = i; face_index_[x] < 0; x = rotation_[twin_[x]]) {
            face_index_[x] = idx;
            ++deg;
        }
        face_degree_.push_back(deg);
    }
    n_ = static_cast<int>(vertex_min_dart_.size());
    f_ = static_cast<int>(face_min_dart_.size());
    genus_ = 2 - n_ + m_ - f_;
    if (genus_ < 0) fail(ErrorCode::Internal, "negative Euler genus");
    if (genus_ % 2 != 0)
        fail(ErrorCode::OddGenusParityForOrientable,
             "odd Euler genus " + std::to_string(genus_) + " from a rotation system");
}

Rational EmbeddedGraph::total_weight() const {
    Rational s(0);
    for (int e = 0; e < dart_count(); ++e)
        if (twin_[e] > e) s += weights_[e];
    return s;
}

std::vector<EdgeId> EmbeddedGraph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(m_);
    for (int e = 0; e < dart_count(); ++e)
        if (twin_[e] > e) out.push_back(e);
    return out;
}

std::vector<DartId> EmbeddedGraph::darts_of_vertex(int vertex_index) const {
    std::vector<DartId> out;
    DartId start = vertex_min_dart_[vertex_index];
    DartId x = start;
    do {
        out.push_back(x);
        x = rotation_[x];
    } while (x != start);
    return out;
}

std::vector<DartId> EmbeddedGraph::darts_of_face(int face_index) const {
    std::vector<DartId> out;
    DartId start = face_min_dart_[face_index];
    DartId x = start;
    do {
        out.push_back(x);
        x = rotation_[twin_[x]];
    } while (x != start);
    return out;
}

EdgeSubset EdgeSubset::of(const EmbeddedGraph& g, const std::set<EdgeId>& edges) {
    EdgeSubset s;
    s.edges = edges;
    s.length = Rational(0);
    for (EdgeId e : edges) s.length += g.weight(e);
    return s;
}

std::vector<Face> trace_faces(const EmbeddedGraph& g) {
    std::vector<Face> out(g.face_count());
    for (int i = 0; i < g.face_count(); ++i) {
        out[i].darts = g.darts_of_face(i);
        out[i].degree = static_cast<int>(out[i].darts.size());
    }
    return out;
}

int euler_genus(const EmbeddedGraph& g) { return g.euler_genus(); }

std::vector<SurfacePiece> cut_along(const EmbeddedGraph& g, const Subgraph& h) {
    const int d = g.dart_count();
    std::vector<char> in_h(d, 0);
    for (EdgeId e : h.edges) {
        if (e < 0 || e >= d || g.twin(e) < e)
            fail(ErrorCode::PermutationDomainMismatch, "not an edge id: " + std::to_string(e));
        in_h[e] = in_h[g.twin(e)] = 1;
    }
    std::vector<char> punctured(g.vertex_count(), 0);
    for (VertexId v : h.isolated_vertices) {
        if (v < 0 || v >= d) fail(ErrorCode::PermutationDomainMismatch, "bad vertex id");
        int vi = g.vertex_index(v);
        bool touches = false;
        for (DartId x : g.darts_of_vertex(vi))
            if (in_h[x]) touches = true;
        if (!touches) punctured[vi] = 1;
    }
    if (h.edges.empty() && h.isolated_vertices.empty())
        fail(ErrorCode::EmptySubgraph, "cutting along the empty subgraph");

    // pieces: faces connected through non-H edges
    std::vector<int> piece_of_face(g.face_count(), -1);
    std::vector<int> rep;
    {
        std::vector<int> parent(g.face_count());
        std::iota(parent.begin(), parent.end(), 0);
        std::vector<int> rank(g.face_count(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
            return x;
        };
        for (int e = 0; e < d; ++e) {
            if (g.twin(e) < e || in_h[e]) continue;
            int a = find(g.face_index(e)), b = find(g.face_index(g.twin(e)));
            if (a != b) {
                if (rank[a] < rank[b]) std::swap(a, b);
                parent[b] = a;
                if (rank[a] == rank[b]) ++rank[a];
            }
        }
        for (int i = 0; i < g.face_count(); ++i) {
            int r = find(i);
            if (piece_of_face[r] < 0) {
                piece_of_face[r] = static_cast<int>(rep.size());
                rep.push_back(r);
            }
            piece_of_face[i] = piece_of_face[r];
        }
    }

    const int pieces = static_cast<int>(rep.size());
    std::vector<long long> v_int(pieces, 0), e_int(pieces, 0), f_cnt(pieces, 0);
    std::vector<int> walks(pieces, 0), punct(pieces, 0);

    for (int i = 0; i < g.face_count(); ++i) ++f_cnt[piece_of_face[i]];
    for (int e = 0; e < d; ++e)
        if (g.twin(e) > e && !in_h[e]) ++e_int[piece_of_face[g.face_index(e)]];
    for (int vi = 0; vi < g.vertex_count(); ++vi) {
        auto darts = g.darts_of_vertex(vi);
        bool on_h = false;
        for (DartId x : darts)
            if (in_h[x]) on_h = true;
        int p = piece_of_face[g.face_index(darts[0])];
        if (!on_h) {
            for (DartId x : darts) {
                if (piece_of_face[g.face_index(x)] != p)
                    fail(ErrorCode::Internal, "inconsistent piece at interior vertex");
            }
            if (punctured[vi]) ++punct[p];
            else ++v_int[p];
        }
    }

    // boundary walks of the cut surface: orbits of sigma_H o twin over H darts,
    // where sigma_H skips the non-H darts in the rotation
    if (!h.edges.empty()) {
        std::vector<int> walk_of(d, -1);
        for (int s = 0; s < d; ++s) {
            if (!in_h[s] || walk_of[s] >= 0) continue;
            int p = piece_of_face[g.face_index(s)];
            int x = s;
            do {
                walk_of[x] = 1;
                if (piece_of_face[g.face_index(x)] != p)
                    fail(ErrorCode::Internal, "boundary walk crosses pieces");
                DartId y = g.twin(x);
                do { y = g.rotation(y); } while (!in_h[y]);
                x = y;
            } while (x != s);
            ++walks[p];
        }
    }

    std::vector<SurfacePiece> out(pieces);
    for (int p = 0; p < pieces; ++p) {
        long long chi = v_int[p] - e_int[p] + f_cnt[p];
        int b = walks[p] + punct[p];
        long long eg = 2 - chi - b;
        if (eg < 0 || eg % 2 != 0)
            fail(ErrorCode::Internal, "bad piece Euler genus");
        out[p].genus = static_cast<int>(eg);
        out[p].boundary_cycles = b;
        out[p].is_disk = (eg == 0 && b == 1);
        for (int i = 0; i < g.face_count(); ++i)
            if (piece_of_face[i] == p) out[p].face_indices.push_back(i);
    }
    return out;
}

} // namespace surfcut
