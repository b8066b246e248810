#include <surfcut/errors.hpp>
#include <surfcut/generator.hpp>

#include <numeric>
#include <vector>

namespace surfcut {

namespace {

// splitmix64: tiny, fully deterministic across platforms
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : next() % n; }
};

// mutable rotation system under refinement
struct Sys {
    std::vector<DartId> rot, twin;
    std::vector<int> vert;  // tail vertex of each dart
    int n = 0;

    int dart_count() const { return static_cast<int>(rot.size()); }

    DartId rot_prev(DartId a) const {
        DartId x = a;
        while (rot[x] != a) x = rot[x];
        return x;
    }

    std::vector<DartId> darts_at(int v) const {
        std::vector<DartId> out;
        for (int a = 0; a < dart_count(); ++a)
            if (vert[a] == v) out.push_back(a);
        return out;
    }

    // split vertex v: a contiguous rotation arc of t darts starting at dart a
    // moves to a fresh vertex, joined to v by a new edge; 1 <= t < deg(v)
    void vertex_split(int v, DartId a, int t) {
        DartId x = dart_count(), y = x + 1;
        rot.resize(y + 1);
        twin.resize(y + 1);
        vert.resize(y + 1);
        twin[x] = y;
        twin[y] = x;
        DartId prev = rot_prev(a);
        DartId arc_end = a;
        for (int i = 1; i < t; ++i) arc_end = rot[arc_end];
        DartId after = rot[arc_end];
        vert[x] = v;
        rot[prev] = x;
        rot[x] = after;
        int w = n++;
        vert[y] = w;
        for (DartId z = a;; z = rot[z]) {
            vert[z] = w;
            if (z == arc_end) break;
        }
        rot[y] = a;
        rot[arc_end] = y;
    }

    // split the face through corners after darts c and d (same face, c != d)
    // by a chord; adds one edge and one face
    void face_split(DartId c, DartId d) {
        DartId x = dart_count(), y = x + 1;
        rot.resize(y + 1);
        twin.resize(y + 1);
        vert.resize(y + 1);
        twin[x] = y;
        twin[y] = x;
        vert[x] = vert[twin[c]];
        vert[y] = vert[twin[d]];
        DartId pc = rot[twin[c]], pd = rot[twin[d]];
        rot[twin[c]] = x;
        rot[x] = pc;
        rot[twin[d]] = y;
        rot[y] = pd;
    }

    std::vector<std::vector<DartId>> faces() const {
        std::vector<std::vector<DartId>> out;
        std::vector<char> seen(dart_count(), 0);
        for (int a = 0; a < dart_count(); ++a) {
            if (seen[a]) continue;
            out.emplace_back();
            DartId z = a;
            while (!seen[z]) {
                seen[z] = 1;
                out.back().push_back(z);
                z = rot[twin[z]];
            }
        }
        return out;
    }
};

} // namespace

EmbeddedGraph generate_instance(const GenParams& params) {
    if (params.genus < 0 || params.genus % 2 != 0)
        fail(ErrorCode::InfeasibleParameters,
             "genus must be even and nonnegative, got " + std::to_string(params.genus));
    if (params.target_n < 1)
        fail(ErrorCode::InfeasibleParameters,
             "target vertex count must be at least 1, got " + std::to_string(params.target_n));
    if (params.max_weight < 1)
        fail(ErrorCode::InfeasibleParameters, "max weight must be at least 1");

    Rng rng(params.seed * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL +
            static_cast<std::uint64_t>(params.genus) * 0x1000003ULL +
            static_cast<std::uint64_t>(params.target_n));

    Sys s;
    s.n = 1;
    if (params.genus == 0) {
        // one vertex with one loop: two monogon faces on the sphere
        s.rot = {1, 0};
        s.twin = {1, 0};
        s.vert = {0, 0};
    } else {
        int pairs = params.genus / 2;
        s.rot.resize(4 * pairs);
        s.twin.resize(4 * pairs);
        s.vert.assign(4 * pairs, 0);
        std::vector<DartId> order;
        for (int i = 0; i < pairs; ++i) {
            s.twin[4 * i] = 4 * i + 1;
            s.twin[4 * i + 1] = 4 * i;
            s.twin[4 * i + 2] = 4 * i + 3;
            s.twin[4 * i + 3] = 4 * i + 2;
            order.insert(order.end(), {4 * i, 4 * i + 2, 4 * i + 1, 4 * i + 3});
        }
        for (std::size_t i = 0; i < order.size(); ++i)
            s.rot[order[i]] = order[(i + 1) % order.size()];
    }

    auto random_face_split = [&]() {
        auto fs = s.faces();
        std::vector<int> big;
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (fs[i].size() >= 2) big.push_back(static_cast<int>(i));
        if (big.empty()) return;
        const auto& walk = fs[big[rng.below(big.size())]];
        std::uint64_t i = rng.below(walk.size());
        std::uint64_t j = (i + 1 + rng.below(walk.size() - 1)) % walk.size();
        s.face_split(walk[i], walk[j]);
    };

    while (s.n < params.target_n) {
        if (rng.below(3) < 2) {
            // split a random vertex of degree >= 2
            std::vector<int> deg(s.n, 0);
            for (int a = 0; a < s.dart_count(); ++a) ++deg[s.vert[a]];
            std::vector<int> cand;
            for (int v = 0; v < s.n; ++v)
                if (deg[v] >= 2) cand.push_back(v);
            int v = cand[rng.below(cand.size())];
            auto ds = s.darts_at(v);
            DartId a = ds[rng.below(ds.size())];
            int t = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(deg[v] - 1)));
            s.vertex_split(v, a, t);
        } else {
            random_face_split();
        }
    }
    // a last sprinkle of face splits so single-vertex requests still vary by seed
    std::uint64_t extra = rng.below(1 + static_cast<std::uint64_t>(params.target_n) / 8);
    for (std::uint64_t i = 0; i < extra; ++i) random_face_split();

    // canonical relabeling happens inside build(); assign weights by edge
    std::vector<std::int64_t> potential(s.n, 1);
    if (params.model == WeightModel::Metric)
        for (auto& p : potential)
            p = 1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(params.max_weight)));
    std::vector<std::pair<EdgeId, Rational>> wts;
    for (int a = 0; a < s.dart_count(); ++a) {
        if (s.twin[a] < a) continue;
        Rational w = 1;
        switch (params.model) {
            case WeightModel::Unit: break;
            case WeightModel::Uniform:
                w = 1 + static_cast<std::int64_t>(
                            rng.below(static_cast<std::uint64_t>(params.max_weight)));
                break;
            case WeightModel::Metric:
                w = Rational(potential[s.vert[a]] + potential[s.vert[s.twin[a]]]);
                break;
        }
        wts.emplace_back(a, w);
    }
    auto g = EmbeddedGraph::build(s.rot, s.twin, wts);
    if (g.euler_genus() != params.genus)
        fail(ErrorCode::Internal, "generator produced the wrong genus");
    if (g.vertex_count() != params.target_n)
        fail(ErrorCode::Internal, "generator produced the wrong vertex count");
    return g;
}

} // namespace surfcut
