#include <surfcut/map_io.hpp>

#include <fstream>
#include <sstream>

namespace surfcut {

namespace {

std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

int parse_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        fail(ErrorCode::ParseError, std::string("bad ") + what + ": '" + s + "'");
    }
}

Rational parse_weight(const std::string& s) {
    auto r = parse_rational(s);
    if (!r) fail(ErrorCode::ParseError, "bad rational: '" + s + "'");
    return *r;
}

} // namespace

std::string write_map(const EmbeddedGraph& g) {
    std::ostringstream os;
    os << "map " << g.dart_count() << "\n";
    for (int d = 0; d < g.dart_count(); ++d)
        os << "dart " << d << " twin " << g.twin(d) << " next " << g.rotation(d) << "\n";
    for (EdgeId e : g.edges())
        os << "weight " << e << " " << rational_to_string(g.weight(e)) << "\n";
    return os.str();
}

EmbeddedGraph read_map(std::istream& in) {
    auto lines = tokenize_lines(in);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "map")
        fail(ErrorCode::ParseError, "expected 'map <n_darts>' header");
    const int d = parse_int(lines[0][1], "dart count");
    if (d < 0) fail(ErrorCode::ParseError, "negative dart count");
    std::vector<DartId> rotation(d, -1), twin(d, -1);
    std::vector<std::pair<EdgeId, Rational>> weights;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t[0] == "dart") {
            if (t.size() != 6 || t[2] != "twin" || t[4] != "next")
                fail(ErrorCode::ParseError, "expected 'dart <id> twin <id> next <id>'");
            int id = parse_int(t[1], "dart id");
            if (id < 0 || id >= d) fail(ErrorCode::ParseError, "dart id out of range");
            if (twin[id] >= 0 || rotation[id] >= 0)
                fail(ErrorCode::ParseError, "duplicate dart " + t[1]);
            twin[id] = parse_int(t[3], "twin id");
            rotation[id] = parse_int(t[5], "next id");
        } else if (t[0] == "weight") {
            if (t.size() != 3) fail(ErrorCode::ParseError, "expected 'weight <edge_id> <p>/<q>'");
            weights.emplace_back(parse_int(t[1], "edge id"), parse_weight(t[2]));
        } else {
            fail(ErrorCode::ParseError, "unknown directive '" + t[0] + "'");
        }
    }
    for (int i = 0; i < d; ++i)
        if (twin[i] < 0) fail(ErrorCode::ParseError, "missing dart " + std::to_string(i));
    try {
        return EmbeddedGraph::build(std::move(rotation), std::move(twin), weights);
    } catch (const Error&) {
        throw;
    }
}

EmbeddedGraph read_map_string(const std::string& text) {
    std::istringstream is(text);
    return read_map(is);
}

EmbeddedGraph read_map_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_map(f);
}

void write_map_file(const EmbeddedGraph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
    f << write_map(g);
}

std::string write_solution(const Solution& s) {
    std::ostringstream os;
    os << "cutgraph " << s.edges.size() << "\n";
    for (EdgeId e : s.edges) os << "edge " << e << "\n";
    if (s.edges.empty() && s.vertex) os << "vertex " << *s.vertex << "\n";
    os << "length " << rational_to_string(s.length) << "\n";
    return os.str();
}

Solution read_solution(std::istream& in) {
    auto lines = tokenize_lines(in);
    if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "cutgraph")
        fail(ErrorCode::ParseError, "expected 'cutgraph <k>' header");
    const int k = parse_int(lines[0][1], "edge count");
    Solution s;
    bool have_length = false;
    for (size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t[0] == "edge" && t.size() == 2) {
            s.edges.insert(parse_int(t[1], "edge id"));
        } else if (t[0] == "vertex" && t.size() == 2) {
            s.vertex = parse_int(t[1], "vertex id");
        } else if (t[0] == "length" && t.size() == 2) {
            s.length = parse_weight(t[1]);
            have_length = true;
        } else {
            fail(ErrorCode::ParseError, "bad solution line starting '" + t[0] + "'");
        }
    }
    if (static_cast<int>(s.edges.size()) != k)
        fail(ErrorCode::ParseError, "cutgraph header promises " + std::to_string(k) +
                                        " edges, file lists " + std::to_string(s.edges.size()));
    if (!have_length) fail(ErrorCode::ParseError, "missing length line");
    return s;
}

Solution read_solution_string(const std::string& text) {
    std::istringstream is(text);
    return read_solution(is);
}

Solution read_solution_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    return read_solution(f);
}

void write_solution_file(const Solution& s, const std::string& path) {
    std::ofstream f(path);
    if (!f) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
    f << write_solution(s);
}

} // namespace surfcut

// Also the home of small shared utilities that need a translation unit.
