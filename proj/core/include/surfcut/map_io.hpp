#pragma once

#include <surfcut/embedded_graph.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace surfcut {

/// Map file grammar (line-oriented, '#' starts a comment line):
///   map <n_darts>
///   dart <id> twin <id> next <id>     -- one line per dart, ids ascending;
///                                        next = rotation successor
///   weight <edge_id> <p>/<q>          -- one line per edge, ascending edge id
/// write_map emits every edge's weight (including 0/1) so that
/// parse(print(m)) == m bit-exactly.
std::string write_map(const EmbeddedGraph& g);
EmbeddedGraph read_map(std::istream& in);
EmbeddedGraph read_map_string(const std::string& text);
EmbeddedGraph read_map_file(const std::string& path);
void write_map_file(const EmbeddedGraph& g, const std::string& path);

/// A cut-graph solution against some host map. Grammar:
///   cutgraph <k>
///   edge <id>                          -- k lines, ascending edge ids
///   vertex <id>                        -- only when k = 0 (genus-0 solution)
///   length <p>/<q>
struct Solution {
    std::set<EdgeId> edges;
    std::optional<VertexId> vertex;  // the single-vertex solution for genus 0
    Rational length;
};

std::string write_solution(const Solution& s);
Solution read_solution(std::istream& in);
Solution read_solution_string(const std::string& text);
Solution read_solution_file(const std::string& path);
void write_solution_file(const Solution& s, const std::string& path);

} // namespace surfcut
