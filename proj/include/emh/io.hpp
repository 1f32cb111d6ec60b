#pragma once

// plain edge-list text format: one edge per line, two whitespace-separated
// vertex labels; lines whose first token starts with '#' are comments and
// blank lines are skipped.  labels are interned to dense ids in
// first-appearance order and kept on the graph for output.  note the
// format cannot express isolated vertices.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "emh/errors.hpp"
#include "emh/graph.hpp"

namespace emh {

inline graph read_edge_list(std::istream& in) {
    std::unordered_map<std::string, vertex_id> id_of;
    std::vector<std::string> labels;
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    auto intern = [&](const std::string& token) {
        auto [it, fresh] = id_of.try_emplace(token, (vertex_id)labels.size());
        if (fresh) labels.push_back(token);
        return it->second;
    };
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string a, b, extra;
        if (!(fields >> a)) continue; // blank
        if (a[0] == '#') continue;    // comment
        if (!(fields >> b) || (fields >> extra))
            throw parse_error("edge list line " + std::to_string(line_no) +
                              ": expected exactly two vertex labels: \"" + line + "\"");
        if (a == b)
            throw parse_error("edge list line " + std::to_string(line_no) +
                              ": self-loop rejected: \"" + line + "\"");
        vertex_id ua = intern(a); // sequence the calls: first appearance wins
        vertex_id ub = intern(b);
        edges.emplace_back(ua, ub);
    }
    const std::size_t n = labels.size(); // read before the move below
    return graph(n, std::move(edges), std::move(labels));
}

inline graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open input file: " + path);
    return read_edge_list(in);
}

inline void write_edge_list(const graph& g, std::ostream& out) {
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

inline void write_edge_list_file(const graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open output file: " + path);
    write_edge_list(g, out);
    if (!out.flush()) throw io_error("failed writing output file: " + path);
}

// label -> dense id lookup (numeric fallback when the graph has no labels)
inline vertex_id resolve_label(const graph& g, const std::string& token) {
    if (g.labels().empty()) {
        try {
            std::size_t pos = 0;
            unsigned long v = std::stoul(token, &pos);
            if (pos == token.size() && v < g.vertex_count()) return (vertex_id)v;
        } catch (...) {
        }
        throw domain_error("unknown vertex label: " + token);
    }
    for (vertex_id v = 0; v < g.vertex_count(); ++v)
        if (g.labels()[v] == token) return v;
    throw domain_error("unknown vertex label: " + token);
}

} // namespace emh
