#pragma once

// built-in graph families plus a seeded erdos-renyi sampler.  er draws
// are reproducible across platforms: a fixed-order pass over vertex pairs
// compares 53-bit draws from mt19937_64(seed) against round(p * 2^53).

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emh/errors.hpp"
#include "emh/graph.hpp"
#include "emh/witness.hpp"

namespace emh {

inline graph make_path(std::size_t n) {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back((vertex_id)i, (vertex_id)(i + 1));
    return graph(n, std::move(edges));
}

inline graph make_cycle(std::size_t n) {
    if (n < 3) throw domain_error("cycle graph needs n >= 3");
    auto g = make_path(n);
    std::vector<std::pair<vertex_id, vertex_id>> edges(g.edges());
    edges.emplace_back(0, (vertex_id)(n - 1));
    return graph(n, std::move(edges));
}

// vertex 0 is the centre
inline graph make_star(std::size_t n) {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, (vertex_id)i);
    return graph(n, std::move(edges));
}

inline graph make_complete(std::size_t n) {
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back((vertex_id)u, (vertex_id)v);
    return graph(n, std::move(edges));
}

inline graph make_complete_bipartite(std::size_t a, std::size_t b) {
    if (a < 1 || b < 1) throw domain_error("complete bipartite graph needs both sides >= 1");
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (std::size_t u = 0; u < a; ++u)
        for (std::size_t v = 0; v < b; ++v) edges.emplace_back((vertex_id)u, (vertex_id)(a + v));
    return graph(a + b, std::move(edges));
}

// m triangles glued at vertex 0
inline graph make_friendship(std::size_t m) {
    if (m < 1) throw domain_error("friendship graph needs m >= 1");
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (std::size_t t = 0; t < m; ++t) {
        vertex_id a = (vertex_id)(1 + 2 * t), b = (vertex_id)(2 + 2 * t);
        edges.emplace_back(0, a);
        edges.emplace_back(0, b);
        edges.emplace_back(a, b);
    }
    return graph(2 * m + 1, std::move(edges));
}

inline graph make_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw domain_error("er probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    const std::uint64_t threshold = (std::uint64_t)std::llround(p * 9007199254740992.0); // 2^53
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if ((rng() >> 11) < threshold) edges.emplace_back((vertex_id)u, (vertex_id)v);
    return graph(n, std::move(edges));
}

// parsed generator spec, e.g. "star 5", "er 8 0.4 7", "grid-family 4"
struct generator_spec {
    std::string family;
    std::size_t n = 0, b = 0;
    double p = 0.0;
    std::optional<std::uint64_t> seed; // er only; may also come from --seed
    std::string text;                  // original spec string
};

inline generator_spec parse_generator_spec(const std::string& text) {
    std::istringstream in(text);
    generator_spec spec;
    spec.text = text;
    if (!(in >> spec.family)) throw parse_error("empty generator spec");
    auto need_size = [&](const char* what) {
        long long v;
        if (!(in >> v) || v < 0)
            throw parse_error("generator spec \"" + text + "\": expected " + what);
        return (std::size_t)v;
    };
    if (spec.family == "path" || spec.family == "cycle" || spec.family == "star" ||
        spec.family == "complete") {
        spec.n = need_size("a size");
        if (spec.n < 1) throw parse_error("generator spec \"" + text + "\": size must be >= 1");
    } else if (spec.family == "complete-bipartite") {
        spec.n = need_size("side a");
        spec.b = need_size("side b");
    } else if (spec.family == "friendship") {
        spec.n = need_size("a triangle count");
    } else if (spec.family == "grid-family") {
        spec.n = need_size("a degree k");
    } else if (spec.family == "er") {
        spec.n = need_size("a size");
        if (!(in >> spec.p)) throw parse_error("generator spec \"" + text + "\": expected p");
        std::uint64_t s;
        if (in >> s) spec.seed = s;
    } else {
        throw parse_error("unknown generator family: " + spec.family);
    }
    std::string extra;
    if (in >> extra) throw parse_error("generator spec \"" + text + "\": trailing token " + extra);
    return spec;
}

inline graph build_generator(const generator_spec& spec,
                             std::optional<std::uint64_t> seed_flag = std::nullopt) {
    if (spec.family == "path") return make_path(spec.n);
    if (spec.family == "cycle") return make_cycle(spec.n);
    if (spec.family == "star") return make_star(spec.n);
    if (spec.family == "complete") return make_complete(spec.n);
    if (spec.family == "complete-bipartite") return make_complete_bipartite(spec.n, spec.b);
    if (spec.family == "friendship") return make_friendship(spec.n);
    if (spec.family == "grid-family") return grid_family_graph((std::uint32_t)spec.n).g;
    if (spec.family == "er") {
        std::optional<std::uint64_t> seed = spec.seed;
        if (seed_flag) {
            if (seed && *seed != *seed_flag)
                throw domain_error("er seed given twice with different values");
            seed = seed_flag;
        }
        if (!seed) throw domain_error("er generator needs a seed (inline or --seed)");
        return make_erdos_renyi(spec.n, spec.p, *seed);
    }
    throw parse_error("unknown generator family: " + spec.family);
}

} // namespace emh
