#pragma once

// enumeration benchmark: sweeps a graph family, runs the enumerator, and
// checks the operation-count bound  op_counter <= n*(L-1)*N_v^L  with L
// the observed maximal nonempty diagonal and N_v the maximum degree.
// both the diameter and the observed L are reported: several families
// have constant diameter while the observed horizon grows, and the data
// should show that rather than hide it.  rows with observed L < 2 fall
// outside the bound's regime and are marked n/a instead of asserted.

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "emh/enumerate.hpp"
#include "emh/generators.hpp"
#include "emh/rank.hpp"

namespace emh {

struct bench_config {
    std::string family;                     // path|cycle|star|complete|friendship|er
    std::vector<std::size_t> sizes;         // n (or m for friendship)
    double p = 0.25;                        // er only
    std::vector<std::uint64_t> seeds = {1}; // er only
    std::optional<std::uint32_t> k_max;
    unsigned workers = 1;
};

struct bench_row {
    std::string family;
    std::size_t size = 0;
    bool is_er = false;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::size_t vertices = 0;
    std::size_t edge_count = 0;
    std::uint32_t max_degree = 0;
    std::uint32_t diameter = 0;
    std::uint32_t observed_l = 0;
    std::uint64_t op_counter = 0;
    big_int bound = 0;   // n*(L-1)*N_v^L, 0 when L < 1
    int within = -1;     // 1 yes, 0 no, -1 n/a (observed L < 2)
    double wall_ms = 0.0;
};

inline bench_row bench_one(const std::string& family, const graph& g, std::size_t size,
                           const std::optional<std::uint32_t>& k_max, unsigned workers) {
    bench_row row;
    row.family = family;
    row.size = size;
    row.vertices = g.vertex_count();
    row.edge_count = g.edge_count();
    row.max_degree = g.max_degree();
    row.diameter = finite_diameter(g);

    auto t0 = std::chrono::steady_clock::now();
    chain_ladder ladder = enumerate_diagonal(g, {k_max, workers});
    row.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    row.observed_l = ladder.observed_max_nonempty();
    row.op_counter = ladder.op_counter;
    if (row.observed_l >= 1) {
        big_int pw = 1;
        for (std::uint32_t i = 0; i < row.observed_l; ++i) pw *= row.max_degree;
        row.bound = big_int(row.vertices) * (row.observed_l - 1) * pw;
    }
    if (row.observed_l >= 2) row.within = (big_int(row.op_counter) <= row.bound) ? 1 : 0;
    return row;
}

inline std::vector<bench_row> run_bench(const bench_config& cfg) {
    std::vector<bench_row> rows;
    for (std::size_t size : cfg.sizes) {
        if (cfg.family == "er") {
            for (std::uint64_t seed : cfg.seeds) {
                graph g = make_erdos_renyi(size, cfg.p, seed);
                bench_row row = bench_one(cfg.family, g, size, cfg.k_max, cfg.workers);
                row.is_er = true;
                row.p = cfg.p;
                row.seed = seed;
                rows.push_back(std::move(row));
            }
            continue;
        }
        graph g = [&] {
            if (cfg.family == "path") return make_path(size);
            if (cfg.family == "cycle") return make_cycle(size);
            if (cfg.family == "star") return make_star(size);
            if (cfg.family == "complete") return make_complete(size);
            if (cfg.family == "friendship") return make_friendship(size);
            throw domain_error("bench family must be one of path|cycle|star|complete|friendship|er");
        }();
        rows.push_back(bench_one(cfg.family, g, size, cfg.k_max, cfg.workers));
    }
    return rows;
}

inline std::string bench_csv(const std::vector<bench_row>& rows) {
    std::ostringstream out;
    out << "family,n,p,seed,vertices,edges,max_degree,diameter,observed_L,op_counter,bound,"
           "within_bound,wall_ms\n";
    for (const auto& r : rows) {
        out << r.family << ',' << r.size << ',';
        if (r.is_er)
            out << r.p << ',' << r.seed;
        else
            out << ',';
        out << ',' << r.vertices << ',' << r.edge_count << ',' << r.max_degree << ','
            << r.diameter << ',' << r.observed_l << ',' << r.op_counter << ',';
        if (r.observed_l >= 1) out << r.bound; // formula is meaningless for an empty ladder
        out << ',' << (r.within < 0 ? "n/a" : r.within ? "yes" : "no") << ',' << r.wall_ms
            << '\n';
    }
    return out.str();
}

// true when every row inside the bound's regime satisfies it
inline bool bench_within_bound(const std::vector<bench_row>& rows) {
    for (const auto& r : rows)
        if (r.within == 0) return false;
    return true;
}

} // namespace emh
