#pragma once

// breadth-first enumeration of the first-diagonal chain bases.
//
// diagonal trails are simple paths grown one edge at a time from every
// start vertex (each branch carries its own exclusion set -- the tuple
// itself).  subdiagonal trails carry exactly one hop-2 step: they are
// seeded by placing that step at the tail of an already-stored path and
// then extended by ordinary edge steps, which keeps the gap interior and
// reuses the diagonal lists as carriers so no extension attempt is ever
// counted twice.
//
// work is split by start vertex over an immutable graph; per-start output
// is deterministic and merged in start order, so ladders and op_counter
// are identical for any worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "emh/chain.hpp"
#include "emh/graph.hpp"

namespace emh {

struct enumerate_options {
    std::optional<std::uint32_t> k_max; // nullopt: run until the diagonal dies out
    unsigned workers = 1;
};

// one sweep of simple-tuple extension: for each frontier trail and each
// neighbour w of its last landmark with w not already used, emit trail+w.
// op_counter grows by one per candidate neighbour examined.
inline std::vector<trail> extend_paths(const graph& g, std::span<const trail> frontier,
                                       std::uint64_t& op_counter) {
    std::vector<trail> out;
    for (const trail& t : frontier) {
        for (vertex_id w : g.neighbors(t.verts.back())) {
            ++op_counter;
            if (std::find(t.verts.begin(), t.verts.end(), w) != t.verts.end()) continue;
            trail ext;
            ext.verts.reserve(t.verts.size() + 1);
            ext.verts = t.verts;
            ext.verts.push_back(w);
            ext.length = t.length + 1;
            out.push_back(std::move(ext));
        }
    }
    return out; // sorted whenever the frontier is sorted
}

// the incremental tail check: a path (y_0..y_m) emits (y_0..y_{m-2},y_m)
// exactly when that tuple pinches to a hop-2 step, i.e. when the chord
// {y_{m-2},y_m} is missing (y_{m-1} is a common neighbour, so the
// distance is 2 iff the two are non-adjacent).  this emission alone does
// not exhaust the subdiagonal -- enumerate_diagonal fills it directly --
// but every emission lands in it.
inline std::vector<trail> subdiagonal_from_path(const graph& g, const trail& p) {
    std::vector<trail> out;
    if (p.verts.size() < 3) return out;
    std::size_t m = p.verts.size() - 1;
    if (g.adjacent(p.verts[m - 2], p.verts[m])) return out;
    trail t;
    t.verts.assign(p.verts.begin(), p.verts.end() - 2);
    t.verts.push_back(p.verts[m]);
    t.length = p.length;
    out.push_back(std::move(t));
    return out;
}

namespace detail {

struct start_output {
    // paths_by_lm[j]: simple paths with j+2 landmarks starting here
    std::vector<std::vector<trail>> paths_by_lm;
    // gaps_by_lm[j]: one-gap tuples with j+2 landmarks starting here
    std::vector<std::vector<trail>> gaps_by_lm;
    std::uint64_t ops = 0;
};

// phase 1: gapless simple paths up to cap_lm landmarks
inline void grow_paths(const graph& g, vertex_id start, std::uint32_t cap_lm, start_output& out) {
    if (cap_lm < 2) return;
    std::vector<trail> seed{trail{{start}, 0}};
    std::span<const trail> frontier(seed);
    for (std::uint32_t lm = 1; lm < cap_lm; ++lm) {
        std::vector<trail> next = extend_paths(g, frontier, out.ops);
        if (next.empty()) break;
        out.paths_by_lm.push_back(std::move(next));
        frontier = out.paths_by_lm.back();
    }
}

// phase 2: one-gap tuples up to cap_lm landmarks, re-using the stored
// paths as carriers.  level t merges two sorted, disjoint streams: paths
// with t-1 landmarks granting a tail hop-2 step, and gap tuples with t-1
// landmarks granting an edge step.
inline void grow_gaps(const graph& g, vertex_id start, std::uint32_t cap_lm, start_output& out) {
    for (std::uint32_t t = 2; t <= cap_lm; ++t) {
        std::vector<trail> seeds;
        auto seed_from = [&](std::span<const vertex_id> verts, std::uint32_t length) {
            for (vertex_id w : g.two_hop(verts.back())) {
                ++out.ops;
                if (std::find(verts.begin(), verts.end(), w) != verts.end()) continue;
                trail x;
                x.verts.assign(verts.begin(), verts.end());
                x.verts.push_back(w);
                x.length = length + 2;
                seeds.push_back(std::move(x));
            }
        };
        if (t == 2) {
            vertex_id bare[1] = {start};
            seed_from(bare, 0);
        } else if ((std::size_t)(t - 3) < out.paths_by_lm.size()) {
            for (const trail& p : out.paths_by_lm[t - 3]) seed_from(p.verts, p.length);
        }
        std::vector<trail> ext;
        if (t >= 3 && (std::size_t)(t - 3) < out.gaps_by_lm.size())
            ext = extend_paths(g, out.gaps_by_lm[t - 3], out.ops);
        std::vector<trail> level(seeds.size() + ext.size());
        std::merge(seeds.begin(), seeds.end(), ext.begin(), ext.end(), level.begin());
        out.gaps_by_lm.push_back(std::move(level));
    }
}

template <class Fn>
inline void for_each_start(std::size_t n, unsigned workers, Fn&& body) {
    workers = std::max(1u, workers);
    if (workers == 1 || n <= 1) {
        for (std::size_t s = 0; s < n; ++s) body((vertex_id)s);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t s = next.fetch_add(1, std::memory_order_relaxed);
            if (s >= n) return;
            body((vertex_id)s);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

} // namespace detail

inline chain_ladder enumerate_diagonal(const graph& g, const enumerate_options& opt = {}) {
    if (opt.k_max && *opt.k_max == 0)
        throw domain_error("enumerate_diagonal: k_max must be >= 1 (or auto)");
    const std::size_t n = g.vertex_count();
    std::vector<detail::start_output> per_start(n);

    // diag(k) needs k+1 landmarks; auto mode lets paths run to exhaustion
    std::uint32_t path_cap = opt.k_max ? *opt.k_max + 1 : (std::uint32_t)std::max<std::size_t>(n, 1);
    detail::for_each_start(n, opt.workers,
                           [&](vertex_id s) { detail::grow_paths(g, s, path_cap, per_start[s]); });

    std::uint32_t longest_lm = 1; // landmarks of the longest path found
    for (const auto& so : per_start)
        for (std::size_t j = 0; j < so.paths_by_lm.size(); ++j)
            if (!so.paths_by_lm[j].empty())
                longest_lm = std::max<std::uint32_t>(longest_lm, (std::uint32_t)j + 2);

    // auto mode reports up to the last nonempty diagonal; the subdiagonal
    // is chased exactly as far as the reported levels need
    std::uint32_t level_count = opt.k_max ? *opt.k_max : longest_lm - 1;
    detail::for_each_start(n, opt.workers,
                           [&](vertex_id s) { detail::grow_gaps(g, s, level_count, per_start[s]); });

    chain_ladder ladder;
    ladder.levels.resize(level_count);
    for (std::uint32_t k = 1; k <= level_count; ++k) {
        chain_level& lvl = ladder.levels[k - 1];
        lvl.diag.k = k;
        lvl.diag.ell = k;
        lvl.subdiag.k = k - 1;
        lvl.subdiag.ell = k;
        for (const auto& so : per_start) {
            if ((std::size_t)(k - 1) < so.paths_by_lm.size())
                lvl.diag.trails.insert(lvl.diag.trails.end(), so.paths_by_lm[k - 1].begin(),
                                       so.paths_by_lm[k - 1].end());
            if (k >= 2 && (std::size_t)(k - 2) < so.gaps_by_lm.size())
                lvl.subdiag.trails.insert(lvl.subdiag.trails.end(), so.gaps_by_lm[k - 2].begin(),
                                          so.gaps_by_lm[k - 2].end());
        }
    }
    for (const auto& so : per_start) ladder.op_counter += so.ops;
    return ladder;
}

} // namespace emh
