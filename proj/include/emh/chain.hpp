#pragma once

// graded chain-group bases restricted to the first diagonal:
//   diag(k)    = EMC_{k,k}:   k+1 distinct landmarks, every step an edge
//   subdiag(k) = EMC_{k-1,k}: k distinct landmarks, exactly one hop-2 step
// (k-1 steps >= 1 summing to k force the shape), both sorted
// lexicographically so positions double as matrix indices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "emh/trail.hpp"

namespace emh {

struct chain_basis {
    std::uint32_t k = 0;   // homological degree: generators carry k+1 landmarks
    std::uint32_t ell = 0; // length grading shared by every generator
    std::vector<trail> trails; // sorted lexicographically, no duplicates

    std::size_t size() const { return trails.size(); }

    std::optional<std::uint32_t> index_of(std::span<const vertex_id> verts) const {
        auto it = std::lower_bound(trails.begin(), trails.end(), verts,
                                   [](const trail& t, std::span<const vertex_id> v) {
                                       return std::lexicographical_compare(
                                           t.verts.begin(), t.verts.end(), v.begin(), v.end());
                                   });
        if (it == trails.end() || it->verts.size() != verts.size() ||
            !std::equal(it->verts.begin(), it->verts.end(), verts.begin()))
            return std::nullopt;
        return (std::uint32_t)(it - trails.begin());
    }
    std::optional<std::uint32_t> index_of(const trail& t) const {
        return index_of(std::span<const vertex_id>(t.verts));
    }
};

struct chain_level {
    chain_basis diag;    // EMC_{k,k}
    chain_basis subdiag; // EMC_{k-1,k}
};

struct chain_ladder {
    std::vector<chain_level> levels; // levels[i] holds degree k = i+1
    std::uint64_t op_counter = 0;    // extension attempts, one per candidate examined

    std::uint32_t max_k() const { return (std::uint32_t)levels.size(); }
    bool has(std::uint32_t k) const { return k >= 1 && k <= levels.size(); }
    const chain_basis& diag(std::uint32_t k) const { return levels.at(k - 1).diag; }
    const chain_basis& subdiag(std::uint32_t k) const { return levels.at(k - 1).subdiag; }

    // largest k with a nonempty diagonal basis; 0 when every diagonal is empty
    std::uint32_t observed_max_nonempty() const {
        for (std::size_t k = levels.size(); k >= 1; --k)
            if (!levels[k - 1].diag.trails.empty()) return (std::uint32_t)k;
        return 0;
    }
};

} // namespace emh
