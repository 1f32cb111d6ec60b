#pragma once

// first-diagonal betti numbers.  on the first diagonal the next chain
// group EMC_{k+1,k} vanishes identically (more landmarks than length),
// so no image needs quotienting out and rank-nullity gives
//   beta_{k,k} = dim EMC_{k,k} - rank(d_{k,k}).
// beta_{0,0} = n falls out of the empty differential on vertices.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "emh/boundary.hpp"
#include "emh/enumerate.hpp"
#include "emh/graph.hpp"
#include "emh/rank.hpp"

namespace emh {

struct betti_row {
    std::uint32_t k = 0;
    std::uint64_t dim_diag = 0;    // |EMC_{k,k}|
    std::uint64_t dim_subdiag = 0; // |EMC_{k-1,k}|
    std::uint64_t rank = 0;        // rank of d_{k,k} over the chosen field
    std::uint64_t betti = 0;       // dim_diag - rank
};

struct betti_report {
    std::vector<betti_row> rows; // k ascending from 0
    field_spec field;
    std::uint64_t op_counter = 0;
    std::uint32_t observed_max_k = 0; // largest k >= 1 with dim_diag > 0 (0 if none)
    double wall_ms = 0.0; // never serialized into machine formats

    const betti_row* row(std::uint32_t k) const {
        for (const auto& r : rows)
            if (r.k == k) return &r;
        return nullptr;
    }
};

struct homology_options {
    std::optional<std::uint32_t> k_max; // nullopt: to exhaustion
    field_spec field;
    unsigned workers = 1;
    std::size_t max_nnz = default_max_nnz;
};

inline betti_report betti_first_diagonal(const graph& g, const homology_options& opt = {}) {
    auto t0 = std::chrono::steady_clock::now();
    chain_ladder ladder = enumerate_diagonal(g, {opt.k_max, opt.workers});

    betti_report report;
    report.field = opt.field;
    report.op_counter = ladder.op_counter;
    report.observed_max_k = ladder.observed_max_nonempty();

    std::uint64_t n = g.vertex_count();
    report.rows.push_back({0, n, 0, 0, n});
    for (std::uint32_t k = 1; k <= ladder.max_k(); ++k) {
        boundary_matrix m = build_boundary(g, ladder.diag(k), ladder.subdiag(k), opt.max_nnz);
        std::uint64_t rank = matrix_rank(m, opt.field);
        report.rows.push_back({k, m.cols, m.rows, rank, m.cols - rank});
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

} // namespace emh
