#pragma once

// the first-diagonal differential as a sparse signed matrix.  deleting an
// interior landmark x_i of a diagonal trail keeps the length exactly when
// the chord {x_{i-1},x_{i+1}} is missing from the graph (when present the
// walk shortens and the face dies), so each column holds at most k-1
// entries with sign (-1)^i.  endpoints are never deleted.

#include <cstdint>
#include <string>
#include <vector>

#include "emh/chain.hpp"
#include "emh/errors.hpp"
#include "emh/graph.hpp"

namespace emh {

struct matrix_entry {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    std::int32_t sign = 0; // +1 or -1
};

struct boundary_matrix {
    std::uint64_t rows = 0; // codomain basis size (EMC_{k-1,k})
    std::uint64_t cols = 0; // domain basis size (EMC_{k,k})
    std::vector<matrix_entry> entries; // sorted by (col, row), one per cell
    std::size_t nnz() const { return entries.size(); }
};

inline constexpr std::size_t default_max_nnz = 10'000'000;

inline boundary_matrix build_boundary(const graph& g, const chain_basis& diag,
                                      const chain_basis& subdiag,
                                      std::size_t max_nnz = default_max_nnz) {
    if (diag.ell != diag.k)
        throw domain_error("build_boundary: domain basis must sit on the first diagonal (k,k)");
    if (subdiag.k + 1 != diag.k || subdiag.ell != diag.ell)
        throw domain_error("build_boundary: basis gradings must be (k,k) and (k-1,k)");

    boundary_matrix m;
    m.rows = subdiag.size();
    m.cols = diag.size();
    const std::uint32_t k = diag.k;
    std::vector<vertex_id> face(k); // k landmarks after one deletion
    for (std::uint32_t c = 0; c < (std::uint32_t)diag.size(); ++c) {
        const std::vector<vertex_id>& x = diag.trails[c].verts;
        std::size_t col_start = m.entries.size();
        for (std::uint32_t i = 1; i < k; ++i) {
            if (g.adjacent(x[i - 1], x[i + 1])) continue; // face shortens, coefficient 0
            face.assign(x.begin(), x.begin() + i);
            face.insert(face.end(), x.begin() + i + 1, x.end());
            auto row = subdiag.index_of(face);
            if (!row)
                throw domain_error("build_boundary: face of column " + std::to_string(c) +
                                   " missing from the subdiagonal basis");
            if (m.entries.size() >= max_nnz)
                throw resource_error("build_boundary: nonzero cap " + std::to_string(max_nnz) +
                                     " exceeded");
            m.entries.push_back({*row, c, (i % 2) ? -1 : 1});
        }
        std::sort(m.entries.begin() + col_start, m.entries.end(),
                  [](const matrix_entry& a, const matrix_entry& b) { return a.row < b.row; });
    }
    return m;
}

} // namespace emh
