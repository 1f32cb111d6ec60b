#pragma once

// definition-level reference implementation, the ground truth for
// property tests at small n.  chain groups are enumerated by backtracking
// over tuples of pairwise-distinct vertices with partial-length pruning
// (still a pure filter on the defining conditions); the differential
// deletes each interior landmark and re-measures the length -- no chord
// shortcut; ranks come from a textbook rational gaussian elimination that
// shares no code with the optimized engine.  capped at small n by
// configuration.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "emh/boundary.hpp"
#include "emh/chain.hpp"
#include "emh/errors.hpp"
#include "emh/graph.hpp"
#include "emh/trail.hpp"

namespace emh {

struct oracle_options {
    std::size_t max_vertices = 10; // small-instance cap
};

namespace detail {

inline void oracle_check_cap(const graph& g, const oracle_options& opt) {
    if (g.vertex_count() > opt.max_vertices)
        throw resource_error("oracle: graph has " + std::to_string(g.vertex_count()) +
                             " vertices, small-instance cap is " +
                             std::to_string(opt.max_vertices));
}

} // namespace detail

// every (k+1)-tuple of pairwise-distinct vertices with total length ell
inline chain_basis oracle_chain_basis(const graph& g, std::uint32_t k, std::uint32_t ell,
                                      const oracle_options& opt = {}) {
    detail::oracle_check_cap(g, opt);
    chain_basis basis;
    basis.k = k;
    basis.ell = ell;
    const std::size_t n = g.vertex_count();
    if (n == 0) return basis;

    std::vector<vertex_id> tuple;
    std::vector<char> used(n, 0);
    auto grow = [&](auto&& self, std::uint32_t partial) -> void {
        if (tuple.size() == (std::size_t)k + 1) {
            if (partial == ell) basis.trails.push_back(trail{tuple, partial});
            return;
        }
        std::uint32_t steps_after = (std::uint32_t)(k + 1 - tuple.size() - 1);
        for (vertex_id v = 0; v < (vertex_id)n; ++v) {
            if (used[v]) continue;
            std::uint32_t next = partial;
            if (!tuple.empty()) {
                hop_distance d = g.distance(tuple.back(), v);
                if (!d.is_finite()) continue;
                next = partial + d.value();
            }
            if (next + steps_after > ell) continue; // each later step adds >= 1
            used[v] = 1;
            tuple.push_back(v);
            self(self, next);
            tuple.pop_back();
            used[v] = 0;
        }
    };
    grow(grow, 0);
    return basis; // ascending construction order == lexicographic order
}

// differential from (k,ell) to (k-1,ell) by deleting each interior
// landmark and keeping the faces whose re-measured length is still ell
inline boundary_matrix oracle_differential(const graph& g, std::uint32_t k, std::uint32_t ell,
                                           const oracle_options& opt = {}) {
    if (k < 1) throw domain_error("oracle_differential: k must be >= 1");
    detail::oracle_check_cap(g, opt);
    chain_basis domain = oracle_chain_basis(g, k, ell, opt);
    chain_basis codomain = oracle_chain_basis(g, k - 1, ell, opt);

    boundary_matrix m;
    m.rows = codomain.size();
    m.cols = domain.size();
    std::vector<vertex_id> face;
    for (std::uint32_t c = 0; c < (std::uint32_t)domain.size(); ++c) {
        const auto& x = domain.trails[c].verts;
        std::size_t col_start = m.entries.size();
        for (std::uint32_t i = 1; i < k; ++i) {
            face.assign(x.begin(), x.begin() + i);
            face.insert(face.end(), x.begin() + i + 1, x.end());
            hop_distance len = trail_length(g, face);
            if (!(len == hop_distance::finite(ell))) continue;
            auto row = codomain.index_of(face);
            if (!row)
                throw domain_error("oracle_differential: face escaped the codomain basis");
            m.entries.push_back({*row, c, (i % 2) ? -1 : 1});
        }
        std::sort(m.entries.begin() + col_start, m.entries.end(),
                  [](const matrix_entry& a, const matrix_entry& b) { return a.row < b.row; });
    }
    return m;
}

// plain rational gaussian elimination, columns left to right -- kept
// deliberately simple and independent of the optimized rank engine
inline std::size_t oracle_rank(const boundary_matrix& m) {
    using rat = boost::multiprecision::cpp_rational;
    std::vector<std::vector<std::pair<std::uint32_t, rat>>> rows(m.rows);
    for (const auto& e : m.entries) rows[e.row].emplace_back(e.col, rat(e.sign));
    for (auto& r : rows)
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    auto entry_at = [](const std::vector<std::pair<std::uint32_t, rat>>& r, std::uint32_t c) -> const rat* {
        for (const auto& [col, v] : r)
            if (col == c) return &v;
            else if (col > c) break;
        return nullptr;
    };

    std::vector<char> pivoted(rows.size(), 0);
    std::size_t rank = 0;
    for (std::uint32_t c = 0; c < m.cols; ++c) {
        std::size_t pr = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!pivoted[r] && entry_at(rows[r], c)) {
                pr = r;
                break;
            }
        if (pr == rows.size()) continue;
        const rat pv = *entry_at(rows[pr], c);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == pr || pivoted[r]) continue;
            const rat* f = entry_at(rows[r], c);
            if (!f) continue;
            const rat scale = *f / pv;
            std::vector<std::pair<std::uint32_t, rat>> upd;
            auto a = rows[r].begin(), ae = rows[r].end();
            auto b = rows[pr].begin(), be = rows[pr].end();
            while (a != ae || b != be) {
                if (b == be || (a != ae && a->first < b->first)) {
                    upd.push_back(*a);
                    ++a;
                } else if (a == ae || b->first < a->first) {
                    upd.emplace_back(b->first, -scale * b->second);
                    ++b;
                } else {
                    rat v = a->second - scale * b->second;
                    if (!v.is_zero()) upd.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            rows[r] = std::move(upd);
        }
        pivoted[pr] = 1;
        ++rank;
    }
    return rank;
}

// beta_{k,ell} = dim ker d_{k,ell} - rank d_{k+1,ell}, both over Q
inline std::size_t oracle_betti(const graph& g, std::uint32_t k, std::uint32_t ell,
                                const oracle_options& opt = {}) {
    detail::oracle_check_cap(g, opt);
    std::size_t dim = oracle_chain_basis(g, k, ell, opt).size();
    std::size_t rank_k = (k >= 1) ? oracle_rank(oracle_differential(g, k, ell, opt)) : 0;
    std::size_t rank_up = oracle_rank(oracle_differential(g, k + 1, ell, opt));
    return dim - rank_k - rank_up;
}

} // namespace emh
