#pragma once

// subgraphs that support homology cycles on the first diagonal.
//
// a single diagonal trail with vanishing boundary forces its path edges
// plus every chord {x_{i-1},x_{i+1}}; two trails differing in one interior
// landmark cancel in the boundary exactly when that one chord is absent
// and the doubled landmark is stitched in; iterating the doubling at
// every interior position yields a grid-like graph carrying 2^{k-1}
// parallel routes whose alternating sum is a cycle.  edges are tagged
// path / chord, and structurally-required non-edges are recorded
// explicitly as forbidden.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "emh/boundary.hpp"
#include "emh/chain.hpp"
#include "emh/enumerate.hpp"
#include "emh/errors.hpp"
#include "emh/graph.hpp"
#include "emh/rank.hpp"

namespace emh {

enum class edge_role { path, chord, forbidden };

inline const char* role_name(edge_role r) {
    switch (r) {
        case edge_role::path: return "path";
        case edge_role::chord: return "chord";
        default: return "forbidden";
    }
}

struct witness_edge {
    vertex_id u = 0, v = 0; // u < v
    edge_role role = edge_role::path;
};

struct witness_graph {
    graph g;                         // holds the path and chord edges only
    std::vector<witness_edge> edges; // tagged edges plus forbidden non-edges, sorted
};

struct chain_term {
    std::int64_t coeff = 0;
    std::vector<vertex_id> verts;
};

struct chain {
    std::vector<chain_term> terms;
};

struct cycle_check {
    witness_graph support;
    bool is_cycle = false;
    std::optional<trail> surviving; // a subdiagonal generator left over when not a cycle
};

inline void write_witness(const witness_graph& w, std::ostream& out) {
    for (const auto& e : w.edges)
        out << w.g.label(e.u) << ' ' << w.g.label(e.v) << ' ' << role_name(e.role) << '\n';
}

inline std::string witness_to_string(const witness_graph& w) {
    std::ostringstream out;
    write_witness(w, out);
    return out.str();
}

namespace detail {

inline witness_graph assemble_witness(std::size_t n, std::vector<std::string> labels,
                                      std::vector<witness_edge> edges) {
    for (auto& e : edges)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(edges.begin(), edges.end(), [](const witness_edge& a, const witness_edge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    std::vector<std::pair<vertex_id, vertex_id>> present;
    for (const auto& e : edges)
        if (e.role != edge_role::forbidden) present.emplace_back(e.u, e.v);
    witness_graph w{graph(n, std::move(present), std::move(labels)), std::move(edges)};
    return w;
}

// evaluate the boundary of an integer chain over diag(k) of g; returns the
// matrix, the image vector, and the ladder level used
struct boundary_eval {
    boundary_matrix m;
    std::vector<big_int> image;
    chain_basis subdiag;
};

inline boundary_eval evaluate_boundary(const graph& g, const chain& c, std::uint32_t k) {
    chain_ladder ladder = enumerate_diagonal(g, {k, 1});
    boundary_eval ev;
    ev.m = build_boundary(g, ladder.diag(k), ladder.subdiag(k));
    std::vector<std::pair<std::uint32_t, std::int64_t>> coeffs;
    for (const auto& term : c.terms) {
        auto idx = ladder.diag(k).index_of(term.verts);
        if (!idx)
            throw domain_error("chain trail is not a diagonal basis element of the graph");
        coeffs.emplace_back(*idx, term.coeff);
    }
    ev.image = apply_matrix(ev.m, coeffs);
    ev.subdiag = ladder.subdiag(k);
    return ev;
}

} // namespace detail

// the canonical one-trail support graph: the k path edges of a simple path
// whose boundary vanishes, plus the k-1 chords that make it vanish.
// only those edges belong to the witness, whatever else g contains.
inline witness_graph single_trail_support(const graph& g, const trail& x) {
    const auto& v = x.verts;
    if (v.size() < 2) throw domain_error("single_trail_support: need at least two landmarks");
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!g.adjacent(v[i], v[i + 1]))
            throw domain_error("single_trail_support: (" + g.label(v[i]) + "," +
                               g.label(v[i + 1]) + ") is not an edge, not a diagonal trail");
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        if (!g.adjacent(v[i - 1], v[i + 1]))
            throw domain_error("single_trail_support: boundary does not vanish, first missing chord {" +
                               g.label(v[i - 1]) + "," + g.label(v[i + 1]) + "}");

    // compact to the trail's own vertex set, ascending original id
    std::vector<vertex_id> verts(v.begin(), v.end());
    std::sort(verts.begin(), verts.end());
    auto local = [&](vertex_id orig) {
        return (vertex_id)(std::lower_bound(verts.begin(), verts.end(), orig) - verts.begin());
    };
    std::vector<std::string> labels;
    for (vertex_id orig : verts) labels.push_back(g.label(orig));
    std::vector<witness_edge> edges;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        edges.push_back({local(v[i]), local(v[i + 1]), edge_role::path});
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        edges.push_back({local(v[i - 1]), local(v[i + 1]), edge_role::chord});
    return detail::assemble_witness(verts.size(), std::move(labels), std::move(edges));
}

// two trails sharing every landmark except one interior position r: the
// witness keeps the first trail's path edges and chords except the chord
// across r, stitches the doubled landmark to the neighbours two steps
// around r, and forbids {x_{r-1},x_{r+1}} so neither boundary collapses.
// the cancellation d(x1 - x2) = 0 is re-verified on the built graph.
inline witness_graph two_trail_witness(const std::vector<std::string>& t1,
                                       const std::vector<std::string>& t2) {
    if (t1.size() != t2.size())
        throw domain_error("two_trail_witness: trails must have the same landmark count");
    if (t1.size() < 3)
        throw domain_error("two_trail_witness: trails need an interior landmark (k >= 2)");
    const std::uint32_t k = (std::uint32_t)t1.size() - 1;
    std::vector<std::uint32_t> diff;
    for (std::uint32_t i = 0; i <= k; ++i)
        if (t1[i] != t2[i]) diff.push_back(i);
    if (diff.empty()) throw domain_error("two_trail_witness: trails are identical");
    if (diff.size() > 1)
        throw domain_error("two_trail_witness: trails differ in " + std::to_string(diff.size()) +
                           " positions; the cancellation needs exactly one");
    const std::uint32_t r = diff[0];
    if (r == 0 || r == k)
        throw domain_error("two_trail_witness: trails must share both endpoints");
    for (std::uint32_t i = 0; i <= k; ++i)
        for (std::uint32_t j = i + 1; j <= k; ++j)
            if (t1[i] == t1[j] || t2[i] == t2[j])
                throw domain_error("two_trail_witness: repeated landmark inside a trail");
    for (std::uint32_t i = 0; i <= k; ++i)
        if (i != r && t1[i] == t2[r])
            throw domain_error("two_trail_witness: doubled landmark collides with the shared ones");

    // ids 0..k for the first trail, k+1 for the doubled landmark
    std::vector<std::string> labels(t1.begin(), t1.end());
    labels.push_back(t2[r]);
    const vertex_id dbl = k + 1;
    std::vector<witness_edge> edges;
    for (std::uint32_t i = 0; i < k; ++i) edges.push_back({i, i + 1, edge_role::path});
    for (std::uint32_t i = 1; i < k; ++i)
        if (i != r) edges.push_back({i - 1, i + 1, edge_role::chord});
    for (std::int64_t a : {(std::int64_t)r - 2, (std::int64_t)r - 1, (std::int64_t)r + 1,
                           (std::int64_t)r + 2})
        if (a >= 0 && a <= (std::int64_t)k)
            edges.push_back({(vertex_id)a, dbl,
                             (a == (std::int64_t)r - 1 || a == (std::int64_t)r + 1)
                                 ? edge_role::path
                                 : edge_role::chord});
    edges.push_back({r - 1, r + 1, edge_role::forbidden});
    witness_graph w = detail::assemble_witness(k + 2, std::move(labels), std::move(edges));

    // the whole point of the construction: the two boundaries cancel
    chain c;
    std::vector<vertex_id> v1, v2;
    for (std::uint32_t i = 0; i <= k; ++i) v1.push_back(i);
    for (std::uint32_t i = 0; i <= k; ++i) v2.push_back(i == r ? dbl : i);
    c.terms.push_back({1, v1});
    c.terms.push_back({-1, v2});
    auto ev = detail::evaluate_boundary(w.g, c, k);
    for (const auto& coef : ev.image)
        if (!coef.is_zero())
            throw std::logic_error("two_trail_witness: constructed graph failed the cancellation check");
    return w;
}

// the maximal member of the family: every interior landmark doubled, all
// chords removed; the primed row is itself a path, giving a (k-2)-step
// grid shape.  ids: x_i = i for i in [0,k], x'_r = k + r for r in [1,k-1].
inline witness_graph grid_family_graph(std::uint32_t k) {
    if (k < 3) throw domain_error("grid_family_graph: k must be >= 3");
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i <= k; ++i) labels.push_back(std::to_string(i));
    for (std::uint32_t r = 1; r < k; ++r) labels.push_back(std::to_string(r) + "'");
    std::vector<witness_edge> edges;
    for (std::uint32_t i = 0; i < k; ++i) edges.push_back({i, i + 1, edge_role::path});
    for (std::uint32_t r = 1; r < k; ++r) {
        edges.push_back({r - 1, k + r, edge_role::path});
        edges.push_back({k + r, r + 1, edge_role::path});
        if (r + 1 < k) edges.push_back({k + r, k + r + 1, edge_role::path});
        edges.push_back({r - 1, r + 1, edge_role::forbidden});
    }
    return detail::assemble_witness(2 * (std::size_t)k, std::move(labels), std::move(edges));
}

// the 2^{k-1} routes of the grid graph (pick x_r or x'_r at each interior
// position) with sign (-1)^{number of primed picks}: the canonical
// maximal cycle
inline chain grid_alternating_chain(std::uint32_t k) {
    if (k < 3) throw domain_error("grid_alternating_chain: k must be >= 3");
    chain c;
    for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        chain_term term;
        term.coeff = (std::popcount(mask) % 2) ? -1 : 1;
        term.verts.push_back(0);
        for (std::uint32_t r = 1; r < k; ++r)
            term.verts.push_back((mask >> (r - 1)) & 1 ? k + r : r);
        term.verts.push_back(k);
        c.terms.push_back(std::move(term));
    }
    return c;
}

// verify d(c) = 0 against the real boundary matrix and hand back the
// induced support subgraph; when the boundary survives, name a witnessing
// subdiagonal generator instead of pretending
inline cycle_check cycle_support(const graph& g, const chain& c) {
    if (c.terms.empty()) throw domain_error("cycle_support: empty chain");
    const std::size_t lm = c.terms.front().verts.size();
    if (lm < 2) throw domain_error("cycle_support: trails need at least two landmarks");
    for (const auto& term : c.terms) {
        if (term.coeff == 0) throw domain_error("cycle_support: zero coefficient");
        if (term.verts.size() != lm)
            throw domain_error("cycle_support: trails of mixed degree in one chain");
    }
    for (std::size_t i = 0; i < c.terms.size(); ++i)
        for (std::size_t j = i + 1; j < c.terms.size(); ++j)
            if (c.terms[i].verts == c.terms[j].verts)
                throw domain_error("cycle_support: repeated trail in chain");

    const std::uint32_t k = (std::uint32_t)lm - 1;
    auto ev = detail::evaluate_boundary(g, c, k);

    cycle_check out;
    out.is_cycle = true;
    for (std::size_t row = 0; row < ev.image.size(); ++row)
        if (!ev.image[row].is_zero()) {
            out.is_cycle = false;
            out.surviving = ev.subdiag.trails[row];
            break;
        }

    // induced support: all g-edges among the union of landmarks; edges
    // used as trail steps are path, the rest chords
    std::vector<vertex_id> verts;
    for (const auto& term : c.terms)
        verts.insert(verts.end(), term.verts.begin(), term.verts.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    auto local = [&](vertex_id orig) {
        return (vertex_id)(std::lower_bound(verts.begin(), verts.end(), orig) - verts.begin());
    };
    std::map<std::pair<vertex_id, vertex_id>, edge_role> roles;
    for (vertex_id u : verts)
        for (vertex_id w : g.neighbors(u))
            if (u < w && std::binary_search(verts.begin(), verts.end(), w))
                roles[{local(u), local(w)}] = edge_role::chord;
    for (const auto& term : c.terms)
        for (std::size_t i = 0; i + 1 < term.verts.size(); ++i) {
            vertex_id a = local(term.verts[i]), b = local(term.verts[i + 1]);
            if (a > b) std::swap(a, b);
            roles[{a, b}] = edge_role::path;
        }
    std::vector<std::string> labels;
    for (vertex_id orig : verts) labels.push_back(g.label(orig));
    std::vector<witness_edge> edges;
    for (const auto& [pair, role] : roles) edges.push_back({pair.first, pair.second, role});
    out.support = detail::assemble_witness(verts.size(), std::move(labels), std::move(edges));
    return out;
}

} // namespace emh
