#include <catch2/catch_amalgamated.hpp>

#include <emh/boundary.hpp>
#include <emh/enumerate.hpp>
#include <emh/generators.hpp>
#include <emh/oracle.hpp>

#include "helpers.hpp"

using namespace emh;

namespace {

const graph& worked_example() {
    static graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    return g;
}

bool same_matrix(const boundary_matrix& a, const boundary_matrix& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.entries.size() != b.entries.size())
        return false;
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
        const auto &x = a.entries[i], &y = b.entries[i];
        if (x.row != y.row || x.col != y.col || x.sign != y.sign) return false;
    }
    return true;
}

} // namespace

TEST_CASE("boundary of the worked example has rank-defect six") {
    const graph& g = worked_example();
    chain_ladder ladder = enumerate_diagonal(g);
    boundary_matrix m = build_boundary(g, ladder.diag(2), ladder.subdiag(2));
    CHECK(m.cols == 10);
    CHECK(m.rows == 4);
    CHECK(m.nnz() == 4);

    // the four surviving interior deletions, by hand:
    //   (0,2,3) -> -(0,3)   (1,2,3) -> -(1,3)
    //   (3,2,0) -> -(3,0)   (3,2,1) -> -(3,1)
    const chain_basis &d = ladder.diag(2), &s = ladder.subdiag(2);
    auto cell = [&](std::vector<vertex_id> from, std::vector<vertex_id> to) {
        auto c = d.index_of(std::span<const vertex_id>(from));
        auto r = s.index_of(std::span<const vertex_id>(to));
        REQUIRE(c);
        REQUIRE(r);
        for (const auto& e : m.entries)
            if (e.col == *c && e.row == *r) return e.sign;
        return 0;
    };
    CHECK(cell({0, 2, 3}, {0, 3}) == -1);
    CHECK(cell({1, 2, 3}, {1, 3}) == -1);
    CHECK(cell({3, 2, 0}, {3, 0}) == -1);
    CHECK(cell({3, 2, 1}, {3, 1}) == -1);
    CHECK(cell({0, 1, 2}, {0, 3}) == 0); // chord 0-2 kills this column entirely
}

TEST_CASE("entries are grouped by column and sorted by row inside each column") {
    graph g = make_cycle(7);
    chain_ladder ladder = enumerate_diagonal(g, {3, 1});
    boundary_matrix m = build_boundary(g, ladder.diag(3), ladder.subdiag(3));
    for (std::size_t i = 1; i < m.entries.size(); ++i) {
        const auto &p = m.entries[i - 1], &q = m.entries[i];
        CHECK((p.col < q.col || (p.col == q.col && p.row < q.row)));
    }
    for (const auto& e : m.entries) CHECK((e.sign == 1 || e.sign == -1));
}

TEST_CASE("sign alternates with the deleted position") {
    // path 0-1-2-3-4 with no chords: every interior deletion survives
    graph g = make_path(5);
    chain_ladder ladder = enumerate_diagonal(g);
    boundary_matrix m = build_boundary(g, ladder.diag(4), ladder.subdiag(4));
    auto col = ladder.diag(4).index_of(std::vector<vertex_id>{0, 1, 2, 3, 4});
    REQUIRE(col);
    std::vector<std::pair<std::vector<vertex_id>, int>> expected = {
        {{0, 2, 3, 4}, -1}, // delete position 1
        {{0, 1, 3, 4}, 1},  // delete position 2
        {{0, 1, 2, 4}, -1}, // delete position 3
    };
    for (const auto& [verts, sign] : expected) {
        auto row = ladder.subdiag(4).index_of(std::span<const vertex_id>(verts));
        REQUIRE(row);
        bool found = false;
        for (const auto& e : m.entries)
            if (e.col == *col && e.row == *row) {
                CHECK(e.sign == sign);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("complete graphs produce an empty matrix (every chord present)") {
    graph g = make_complete(5);
    chain_ladder ladder = enumerate_diagonal(g);
    for (std::uint32_t k = 2; k <= ladder.max_k(); ++k) {
        boundary_matrix m = build_boundary(g, ladder.diag(k), ladder.subdiag(k));
        CHECK(m.nnz() == 0);
        CHECK(m.rows == 0);
    }
}

TEST_CASE("grading mismatches are rejected") {
    const graph& g = worked_example();
    chain_ladder ladder = enumerate_diagonal(g);
    CHECK_THROWS_AS(build_boundary(g, ladder.diag(2), ladder.subdiag(3)), domain_error);
    CHECK_THROWS_AS(build_boundary(g, ladder.subdiag(2), ladder.subdiag(2)), domain_error);
}

TEST_CASE("the nonzero cap trips a resource error") {
    graph g = make_path(6);
    chain_ladder ladder = enumerate_diagonal(g);
    CHECK_THROWS_AS(build_boundary(g, ladder.diag(3), ladder.subdiag(3), 2), resource_error);
}

TEST_CASE("chord-test columns equal delete-and-remeasure columns everywhere") {
    oracle_options opt{8};
    for (const graph& g : test_helpers::connected_graphs_upto(5)) {
        chain_ladder ladder = enumerate_diagonal(g);
        for (std::uint32_t k = 1; k <= ladder.max_k(); ++k) {
            CAPTURE(g.edge_count(), k);
            boundary_matrix fast = build_boundary(g, ladder.diag(k), ladder.subdiag(k));
            boundary_matrix slow = oracle_differential(g, k, k, opt);
            CHECK(same_matrix(fast, slow));
        }
    }
}
