#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <emh/generators.hpp>
#include <emh/homology.hpp>
#include <emh/oracle.hpp>

#include "helpers.hpp"

using namespace emh;

TEST_CASE("chain bases by definition: worked example gradings") {
    graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(oracle_chain_basis(g, 0, 0).size() == 4);  // vertices
    CHECK(oracle_chain_basis(g, 1, 1).size() == 8);  // oriented edges
    CHECK(oracle_chain_basis(g, 2, 2).size() == 10);
    CHECK(oracle_chain_basis(g, 1, 2).size() == 4);
    CHECK(oracle_chain_basis(g, 2, 3).size() == 12);
    CHECK(oracle_chain_basis(g, 0, 1).size() == 0); // one landmark cannot span length 1

    // tuples vanish above the diagonal: more steps than length
    for (std::uint32_t ell = 0; ell <= 4; ++ell)
        for (std::uint32_t k = ell + 1; k <= 5; ++k)
            CHECK(oracle_chain_basis(g, k, ell).size() == 0);

    auto basis = oracle_chain_basis(g, 1, 2);
    CHECK(basis.trails[0].verts == std::vector<vertex_id>{0, 3});
    CHECK(basis.trails[1].verts == std::vector<vertex_id>{1, 3});
    CHECK(basis.trails[2].verts == std::vector<vertex_id>{3, 0});
    CHECK(basis.trails[3].verts == std::vector<vertex_id>{3, 1});
    CHECK(std::is_sorted(basis.trails.begin(), basis.trails.end()));
}

TEST_CASE("oracle betti numbers reproduce the worked example") {
    graph g(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(oracle_betti(g, 0, 0) == 4);
    CHECK(oracle_betti(g, 1, 1) == 8);
    CHECK(oracle_rank(oracle_differential(g, 2, 2)) == 4);
    CHECK(oracle_betti(g, 2, 2) == 6);
    CHECK(oracle_betti(g, 3, 3) == 0);
}

TEST_CASE("known family values") {
    CHECK(oracle_betti(make_complete(4), 2, 2) == 24);
    CHECK(oracle_betti(make_star(4), 2, 2) == 0);  // three leaves
    CHECK(oracle_betti(make_path(4), 3, 3) == 0);
    CHECK(oracle_betti(make_cycle(5), 2, 2) == 0);
}

TEST_CASE("oracle tables match the independently frozen cycle-5 fixture") {
    std::ifstream golden(std::string(EMH_TEST_DATA_DIR) + "/c5_oracle.csv");
    REQUIRE(golden.good());
    graph g = make_cycle(5);
    std::string header;
    std::getline(golden, header);
    CHECK(header == "k,l,dim,betti");
    std::string line;
    int rows = 0;
    while (std::getline(golden, line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        std::uint32_t k, ell;
        std::size_t dim, betti;
        char comma;
        in >> k >> comma >> ell >> comma >> dim >> comma >> betti;
        REQUIRE(in);
        CAPTURE(k, ell);
        CHECK(oracle_chain_basis(g, k, ell).size() == dim);
        CHECK(oracle_betti(g, k, ell) == betti);
        ++rows;
    }
    CHECK(rows == 25);
}

TEST_CASE("betti numbers are isomorphism invariants") {
    // relabel a random graph and compare all first-diagonal numbers
    graph g = make_erdos_renyi(7, 0.4, 9);
    std::vector<vertex_id> perm{3, 6, 0, 2, 5, 1, 4};
    std::vector<std::pair<vertex_id, vertex_id>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    graph h(7, std::move(edges));
    for (std::uint32_t k = 0; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(oracle_betti(g, k, k) == oracle_betti(h, k, k));
        CHECK(oracle_chain_basis(g, k, k).size() == oracle_chain_basis(h, k, k).size());
    }
}

TEST_CASE("differential squares to zero off the diagonal too") {
    // composite d_{k,l} . d_{k+1,l} over a couple of small graphs
    for (const graph& g : {make_cycle(5), make_erdos_renyi(6, 0.4, 4)}) {
        for (std::uint32_t ell = 2; ell <= 4; ++ell)
            for (std::uint32_t k = 1; k < ell; ++k) {
                boundary_matrix up = oracle_differential(g, k + 1, ell);
                boundary_matrix dn = oracle_differential(g, k, ell);
                REQUIRE(dn.cols == up.rows);
                // dense product, entries are tiny
                std::vector<std::vector<long long>> prod(
                    dn.rows, std::vector<long long>(up.cols, 0));
                for (const auto& a : dn.entries)
                    for (const auto& b : up.entries)
                        if (a.col == b.row) prod[a.row][b.col] += (long long)a.sign * b.sign;
                for (const auto& row : prod)
                    for (long long v : row) CHECK(v == 0);
            }
    }
}

TEST_CASE("the small-instance cap is enforced") {
    graph big = make_cycle(11);
    CHECK_THROWS_AS(oracle_chain_basis(big, 2, 2, {10}), resource_error);
    CHECK_THROWS_AS(oracle_differential(big, 2, 2, {10}), resource_error);
    CHECK_THROWS_AS(oracle_betti(big, 2, 2, {10}), resource_error);
    CHECK_THROWS_WITH(oracle_betti(big, 2, 2, {10}),
                      Catch::Matchers::ContainsSubstring("cap"));
    CHECK(oracle_chain_basis(big, 1, 1, {11}).size() == 22); // raising the cap admits it
    CHECK_THROWS_AS(oracle_differential(big, 0, 1, {11}), domain_error); // k must be >= 1
}

TEST_CASE("oracle agrees with the optimized pipeline row by row") {
    for (const graph& g : test_helpers::connected_graphs_upto(5)) {
        betti_report report = betti_first_diagonal(g);
        for (const auto& row : report.rows) {
            CAPTURE(g.edge_count(), row.k);
            CHECK(row.betti == oracle_betti(g, row.k, row.k));
        }
    }
}
