#include <random>
#include <set>

#include "doctest.h"

#include "codegb/cycles.hpp"
#include "codegb/errors.hpp"
#include "testutil.hpp"

using codegb::BinaryCode;
using codegb::BinaryMatrix;
using codegb::Binomial;
using codegb::BitVec;
using codegb::Graph;
using codegb::Word;
using testutil::bits;

namespace {

Graph triangle() { return Graph(3, {{1, 2}, {2, 3}, {1, 3}}); }

Graph path4() { return Graph(4, {{1, 2}, {2, 3}, {3, 4}}); }

Graph k4() { return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

std::set<BitVec> codeword_set(const BinaryCode& code) {
    const auto words = code.codewords();
    return {words.begin(), words.end()};
}

Binomial binomial(std::string_view head, std::string_view tail, std::size_t n) {
    return Binomial{Word::parse(head, n), Word::parse(tail, n)};
}

}  // namespace

TEST_SUITE_BEGIN("cycles");

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("incidence check matrix") {
    SUBCASE("five-vertex worked example") {
        CHECK(incidence_check_matrix(testutil::house_graph()).str() ==
              "11000\n10010\n10001\n01100\n00110\n00011\n");
    }
    SUBCASE("single edge") {
        CHECK(incidence_check_matrix(Graph(2, {{1, 2}})).str() == "11\n");
    }
    SUBCASE("triangle rows all have two ones") {
        const BinaryMatrix h = incidence_check_matrix(triangle());
        REQUIRE(h.row_count() == 3);
        for (const BitVec& row : h.rows()) CHECK(row.count() == 2);
    }
}

TEST_CASE("cycle space code") {
    SUBCASE("worked graph carries the [6,2,3] code") {
        const BinaryCode code = cycle_space_code(testutil::house_graph());
        CHECK(code.dimension() == 2);
        CHECK(codeword_set(code) ==
              std::set<BitVec>{bits("000000"), bits("110110"), bits("011001"), bits("101111")});
    }
    SUBCASE("trees have trivial cycle space") {
        CHECK(cycle_space_code(path4()).dimension() == 0);
    }
    SUBCASE("triangle") {
        const BinaryCode code = cycle_space_code(triangle());
        CHECK(code.dimension() == 1);
        CHECK(codeword_set(code) == std::set<BitVec>{bits("000"), bits("111")});
    }
}

TEST_CASE("fundamental cycle basis") {
    SUBCASE("triangle") {
        const BinaryMatrix rows = fundamental_cycle_basis(triangle());
        REQUIRE(rows.row_count() == 1);
        CHECK(rows.row(0) == bits("111"));
    }
    SUBCASE("worked graph rows span the cycle space") {
        const Graph g = testutil::house_graph();
        const BinaryMatrix rows = fundamental_cycle_basis(g);
        REQUIRE(rows.row_count() == 2);
        const BinaryCode from_fundamental = BinaryCode::from_generator(rows);
        CHECK(codeword_set(from_fundamental) == codeword_set(cycle_space_code(g)));
    }
    SUBCASE("tree gives an empty matrix") {
        CHECK(fundamental_cycle_basis(path4()).row_count() == 0);
    }
    SUBCASE("spans the cycle space of random graphs") {
        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 15; ++trial) {
            const Graph g = testutil::random_connected_graph(rng, 8, 12);
            const BinaryCode direct = cycle_space_code(g);
            const BinaryMatrix rows = fundamental_cycle_basis(g);
            CHECK(rref(rows).matrix == direct.generator());
        }
    }
}

TEST_CASE("selection order on basis binomials") {
    CHECK(precedes(binomial("x2*x3", "x6", 6), binomial("x2*x4", "x1*x5", 6)));
    CHECK(precedes(binomial("x4*x5", "x1*x2", 6), binomial("x1*x3*x4", "x5*x6", 6)));
    CHECK(!precedes(binomial("x2*x3", "x6", 6), binomial("x2*x3", "x6", 6)));

    SUBCASE("strict total order on the worked basis") {
        const auto gb = compute_groebner_basis(cycle_space_code(testutil::house_graph()));
        const auto& els = gb.elements();
        for (std::size_t i = 0; i < els.size(); ++i) {
            for (std::size_t j = 0; j < els.size(); ++j) {
                if (i == j)
                    CHECK(!precedes(els[i], els[j]));
                else
                    CHECK(precedes(els[i], els[j]) != precedes(els[j], els[i]));
            }
        }
    }
}

TEST_CASE("minimal cycles") {
    SUBCASE("worked graph has one triangle") {
        const codegb::MinimalCycles mc = minimal_cycles(testutil::house_graph());
        CHECK(mc.min_length == 3);
        CHECK(mc.cycles == std::vector<BitVec>{bits("011001")});
        // 011001 selects edges (1,4), (1,5), (4,5): the triangle on {1,4,5}
        CHECK(edges_in_cycle(testutil::house_graph(), mc.cycles[0]) ==
              std::vector<Graph::Edge>{{1, 4}, {1, 5}, {4, 5}});
    }
    SUBCASE("triangle") {
        const codegb::MinimalCycles mc = minimal_cycles(triangle());
        CHECK(mc.min_length == 3);
        CHECK(mc.cycles == std::vector<BitVec>{bits("111")});
    }
    SUBCASE("acyclic graphs are rejected") {
        CHECK_THROWS_AS(minimal_cycles(path4()), std::invalid_argument);
    }
    SUBCASE("matches exhaustive enumeration on random graphs") {
        std::mt19937_64 rng(83);
        for (int trial = 0; trial < 15; ++trial) {
            const Graph g = testutil::random_connected_graph(rng, 8, 12);
            const BinaryCode code = cycle_space_code(g);
            if (code.dimension() == 0) continue;
            const codegb::MinimalCycles mc = minimal_cycles(g);
            const std::size_t d = oracle_min_distance(code);
            std::set<BitVec> expected;
            for (const BitVec& c : code.codewords())
                if (c.count() == d) expected.insert(c);
            CHECK(mc.min_length == d);
            CHECK(std::set<BitVec>(mc.cycles.begin(), mc.cycles.end()) == expected);
        }
    }
}

TEST_CASE("minimal cycle basis") {
    SUBCASE("worked graph") {
        const codegb::CycleBasis basis = minimal_cycle_basis(testutil::house_graph());
        CHECK(basis.cycles == std::vector<BitVec>{bits("011001"), bits("110110")});
        CHECK(basis.total_length == 7);
    }
    SUBCASE("triangle") {
        const codegb::CycleBasis basis = minimal_cycle_basis(triangle());
        CHECK(basis.cycles == std::vector<BitVec>{bits("111")});
        CHECK(basis.total_length == 3);
    }
    SUBCASE("complete graph on four vertices") {
        const codegb::CycleBasis basis = minimal_cycle_basis(k4());
        CHECK(basis.cycles.size() == 3);
        CHECK(basis.total_length == oracle_minimal_basis_length(cycle_space_code(k4())));
    }
    SUBCASE("tree gives an empty basis") {
        const codegb::CycleBasis basis = minimal_cycle_basis(path4());
        CHECK(basis.cycles.empty());
        CHECK(basis.total_length == 0);
    }
}

TEST_CASE("matroid-greedy oracle") {
    CHECK(oracle_minimal_basis_length(cycle_space_code(testutil::house_graph())) == 7);
    CHECK(oracle_minimal_basis_length(cycle_space_code(triangle())) == 3);
}

TEST_CASE("disconnected graphs use the component-aware dimension") {
    const Graph two_triangles(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    CHECK(component_count(two_triangles) == 2);
    const BinaryCode code = cycle_space_code(two_triangles);
    CHECK(code.dimension() ==
          two_triangles.edge_count() + component_count(two_triangles) -
              two_triangles.vertex_count());
    const codegb::CycleBasis basis = minimal_cycle_basis(two_triangles);
    CHECK(basis.cycles.size() == 2);
    CHECK(basis.total_length == 6);
    CHECK(fundamental_cycle_basis(two_triangles).row_count() == 2);
}

TEST_CASE("random graph properties") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = testutil::random_connected_graph(rng, 9, 14);
        const BinaryCode code = cycle_space_code(g);
        const BinaryMatrix incidence = incidence_check_matrix(g);

        // Betti number
        CHECK(code.dimension() ==
              g.edge_count() + component_count(g) - g.vertex_count());

        const codegb::CycleBasis basis = minimal_cycle_basis(g);
        CHECK(basis.cycles.size() == code.dimension());
        for (const BitVec& c : basis.cycles)
            CHECK(row_times_matrix(c, incidence).is_zero());

        // the greedy basis is independent: its rank equals its size
        CHECK(rref(BinaryMatrix::from_rows(basis.cycles, g.edge_count())).rank ==
              basis.cycles.size());

        // minimal total length against the matroid-greedy oracle
        CHECK(basis.total_length == oracle_minimal_basis_length(code));

        // oracle length is a lower bound for any basis, e.g. the fundamental one
        const BinaryMatrix fundamental = fundamental_cycle_basis(g);
        std::size_t fundamental_total = 0;
        for (const BitVec& row : fundamental.rows()) fundamental_total += row.count();
        CHECK(basis.total_length <= fundamental_total);
    }
}

TEST_SUITE_END();
