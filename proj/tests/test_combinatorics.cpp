#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corona/combinatorics.hpp"
#include "corona/errors.hpp"
#include "corona/graph.hpp"
#include "test_util.hpp"

using namespace corona;
using corona::testing::naive_independence_number;
using corona::testing::naive_induced_matching_number;
using corona::testing::naive_is_chordal;
using corona::testing::random_chordal_graph;
using corona::testing::random_graph;

namespace {

bool witness_is_independent(const Graph& g, const std::vector<int>& witness) {
    for (std::size_t i = 0; i < witness.size(); ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j)
            if (g.adjacent(witness[i], witness[j])) return false;
    return true;
}

}  // namespace

TEST_CASE("independence number on the named families") {
    CHECK(independence_number(path_graph(4)).size == 2);
    for (int n = 1; n <= 5; ++n) CHECK(independence_number(complete_graph(n)).size == 1);
    for (int r = 0; r <= 5; ++r) CHECK(independence_number(null_graph(r)).size == r);
    CHECK(independence_number(cycle_graph(5)).size == 2);
    CHECK(independence_number(star_graph(7)).size == 7);
}

TEST_CASE("independence witness attains the size and is independent") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 30; ++round) {
        const Graph g = random_graph(2 + static_cast<int>(rng() % 10), 0.4, rng);
        const auto result = independence_number(g);
        CHECK(static_cast<int>(result.witness.size()) == result.size);
        CHECK(witness_is_independent(g, result.witness));
    }
}

TEST_CASE("branch and bound agrees with 2^n enumeration up to 12 vertices") {
    std::mt19937_64 rng(20240812);
    for (int round = 0; round < 40; ++round) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const double p = (round % 3) * 0.3 + 0.15;
        const Graph g = random_graph(n, p, rng);
        CHECK(independence_number(g).size == naive_independence_number(g));
    }
}

TEST_CASE("independence number is monotone under induced subgraphs") {
    std::mt19937_64 rng(99);
    for (int round = 0; round < 20; ++round) {
        const Graph g = random_graph(8, 0.35, rng);
        std::vector<int> keep;
        for (int v = 0; v < 8; ++v)
            if (rng() % 2) keep.push_back(v);
        CHECK(independence_number(induced_subgraph(g, keep)).size <=
              independence_number(g).size);
    }
}

TEST_CASE("independence number of a corona is |V(X)| times (alpha(H') + isolated)") {
    std::mt19937_64 rng(6174);
    for (int round = 0; round < 30; ++round) {
        const Graph x = random_graph(1 + static_cast<int>(rng() % 5), 0.2 * (round % 5), rng);
        const Graph h = random_graph(1 + static_cast<int>(rng() % 4), 0.3 * (round % 4), rng);
        std::vector<int> support;
        for (int v = 0; v < h.vertex_count(); ++v)
            if (h.degree(v) > 0) support.push_back(v);
        const int alpha_core = independence_number(induced_subgraph(h, support)).size;
        const int iso = static_cast<int>(isolated_vertices(h).size());
        CHECK(independence_number(corona_product(x, h).graph).size ==
              x.vertex_count() * (alpha_core + iso));
    }
}

TEST_CASE("independence number capacity cap") {
    CHECK_THROWS_AS(independence_number(null_graph(64)), CapacityError);
    CHECK_NOTHROW(independence_number(null_graph(63)));
}

TEST_CASE("induced matching number on the named families") {
    CHECK(induced_matching_number(path_graph(4)).size == 1);
    CHECK(induced_matching_number(cycle_graph(6)).size == 2);
    CHECK(induced_matching_number(null_graph(4)).size == 0);
    CHECK(induced_matching_number(complete_graph(1)).size == 0);
    CHECK(induced_matching_number(complete_graph(5)).size == 1);
    CHECK(induced_matching_number(star_graph(6)).size == 1);
}

TEST_CASE("induced matching witness induces exactly the matching") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 25; ++round) {
        const Graph g = random_graph(3 + static_cast<int>(rng() % 6), 0.35, rng);
        const auto result = induced_matching_number(g);
        CHECK(result.size == naive_induced_matching_number(g));
        // pairwise: disjoint endpoints, no cross edges
        for (std::size_t i = 0; i < result.witness.size(); ++i)
            for (std::size_t j = i + 1; j < result.witness.size(); ++j) {
                auto [a, b] = result.witness[i];
                auto [c, d] = result.witness[j];
                CHECK(a != c);
                CHECK(a != d);
                CHECK(b != c);
                CHECK(b != d);
                CHECK_FALSE(g.adjacent(a, c));
                CHECK_FALSE(g.adjacent(a, d));
                CHECK_FALSE(g.adjacent(b, c));
                CHECK_FALSE(g.adjacent(b, d));
            }
    }
}

TEST_CASE("chordality of the named families") {
    CHECK(is_chordal(path_graph(7)));
    CHECK(is_chordal(star_graph(5)));
    CHECK(is_chordal(complete_graph(5)));
    CHECK(is_chordal(null_graph(4)));
    CHECK_FALSE(is_chordal(cycle_graph(4)));
    CHECK_FALSE(is_chordal(cycle_graph(5)));
    CHECK_FALSE(is_chordal(cycle_graph(6)));
    CHECK(is_chordal(cycle_graph(3)));
    CHECK_FALSE(is_chordal(complete_bipartite_graph(2, 2)));
}

TEST_CASE("chordality matches induced-cycle enumeration on random graphs") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 40; ++round) {
        const Graph g = random_graph(3 + static_cast<int>(rng() % 7), 0.45, rng);
        CHECK(is_chordal(g) == naive_is_chordal(g));
    }
}

TEST_CASE("perfect-elimination construction always yields chordal graphs") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 25; ++round) {
        const Graph g = random_chordal_graph(4 + static_cast<int>(rng() % 9), rng);
        CHECK(is_chordal(g));
        CHECK(naive_is_chordal(g));
    }
}

TEST_CASE("connected components") {
    const Graph h = disjoint_union({complete_graph(4), null_graph(3)});
    CHECK(connected_components(h).size() == 4);
    CHECK(connected_components(cycle_graph(5)).size() == 1);
    CHECK(connected_components(null_graph(3)).size() == 3);
    CHECK(connected_components(Graph(0)).empty());
}
