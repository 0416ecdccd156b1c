#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corona/base_invariants.hpp"
#include "corona/betti.hpp"
#include "corona/errors.hpp"
#include "corona/families.hpp"
#include "corona/formulas.hpp"
#include "corona/oracle.hpp"
#include "test_util.hpp"

using namespace corona;

namespace {

Graph tree7() {
    return Graph::from_edges(7, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {4, 5}, {4, 6}});
}

SpineFamily path_family(int n) { return {SpineFamily::Kind::Path, n, 0}; }
SpineFamily cycle_family(int n) { return {SpineFamily::Kind::Cycle, n, 0}; }
SpineFamily complete_family(int n) { return {SpineFamily::Kind::Complete, n, 0}; }
SpineFamily star_family(int n) { return {SpineFamily::Kind::Star, n, 0}; }
SpineFamily kbip_family(int u, int v) { return {SpineFamily::Kind::CompleteBipartite, u, v}; }

}  // namespace

TEST_CASE("structural family detection") {
    CHECK(detect_family(null_graph(1)) == path_family(1));
    CHECK(detect_family(path_graph(2)) == complete_family(2));
    CHECK(detect_family(path_graph(3)) == path_family(3));
    CHECK(detect_family(cycle_graph(3)) == complete_family(3));
    CHECK(detect_family(cycle_graph(4)) == cycle_family(4));
    CHECK(detect_family(cycle_graph(5)) == cycle_family(5));
    CHECK(detect_family(star_graph(3)) == star_family(3));
    CHECK(detect_family(complete_graph(4)) == complete_family(4));
    CHECK(detect_family(complete_bipartite_graph(2, 3)) == kbip_family(2, 3));
    CHECK_FALSE(detect_family(tree7()).has_value());

    CHECK(is_star_shaped(path_graph(2)));
    CHECK(is_star_shaped(path_graph(3)));
    CHECK(is_star_shaped(star_graph(6)));
    CHECK_FALSE(is_star_shaped(path_graph(4)));
    CHECK_FALSE(is_star_shaped(complete_graph(3)));
}

TEST_CASE("spine recognition handles unions and rejects strangers") {
    const auto spine = recognize_spine(disjoint_union({complete_graph(4), null_graph(3)}));
    REQUIRE(spine.has_value());
    CHECK(spine->size() == 4);
    CHECK((*spine)[0] == complete_family(4));
    CHECK((*spine)[1] == path_family(1));

    CHECK(recognize_spine(disjoint_union({path_graph(4), cycle_graph(4)})).has_value());
    CHECK_FALSE(recognize_spine(tree7()).has_value());
    CHECK_FALSE(recognize_spine(Graph(0)).has_value());
}

TEST_CASE("base invariants of the named families") {
    const auto p4 = base_invariants(path_graph(4));
    CHECK(p4.depth_h == 2);
    CHECK(p4.reg_h == 1);
    CHECK(p4.dim_h == 2);
    CHECK(p4.iso_count == 0);
    CHECK(p4.sdepth_h_lower == 2);  // search result on 4 vertices
    CHECK(p4.sdepth_exact);
    CHECK_FALSE(p4.is_null);

    const auto n3 = base_invariants(null_graph(3));
    CHECK(n3.depth_h == 0);
    CHECK(n3.sdepth_h_lower == 0);
    CHECK(n3.reg_h == 0);
    CHECK(n3.dim_h == 0);
    CHECK(n3.iso_count == 3);
    CHECK(n3.vertex_count == 3);
    CHECK(n3.is_null);
    CHECK(n3.sdepth_exact);

    const auto c5 = base_invariants(cycle_graph(5));
    CHECK(c5.depth_h == 2);
    CHECK(c5.reg_h == 2);
    CHECK(c5.dim_h == 2);

    // Isolated vertices split off; the rest is recognized componentwise.
    const auto mix = base_invariants(disjoint_union({complete_graph(4), null_graph(3)}));
    CHECK(mix.depth_h == 1);
    CHECK(mix.reg_h == 1);
    CHECK(mix.dim_h == 1);
    CHECK(mix.iso_count == 3);
    CHECK(mix.vertex_count == 7);
    CHECK_FALSE(mix.is_null);
    CHECK(mix.sdepth_h_lower == 1);

    const auto k1 = base_invariants(complete_graph(1));
    CHECK(k1.is_null);
    CHECK(k1.is_complete);
    CHECK(k1.iso_count == 1);
}

TEST_CASE("base invariants fall back to the oracle off-family") {
    const auto t7 = base_invariants(tree7());
    CHECK(t7.sources == std::vector<std::string>{"oracle"});
    const auto table = betti_table(tree7());
    CHECK(t7.depth_h == table.depth());
    CHECK(t7.reg_h == table.reg());
    CHECK(t7.dim_h == dim_oracle(tree7()));
    CHECK(t7.reg_h == induced_matching_number(tree7()).size);  // chordal bridge

    CHECK_THROWS_AS(base_invariants(tree7(), /*oracle_allowed=*/false), NeedsOracleError);
    CHECK_THROWS_AS(base_invariants(Graph(0)), std::invalid_argument);
}

TEST_CASE("depth formula per spine family") {
    CHECK(depth_formula(path_family(3), base_invariants(null_graph(2))) == 4);
    CHECK(depth_formula(cycle_family(3), base_invariants(cycle_graph(3))) == 3);
    for (const Graph& h : {null_graph(5), path_graph(3),
                           disjoint_union({complete_graph(4), null_graph(3)})})
        CHECK(depth_formula(path_family(1), base_invariants(h)) == 1);

    // union spines add
    const Spine two_parts{path_family(2), cycle_family(3)};
    const auto b = base_invariants(complete_graph(2));
    CHECK(depth_formula(two_parts, b) ==
          depth_formula(path_family(2), b) + depth_formula(cycle_family(3), b));

    CHECK_THROWS_AS(depth_formula(path_family(0), b), std::invalid_argument);
    CHECK_THROWS_AS(depth_formula(cycle_family(2), b), std::invalid_argument);

    BaseInvariants empty_inner;  // vertex_count 0: outside every closed form
    CHECK_THROWS_AS(depth_formula(path_family(2), empty_inner), std::invalid_argument);
}

TEST_CASE("sdepth formula: exact on bristled graphs, bound otherwise") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) {
            const auto bound = sdepth_formula(complete_family(n), base_invariants(null_graph(m)));
            CHECK(bound.value == 1 + (n - 1) * m);
            CHECK(bound.exact);
        }

    const auto star_p3 = sdepth_formula(star_family(4), base_invariants(path_graph(3)));
    CHECK(star_p3.value == 5);  // n + sdepth(P_3) + 0, star quotient gives 1
    CHECK_FALSE(star_p3.exact);

    const auto p2_null = sdepth_formula(path_family(2), base_invariants(null_graph(1)));
    CHECK(p2_null.value == 2);
    CHECK(p2_null.exact);

    // unions never claim exactness
    const Spine pair{path_family(1), path_family(1)};
    CHECK_FALSE(sdepth_formula(pair, base_invariants(null_graph(1))).exact);
}

TEST_CASE("regularity formula") {
    CHECK(reg_formula(star_family(4), base_invariants(null_graph(2))) == 4);
    CHECK(reg_formula(path_family(5), base_invariants(cycle_graph(4))) == 5);
    CHECK(reg_formula(kbip_family(2, 3), base_invariants(null_graph(1))) == 3);
    CHECK(reg_formula(path_family(0), base_invariants(path_graph(3))) == 0);
    CHECK(reg_formula(path_family(0), base_invariants(null_graph(1))) == 0);
    CHECK(reg_formula(complete_family(3), base_invariants(null_graph(2))) == 1);
    CHECK(reg_formula(cycle_family(4), base_invariants(null_graph(1))) == 2);
}

TEST_CASE("projective dimension formula") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            CHECK(pdim_formula(path_family(n), base_invariants(path_graph(m))) ==
                  n * (m + 1) - (n + 1) / 2 - (n / 2) * ((m + 2) / 3));
            CHECK(pdim_formula(complete_family(n), base_invariants(complete_graph(m))) == n * m);
            CHECK(pdim_formula(star_family(n), base_invariants(star_graph(m))) ==
                  (n + 1) * (m + 1));
        }
}

TEST_CASE("Krull dimension formula for arbitrary spines") {
    for (int n = 1; n <= 4; ++n)
        CHECK(krull_dim_formula(complete_graph(n), base_invariants(complete_graph(3))) == n);

    std::mt19937_64 rng(55);
    const Graph x = corona::testing::random_graph(5, 0.4, rng);
    CHECK(krull_dim_formula(x, base_invariants(null_graph(3))) == 15);

    const Graph h = disjoint_union({cycle_graph(5), null_graph(2)});
    CHECK(krull_dim_formula(path_graph(4), base_invariants(h)) == 4 * (2 + 2));

    CHECK_THROWS_AS(krull_dim_formula(Graph(0), base_invariants(path_graph(2))),
                    std::invalid_argument);
}

TEST_CASE("Cohen-Macaulay characterization at the formula level") {
    CHECK(is_cm_formula(path_graph(4), complete_graph(3)) == CmStatus::Yes);
    CHECK(is_cm_formula(cycle_graph(5), path_graph(3)) == CmStatus::No);
    CHECK(is_cm_formula(disjoint_union({path_graph(2), cycle_graph(3)}), complete_graph(2)) ==
          CmStatus::Yes);
    CHECK(is_cm_formula(tree7(), complete_graph(2)) == CmStatus::NotCovered);
    CHECK(is_cm_formula(path_graph(3), complete_graph(1)) == CmStatus::Yes);  // whisker graph
    CHECK(is_cm_formula(path_graph(3), null_graph(2)) == CmStatus::No);
    CHECK(is_cm_formula(path_graph(3), disjoint_union({complete_graph(2), null_graph(1)})) ==
          CmStatus::No);
}

TEST_CASE("property: pdim + depth equals the vertex count of the product") {
    const std::vector<SpineFamily> spines = {path_family(1), path_family(4), cycle_family(5),
                                             complete_family(3), star_family(2),
                                             kbip_family(2, 2)};
    const std::vector<Graph> inners = {null_graph(1), null_graph(3), path_graph(3),
                                       complete_graph(2), cycle_graph(4),
                                       disjoint_union({complete_graph(4), null_graph(3)})};
    for (const auto& spine : spines)
        for (const auto& h : inners) {
            const auto b = base_invariants(h);
            CHECK(pdim_formula(spine, b) + depth_formula(spine, b) ==
                  static_cast<long long>(spine.vertex_count()) * (h.vertex_count() + 1));
        }
}

TEST_CASE("property: formula depth stays below formula dimension, equal exactly when CM") {
    const std::vector<Graph> spines = {path_graph(1), path_graph(4),  cycle_graph(5),
                                       complete_graph(3), star_graph(2),
                                       complete_bipartite_graph(2, 2),
                                       disjoint_union({path_graph(2), cycle_graph(3)})};
    const std::vector<Graph> inners = {null_graph(1), null_graph(3), path_graph(3),
                                       complete_graph(1), complete_graph(3), cycle_graph(4),
                                       disjoint_union({complete_graph(4), null_graph(3)}),
                                       disjoint_union({complete_graph(2), null_graph(1)})};
    for (const auto& x : spines)
        for (const auto& h : inners) {
            const auto spine = *recognize_spine(x);
            const auto b = base_invariants(h);
            const long long depth = depth_formula(spine, b);
            const long long dim = krull_dim_formula(x, b);
            CHECK(depth <= dim);
            CHECK((depth == dim) == (is_cm_formula(x, h) == CmStatus::Yes));
        }
}

TEST_CASE("property: path-spine depth is monotone in the path length") {
    for (const Graph& h : {null_graph(2), path_graph(3), complete_graph(3)}) {
        const auto b = base_invariants(h);
        long long previous = 0;
        for (int n = 1; n <= 8; ++n) {
            const long long current = depth_formula(path_family(n), b);
            CHECK(current >= previous);
            previous = current;
        }
    }
}
