#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "snp/dependency.hpp"
#include "snp/generators.hpp"

using namespace snp;

TEST_CASE("losing relation on the five-vertex path fixture", "[dependency]") {
    const Digraph p5 = fixture_p5();
    CHECK(loses_to(p5, 0, 1, 2, 3));        // straight pairing
    CHECK_FALSE(loses_to(p5, 0, 1, 3, 2));  // crossed pairing fails
    CHECK_FALSE(loses_to(p5, 2, 3, 0, 1));
    CHECK_FALSE(loses_to(p5, 2, 3, 1, 0));
    // Both vertex pairs must be missing edges.
    CHECK_THROWS_AS(loses_to(p5, 0, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("dependency digraph of the four-cycle is a two-cycle", "[dependency]") {
    const Digraph g4 = fixture_g4();
    const DependencyDigraph delta = dependency_digraph(g4);
    REQUIRE(delta.node_count() == 2);
    REQUIRE(delta.arc_count() == 2);
    CHECK(delta.nodes[0] == MissingEdge(0, 1));
    CHECK(delta.nodes[1] == MissingEdge(2, 3));
    CHECK(delta.out_degree(0) == 1);
    CHECK(delta.in_degree(0) == 1);
    CHECK(delta.max_degree_at_most_one());

    // Forward arc pairs straight, the closing arc pairs crossed.
    const DeltaArc& fwd = delta.arcs[static_cast<std::size_t>(delta.out_arcs[0].front())];
    CHECK(fwd.to == 1);
    CHECK(delta.image_of(fwd, 0) == 2);
    CHECK(delta.image_of(fwd, 1) == 3);
    const DeltaArc& back = delta.arcs[static_cast<std::size_t>(delta.out_arcs[1].front())];
    CHECK(back.to == 0);
    CHECK(delta.image_of(back, 2) == 1);
    CHECK(delta.image_of(back, 3) == 0);
    CHECK_THROWS_AS(delta.image_of(fwd, 2), std::invalid_argument);

    const auto comps = delta_components(delta);
    REQUIRE(comps.size() == 1);
    CHECK(comps.front().kind == ComponentKind::cycle);
    CHECK(comps.front().walk.size() == 2);
    CHECK(comps.front().endpoint_set == vs_full(4));
}

TEST_CASE("dependency digraph of the path fixture is a single path", "[dependency]") {
    const DependencyDigraph delta = dependency_digraph(fixture_p5());
    REQUIRE(delta.node_count() == 2);
    REQUIRE(delta.arc_count() == 1);
    const auto comps = delta_components(delta);
    REQUIRE(comps.size() == 1);
    CHECK(comps.front().kind == ComponentKind::path);
    CHECK(comps.front().walk == std::vector<int>{0, 1});  // head first
}

TEST_CASE("independent missing edges give isolated dependency nodes", "[dependency]") {
    const DependencyDigraph delta = dependency_digraph(fixture_d1());
    CHECK(delta.node_count() == 2);
    CHECK(delta.arc_count() == 0);
    const auto comps = delta_components(delta);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].kind == ComponentKind::path);
    CHECK(comps[0].walk.size() == 1);

    CHECK(dependency_digraph(fixture_c3()).node_count() == 0);
}

TEST_CASE("convenient orientations match in-degree zero", "[dependency]") {
    const Digraph g4 = fixture_g4();
    const ConvenientOrientations none = convenient_orientations(g4, MissingEdge(0, 1));
    CHECK_FALSE(none.any());

    const Digraph p5 = fixture_p5();
    const ConvenientOrientations head = convenient_orientations(p5, MissingEdge(0, 1));
    CHECK(head.u_to_v);
    CHECK(head.v_to_u);
    const ConvenientOrientations tail = convenient_orientations(p5, MissingEdge(2, 3));
    CHECK_FALSE(tail.any());

    const Digraph d1 = fixture_d1();
    CHECK(convenient_orientations(d1, MissingEdge(0, 1)).any());
    CHECK(convenient_orientations(d1, MissingEdge(2, 3)).u_to_v);
    CHECK(convenient_orientations(d1, MissingEdge(2, 3)).v_to_u);

    CHECK_THROWS_AS(convenient_orientations(fixture_c3(), MissingEdge(0, 1)),
                    std::invalid_argument);

    CHECK(good_edge_lemma_check(g4));
    CHECK(good_edge_lemma_check(p5));
    CHECK(good_edge_lemma_check(d1));
    for (std::uint64_t s = 0; s < 60; ++s) {
        const int n = 4 + static_cast<int>(s % 9);
        CHECK(good_edge_lemma_check(random_missing_matching(n, 1 + static_cast<int>(s % 2),
                                                            2000 + s)));
    }
}

TEST_CASE("interval test compares outside neighborhoods", "[dependency]") {
    const Digraph d1 = fixture_d1();
    CHECK(is_interval(d1, vs_bit(0) | vs_bit(1)));
    CHECK(is_interval(d1, vs_bit(2) | vs_bit(3)));
    CHECK_FALSE(is_interval(d1, vs_bit(0) | vs_bit(2)));
    CHECK(is_interval(d1, vs_bit(1)));  // singletons are intervals
    CHECK(is_interval(fixture_g4(), vs_full(4)));
    CHECK_FALSE(is_interval(fixture_p5(), vs_full(4) /* vertex 4 splits it */));
    CHECK_THROWS_AS(is_interval(d1, vs_bit(5)), std::invalid_argument);
}

TEST_CASE("interval structure groups components into blocks", "[dependency]") {
    const IntervalStructure g4 = interval_structure(fixture_g4());
    REQUIRE(g4.groups.size() == 1);
    CHECK(g4.groups.front().K == vs_full(4));
    CHECK(g4.j_of_vertex[3] == vs_full(4));
    CHECK(g4.group_of_vertex[0] == 0);

    const IntervalStructure tt3 = interval_structure(fixture_tt3());
    CHECK(tt3.groups.empty());
    CHECK(tt3.j_of_vertex[1] == vs_bit(1));
    CHECK(tt3.group_of_vertex[1] == -1);

    const IntervalStructure d1 = interval_structure(fixture_d1());
    REQUIRE(d1.groups.size() == 2);
    CHECK((d1.groups[0].K | d1.groups[1].K) == vs_full(4));
    CHECK(d1.j_of_vertex[0] != d1.j_of_vertex[2]);
}

TEST_CASE("good digraphs are the ones whose blocks are intervals", "[dependency]") {
    CHECK(is_good_digraph(fixture_g4()));
    CHECK(is_good_digraph(fixture_d1()));
    CHECK(is_good_digraph(fixture_c3()));
    CHECK(is_good_digraph(fixture_tt3()));
    CHECK_FALSE(is_good_digraph(fixture_p5()));
}
