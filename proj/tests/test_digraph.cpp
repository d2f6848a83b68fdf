#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "snp/digraph.hpp"
#include "snp/generators.hpp"
#include "snp/reference.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"

using namespace snp;

TEST_CASE("vertex-set helpers", "[vertexset]") {
    const VertexSet s = vs_bit(0) | vs_bit(3) | vs_bit(5);
    CHECK(vs_size(s) == 3);
    CHECK(vs_contains(s, 3));
    CHECK_FALSE(vs_contains(s, 1));
    CHECK(vs_lowest(s) == 0);
    CHECK(vs_full(3) == (vs_bit(0) | vs_bit(1) | vs_bit(2)));
    CHECK(vs_to_vector(s) == std::vector<Vertex>{0, 3, 5});
    CHECK(vs_empty(0));
}

TEST_CASE("arc insertion guards loops, digons and range", "[digraph]") {
    Digraph d(3);
    d.add_arc(0, 1);
    CHECK(d.has_arc(0, 1));
    CHECK_FALSE(d.has_arc(1, 0));
    CHECK_THROWS_AS(d.add_arc(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(d.add_arc(1, 0), std::invalid_argument);  // digon in oriented mode
    CHECK_THROWS_AS(d.add_arc(0, 3), std::out_of_range);
    CHECK_THROWS_AS(Digraph(-1), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(65), std::invalid_argument);

    Digraph loose(2, false);
    loose.add_arc(0, 1);
    loose.add_arc(1, 0);  // digons allowed when not oriented
    CHECK(loose.arc_count() == 2);
}

TEST_CASE("second out-neighborhood is distance exactly two", "[digraph]") {
    const Digraph g4 = fixture_g4();  // 0->2->1->3->0
    CHECK(g4.out_mask(3) == vs_bit(0));
    CHECK(g4.second_out_mask(3) == vs_bit(2));
    CHECK(g4.second_out_degree(3) == 1);
    // A first neighbor reachable in two steps is still a first neighbor.
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(0, 2);
    CHECK(d.second_out_mask(0) == 0);
    CHECK(d.second_in_mask(2) == 0);

    // Cross-check against the naive reference on random instances.
    for (std::uint64_t s = 0; s < 25; ++s) {
        const Digraph r = random_oriented(7, 900 + s);
        for (Vertex v = 0; v < 7; ++v)
            CHECK(r.second_out_mask(v) == reference::second_out(r, v));
    }
}

TEST_CASE("missing edges and matchings", "[digraph]") {
    const MissingGraph mg = missing_graph(fixture_g4());
    REQUIRE(mg.edges.size() == 2);
    CHECK(mg.edges[0] == MissingEdge(0, 1));
    CHECK(mg.edges[1] == MissingEdge(2, 3));
    CHECK(mg.is_matching);
    CHECK(missing_graph(fixture_c3()).edges.empty());

    Digraph star(4);  // vertex 0 misses everyone: not a matching
    star.add_arc(1, 2);
    star.add_arc(2, 3);
    star.add_arc(3, 1);
    CHECK_FALSE(missing_graph(star).is_matching);

    CHECK_THROWS_AS(MissingEdge(2, 2), std::invalid_argument);
    CHECK(MissingEdge(3, 1).u == 1);  // endpoints stored sorted
    CHECK(MissingEdge(1, 3).other(1) == 3);
}

TEST_CASE("whole vertices see every other vertex", "[digraph]") {
    const Digraph g4 = fixture_g4();
    CHECK(g4.whole_vertices() == 0);  // every vertex misses an edge
    const Digraph tt3 = fixture_tt3();
    CHECK(tt3.whole_vertices() == vs_full(3));
    const Digraph p5 = fixture_p5();
    CHECK(p5.whole_vertices() == vs_bit(4));
}

TEST_CASE("induced subgraphs renumber in increasing id order", "[digraph]") {
    const Digraph p5 = fixture_p5();
    const InducedSubgraph sub = induced_subgraph(p5, vs_bit(1) | vs_bit(3) | vs_bit(4));
    REQUIRE(sub.d.vertex_count() == 3);
    CHECK(sub.old_of_new == std::vector<Vertex>{1, 3, 4});
    CHECK(sub.new_of_old[1] == 0);
    CHECK(sub.new_of_old[0] == -1);
    // p5 has 1->3, 3->4, 4->1 among {1,3,4}
    CHECK(sub.d.has_arc(0, 1));
    CHECK(sub.d.has_arc(1, 2));
    CHECK(sub.d.has_arc(2, 0));
    CHECK(sub.d.arc_count() == 3);
}

TEST_CASE("reversal helpers", "[digraph]") {
    const Digraph tt3 = fixture_tt3();
    const Digraph rev = tt3.reversed();
    CHECK(rev.has_arc(1, 0));
    CHECK(rev.has_arc(2, 0));
    CHECK(rev.has_arc(2, 1));
    CHECK(rev.arc_count() == 3);

    const Digraph flipped = tt3.with_arc_reversed(0, 1);
    CHECK(flipped.has_arc(1, 0));
    CHECK_FALSE(flipped.has_arc(0, 1));
    CHECK_THROWS_AS(tt3.with_arc_reversed(1, 0), std::invalid_argument);
}

TEST_CASE("second-neighborhood bound oracle agrees with the reference", "[digraph]") {
    const WeightAssignment u3 = WeightAssignment::unit(3);
    CHECK(snp_oracle(fixture_c3(), u3) == vs_full(3));
    CHECK(has_snp(fixture_tt3(), u3, 2));
    CHECK_FALSE(has_snp(fixture_tt3(), u3, 0));  // d+ = 2, d++ = 0
    for (std::uint64_t s = 0; s < 40; ++s) {
        const Digraph d = random_oriented(6, 7100 + s);
        const WeightAssignment w = random_weights(6, 7200 + s);
        CHECK(snp_oracle(d, w) == reference::snp_set(d, w));
    }
    CHECK_THROWS_AS(has_snp(fixture_c3(), WeightAssignment::unit(4), 0),
                    std::invalid_argument);
}

TEST_CASE("weight assignments are positive and reindex with subgraphs", "[weights]") {
    CHECK_THROWS_AS(WeightAssignment({Rational(1), Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(WeightAssignment({Rational(-1, 2)}), std::invalid_argument);
    const WeightAssignment w({Rational(1), Rational(1, 2), Rational(3)});
    CHECK(w.of(2) == Rational(3));
    CHECK_THROWS_AS(w.of(3), std::out_of_range);
    CHECK(w.of_set(vs_bit(0) | vs_bit(2)) == Rational(4));
    CHECK(w.arc_weight(1, 2) == Rational(3, 2));
    CHECK_FALSE(w.all_unit());
    CHECK(WeightAssignment::unit(5).all_unit());

    const WeightAssignment r = w.restricted(vs_bit(1) | vs_bit(2));
    REQUIRE(r.size() == 2);
    CHECK(r.of(0) == Rational(1, 2));
    CHECK(r.of(1) == Rational(3));

    const WeightAssignment s = w.scaled(Rational(2));
    CHECK(s.of(1) == Rational(1));
}
