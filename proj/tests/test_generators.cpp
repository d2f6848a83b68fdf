#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <stdexcept>

#include "snp/generators.hpp"

using namespace snp;

TEST_CASE("tournament enumeration is complete and duplicate-free", "[generators]") {
    int count3 = 0;
    std::set<std::vector<std::pair<Vertex, Vertex>>> seen;
    enumerate_tournaments(3, [&](const Digraph& d) {
        ++count3;
        CHECK(d.vertex_count() == 3);
        CHECK(d.arc_count() == 3);
        CHECK(missing_graph(d).edges.empty());
        seen.insert(d.arcs());
    });
    CHECK(count3 == 8);
    CHECK(seen.size() == 8);

    int count5 = 0;
    enumerate_tournaments(5, [&](const Digraph&) { ++count5; });
    CHECK(count5 == 1024);
    CHECK_THROWS_AS(enumerate_tournaments(7, [](const Digraph&) {}), std::invalid_argument);
}

TEST_CASE("missing-matching enumeration fixes the canonical matching", "[generators]") {
    int count = 0;
    enumerate_missing_matchings(4, 2, [&](const Digraph& d) {
        ++count;
        const MissingGraph mg = missing_graph(d);
        REQUIRE(mg.edges.size() == 2);
        CHECK(mg.edges[0] == MissingEdge(0, 1));
        CHECK(mg.edges[1] == MissingEdge(2, 3));
    });
    CHECK(count == 16);

    int plain = 0;
    enumerate_missing_matchings(4, 0, [&](const Digraph&) { ++plain; });
    CHECK(plain == 64);  // degenerates to the tournament enumeration
    CHECK_THROWS_AS(enumerate_missing_matchings(5, 3, [](const Digraph&) {}),
                    std::invalid_argument);
}

TEST_CASE("random generators are seed-deterministic", "[generators]") {
    const Digraph a = random_tournament(9, 42);
    const Digraph b = random_tournament(9, 42);
    CHECK(a == b);
    CHECK(a.arc_count() == 36);
    CHECK(missing_graph(a).edges.empty());
    CHECK_FALSE(a == random_tournament(9, 43));

    const Digraph mm = random_missing_matching(10, 4, 7);
    const MissingGraph mg = missing_graph(mm);
    CHECK(mg.is_matching);
    CHECK(mg.edges.size() == 4);
    CHECK(mm == random_missing_matching(10, 4, 7));
    CHECK_THROWS_AS(random_missing_matching(5, 3, 1), std::invalid_argument);

    const Digraph o = random_oriented(8, 5);
    CHECK(o.oriented());
    CHECK(o == random_oriented(8, 5));

    const WeightAssignment w = random_weights(6, 11);
    CHECK(w == random_weights(6, 11));
    for (int v = 0; v < 6; ++v) {
        CHECK(w.of(v).is_positive());
        CHECK(w.of(v).numerator() <= 10);
        CHECK(w.of(v).denominator() <= 10);
    }
    CHECK_THROWS_AS(random_weights(3, 1, 0), std::invalid_argument);

    SplitMix64 r1(99), r2(99);
    for (int i = 0; i < 100; ++i) CHECK(r1.next() == r2.next());
    CHECK(seeded_stream(5, 0).next() != seeded_stream(5, 1).next());
}

TEST_CASE("canonical keys identify digraphs up to relabeling", "[generators]") {
    Digraph relabeled(3);  // the triangle traversed the other way round
    relabeled.add_arc(0, 2);
    relabeled.add_arc(2, 1);
    relabeled.add_arc(1, 0);
    CHECK(canonical_key(fixture_c3()) == canonical_key(relabeled));
    CHECK(canonical_key(fixture_c3()) != canonical_key(fixture_tt3()));
    CHECK_THROWS_AS(canonical_key(Digraph(9)), std::invalid_argument);
}

TEST_CASE("fixture table exposes the pinned instances", "[generators]") {
    const auto& table = fixtures();
    REQUIRE(table.size() == 5);
    CHECK(table.count("c3") == 1);
    CHECK(table.count("tt3") == 1);
    CHECK(table.count("g4") == 1);
    CHECK(table.count("d1") == 1);
    CHECK(table.count("p5") == 1);
    CHECK(table.at("g4")().vertex_count() == 4);
}
