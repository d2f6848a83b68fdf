#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <stdexcept>

#include "snp/generators.hpp"
#include "snp/good_order.hpp"
#include "snp/reference.hpp"

using namespace snp;

TEST_CASE("interval contraction keeps weight and ends in the feed", "[good-order]") {
    // Exhaustive sweep: the advertised postconditions hold on every good
    // instance.
    for (int m = 1; m <= 3; ++m)
        enumerate_missing_matchings(6, m, [&](const Digraph& d) {
            if (!is_good_digraph(d)) return;
            const WeightAssignment w = WeightAssignment::unit(6);
            const Ordering plain = exact_median_order(d, w);
            const Ordering good = good_median_order(d, w);
            CHECK(order_weight(d, w, good) == order_weight(d, w, plain));
            CHECK(feedback_property_holds(d, w, good).holds);
            const IntervalStructure is = interval_structure(d);
            for (const ComponentGroup& g : is.groups) {
                // Block members occupy consecutive positions afterwards.
                int first = -1, last = -1;
                for (int p = 0; p < 6; ++p)
                    if (vs_contains(g.K, good[static_cast<std::size_t>(p)])) {
                        if (first < 0) first = p;
                        last = p;
                    }
                CHECK(last - first + 1 == vs_size(g.K));
            }
        });
}

TEST_CASE("interval contraction really moves interleaved vertices", "[good-order]") {
    // Vertices 0 and 1 miss each other and form a one-node dependency
    // component whose block is an interval: both see 2 as in-neighbor and 3
    // as out-neighbor. With heavy weights on 2 and 3, the maximum-weight
    // ordering ending at vertex 1 interleaves the block.
    Digraph d(4);
    d.add_arc(2, 0);
    d.add_arc(2, 1);
    d.add_arc(0, 3);
    d.add_arc(1, 3);
    d.add_arc(3, 2);
    REQUIRE(is_good_digraph(d));
    const WeightAssignment w({Rational(1), Rational(1), Rational(3), Rational(3)});
    const MedianDp dp(d, w);
    const Ordering split = dp.order_ending_at(1);
    REQUIRE(split == Ordering{0, 3, 2, 1});  // the block {0,1} is torn apart

    const IntervalStructure is = interval_structure(d);
    REQUIRE(is.groups.size() == 1);
    const Ordering packed = contract_intervals(d, w, split, {is.groups.front().K});
    CHECK(packed == Ordering{3, 2, 0, 1});
    CHECK(order_weight(d, w, packed) == dp.optimum());
    CHECK(feedback_property_holds(d, w, packed).holds);
    CHECK(packed.back() == 1);
}

TEST_CASE("good median order rejects digraphs that are not good", "[good-order]") {
    CHECK_THROWS_AS(good_median_order(fixture_p5(), WeightAssignment::unit(5)),
                    std::invalid_argument);
}

TEST_CASE("main inequality report on the pinned fixtures", "[good-order]") {
    const WeightAssignment u3 = WeightAssignment::unit(3);
    const MainInequalityReport c3 =
        check_main_inequality(fixture_c3(), u3, good_median_order(fixture_c3(), u3));
    CHECK(c3.pass);
    CHECK(c3.feed == 2);
    CHECK(c3.j_of_feed == vs_bit(2));
    REQUIRE(c3.entries.size() == 1);
    CHECK(c3.entries.front().lhs == Rational(1));
    CHECK(c3.entries.front().rhs == Rational(1));

    const MainInequalityReport tt3 =
        check_main_inequality(fixture_tt3(), u3, good_median_order(fixture_tt3(), u3));
    CHECK(tt3.pass);
    CHECK(tt3.entries.front().lhs == Rational(0));

    const WeightAssignment u4 = WeightAssignment::unit(4);
    const MainInequalityReport g4 =
        check_main_inequality(fixture_g4(), u4, good_median_order(fixture_g4(), u4));
    CHECK(g4.pass);
    CHECK(g4.feed == 3);
    CHECK(g4.j_of_feed == vs_full(4));
    CHECK(g4.entries.size() == 4);
    for (const MainInequalityEntry& e : g4.entries) {
        CHECK(e.lhs == Rational(0));  // everything is inside the block
        CHECK(e.holds);
        CHECK(e.lifts);
    }

    CHECK_THROWS_AS(check_main_inequality(fixture_c3(), u3, Ordering{2, 1, 0}),
                    std::invalid_argument);  // not a maximum-weight ordering
}

TEST_CASE("one sedimentation step rearranges exactly as pinned", "[sed]") {
    const WeightAssignment u3 = WeightAssignment::unit(3);
    // Directed triangle: equality case, bad vertices are empty, the feed's
    // singleton block moves to the front.
    CHECK(sed(fixture_c3(), u3, {0, 1, 2}) == Ordering{2, 0, 1});
    CHECK(sed(fixture_c3(), u3, {2, 0, 1}) == Ordering{1, 2, 0});
    // Transitive triangle: both non-feed vertices are bad, so the
    // rearrangement is the identity.
    CHECK(sed(fixture_tt3(), u3, {0, 1, 2}) == Ordering{0, 1, 2});
    // Strict case: the ordering is already stable.
    const WeightAssignment w112({Rational(1), Rational(1), Rational(2)});
    CHECK(sed(fixture_c3(), w112, {1, 2, 0}) == Ordering{1, 2, 0});

    CHECK_THROWS_AS(sed(fixture_c3(), u3, {2, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(sed(fixture_p5(), WeightAssignment::unit(5), {0, 1, 2, 3, 4}),
                    std::invalid_argument);
}

TEST_CASE("sedimentation classification of the pinned fixtures", "[sed]") {
    const WeightAssignment u3 = WeightAssignment::unit(3);
    const SedOutcome c3 = sed_classify(fixture_c3(), u3, {0, 1, 2});
    CHECK(c3.kind == SedKind::periodic);
    CHECK(c3.rank == 0);
    REQUIRE(c3.cycle.size() == 3);
    CHECK(c3.cycle[0] == Ordering{0, 1, 2});
    CHECK(c3.cycle[1] == Ordering{2, 0, 1});
    CHECK(c3.cycle[2] == Ordering{1, 2, 0});

    const SedOutcome tt3 = sed_classify(fixture_tt3(), u3, {0, 1, 2});
    CHECK(tt3.kind == SedKind::periodic);
    CHECK(tt3.cycle.size() == 1);  // a fixed point is a period of one

    const WeightAssignment w112({Rational(1), Rational(1), Rational(2)});
    const SedOutcome weighted = sed_classify(fixture_c3(), w112, {1, 2, 0});
    CHECK(weighted.kind == SedKind::stable);
    CHECK(weighted.rank == 0);
}

TEST_CASE("sedimentation terminates and preserves shape on random tournaments", "[sed]") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        const int n = 3 + static_cast<int>(s % 7);
        const Digraph d = random_tournament(n, 3000 + s);
        const WeightAssignment w =
            s % 2 == 0 ? WeightAssignment::unit(n) : random_weights(n, 3100 + s);
        const Ordering order = good_median_order(d, w);
        const Ordering next = sed(d, w, order);
        CHECK(order_weight(d, w, next) == order_weight(d, w, order));
        CHECK(feedback_property_holds(d, w, next).holds);
        const SedOutcome outcome = sed_classify(d, w, order);
        if (outcome.kind == SedKind::periodic) {
            CHECK_FALSE(outcome.cycle.empty());
            // The period really repeats: stepping through it wraps around.
            const Ordering wrapped = sed(d, w, outcome.cycle.back());
            CHECK(wrapped == outcome.cycle.front());
        } else {
            // Stability means the strict feed inequality was reached.
            CHECK(sed(d, w, outcome.trace.back()) == outcome.trace.back());
        }
    }
}

TEST_CASE("step cap saturates instead of overflowing", "[sed]") {
    CHECK(default_sed_step_cap(3) == 60);
    CHECK(default_sed_step_cap(64) == std::numeric_limits<std::uint64_t>::max());
}
