// A guided tour of the library on the four-cycle: maximum-weight orderings,
// vertex classification, the dependency digraph of the missing edges, and
// the two-vertex search on the directed triangle.

#include <iostream>

#include "snp/snp.hpp"

int main() {
    using namespace snp;

    // The four-cycle 0 -> 2 -> 1 -> 3 -> 0 misses the matching {0,1}, {2,3}.
    const Digraph g4 = fixture_g4();
    const WeightAssignment w = WeightAssignment::unit(4);

    const Ordering order = good_median_order(g4, w);
    std::cout << "ordering:";
    for (Vertex v : order) std::cout << " " << v;
    std::cout << "  (weight " << order_weight(g4, w, order).to_string() << ")\n";

    const OrderClassification cls = classify_order(g4, order);
    std::cout << "feed " << cls.feed << ", good vertices";
    vs_for_each(cls.good, [](Vertex v) { std::cout << " " << v; });
    std::cout << "\n";

    const DependencyDigraph delta = dependency_digraph(g4);
    std::cout << "missing edges depend on each other in a cycle of length "
              << delta_components(delta).front().walk.size() << "\n";

    const MainInequalityReport rep = check_main_inequality(g4, w, order);
    std::cout << "main inequality " << (rep.pass ? "holds" : "fails")
              << " on the feed's block of " << vs_size(rep.j_of_feed) << " vertices\n";

    // Sink-free and no dependency paths: two vertices meet the bound.
    const TwoSnpReport two = two_snp_check(fixture_c3());
    std::cout << "triangle: vertices " << two.first << " and " << two.second
              << " both meet the second-neighborhood bound\n";

    // Render the picture.
    std::cout << "\n" << export_dot(g4, &delta, &order);
    return 0;
}
