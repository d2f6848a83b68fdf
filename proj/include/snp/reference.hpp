#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "snp/digraph.hpp"
#include "snp/median_order.hpp"
#include "snp/rational.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"

// Straight-from-the-definition reference implementations. They share nothing
// with the optimized code paths beyond the digraph and rational types, and
// exist so the fast implementations can be checked against an independent
// derivation. Keep them naive; speed is not their job.
namespace snp::reference {

// Forward-arc weight of one ordering, by scanning every position pair.
inline Rational naive_order_weight(const Digraph& d, const WeightAssignment& w,
                                   const Ordering& order) {
    Rational total;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = i + 1; j < order.size(); ++j)
            if (d.has_arc(order[i], order[j])) total += w.of(order[i]) * w.of(order[j]);
    return total;
}

// Maximum forward-arc weight over all n! orderings.
inline Rational max_order_weight(const Digraph& d, const WeightAssignment& w) {
    const int n = d.vertex_count();
    if (n > 8)
        throw std::invalid_argument("reference::max_order_weight: enumeration beyond 8 vertices");
    Ordering perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Rational best;
    bool have = false;
    do {
        const Rational cand = naive_order_weight(d, w, perm);
        if (!have || cand > best) {
            best = cand;
            have = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Every maximum-weight ordering, in lexicographic order.
inline std::vector<Ordering> all_median_orders(const Digraph& d, const WeightAssignment& w) {
    const int n = d.vertex_count();
    if (n > 8)
        throw std::invalid_argument("reference::all_median_orders: enumeration beyond 8 vertices");
    Ordering perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Ordering> best_orders;
    Rational best;
    bool have = false;
    do {
        const Rational cand = naive_order_weight(d, w, perm);
        if (!have || cand > best) {
            best = cand;
            have = true;
            best_orders.clear();
        }
        if (cand == best) best_orders.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best_orders;
}

// Vertices at directed distance exactly two, by checking every vertex pair.
inline VertexSet second_out(const Digraph& d, Vertex v) {
    VertexSet result = 0;
    for (Vertex target = 0; target < d.vertex_count(); ++target) {
        if (target == v || d.has_arc(v, target)) continue;
        for (Vertex mid = 0; mid < d.vertex_count(); ++mid)
            if (d.has_arc(v, mid) && d.has_arc(mid, target)) {
                result |= vs_bit(target);
                break;
            }
    }
    return result;
}

// The losing relation evaluated clause by clause with the naive
// second-neighborhood scan above.
inline bool loses_to(const Digraph& d, Vertex x1, Vertex y1, Vertex x2, Vertex y2) {
    if (!d.has_arc(x1, x2)) return false;
    if (!d.has_arc(y1, y2)) return false;
    if (d.has_arc(x1, y2) || vs_contains(second_out(d, x1), y2)) return false;
    if (d.has_arc(y1, x2) || vs_contains(second_out(d, y1), x2)) return false;
    return true;
}

// Vertices meeting the weighted second-neighborhood bound, via the naive
// distance-two scan.
inline VertexSet snp_set(const Digraph& d, const WeightAssignment& w) {
    VertexSet result = 0;
    for (Vertex v = 0; v < d.vertex_count(); ++v) {
        Rational first, second;
        for (Vertex u = 0; u < d.vertex_count(); ++u)
            if (d.has_arc(v, u)) first += w.of(u);
        vs_for_each(second_out(d, v), [&](Vertex u) { second += w.of(u); });
        if (first <= second) result |= vs_bit(v);
    }
    return result;
}

}  // namespace snp::reference
