#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snp/digraph.hpp"
#include "snp/rational.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"

namespace snp {

// A linear order of all vertices, written as the sequence of vertex ids.
using Ordering = std::vector<Vertex>;

inline bool is_permutation_of(const Ordering& order, int n) {
    if (static_cast<int>(order.size()) != n) return false;
    VertexSet seen = 0;
    for (Vertex v : order) {
        if (v < 0 || v >= n || vs_contains(seen, v)) return false;
        seen |= vs_bit(v);
    }
    return true;
}

inline void require_permutation(const Ordering& order, int n, const char* who) {
    if (!is_permutation_of(order, n))
        throw std::invalid_argument(std::string(who) + ": ordering is not a permutation of 0.." +
                                    std::to_string(n - 1));
}

// Total weight of forward arcs: sum of w(x) * w(y) over arcs x -> y with x
// before y in the order.
inline Rational order_weight(const Digraph& d, const WeightAssignment& w, const Ordering& order) {
    require_permutation(order, d.vertex_count(), "order_weight");
    if (w.size() != d.vertex_count())
        throw std::invalid_argument("order_weight: weight count does not match vertex count");
    Rational total;
    VertexSet after = 0;
    for (int i = d.vertex_count() - 1; i >= 0; --i) {
        const Vertex v = order[static_cast<std::size_t>(i)];
        total += w.of(v) * w.of_set(d.out_mask(v) & after);
        after |= vs_bit(v);
    }
    return total;
}

// Result of scanning an ordering for the interval exchange property that
// every maximum-weight ordering satisfies: on each interval [i, j] of
// positions, the first vertex has at least as much out-weight as in-weight
// within the interval, and the last vertex at least as much in-weight as
// out-weight. `violated_end` tells which end failed (1 = first vertex,
// 2 = last vertex); i and j are 0-based positions of the first violating
// interval in lexicographic (i, j) scan order.
struct FeedbackCheck {
    bool holds = true;
    int i = -1;
    int j = -1;
    int violated_end = 0;
};

namespace detail {

// Prefix sums per vertex over order positions: entry [v][p + 1] is the weight
// of out-(resp. in-)neighbors of v among positions 0..p.
struct NeighborPrefix {
    std::vector<std::vector<Rational>> out_cum, in_cum;

    NeighborPrefix(const Digraph& d, const WeightAssignment& w, const Ordering& order) {
        const int n = d.vertex_count();
        out_cum.assign(static_cast<std::size_t>(n),
                       std::vector<Rational>(static_cast<std::size_t>(n) + 1));
        in_cum = out_cum;
        for (Vertex v = 0; v < n; ++v) {
            const VertexSet out = d.out_mask(v);
            const VertexSet in = d.in_mask(v);
            auto& oc = out_cum[static_cast<std::size_t>(v)];
            auto& ic = in_cum[static_cast<std::size_t>(v)];
            for (int p = 0; p < n; ++p) {
                const Vertex u = order[static_cast<std::size_t>(p)];
                oc[static_cast<std::size_t>(p) + 1] =
                    oc[static_cast<std::size_t>(p)] + (vs_contains(out, u) ? w.of(u) : Rational{});
                ic[static_cast<std::size_t>(p) + 1] =
                    ic[static_cast<std::size_t>(p)] + (vs_contains(in, u) ? w.of(u) : Rational{});
            }
        }
    }

    Rational out_within(Vertex v, int i, int j) const {
        const auto& c = out_cum[static_cast<std::size_t>(v)];
        return c[static_cast<std::size_t>(j) + 1] - c[static_cast<std::size_t>(i)];
    }
    Rational in_within(Vertex v, int i, int j) const {
        const auto& c = in_cum[static_cast<std::size_t>(v)];
        return c[static_cast<std::size_t>(j) + 1] - c[static_cast<std::size_t>(i)];
    }
};

}  // namespace detail

inline FeedbackCheck feedback_property_holds(const Digraph& d, const WeightAssignment& w,
                                             const Ordering& order) {
    require_permutation(order, d.vertex_count(), "feedback_property_holds");
    if (w.size() != d.vertex_count())
        throw std::invalid_argument("feedback_property_holds: weight count mismatch");
    const int n = d.vertex_count();
    const detail::NeighborPrefix pre(d, w, order);
    for (int i = 0; i < n; ++i) {
        const Vertex vi = order[static_cast<std::size_t>(i)];
        for (int j = i; j < n; ++j) {
            const Vertex vj = order[static_cast<std::size_t>(j)];
            if (pre.out_within(vi, i, j) < pre.in_within(vi, i, j))
                return {false, i, j, 1};
            if (pre.in_within(vj, i, j) < pre.out_within(vj, i, j))
                return {false, i, j, 2};
        }
    }
    return {};
}

inline constexpr int kDefaultExactLimit = 20;

// Exact maximum-weight ordering solver over vertex subsets: best[S] is the
// optimal forward-arc weight of an ordering of S, via the first-element
// recurrence best[S] = max_{v in S} (w(v -> S \ v) + best[S \ v]).
// Time O(2^n * n^2) additions, memory one Rational per subset.
class MedianDp {
public:
    MedianDp(const Digraph& d, const WeightAssignment& w, int limit = kDefaultExactLimit)
        : n_(d.vertex_count()), d_(d), w_(w), unit_(w.all_unit()) {
        if (limit > 25)
            throw std::invalid_argument("MedianDp: limit beyond supported table size");
        if (n_ > limit)
            throw std::invalid_argument("MedianDp: " + std::to_string(n_) +
                                        " vertices exceeds the exact-solver limit of " +
                                        std::to_string(limit));
        if (w.size() != n_)
            throw std::invalid_argument("MedianDp: weight count does not match vertex count");
        if (!unit_) {
            arcw_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ ? n_ : 1),
                         Rational{});
            for (Vertex u = 0; u < n_; ++u)
                vs_for_each(d.out_mask(u), [&](Vertex v) {
                    arcw_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] =
                        w.arc_weight(u, v);
                });
        }
        best_.assign(std::size_t{1} << n_, Rational{});
        for (VertexSet s = 1; s < (VertexSet{1} << n_); ++s) {
            bool have = false;
            Rational top;
            vs_for_each(s, [&](Vertex v) {
                const VertexSet rest = s ^ vs_bit(v);
                const Rational cand = best_[rest] + out_weight(v, rest);
                if (!have || cand > top) {
                    top = cand;
                    have = true;
                }
            });
            best_[s] = top;
        }
    }

    const Rational& optimum() const { return best_.back(); }
    const Rational& optimum_of(VertexSet s) const { return best_[s]; }

    Rational out_weight(Vertex v, VertexSet targets) const {
        const VertexSet hit = d_.out_mask(v) & targets;
        if (unit_) return Rational{vs_size(hit)};
        Rational total;
        vs_for_each(hit, [&](Vertex u) {
            total += arcw_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(u)];
        });
        return total;
    }

    Rational in_weight(Vertex v, VertexSet sources) const {
        const VertexSet hit = d_.in_mask(v) & sources;
        if (unit_) return Rational{vs_size(hit)};
        Rational total;
        vs_for_each(hit, [&](Vertex u) {
            total += arcw_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)];
        });
        return total;
    }

    // Lexicographically smallest optimal ordering of a subset, built by
    // always taking the smallest vertex that can start an optimal ordering.
    Ordering smallest_order_of(VertexSet s) const {
        Ordering order;
        order.reserve(static_cast<std::size_t>(vs_size(s)));
        while (s != 0) {
            bool advanced = false;
            for (VertexSet rem = s; rem != 0 && !advanced; rem &= rem - 1) {
                const Vertex v = vs_lowest(rem);
                const VertexSet rest = s ^ vs_bit(v);
                if (best_[rest] + out_weight(v, rest) == best_[s]) {
                    order.push_back(v);
                    s = rest;
                    advanced = true;
                }
            }
            if (!advanced)
                throw std::logic_error("MedianDp: no feasible first element (table corrupt)");
        }
        return order;
    }

    Ordering smallest_order() const { return smallest_order_of(vs_full(n_)); }

    // Smallest optimal ordering whose last vertex is f; throws if no
    // maximum-weight ordering ends at f.
    Ordering order_ending_at(Vertex f) const {
        if (f < 0 || f >= n_)
            throw std::out_of_range("MedianDp: vertex id out of range");
        const VertexSet rest = vs_full(n_) ^ vs_bit(f);
        if (best_[rest] + in_weight(f, rest) != optimum())
            throw std::invalid_argument("MedianDp: vertex " + std::to_string(f) +
                                        " is not the last vertex of any maximum-weight ordering");
        Ordering order = smallest_order_of(rest);
        order.push_back(f);
        return order;
    }

    // Vertices that appear last in at least one maximum-weight ordering.
    VertexSet feed_vertices() const {
        VertexSet feeds = 0;
        for (Vertex f = 0; f < n_; ++f) {
            const VertexSet rest = vs_full(n_) ^ vs_bit(f);
            if (best_[rest] + in_weight(f, rest) == optimum()) feeds |= vs_bit(f);
        }
        return feeds;
    }

    int vertex_count() const { return n_; }

private:
    int n_;
    Digraph d_;  // kept by value so the solver cannot outlive its input
    WeightAssignment w_;
    bool unit_;
    std::vector<Rational> arcw_;  // row-major arc weights; empty when all weights are 1
    std::vector<Rational> best_;
};

inline Ordering exact_median_order(const Digraph& d, const WeightAssignment& w,
                                   int limit = kDefaultExactLimit) {
    return MedianDp(d, w, limit).smallest_order();
}

inline Rational exact_median_weight(const Digraph& d, const WeightAssignment& w,
                                    int limit = kDefaultExactLimit) {
    return MedianDp(d, w, limit).optimum();
}

inline VertexSet median_feed_vertices(const Digraph& d, const WeightAssignment& w,
                                      int limit = kDefaultExactLimit) {
    return MedianDp(d, w, limit).feed_vertices();
}

// Iterated interval repair: while some interval violates the exchange
// property, move the offending end past the other end. Each move strictly
// increases the forward-arc weight, so the loop terminates at an ordering
// with the full interval property (a local optimum; not necessarily a
// maximum-weight ordering). Works on digraphs beyond the exact-solver limit.
inline Ordering local_median_order(const Digraph& d, const WeightAssignment& w, Ordering order) {
    require_permutation(order, d.vertex_count(), "local_median_order");
    for (;;) {
        const FeedbackCheck chk = feedback_property_holds(d, w, order);
        if (chk.holds) return order;
        if (chk.violated_end == 1) {
            // First vertex of the interval is beaten inside it: reinsert it
            // immediately after the interval's last position.
            const Vertex moved = order[static_cast<std::size_t>(chk.i)];
            order.erase(order.begin() + chk.i);
            order.insert(order.begin() + chk.j, moved);
        } else {
            // Last vertex of the interval is beaten inside it: reinsert it
            // immediately before the interval's first position.
            const Vertex moved = order[static_cast<std::size_t>(chk.j)];
            order.erase(order.begin() + chk.j);
            order.insert(order.begin() + chk.i, moved);
        }
    }
}

// Partition of the non-feed vertices as seen from the feed vertex (the last
// vertex of the order): its out-neighbors, the good vertices (those with an
// out-neighbor of the feed before them that reaches them in one step), and
// the bad vertices (everything else).
struct OrderClassification {
    Vertex feed = -1;
    VertexSet out_of_feed = 0;
    VertexSet good = 0;
    VertexSet bad = 0;
};

inline OrderClassification classify_order(const Digraph& d, const Ordering& order) {
    require_permutation(order, d.vertex_count(), "classify_order");
    if (d.vertex_count() == 0)
        throw std::invalid_argument("classify_order: empty digraph has no feed vertex");
    OrderClassification cls;
    cls.feed = order.back();
    const VertexSet out = d.out_mask(cls.feed);
    VertexSet seen_out = 0;  // out-neighbors of the feed at earlier positions
    for (std::size_t p = 0; p + 1 < order.size(); ++p) {
        const Vertex v = order[p];
        if (vs_contains(out, v)) {
            cls.out_of_feed |= vs_bit(v);
        } else if ((seen_out & d.in_mask(v)) != 0) {
            cls.good |= vs_bit(v);
        } else {
            cls.bad |= vs_bit(v);
        }
        seen_out |= vs_bit(v) & out;
    }
    return cls;
}

}  // namespace snp
