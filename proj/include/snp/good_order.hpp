#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snp/dependency.hpp"
#include "snp/digraph.hpp"
#include "snp/median_order.hpp"
#include "snp/rational.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"

namespace snp {

namespace detail {

inline std::vector<int> block_positions(const Ordering& order, VertexSet block) {
    std::vector<int> pos;
    pos.reserve(static_cast<std::size_t>(vs_size(block)));
    for (std::size_t p = 0; p < order.size(); ++p)
        if (vs_contains(block, order[p])) pos.push_back(static_cast<int>(p));
    return pos;
}

inline bool block_consecutive(const Ordering& order, VertexSet block) {
    const std::vector<int> pos = block_positions(order, block);
    return pos.empty() || pos.back() - pos.front() + 1 == static_cast<int>(pos.size());
}

}  // namespace detail

// Makes each given vertex set occupy consecutive positions without changing
// the forward-arc weight or the last vertex. Blocks must be pairwise
// disjoint intervals of d, and the ordering must be maximum-weight (we check
// the cheap necessary conditions: the interval exchange property up front,
// and per move that the weight is unchanged). Each move takes the earliest
// member of the last gap of a block and reinserts it directly before the
// next member.
inline Ordering contract_intervals(const Digraph& d, const WeightAssignment& w, Ordering order,
                                   const std::vector<VertexSet>& blocks) {
    require_permutation(order, d.vertex_count(), "contract_intervals");
    VertexSet used = 0;
    for (VertexSet block : blocks) {
        if ((block & used) != 0)
            throw std::invalid_argument("contract_intervals: blocks are not pairwise disjoint");
        used |= block;
        if (!is_interval(d, block))
            throw std::invalid_argument("contract_intervals: a block is not an interval");
    }
    if (!feedback_property_holds(d, w, order).holds)
        throw std::invalid_argument(
            "contract_intervals: ordering lacks the interval exchange property of "
            "maximum-weight orderings");

    const Rational before = order_weight(d, w, order);
    const Vertex feed = order.empty() ? -1 : order.back();

    for (VertexSet block : blocks) {
        if (vs_size(block) <= 1) continue;
        for (;;) {
            const std::vector<int> pos = detail::block_positions(order, block);
            int gap = -1;  // last index t with a hole between members t and t+1
            for (int t = static_cast<int>(pos.size()) - 2; t >= 0; --t)
                if (pos[static_cast<std::size_t>(t) + 1] > pos[static_cast<std::size_t>(t)] + 1) {
                    gap = t;
                    break;
                }
            if (gap == -1) break;
            const int from = pos[static_cast<std::size_t>(gap)];
            const int to = pos[static_cast<std::size_t>(gap) + 1];
            const Vertex moved = order[static_cast<std::size_t>(from)];

            // Jumping the stretch between the two members flips the status of
            // every arc between `moved` and the stretch; for a median order
            // and an interval the flips cancel exactly.
            Rational lost, gained;
            for (int p = from + 1; p < to; ++p) {
                const Vertex x = order[static_cast<std::size_t>(p)];
                if (d.has_arc(moved, x)) lost += w.arc_weight(moved, x);
                if (d.has_arc(x, moved)) gained += w.arc_weight(x, moved);
            }
            if (lost != gained)
                throw std::invalid_argument(
                    "contract_intervals: closing a gap would change the weight; the ordering "
                    "is not maximum-weight or a block is not an interval");
            order.erase(order.begin() + from);
            order.insert(order.begin() + (to - 1), moved);
        }
    }

    if (order_weight(d, w, order) != before)
        throw std::logic_error("contract_intervals: weight changed despite balanced moves");
    if (!order.empty() && order.back() != feed)
        throw std::logic_error("contract_intervals: last vertex changed");
    return order;
}

// Maximum-weight ordering in which the vertex set of every component group
// of the dependency digraph is consecutive. Requires a good digraph.
inline Ordering good_median_order(const Digraph& d, const WeightAssignment& w,
                                  int limit = kDefaultExactLimit) {
    const IntervalStructure is = interval_structure(d);
    std::vector<VertexSet> blocks;
    blocks.reserve(is.groups.size());
    for (const ComponentGroup& g : is.groups) {
        if (!is_interval(d, g.K))
            throw std::invalid_argument(
                "good_median_order: digraph is not good (a component group is not an interval)");
        blocks.push_back(g.K);
    }
    return contract_intervals(d, w, MedianDp(d, w, limit).smallest_order(), blocks);
}

// Verdict of the feed inequality on one good median order: with f the feed,
// J = J(f) and G the good vertices, every x in J must satisfy
//   w(N+(x) \ J) <= w(G \ J),
// and whenever x meets the second-neighborhood bound inside D[J] it must
// meet it in D as well.
struct MainInequalityEntry {
    Vertex x = -1;
    Rational lhs, rhs;
    bool holds = false;
    bool snp_in_block = false;    // bound holds for x inside D[J]
    bool snp_in_digraph = false;  // bound holds for x in D
    bool lifts = false;           // snp_in_block implies snp_in_digraph
};

struct MainInequalityReport {
    Vertex feed = -1;
    VertexSet j_of_feed = 0;
    VertexSet good = 0;
    bool good_within_second = false;  // good vertices lie in N++(feed)
    std::vector<MainInequalityEntry> entries;
    bool pass = false;
};

inline MainInequalityReport check_main_inequality(const Digraph& d, const WeightAssignment& w,
                                                  const Ordering& order) {
    require_permutation(order, d.vertex_count(), "check_main_inequality");
    if (d.vertex_count() == 0)
        throw std::invalid_argument("check_main_inequality: empty digraph");
    const IntervalStructure is = interval_structure(d);
    for (const ComponentGroup& g : is.groups) {
        if (!is_interval(d, g.K))
            throw std::invalid_argument("check_main_inequality: digraph is not good");
        if (!detail::block_consecutive(order, g.K))
            throw std::invalid_argument(
                "check_main_inequality: a component group is not consecutive in the ordering");
    }
    if (!feedback_property_holds(d, w, order).holds)
        throw std::invalid_argument(
            "check_main_inequality: ordering lacks the interval exchange property");

    MainInequalityReport rep;
    rep.feed = order.back();
    rep.j_of_feed = is.j_of_vertex[static_cast<std::size_t>(rep.feed)];
    const OrderClassification cls = classify_order(d, order);
    rep.good = cls.good;
    rep.good_within_second = (cls.good & ~d.second_out_mask(rep.feed)) == 0;
    const Rational rhs = w.of_set(cls.good & ~rep.j_of_feed);

    const InducedSubgraph block = induced_subgraph(d, rep.j_of_feed);
    const WeightAssignment block_w = w.restricted(rep.j_of_feed);

    rep.pass = rep.good_within_second;
    vs_for_each(rep.j_of_feed, [&](Vertex x) {
        MainInequalityEntry e;
        e.x = x;
        e.lhs = w.of_set(d.out_mask(x) & ~rep.j_of_feed);
        e.rhs = rhs;
        e.holds = e.lhs <= e.rhs;
        e.snp_in_block = has_snp(block.d, block_w, block.new_of_old[static_cast<std::size_t>(x)]);
        e.snp_in_digraph = has_snp(d, w, x);
        e.lifts = !e.snp_in_block || e.snp_in_digraph;
        rep.pass = rep.pass && e.holds && e.lifts;
        rep.entries.push_back(e);
    });
    return rep;
}

enum class SedKind { stable, periodic };

// Trajectory of iterated sedimentation. Stable runs reach an ordering whose
// feed inequality is strict (applications leave it unchanged from there on);
// rank is the least such rank. Periodic runs rearrange forever through a
// repeating segment of balanced orderings - a fixed point of the
// rearrangement counts as a cycle of length one - and rank is the rank where
// the repeating segment starts.
struct SedOutcome {
    SedKind kind = SedKind::stable;
    int rank = -1;
    std::vector<Ordering> trace;  // distinct orderings at ranks 0, 1, ...
    std::vector<Ordering> cycle;  // periodic only: the repeating segment
};

namespace detail {

struct SedContext {
    const Digraph& d;
    const WeightAssignment& w;
    IntervalStructure is;
    std::vector<VertexSet> blocks;
    Rational optimum;
};

inline SedContext make_sed_context(const Digraph& d, const WeightAssignment& w, int limit) {
    SedContext ctx{d, w, interval_structure(d), {}, {}};
    for (const ComponentGroup& g : ctx.is.groups) {
        if (!is_interval(d, g.K))
            throw std::invalid_argument("sed: digraph is not good");
        ctx.blocks.push_back(g.K);
    }
    ctx.optimum = MedianDp(d, w, limit).optimum();
    return ctx;
}

// Throws invalid_argument unless the ordering is a good median order.
inline void sed_validate(const SedContext& ctx, const Ordering& order) {
    if (order_weight(ctx.d, ctx.w, order) != ctx.optimum)
        throw std::invalid_argument("sed: ordering is not maximum-weight");
    for (VertexSet block : ctx.blocks)
        if (!block_consecutive(order, block))
            throw std::invalid_argument("sed: a component group is not consecutive");
}

struct SedStep {
    bool strict = false;  // feed inequality held strictly; ordering kept as is
    Ordering next;
};

inline SedStep sed_apply(const SedContext& ctx, const Ordering& order) {
    const Vertex f = order.back();
    const VertexSet j = ctx.is.j_of_vertex[static_cast<std::size_t>(f)];
    const OrderClassification cls = classify_order(ctx.d, order);
    const Rational lhs = ctx.w.of_set(cls.out_of_feed & ~j);
    const Rational rhs = ctx.w.of_set(cls.good & ~j);
    if (lhs > rhs)
        throw std::invalid_argument(
            "sed: feed inequality reversed; input is not a good median order");
    if (lhs < rhs) return {true, order};

    // Balanced case: bad vertices outside J(f) first, then the block of the
    // feed, then the rest, each part keeping its relative order. Bad
    // vertices outside J(f) must come in whole blocks, or the rearranged
    // ordering could split a block.
    vs_for_each(cls.bad & ~j, [&](Vertex b) {
        if ((ctx.is.j_of_vertex[static_cast<std::size_t>(b)] & ~cls.bad) != 0)
            throw std::logic_error(
                "sed: block of a bad vertex contains a non-bad vertex; rearrangement would "
                "split it");
    });

    SedStep step;
    step.next.reserve(order.size());
    for (Vertex v : order)
        if (vs_contains(cls.bad, v) && !vs_contains(j, v)) step.next.push_back(v);
    for (Vertex v : order)
        if (vs_contains(j, v)) step.next.push_back(v);
    for (Vertex v : order)
        if (!vs_contains(cls.bad, v) && !vs_contains(j, v)) step.next.push_back(v);
    return step;
}

}  // namespace detail

// One sedimentation step: returns the ordering unchanged when the feed
// inequality is strict, otherwise the balanced-case rearrangement.
inline Ordering sed(const Digraph& d, const WeightAssignment& w, const Ordering& order,
                    int limit = kDefaultExactLimit) {
    require_permutation(order, d.vertex_count(), "sed");
    if (d.vertex_count() == 0)
        throw std::invalid_argument("sed: empty digraph");
    const detail::SedContext ctx = detail::make_sed_context(d, w, limit);
    detail::sed_validate(ctx, order);
    return detail::sed_apply(ctx, order).next;
}

inline std::uint64_t default_sed_step_cap(int n) {
    // Ten times n factorial, saturated; a bug tripwire rather than a bound
    // ever approached in practice.
    unsigned __int128 cap = 10;
    for (int i = 2; i <= n; ++i) {
        cap *= static_cast<unsigned>(i);
        if (cap > ~std::uint64_t{0}) return ~std::uint64_t{0};
    }
    return static_cast<std::uint64_t>(cap);
}

// Iterates sedimentation from a good median order until the trajectory
// either reaches a fixed point (stable) or revisits an ordering (periodic).
// Every intermediate ordering is re-validated as a good median order; a
// violation means the rearrangement lemma failed and raises logic_error.
inline SedOutcome sed_classify(const Digraph& d, const WeightAssignment& w, Ordering order,
                               int limit = kDefaultExactLimit, std::uint64_t max_steps = 0) {
    require_permutation(order, d.vertex_count(), "sed_classify");
    if (d.vertex_count() == 0)
        throw std::invalid_argument("sed_classify: empty digraph");
    if (max_steps == 0) max_steps = default_sed_step_cap(d.vertex_count());
    const detail::SedContext ctx = detail::make_sed_context(d, w, limit);
    detail::sed_validate(ctx, order);

    SedOutcome out;
    std::map<Ordering, int> seen;
    seen.emplace(order, 0);
    out.trace.push_back(order);

    for (std::uint64_t step = 0; step < max_steps; ++step) {
        const detail::SedStep s = detail::sed_apply(ctx, out.trace.back());
        if (s.strict) {
            out.kind = SedKind::stable;
            out.rank = static_cast<int>(out.trace.size()) - 1;
            return out;
        }
        const auto it = seen.find(s.next);
        if (it != seen.end()) {
            out.kind = SedKind::periodic;
            out.rank = it->second;
            out.cycle.assign(out.trace.begin() + it->second, out.trace.end());
            return out;
        }
        try {
            detail::sed_validate(ctx, s.next);
        } catch (const std::invalid_argument& ex) {
            throw std::logic_error(std::string("sed_classify: rearranged ordering is not a "
                                               "good median order: ") +
                                   ex.what());
        }
        seen.emplace(s.next, static_cast<int>(out.trace.size()));
        out.trace.push_back(s.next);
    }
    throw std::runtime_error("sed_classify: step cap exceeded");
}

}  // namespace snp
