#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snp/dependency.hpp"
#include "snp/digraph.hpp"
#include "snp/good_order.hpp"
#include "snp/median_order.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"

namespace snp {

// Endpoint sequences of a dependency path or cycle: edge i of the walk is
// {a[i], b[i]}, consecutive edges paired by the arc between them (a[i] maps
// to a[i+1], b[i] to b[i+1]). The first edge is labeled a = smaller id. For
// cycles, `wrap_ok` records whether the closing arc pairs the last edge onto
// the first according to the length parity: back onto (a[0], b[0]) for odd
// length, onto (b[0], a[0]) for even length.
struct ChainLabeling {
    std::vector<int> edges;  // dependency node indices in walk order
    std::vector<Vertex> a, b;
    bool cycle = false;
    bool wrap_ok = true;

    int length() const { return static_cast<int>(edges.size()); }
};

inline ChainLabeling label_component(const DependencyDigraph& delta, const DeltaComponent& comp) {
    if (comp.kind == ComponentKind::other)
        throw std::invalid_argument("label_component: component is neither a path nor a cycle");
    ChainLabeling chain;
    chain.edges = comp.walk;
    chain.cycle = comp.kind == ComponentKind::cycle;
    const MissingEdge& head = delta.nodes[static_cast<std::size_t>(comp.walk.front())];
    chain.a.push_back(head.u);
    chain.b.push_back(head.v);

    auto arc_between = [&](int from, int to) -> const DeltaArc& {
        for (int idx : delta.out_arcs[static_cast<std::size_t>(from)])
            if (delta.arcs[static_cast<std::size_t>(idx)].to == to)
                return delta.arcs[static_cast<std::size_t>(idx)];
        throw std::logic_error("label_component: walk steps over a missing arc");
    };

    for (std::size_t t = 0; t + 1 < comp.walk.size(); ++t) {
        const DeltaArc& arc = arc_between(comp.walk[t], comp.walk[t + 1]);
        chain.a.push_back(delta.image_of(arc, chain.a.back()));
        chain.b.push_back(delta.image_of(arc, chain.b.back()));
    }

    if (chain.cycle) {
        const DeltaArc& closing = arc_between(comp.walk.back(), comp.walk.front());
        const Vertex a_img = delta.image_of(closing, chain.a.back());
        const Vertex b_img = delta.image_of(closing, chain.b.back());
        const bool odd = chain.length() % 2 == 1;
        const Vertex a_expect = odd ? chain.a.front() : chain.b.front();
        const Vertex b_expect = odd ? chain.b.front() : chain.a.front();
        chain.wrap_ok = a_img == a_expect && b_img == b_expect;
    }
    return chain;
}

// For digraphs whose missing edges form a matching, the dependency digraph
// must have in- and out-degree at most one everywhere. Returns whether it
// does; requires a matching.
inline bool delta_structure_check(const Digraph& d) {
    if (!missing_graph(d).is_matching)
        throw std::invalid_argument("delta_structure_check: missing edges do not form a matching");
    return dependency_digraph(d).max_degree_at_most_one();
}

// Everything a dependency cycle of length k promises about the digraph it
// lives in, checked directly. Writing (a_i, b_i) for the edges of the cycle
// in walk order (0-based) and lab(f, j) for the index-j edge endpoint of
// family f with wraparound (indices reduce mod k; the family flips on
// wraparound when k is even):
//   wraparound:  the closing arcs a_{k-1} -> lab(a, k), b_{k-1} -> lab(b, k)
//                exist and their losing-relation exclusions hold,
//   interval:    the 2k endpoints form an interval,
//   neighborhoods (inside the endpoint set):
//                N+(a_i) = { lab(a, i+t) : t odd } + { lab(b, i+t) : t even >= 2 },
//                and symmetrically for b_i (families swapped),
//   second neighborhoods (inside): N++(x_i) = N-(x_i) + {partner_i} - {partner_{i+1}},
//   degrees (inside): out-, in- and second-degree all equal k - 1.
struct CycleLemmasReport {
    int k = 0;
    bool wraparound = false;
    bool interval = false;
    bool neighborhoods = false;
    bool second_neighborhoods = false;
    bool degrees = false;
    bool pass = false;
    std::string detail;  // first failure, empty when pass
};

inline CycleLemmasReport cycle_lemmas_check(const Digraph& d, const ChainLabeling& chain) {
    if (!chain.cycle)
        throw std::invalid_argument("cycle_lemmas_check: labeling is not a cycle");
    const int k = chain.length();
    if (k < 2)
        throw std::invalid_argument("cycle_lemmas_check: dependency cycles have length >= 2");

    CycleLemmasReport rep;
    rep.k = k;
    auto note = [&](const std::string& what) {
        if (rep.detail.empty()) rep.detail = what;
    };

    // lab(family, j) with parity-twisted wraparound; family 0 = a, 1 = b.
    auto lab = [&](int family, int j) -> Vertex {
        if (j >= k) {
            j -= k;
            if (k % 2 == 0) family ^= 1;
        }
        return family == 0 ? chain.a[static_cast<std::size_t>(j)]
                           : chain.b[static_cast<std::size_t>(j)];
    };

    const Vertex a_last = chain.a.back();
    const Vertex b_last = chain.b.back();
    const Vertex a_wrap = lab(0, k);  // target of the closing arc from a_{k-1}
    const Vertex b_wrap = lab(1, k);
    const VertexSet reach_a = d.out_mask(a_last) | d.second_out_mask(a_last);
    const VertexSet reach_b = d.out_mask(b_last) | d.second_out_mask(b_last);
    rep.wraparound = d.has_arc(a_last, a_wrap) && d.has_arc(b_last, b_wrap) &&
                     !vs_contains(reach_a, b_wrap) && !vs_contains(reach_b, a_wrap);
    if (!rep.wraparound) note("wraparound arcs or exclusions");

    VertexSet k_set = 0;
    for (int i = 0; i < k; ++i)
        k_set |= vs_bit(chain.a[static_cast<std::size_t>(i)]) |
                 vs_bit(chain.b[static_cast<std::size_t>(i)]);
    rep.interval = vs_size(k_set) == 2 * k && is_interval(d, k_set);
    if (!rep.interval) note("endpoint set is not an interval of 2k vertices");

    const InducedSubgraph sub = induced_subgraph(d, k_set);
    auto inner = [&](Vertex v) { return sub.new_of_old[static_cast<std::size_t>(v)]; };

    rep.neighborhoods = true;
    rep.second_neighborhoods = true;
    rep.degrees = true;
    for (int i = 0; i < k && rep.interval; ++i) {
        for (int family = 0; family < 2; ++family) {
            const Vertex x = lab(family, i);
            VertexSet expect_out = 0;
            for (int t = 1; t < k; ++t) {
                const int fam = t % 2 == 1 ? family : family ^ 1;
                expect_out |= vs_bit(inner(lab(fam, i + t)));
            }
            const Vertex self = inner(x);
            const Vertex partner = inner(lab(family ^ 1, i));
            const VertexSet all = sub.d.vertices();
            const VertexSet expect_in = all & ~expect_out & ~vs_bit(self) & ~vs_bit(partner);
            if (sub.d.out_mask(self) != expect_out || sub.d.in_mask(self) != expect_in) {
                rep.neighborhoods = false;
                note("alternating neighborhood formula at index " + std::to_string(i));
            }
            const VertexSet expect_second =
                (sub.d.in_mask(self) | vs_bit(partner)) & ~vs_bit(inner(lab(family ^ 1, i + 1)));
            if (sub.d.second_out_mask(self) != expect_second) {
                rep.second_neighborhoods = false;
                note("second-neighborhood formula at index " + std::to_string(i));
            }
            if (sub.d.out_degree(self) != k - 1 || sub.d.in_degree(self) != k - 1 ||
                sub.d.second_out_degree(self) != k - 1) {
                rep.degrees = false;
                note("degrees differ from k - 1 at index " + std::to_string(i));
            }
        }
    }
    if (!rep.interval) {
        rep.neighborhoods = rep.second_neighborhoods = rep.degrees = false;
    }

    rep.pass = rep.wraparound && rep.interval && rep.neighborhoods &&
               rep.second_neighborhoods && rep.degrees;
    return rep;
}

// One oriented dependency path.
struct PathOrientation {
    ChainLabeling chain;
    bool a_to_b = false;  // arcs added as a_i -> b_i (else b_i -> a_i)
};

// Result of orienting every dependency path of a missing-matching digraph:
// each path gets the orientation propagated from a convenient orientation of
// its head edge; cycles are left alone. `findings` collects violated
// structural guarantees of the construction and is empty on healthy inputs.
struct OrientationResult {
    Digraph dprime;                                 // input plus the added arcs
    std::vector<std::pair<Vertex, Vertex>> added;   // the new arcs, path by path
    std::vector<PathOrientation> paths;
    std::vector<int> cycle_components;              // indices into `components`
    DependencyDigraph delta;                        // of the input
    std::vector<DeltaComponent> components;
    std::vector<std::string> findings;

    bool ok() const { return findings.empty(); }
};

inline OrientationResult orient_paths(const Digraph& d) {
    if (!missing_graph(d).is_matching)
        throw std::invalid_argument("orient_paths: missing edges do not form a matching");
    OrientationResult res{Digraph(d.vertex_count(), d.oriented()), {}, {}, {}, {}, {}, {}};
    res.dprime = d;
    res.delta = dependency_digraph(d);
    if (!res.delta.max_degree_at_most_one())
        throw std::logic_error(
            "orient_paths: dependency digraph of a matching has a node of degree > 1");
    res.components = delta_components(res.delta);

    for (std::size_t c = 0; c < res.components.size(); ++c) {
        const DeltaComponent& comp = res.components[c];
        if (comp.kind == ComponentKind::cycle) {
            res.cycle_components.push_back(static_cast<int>(c));
            continue;
        }
        PathOrientation po;
        po.chain = label_component(res.delta, comp);
        const MissingEdge& head = res.delta.nodes[static_cast<std::size_t>(comp.walk.front())];
        const ConvenientOrientations conv = convenient_orientations(d, head);
        if (!conv.any())
            throw std::logic_error(
                "orient_paths: head edge of a dependency path admits no convenient orientation");
        po.a_to_b = conv.u_to_v;  // head.u == chain.a.front() by labeling convention
        for (int i = 0; i < po.chain.length(); ++i) {
            const Vertex from = po.a_to_b ? po.chain.a[static_cast<std::size_t>(i)]
                                          : po.chain.b[static_cast<std::size_t>(i)];
            const Vertex to = po.a_to_b ? po.chain.b[static_cast<std::size_t>(i)]
                                        : po.chain.a[static_cast<std::size_t>(i)];
            res.dprime.add_arc(from, to);
            res.added.emplace_back(from, to);
        }
        res.paths.push_back(std::move(po));
    }

    // Structural guarantees of the construction, verified rather than assumed.
    if (!is_good_digraph(res.dprime))
        res.findings.push_back("oriented digraph is not good");
    const DependencyDigraph delta_after = dependency_digraph(res.dprime);
    for (const DeltaComponent& comp : delta_components(delta_after))
        if (comp.kind != ComponentKind::cycle)
            res.findings.push_back("dependency digraph after orientation has a non-cycle component");
    std::vector<MissingEdge> cycle_edges;
    for (int c : res.cycle_components)
        for (int node : res.components[static_cast<std::size_t>(c)].walk)
            cycle_edges.push_back(res.delta.nodes[static_cast<std::size_t>(node)]);
    std::sort(cycle_edges.begin(), cycle_edges.end());
    if (cycle_edges != delta_after.nodes)
        res.findings.push_back("missing edges after orientation differ from the dependency cycles");
    return res;
}

// Verdict of the feed theorem on one missing-matching digraph: after
// orienting the dependency paths, every vertex that ends some maximum-weight
// ordering of the oriented digraph must meet the second-neighborhood bound
// both there and in the input. For feeds that are the tail of an added arc,
// additionally re-orient that arc backwards and confirm the ordering stays
// maximum-weight.
struct FeedCase {
    Vertex feed = -1;
    bool snp_in_oriented = false;
    bool snp_in_input = false;
    bool reversal_checked = false;
    bool reversal_ok = true;
};

struct FeedSnpReport {
    OrientationResult orientation;
    std::vector<FeedCase> cases;
    bool swept_all_feeds = false;
    std::vector<std::string> findings;
    bool pass = false;
};

inline FeedSnpReport feed_snp_theorem_check(const Digraph& d, int sweep_limit = 8,
                                            int limit = kDefaultExactLimit) {
    FeedSnpReport rep{orient_paths(d), {}, {}, {}, false};
    rep.findings = rep.orientation.findings;
    const Digraph& dp = rep.orientation.dprime;
    const WeightAssignment w = WeightAssignment::unit(d.vertex_count());
    if (d.vertex_count() == 0)
        throw std::invalid_argument("feed_snp_theorem_check: empty digraph");

    const MedianDp solver(dp, w, limit);
    const IntervalStructure is = interval_structure(dp);
    std::vector<VertexSet> blocks;
    for (const ComponentGroup& g : is.groups) blocks.push_back(g.K);

    rep.swept_all_feeds = d.vertex_count() <= sweep_limit;
    const VertexSet feeds =
        rep.swept_all_feeds ? solver.feed_vertices() : vs_bit(good_median_order(dp, w, limit).back());

    vs_for_each(feeds, [&](Vertex f) {
        FeedCase fc;
        fc.feed = f;
        try {
            const Ordering order = contract_intervals(dp, w, solver.order_ending_at(f), blocks);
            fc.snp_in_oriented = has_snp(dp, w, f);
            fc.snp_in_input = has_snp(d, w, f);
            for (const auto& [from, to] : rep.orientation.added) {
                if (from != f) continue;
                // The added arc leaves the feed, so it is a backward arc of
                // the ordering; re-orienting a backward arc must keep the
                // ordering maximum-weight.
                fc.reversal_checked = true;
                const Digraph flipped = dp.with_arc_reversed(from, to);
                fc.reversal_ok = order_weight(flipped, w, order) ==
                                 MedianDp(flipped, w, limit).optimum();
            }
            if (!fc.snp_in_oriented)
                rep.findings.push_back("feed " + std::to_string(f) +
                                       " misses the bound in the oriented digraph");
            if (!fc.snp_in_input)
                rep.findings.push_back("feed " + std::to_string(f) +
                                       " misses the bound in the input digraph");
            if (!fc.reversal_ok)
                rep.findings.push_back("re-orienting the added arc at feed " + std::to_string(f) +
                                       " loses maximality");
        } catch (const std::exception& ex) {
            rep.findings.push_back("feed " + std::to_string(f) + ": " + ex.what());
        }
        rep.cases.push_back(fc);
    });
    rep.pass = rep.findings.empty();
    return rep;
}

// Verdict of the two-vertex theorem on a sink-free missing-matching digraph
// whose dependency components are all cycles: it must contain two distinct
// vertices meeting the second-neighborhood bound, found constructively - the
// feed of a good median order, and a second vertex from either the feed's
// block or the sedimentation trajectory after deleting the feed.
struct TwoSnpReport {
    Vertex first = -1;
    Vertex second = -1;
    bool via_block = false;          // second vertex taken from the feed's block
    SedKind branch = SedKind::stable;  // meaningful when !via_block
    int rank = -1;                     // rank used in the sedimentation branch
    std::vector<std::string> findings;
    bool pass = false;
};

inline TwoSnpReport two_snp_check(const Digraph& d, int limit = kDefaultExactLimit) {
    if (!missing_graph(d).is_matching)
        throw std::invalid_argument("two_snp_check: missing edges do not form a matching");
    if (d.vertex_count() == 0 || d.has_sink())
        throw std::invalid_argument("two_snp_check: digraph has a sink");
    {
        const DependencyDigraph delta = dependency_digraph(d);
        for (const DeltaComponent& comp : delta_components(delta))
            if (comp.kind != ComponentKind::cycle)
                throw std::invalid_argument(
                    "two_snp_check: dependency digraph has a non-cycle component; orient "
                    "the paths first");
    }

    TwoSnpReport rep;
    const WeightAssignment w = WeightAssignment::unit(d.vertex_count());
    if (!is_good_digraph(d)) {
        rep.findings.push_back("cycles-only digraph is not good");
        return rep;
    }

    const Ordering order = good_median_order(d, w, limit);
    rep.first = order.back();
    if (!has_snp(d, w, rep.first))
        rep.findings.push_back("feed of the good median order misses the bound");

    const IntervalStructure is = interval_structure(d);
    const VertexSet j = is.j_of_vertex[static_cast<std::size_t>(rep.first)];

    if (vs_size(j) > 1) {
        // The feed sits in a dependency block: by the block lemmas every
        // member meets the bound inside the block, and the main inequality
        // lifts it to the whole digraph.
        rep.via_block = true;
        const MainInequalityReport main = check_main_inequality(d, w, order);
        for (const MainInequalityEntry& e : main.entries) {
            if (!e.snp_in_block)
                rep.findings.push_back("block member " + std::to_string(e.x) +
                                       " misses the bound inside the block");
            if (!e.holds || !e.lifts)
                rep.findings.push_back("main inequality fails at block member " +
                                       std::to_string(e.x));
        }
        vs_for_each(j & ~vs_bit(rep.first), [&](Vertex x) {
            if (rep.second == -1 && has_snp(d, w, x)) rep.second = x;
        });
        if (rep.second == -1)
            rep.findings.push_back("no second vertex in the feed's block meets the bound");
    } else {
        // Whole feed: delete it and follow the sedimentation trajectory of
        // the shortened ordering in the remaining digraph.
        const InducedSubgraph sub = induced_subgraph(d, d.vertices() ^ vs_bit(rep.first));
        const WeightAssignment sub_w = WeightAssignment::unit(sub.d.vertex_count());
        Ordering shorter;
        for (std::size_t p = 0; p + 1 < order.size(); ++p)
            shorter.push_back(sub.new_of_old[static_cast<std::size_t>(order[p])]);

        if (order_weight(sub.d, sub_w, shorter) != exact_median_weight(sub.d, sub_w, limit)) {
            rep.findings.push_back("shortened ordering is not maximum-weight after deleting the feed");
            return rep;
        }
        if (!is_good_digraph(sub.d)) {
            rep.findings.push_back("digraph is not good after deleting the whole feed");
            return rep;
        }

        const SedOutcome outcome = sed_classify(sub.d, sub_w, shorter, limit);
        rep.branch = outcome.kind;
        if (outcome.kind == SedKind::stable) {
            rep.rank = outcome.rank;
            rep.second = sub.old_of_new[static_cast<std::size_t>(outcome.trace.back().back())];
        } else {
            // Periodic trajectory: take the out-neighbor of the deleted feed
            // that comes last in the ordering; at some rank it is a bad
            // vertex, and that rank's feed is the second vertex.
            Vertex witness = -1;
            for (Vertex v : order)
                if (d.has_arc(rep.first, v)) witness = v;
            const Vertex witness_sub = sub.new_of_old[static_cast<std::size_t>(witness)];
            for (std::size_t q = 0; q < outcome.trace.size() && rep.second == -1; ++q) {
                const OrderClassification cls = classify_order(sub.d, outcome.trace[q]);
                if (vs_contains(cls.bad, witness_sub)) {
                    rep.rank = static_cast<int>(q);
                    rep.second = sub.old_of_new[static_cast<std::size_t>(outcome.trace[q].back())];
                }
            }
            if (rep.second == -1) {
                rep.findings.push_back(
                    "periodic trajectory never classifies the witness as bad");
                return rep;
            }
        }
        if (!has_snp(sub.d, sub_w, sub.new_of_old[static_cast<std::size_t>(rep.second)]))
            rep.findings.push_back("second vertex misses the bound in the feed-deleted digraph");
        if (!has_snp(d, w, rep.second))
            rep.findings.push_back("second vertex misses the bound");
        if (rep.second == rep.first)
            rep.findings.push_back("second vertex coincides with the first");
    }

    rep.pass = rep.findings.empty() && rep.first != -1 && rep.second != -1 &&
               rep.second != rep.first;
    return rep;
}

}  // namespace snp
