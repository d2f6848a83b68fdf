#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snp/dependency.hpp"
#include "snp/digraph.hpp"
#include "snp/matching.hpp"
#include "snp/rational.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"

namespace snp {

// splitmix64: tiny, fast, and good enough to derive independent test
// instances deterministically from (seed, index).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound <= 1 ? 0 : next() % bound; }

    bool coin() { return (next() & 1) != 0; }
};

// Independent stream for the index-th instance of a seeded campaign.
inline SplitMix64 seeded_stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(seed ^ (0x517cc1b727220a95ULL * (index + 1)));
    mix.next();
    return mix;
}

// --- Small named fixtures -------------------------------------------------

// Directed triangle 0 -> 1 -> 2 -> 0.
inline Digraph fixture_c3() {
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    d.add_arc(2, 0);
    return d;
}

// Transitive tournament on three vertices.
inline Digraph fixture_tt3() {
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(0, 2);
    d.add_arc(1, 2);
    return d;
}

// Directed 4-cycle 0 -> 2 -> 1 -> 3 -> 0; missing edges {0,1} and {2,3} form
// a dependency 2-cycle.
inline Digraph fixture_g4() {
    Digraph d(4);
    d.add_arc(0, 2);
    d.add_arc(2, 1);
    d.add_arc(1, 3);
    d.add_arc(3, 0);
    return d;
}

// Complete bipartite orientation {0,1} -> {2,3}; both missing edges are
// isolated dependency nodes with both orientations convenient.
inline Digraph fixture_d1() {
    Digraph d(4);
    d.add_arc(0, 2);
    d.add_arc(0, 3);
    d.add_arc(1, 2);
    d.add_arc(1, 3);
    return d;
}

// Five-vertex digraph whose dependency digraph is a single arc
// {0,1} -> {2,3}.
inline Digraph fixture_p5() {
    Digraph d(5);
    d.add_arc(0, 2);
    d.add_arc(2, 1);
    d.add_arc(1, 3);
    d.add_arc(3, 0);
    d.add_arc(2, 4);
    d.add_arc(4, 0);
    d.add_arc(4, 1);
    d.add_arc(3, 4);
    return d;
}

inline const std::map<std::string, Digraph (*)()>& fixtures() {
    static const std::map<std::string, Digraph (*)()> table = {
        {"c3", &fixture_c3}, {"tt3", &fixture_tt3}, {"g4", &fixture_g4},
        {"d1", &fixture_d1}, {"p5", &fixture_p5},
    };
    return table;
}

// --- Dependency-cycle gadget ----------------------------------------------

// Digraph on 2k vertices realizing a dependency cycle of length k: vertices
// a_i = i and b_i = k + i for i in 0..k-1, arcs given by the alternating
// neighborhood formula of dependency cycles. Missing edges are exactly the
// pairs {a_i, b_i}. The construction validates itself against
// cycle_lemmas_check and the single-k-cycle shape of its dependency digraph
// and throws logic_error on any mismatch.
inline Digraph cycle_gadget(int k) {
    if (k < 2)
        throw std::invalid_argument("cycle_gadget: dependency cycles have length >= 2");
    if (2 * k > kMaxVertices)
        throw std::invalid_argument("cycle_gadget: 2k exceeds the vertex limit");

    Digraph d(2 * k);
    // lab(family, j): endpoint of edge j mod k, family flipping on wraparound
    // when k is even. Family 0 = a (ids 0..k-1), family 1 = b (ids k..2k-1).
    auto lab = [&](int family, int j) -> Vertex {
        if (j >= k) {
            j -= k;
            if (k % 2 == 0) family ^= 1;
        }
        return family == 0 ? j : k + j;
    };
    for (int i = 0; i < k; ++i)
        for (int family = 0; family < 2; ++family)
            for (int t = 1; t < k; ++t) {
                const int target_family = t % 2 == 1 ? family : family ^ 1;
                d.add_arc(lab(family, i), lab(target_family, i + t));
            }

    // Self-validation: the missing edges, the dependency digraph's shape,
    // and every cycle lemma must come out exactly as promised.
    const MissingGraph mg = missing_graph(d);
    if (static_cast<int>(mg.edges.size()) != k || !mg.is_matching)
        throw std::logic_error("cycle_gadget: missing edges are not the k partner pairs");
    const DependencyDigraph delta = dependency_digraph(d);
    const std::vector<DeltaComponent> comps = delta_components(delta);
    if (comps.size() != 1 || comps.front().kind != ComponentKind::cycle ||
        static_cast<int>(comps.front().walk.size()) != k)
        throw std::logic_error("cycle_gadget: dependency digraph is not a single k-cycle");
    const ChainLabeling chain = label_component(delta, comps.front());
    if (!chain.wrap_ok)
        throw std::logic_error("cycle_gadget: cycle labeling violates the parity rule");
    const CycleLemmasReport rep = cycle_lemmas_check(d, chain);
    if (!rep.pass)
        throw std::logic_error("cycle_gadget: self-validation failed: " + rep.detail);
    return d;
}

// --- Random instances -----------------------------------------------------

inline Digraph random_tournament(int n, std::uint64_t seed) {
    Digraph d(n);
    SplitMix64 rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            rng.coin() ? d.add_arc(u, v) : d.add_arc(v, u);
    return d;
}

// Every vertex pair oriented one way, the other, or left non-adjacent.
inline Digraph random_oriented(int n, std::uint64_t seed) {
    Digraph d(n);
    SplitMix64 rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            switch (rng.below(3)) {
                case 0: break;
                case 1: d.add_arc(u, v); break;
                default: d.add_arc(v, u); break;
            }
    return d;
}

// Chooses m vertex-disjoint pairs to leave non-adjacent, then orients every
// other pair at random, so the missing graph is exactly an m-edge matching.
inline Digraph random_missing_matching(int n, int m, std::uint64_t seed) {
    if (m < 0 || 2 * m > n)
        throw std::invalid_argument("random_missing_matching: need 0 <= 2m <= n");
    Digraph d(n);
    SplitMix64 rng(seed);
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(ids[static_cast<std::size_t>(i)],
                  ids[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
    VertexSet matched_with[kMaxVertices] = {};
    for (int i = 0; i < m; ++i) {
        const Vertex a = ids[static_cast<std::size_t>(2 * i)];
        const Vertex b = ids[static_cast<std::size_t>(2 * i + 1)];
        matched_with[a] |= vs_bit(b);
        matched_with[b] |= vs_bit(a);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            if (vs_contains(matched_with[u], v)) continue;
            rng.coin() ? d.add_arc(u, v) : d.add_arc(v, u);
        }
    return d;
}

inline WeightAssignment random_weights(int n, std::uint64_t seed, int range = 10) {
    if (range < 1)
        throw std::invalid_argument("random_weights: range must be at least 1");
    SplitMix64 rng(seed);
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto num = static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(range)));
        const auto den = static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(range)));
        w.emplace_back(num, den);
    }
    return WeightAssignment(std::move(w));
}

// --- Exhaustive streams ---------------------------------------------------

// All 2^(n(n-1)/2) tournaments on n vertices, streamed to the callback.
// Capped at n <= 6 (32768 instances).
inline void enumerate_tournaments(int n, const std::function<void(const Digraph&)>& fn) {
    if (n < 0 || n > 6)
        throw std::invalid_argument("enumerate_tournaments: capped at n <= 6");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        Digraph d(n);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            ((code >> p) & 1) ? d.add_arc(pairs[p].first, pairs[p].second)
                              : d.add_arc(pairs[p].second, pairs[p].first);
        fn(d);
    }
}

// All orientations of the complete graph minus the canonical matching
// {0,1}, {2,3}, ..., {2m-2, 2m-1}. Capped at n <= 6, m <= 3.
inline void enumerate_missing_matchings(int n, int m,
                                        const std::function<void(const Digraph&)>& fn) {
    if (n < 0 || n > 6 || m < 0 || m > 3)
        throw std::invalid_argument("enumerate_missing_matchings: capped at n <= 6, m <= 3");
    if (2 * m > n)
        throw std::invalid_argument("enumerate_missing_matchings: need 2m <= n");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!(u % 2 == 0 && v == u + 1 && v < 2 * m)) pairs.emplace_back(u, v);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t code = 0; code < total; ++code) {
        Digraph d(n);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            ((code >> p) & 1) ? d.add_arc(pairs[p].first, pairs[p].second)
                              : d.add_arc(pairs[p].second, pairs[p].first);
        fn(d);
    }
}

// Relabeling-invariant fingerprint: the minimum adjacency encoding over all
// vertex permutations. Supported to 8 vertices (8! encodings).
inline std::uint64_t canonical_key(const Digraph& d) {
    const int n = d.vertex_count();
    if (n > 8)
        throw std::invalid_argument("canonical_key: supported up to 8 vertices");
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                code |= static_cast<std::uint64_t>(
                            d.has_arc(perm[static_cast<std::size_t>(x)],
                                      perm[static_cast<std::size_t>(y)]))
                        << bit++;
                code |= static_cast<std::uint64_t>(
                            d.has_arc(perm[static_cast<std::size_t>(y)],
                                      perm[static_cast<std::size_t>(x)]))
                        << bit++;
            }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace snp
