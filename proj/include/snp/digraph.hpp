#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snp/rational.hpp"
#include "snp/vertexset.hpp"
#include "snp/weights.hpp"

namespace snp {

// An unordered pair of distinct non-adjacent vertices. Stored with u < v.
struct MissingEdge {
    Vertex u = 0;
    Vertex v = 0;

    MissingEdge() = default;
    MissingEdge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
        if (a == b)
            throw std::invalid_argument("MissingEdge: endpoints must differ");
    }

    bool contains(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
    VertexSet mask() const { return vs_bit(u) | vs_bit(v); }

    friend bool operator==(const MissingEdge&, const MissingEdge&) = default;
    friend auto operator<=>(const MissingEdge&, const MissingEdge&) = default;
};

// Loop-free digraph on dense vertex ids 0..n-1 with n <= 64. Adjacency is one
// bitmask row per vertex in each direction, so arc tests, neighborhood unions
// and set intersections are single word operations. An oriented digraph
// rejects digons (pairs of opposite arcs); construct with oriented = false to
// allow them.
class Digraph {
public:
    explicit Digraph(int n, bool oriented = true)
        : n_(checked_count(n)), oriented_(oriented), out_(static_cast<std::size_t>(n_), 0),
          in_(static_cast<std::size_t>(n_), 0) {}

    int vertex_count() const { return n_; }
    bool oriented() const { return oriented_; }
    VertexSet vertices() const { return vs_full(n_); }

    void add_arc(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw std::invalid_argument("Digraph: loops are not allowed");
        if (oriented_ && has_arc(v, u))
            throw std::invalid_argument("Digraph: digon " + std::to_string(u) + " <-> " +
                                        std::to_string(v) + " in an oriented digraph");
        out_[static_cast<std::size_t>(u)] |= vs_bit(v);
        in_[static_cast<std::size_t>(v)] |= vs_bit(u);
    }

    bool has_arc(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return vs_contains(out_[static_cast<std::size_t>(u)], v);
    }

    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    int arc_count() const {
        int total = 0;
        for (VertexSet row : out_) total += vs_size(row);
        return total;
    }

    std::vector<std::pair<Vertex, Vertex>> arcs() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(static_cast<std::size_t>(arc_count()));
        for (Vertex u = 0; u < n_; ++u)
            vs_for_each(out_mask(u), [&](Vertex v) { out.emplace_back(u, v); });
        return out;
    }

    VertexSet out_mask(Vertex v) const {
        check_vertex(v);
        return out_[static_cast<std::size_t>(v)];
    }

    VertexSet in_mask(Vertex v) const {
        check_vertex(v);
        return in_[static_cast<std::size_t>(v)];
    }

    // Vertices at directed distance exactly two from v: reachable in two
    // steps, but not out-neighbors and not v itself.
    VertexSet second_out_mask(Vertex v) const {
        const VertexSet first = out_mask(v);
        VertexSet reach = 0;
        vs_for_each(first, [&](Vertex u) { reach |= out_[static_cast<std::size_t>(u)]; });
        return reach & ~first & ~vs_bit(v);
    }

    VertexSet second_in_mask(Vertex v) const {
        const VertexSet first = in_mask(v);
        VertexSet reach = 0;
        vs_for_each(first, [&](Vertex u) { reach |= in_[static_cast<std::size_t>(u)]; });
        return reach & ~first & ~vs_bit(v);
    }

    std::vector<Vertex> out_neighbors(Vertex v) const { return vs_to_vector(out_mask(v)); }
    std::vector<Vertex> in_neighbors(Vertex v) const { return vs_to_vector(in_mask(v)); }
    std::vector<Vertex> second_out_neighbors(Vertex v) const {
        return vs_to_vector(second_out_mask(v));
    }

    int out_degree(Vertex v) const { return vs_size(out_mask(v)); }
    int in_degree(Vertex v) const { return vs_size(in_mask(v)); }
    int second_out_degree(Vertex v) const { return vs_size(second_out_mask(v)); }

    bool is_sink(Vertex v) const { return out_mask(v) == 0; }
    bool has_sink() const {
        for (Vertex v = 0; v < n_; ++v)
            if (is_sink(v)) return true;
        return false;
    }

    // A whole vertex is adjacent (in at least one direction) to every other.
    bool is_whole(Vertex v) const {
        return (out_mask(v) | in_mask(v) | vs_bit(v)) == vertices();
    }

    VertexSet whole_vertices() const {
        VertexSet s = 0;
        for (Vertex v = 0; v < n_; ++v)
            if (is_whole(v)) s |= vs_bit(v);
        return s;
    }

    Digraph reversed() const {
        Digraph r(n_, oriented_);
        r.out_ = in_;
        r.in_ = out_;
        return r;
    }

    // Copy with one arc replaced by its reverse.
    Digraph with_arc_reversed(Vertex u, Vertex v) const {
        if (!has_arc(u, v))
            throw std::invalid_argument("Digraph: cannot reverse a missing arc");
        Digraph r = *this;
        r.out_[static_cast<std::size_t>(u)] &= ~vs_bit(v);
        r.in_[static_cast<std::size_t>(v)] &= ~vs_bit(u);
        r.out_[static_cast<std::size_t>(v)] |= vs_bit(u);
        r.in_[static_cast<std::size_t>(u)] |= vs_bit(v);
        return r;
    }

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    static int checked_count(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("Digraph: vertex count must be in [0, 64]");
        return n;
    }

    int n_;
    bool oriented_;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;

    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("Digraph: vertex id " + std::to_string(v) +
                                    " out of range [0, " + std::to_string(n_) + ")");
    }
};

// Induced subgraph together with the id translation in both directions.
// New ids follow increasing old id order.
struct InducedSubgraph {
    Digraph d;
    std::vector<Vertex> old_of_new;  // size d.vertex_count()
    std::vector<Vertex> new_of_old;  // size of the original; -1 where dropped
};

inline InducedSubgraph induced_subgraph(const Digraph& d, VertexSet keep) {
    if ((keep & ~d.vertices()) != 0)
        throw std::invalid_argument("induced_subgraph: subset contains out-of-range ids");
    InducedSubgraph sub{Digraph(vs_size(keep), d.oriented()),
                        vs_to_vector(keep),
                        std::vector<Vertex>(static_cast<std::size_t>(d.vertex_count()), -1)};
    for (Vertex i = 0; i < sub.d.vertex_count(); ++i)
        sub.new_of_old[static_cast<std::size_t>(sub.old_of_new[static_cast<std::size_t>(i)])] = i;
    for (Vertex i = 0; i < sub.d.vertex_count(); ++i) {
        const Vertex old_u = sub.old_of_new[static_cast<std::size_t>(i)];
        vs_for_each(d.out_mask(old_u) & keep, [&](Vertex old_v) {
            sub.d.add_arc(i, sub.new_of_old[static_cast<std::size_t>(old_v)]);
        });
    }
    return sub;
}

// The missing edges of a digraph: unordered pairs with no arc either way,
// listed in lexicographic order.
struct MissingGraph {
    std::vector<MissingEdge> edges;
    VertexSet covered = 0;  // vertices incident to at least one missing edge
    bool is_matching = true;
};

inline MissingGraph missing_graph(const Digraph& d) {
    MissingGraph mg;
    for (Vertex u = 0; u < d.vertex_count(); ++u)
        for (Vertex v = u + 1; v < d.vertex_count(); ++v)
            if (!d.adjacent(u, v)) {
                if ((mg.covered & (vs_bit(u) | vs_bit(v))) != 0)
                    mg.is_matching = false;
                mg.covered |= vs_bit(u) | vs_bit(v);
                mg.edges.emplace_back(u, v);
            }
    // Vertex-disjointness can also fail without the incremental detector
    // firing only when the shared endpoint comes first; recheck directly.
    if (mg.is_matching) {
        VertexSet seen = 0;
        for (const MissingEdge& e : mg.edges) {
            if ((seen & e.mask()) != 0) {
                mg.is_matching = false;
                break;
            }
            seen |= e.mask();
        }
    }
    return mg;
}

inline bool missing_edges_form_matching(const Digraph& d) { return missing_graph(d).is_matching; }

// Weighted second-neighborhood test for one vertex:
// w(N+(v)) <= w(N++(v)), compared exactly.
inline bool has_snp(const Digraph& d, const WeightAssignment& w, Vertex v) {
    if (w.size() != d.vertex_count())
        throw std::invalid_argument("has_snp: weight count does not match vertex count");
    return w.of_set(d.out_mask(v)) <= w.of_set(d.second_out_mask(v));
}

// All vertices satisfying the weighted second-neighborhood test.
inline VertexSet snp_oracle(const Digraph& d, const WeightAssignment& w) {
    VertexSet s = 0;
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (has_snp(d, w, v)) s |= vs_bit(v);
    return s;
}

}  // namespace snp
