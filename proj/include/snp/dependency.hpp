#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "snp/digraph.hpp"
#include "snp/vertexset.hpp"

namespace snp {

// Ordered losing relation between missing edges: the pair {x1, y1} read as
// (x1, y1) loses to {x2, y2} read as (x2, y2) when
//   x1 -> x2,  y2 outside N+(x1) and N++(x1),
//   y1 -> y2,  x2 outside N+(y1) and N++(y1).
// Both arguments must be missing edges of d.
inline bool loses_to(const Digraph& d, Vertex x1, Vertex y1, Vertex x2, Vertex y2) {
    if (d.adjacent(x1, y1) || x1 == y1)
        throw std::invalid_argument("loses_to: {" + std::to_string(x1) + ", " +
                                    std::to_string(y1) + "} is not a missing edge");
    if (d.adjacent(x2, y2) || x2 == y2)
        throw std::invalid_argument("loses_to: {" + std::to_string(x2) + ", " +
                                    std::to_string(y2) + "} is not a missing edge");
    const VertexSet reach_x1 = d.out_mask(x1) | d.second_out_mask(x1);
    const VertexSet reach_y1 = d.out_mask(y1) | d.second_out_mask(y1);
    return d.has_arc(x1, x2) && !vs_contains(reach_x1, y2) &&
           d.has_arc(y1, y2) && !vs_contains(reach_y1, x2);
}

// One arc of the dependency digraph, together with the endpoint pairing that
// witnesses it: nodes[from].u maps to u_image and nodes[from].v to v_image,
// where {u_image, v_image} = nodes[to].
struct DeltaArc {
    int from = -1;
    int to = -1;
    Vertex u_image = -1;
    Vertex v_image = -1;
};

// The dependency digraph: one node per missing edge, one arc e -> f whenever
// e loses to f. For each ordered node pair at most one endpoint pairing can
// witness the relation, so arcs carry their pairing. Opposite arcs between
// two nodes may coexist.
struct DependencyDigraph {
    std::vector<MissingEdge> nodes;  // lexicographically sorted
    std::vector<DeltaArc> arcs;
    std::vector<std::vector<int>> out_arcs;  // per node, indices into arcs
    std::vector<std::vector<int>> in_arcs;

    int node_count() const { return static_cast<int>(nodes.size()); }
    int arc_count() const { return static_cast<int>(arcs.size()); }

    int node_index(const MissingEdge& e) const {
        const auto it = std::lower_bound(nodes.begin(), nodes.end(), e);
        if (it == nodes.end() || *it != e) return -1;
        return static_cast<int>(it - nodes.begin());
    }

    int out_degree(int node) const { return static_cast<int>(out_arcs[static_cast<std::size_t>(node)].size()); }
    int in_degree(int node) const { return static_cast<int>(in_arcs[static_cast<std::size_t>(node)].size()); }

    Vertex image_of(const DeltaArc& a, Vertex x) const {
        const MissingEdge& e = nodes[static_cast<std::size_t>(a.from)];
        if (x == e.u) return a.u_image;
        if (x == e.v) return a.v_image;
        throw std::invalid_argument("DependencyDigraph: vertex not an endpoint of the arc source");
    }

    bool max_degree_at_most_one() const {
        for (int i = 0; i < node_count(); ++i)
            if (out_degree(i) > 1 || in_degree(i) > 1) return false;
        return true;
    }
};

inline DependencyDigraph dependency_digraph(const Digraph& d) {
    DependencyDigraph delta;
    delta.nodes = missing_graph(d).edges;  // already lexicographically sorted
    const int k = delta.node_count();
    delta.out_arcs.assign(static_cast<std::size_t>(k), {});
    delta.in_arcs.assign(static_cast<std::size_t>(k), {});
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const MissingEdge& e = delta.nodes[static_cast<std::size_t>(i)];
            const MissingEdge& f = delta.nodes[static_cast<std::size_t>(j)];
            const bool straight = loses_to(d, e.u, e.v, f.u, f.v);
            const bool crossed = loses_to(d, e.u, e.v, f.v, f.u);
            if (straight && crossed)
                throw std::logic_error("dependency_digraph: both pairings witness one arc");
            if (!straight && !crossed) continue;
            DeltaArc a;
            a.from = i;
            a.to = j;
            a.u_image = straight ? f.u : f.v;
            a.v_image = straight ? f.v : f.u;
            delta.out_arcs[static_cast<std::size_t>(i)].push_back(static_cast<int>(delta.arcs.size()));
            delta.in_arcs[static_cast<std::size_t>(j)].push_back(static_cast<int>(delta.arcs.size()));
            delta.arcs.push_back(a);
        }
    }
    return delta;
}

// Which directions of a missing edge are convenient: (a, b) is convenient
// when every in-neighbor of a reaches b in one or two steps.
struct ConvenientOrientations {
    bool u_to_v = false;
    bool v_to_u = false;
    bool any() const { return u_to_v || v_to_u; }
};

namespace detail {

inline bool orientation_convenient(const Digraph& d, Vertex a, Vertex b) {
    bool ok = true;
    vs_for_each(d.in_mask(a), [&](Vertex v) {
        if (v == b) return;
        if (!vs_contains(d.out_mask(v) | d.second_out_mask(v), b)) ok = false;
    });
    return ok;
}

}  // namespace detail

inline ConvenientOrientations convenient_orientations(const Digraph& d, const MissingEdge& e) {
    if (d.adjacent(e.u, e.v))
        throw std::invalid_argument("convenient_orientations: {" + std::to_string(e.u) + ", " +
                                    std::to_string(e.v) + "} is not a missing edge");
    return {detail::orientation_convenient(d, e.u, e.v),
            detail::orientation_convenient(d, e.v, e.u)};
}

// A missing edge admits a convenient orientation exactly when its dependency
// node has in-degree zero. Returns whether that equivalence holds for every
// missing edge of d.
inline bool good_edge_lemma_check(const Digraph& d) {
    const DependencyDigraph delta = dependency_digraph(d);
    for (int i = 0; i < delta.node_count(); ++i) {
        const bool convenient =
            convenient_orientations(d, delta.nodes[static_cast<std::size_t>(i)]).any();
        if (convenient != (delta.in_degree(i) == 0)) return false;
    }
    return true;
}

enum class ComponentKind { path, cycle, other };

// A weakly connected component of the dependency digraph. When every degree
// in the component is at most one it is a directed path or a directed cycle,
// and `walk` lists its nodes in chain order (paths start at the in-degree-0
// node; cycles start at the smallest node index). Otherwise kind is `other`
// and `walk` is sorted by node index.
struct DeltaComponent {
    ComponentKind kind = ComponentKind::other;
    std::vector<int> walk;
    VertexSet endpoint_set = 0;  // union of the member edges' endpoints
};

inline std::vector<DeltaComponent> delta_components(const DependencyDigraph& delta) {
    const int k = delta.node_count();
    std::vector<int> comp(static_cast<std::size_t>(k), -1);
    int comp_count = 0;
    for (int start = 0; start < k; ++start) {
        if (comp[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<int> stack{start};
        comp[static_cast<std::size_t>(start)] = comp_count;
        while (!stack.empty()) {
            const int node = stack.back();
            stack.pop_back();
            auto visit = [&](int other) {
                if (comp[static_cast<std::size_t>(other)] == -1) {
                    comp[static_cast<std::size_t>(other)] = comp_count;
                    stack.push_back(other);
                }
            };
            for (int a : delta.out_arcs[static_cast<std::size_t>(node)])
                visit(delta.arcs[static_cast<std::size_t>(a)].to);
            for (int a : delta.in_arcs[static_cast<std::size_t>(node)])
                visit(delta.arcs[static_cast<std::size_t>(a)].from);
        }
        ++comp_count;
    }

    std::vector<DeltaComponent> out(static_cast<std::size_t>(comp_count));
    std::vector<std::vector<int>> members(static_cast<std::size_t>(comp_count));
    for (int i = 0; i < k; ++i)
        members[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].push_back(i);

    for (int c = 0; c < comp_count; ++c) {
        DeltaComponent& dc = out[static_cast<std::size_t>(c)];
        const std::vector<int>& nodes = members[static_cast<std::size_t>(c)];
        for (int i : nodes)
            dc.endpoint_set |= delta.nodes[static_cast<std::size_t>(i)].mask();

        bool degrees_ok = true;
        int arc_total = 0;
        for (int i : nodes) {
            if (delta.out_degree(i) > 1 || delta.in_degree(i) > 1) degrees_ok = false;
            arc_total += delta.out_degree(i);
        }
        if (!degrees_ok) {
            dc.kind = ComponentKind::other;
            dc.walk = nodes;  // already ascending
            continue;
        }

        const int size = static_cast<int>(nodes.size());
        auto follow = [&](int from) -> int {
            const auto& outs = delta.out_arcs[static_cast<std::size_t>(from)];
            return outs.empty() ? -1 : delta.arcs[static_cast<std::size_t>(outs.front())].to;
        };
        if (arc_total == size - 1) {
            dc.kind = ComponentKind::path;
            int head = -1;
            for (int i : nodes)
                if (delta.in_degree(i) == 0) head = i;
            for (int cur = head; cur != -1; cur = follow(cur)) dc.walk.push_back(cur);
        } else if (arc_total == size) {
            dc.kind = ComponentKind::cycle;
            const int head = *std::min_element(nodes.begin(), nodes.end());
            int cur = head;
            do {
                dc.walk.push_back(cur);
                cur = follow(cur);
            } while (cur != head);
        } else {
            // Degrees at most one force arc counts of size-1 (path) or size
            // (cycle) in a weakly connected digraph.
            throw std::logic_error("delta_components: arc count impossible for degrees <= 1");
        }
    }
    return out;
}

// True when every member of k has the same out-neighborhood and the same
// in-neighborhood outside k.
inline bool is_interval(const Digraph& d, VertexSet k) {
    if ((k & ~d.vertices()) != 0)
        throw std::invalid_argument("is_interval: subset contains out-of-range ids");
    if (vs_size(k) <= 1) return true;
    const Vertex rep = vs_lowest(k);
    const VertexSet outside = ~k;
    bool ok = true;
    vs_for_each(k, [&](Vertex v) {
        if ((d.out_mask(v) & outside) != (d.out_mask(rep) & outside) ||
            (d.in_mask(v) & outside) != (d.in_mask(rep) & outside))
            ok = false;
    });
    return ok;
}

// Components of the dependency digraph grouped by overlapping endpoint sets:
// two components fall in the same group when their endpoint sets intersect
// (transitively). Groups have pairwise disjoint vertex sets.
struct ComponentGroup {
    std::vector<int> components;  // indices into the component list
    VertexSet K = 0;
};

// Everything derived from the dependency digraph that the order machinery
// needs: its components, the groups of overlapping components, and for every
// vertex the block J(v) - {v} itself for whole vertices, otherwise the K-set
// of the group containing v.
struct IntervalStructure {
    DependencyDigraph delta;
    std::vector<DeltaComponent> components;
    std::vector<ComponentGroup> groups;
    std::vector<int> group_of_vertex;    // -1 for whole vertices
    std::vector<VertexSet> j_of_vertex;  // J(v)
};

inline IntervalStructure interval_structure(const Digraph& d) {
    IntervalStructure is;
    is.delta = dependency_digraph(d);
    is.components = delta_components(is.delta);

    const int m = static_cast<int>(is.components.size());
    std::vector<int> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            if ((is.components[static_cast<std::size_t>(a)].endpoint_set &
                 is.components[static_cast<std::size_t>(b)].endpoint_set) != 0)
                parent[static_cast<std::size_t>(find(a))] = find(b);

    std::vector<int> group_id(static_cast<std::size_t>(m), -1);
    for (int a = 0; a < m; ++a) {
        const int root = find(a);
        if (group_id[static_cast<std::size_t>(root)] == -1) {
            group_id[static_cast<std::size_t>(root)] = static_cast<int>(is.groups.size());
            is.groups.emplace_back();
        }
        ComponentGroup& g = is.groups[static_cast<std::size_t>(group_id[static_cast<std::size_t>(root)])];
        g.components.push_back(a);
        g.K |= is.components[static_cast<std::size_t>(a)].endpoint_set;
    }

    const int n = d.vertex_count();
    is.group_of_vertex.assign(static_cast<std::size_t>(n), -1);
    is.j_of_vertex.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t g = 0; g < is.groups.size(); ++g)
        vs_for_each(is.groups[g].K,
                    [&](Vertex v) { is.group_of_vertex[static_cast<std::size_t>(v)] = static_cast<int>(g); });
    for (Vertex v = 0; v < n; ++v) {
        const int g = is.group_of_vertex[static_cast<std::size_t>(v)];
        is.j_of_vertex[static_cast<std::size_t>(v)] = g == -1 ? vs_bit(v) : is.groups[static_cast<std::size_t>(g)].K;
        if ((g == -1) != d.is_whole(v))
            throw std::logic_error("interval_structure: whole vertices must be exactly those "
                                   "outside every missing edge");
    }
    return is;
}

// A digraph is good when the vertex set of every component group of its
// dependency digraph is an interval.
inline bool is_good_digraph(const Digraph& d) {
    const IntervalStructure is = interval_structure(d);
    for (const ComponentGroup& g : is.groups)
        if (!is_interval(d, g.K)) return false;
    return true;
}

}  // namespace snp
