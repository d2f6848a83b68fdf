#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace snp {

using Vertex = int;

// Vertex subsets of digraphs on at most 64 vertices, one bit per vertex id.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet vs_bit(Vertex v) { return VertexSet{1} << v; }

constexpr bool vs_contains(VertexSet s, Vertex v) { return (s >> v) & VertexSet{1}; }

constexpr int vs_size(VertexSet s) { return std::popcount(s); }

constexpr bool vs_empty(VertexSet s) { return s == 0; }

// Set {0, 1, ..., n-1}.
constexpr VertexSet vs_full(int n) {
    return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr Vertex vs_lowest(VertexSet s) { return static_cast<Vertex>(std::countr_zero(s)); }

template <typename Fn>
void vs_for_each(VertexSet s, Fn&& fn) {
    while (s != 0) {
        fn(static_cast<Vertex>(std::countr_zero(s)));
        s &= s - 1;
    }
}

inline std::vector<Vertex> vs_to_vector(VertexSet s) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(vs_size(s)));
    vs_for_each(s, [&](Vertex v) { out.push_back(v); });
    return out;
}

}  // namespace snp
