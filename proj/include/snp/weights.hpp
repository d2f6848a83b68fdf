#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "snp/rational.hpp"
#include "snp/vertexset.hpp"

namespace snp {

// A strictly positive rational weight per vertex. The weight of a vertex set
// is the sum over its members; the weight of an arc (x, y) is w(x) * w(y).
class WeightAssignment {
public:
    explicit WeightAssignment(std::vector<Rational> weights) : w_(std::move(weights)) {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (!w_[i].is_positive())
                throw std::invalid_argument("WeightAssignment: weight of vertex " +
                                            std::to_string(i) + " is not positive");
    }

    static WeightAssignment unit(int n) {
        return WeightAssignment(std::vector<Rational>(static_cast<std::size_t>(n), Rational{1}));
    }

    int size() const { return static_cast<int>(w_.size()); }

    const Rational& of(Vertex v) const {
        if (v < 0 || v >= size())
            throw std::out_of_range("WeightAssignment: vertex id out of range");
        return w_[static_cast<std::size_t>(v)];
    }

    Rational of_set(VertexSet s) const {
        Rational total;
        vs_for_each(s, [&](Vertex v) { total += of(v); });
        return total;
    }

    Rational arc_weight(Vertex from, Vertex to) const { return of(from) * of(to); }

    // Weights restricted to a subset, reindexed in increasing id order (the
    // convention used by induced subgraphs).
    WeightAssignment restricted(VertexSet keep) const {
        std::vector<Rational> sub;
        sub.reserve(static_cast<std::size_t>(vs_size(keep)));
        vs_for_each(keep, [&](Vertex v) { sub.push_back(of(v)); });
        return WeightAssignment(std::move(sub));
    }

    WeightAssignment scaled(const Rational& factor) const {
        std::vector<Rational> out = w_;
        for (Rational& x : out) x *= factor;
        return WeightAssignment(std::move(out));
    }

    bool all_unit() const {
        for (const Rational& x : w_)
            if (x != Rational{1}) return false;
        return true;
    }

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;

private:
    std::vector<Rational> w_;
};

}  // namespace snp
