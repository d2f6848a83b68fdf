#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "snp/dependency.hpp"
#include "snp/digraph.hpp"
#include "snp/median_order.hpp"
#include "snp/rational.hpp"
#include "snp/weights.hpp"

namespace snp {

// One digraph instance as stored on disk: the digraph, optional vertex
// weights, and optional provenance metadata.
struct Instance {
    Digraph d{0};
    std::optional<WeightAssignment> weights;
    std::string name;
    std::string klass;
    std::optional<std::uint64_t> seed;

    WeightAssignment weights_or_unit() const {
        return weights ? *weights : WeightAssignment::unit(d.vertex_count());
    }
};

namespace detail {

inline nlohmann::json weight_to_json(const Rational& r) {
    if (r.is_integer()) return r.numerator();
    return nlohmann::json::array({r.numerator(), r.denominator()});
}

inline Rational weight_from_json(const nlohmann::json& j, std::size_t index) {
    const std::string where = "weights[" + std::to_string(index) + "]";
    try {
        if (j.is_number_integer()) return Rational{j.get<std::int64_t>()};
        if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
            j[1].is_number_integer())
            return Rational{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
    } catch (const std::exception& ex) {
        throw std::runtime_error("instance: " + where + ": " + ex.what());
    }
    throw std::runtime_error("instance: " + where +
                             " must be an integer or a [numerator, denominator] pair");
}

}  // namespace detail

inline Instance load_instance(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& ex) {
        throw std::runtime_error("instance: malformed JSON at byte " + std::to_string(ex.byte) +
                                 ": " + ex.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::runtime_error("instance: expected an object with an integer field \"n\"");
    const auto n = j["n"].get<std::int64_t>();
    if (n < 0 || n > kMaxVertices)
        throw std::runtime_error("instance: n must be in [0, 64]");

    Instance inst;
    const bool oriented = j.value("oriented", true);
    inst.d = Digraph(static_cast<int>(n), oriented);
    if (j.contains("arcs")) {
        if (!j["arcs"].is_array())
            throw std::runtime_error("instance: \"arcs\" must be an array of [from, to] pairs");
        std::size_t idx = 0;
        for (const auto& arc : j["arcs"]) {
            if (!arc.is_array() || arc.size() != 2 || !arc[0].is_number_integer() ||
                !arc[1].is_number_integer())
                throw std::runtime_error("instance: arcs[" + std::to_string(idx) +
                                         "] must be a [from, to] pair");
            try {
                inst.d.add_arc(arc[0].get<int>(), arc[1].get<int>());
            } catch (const std::exception& ex) {
                throw std::runtime_error("instance: arcs[" + std::to_string(idx) + "]: " +
                                         ex.what());
            }
            ++idx;
        }
    }
    if (j.contains("weights")) {
        if (!j["weights"].is_array() || static_cast<std::int64_t>(j["weights"].size()) != n)
            throw std::runtime_error("instance: \"weights\" must list one weight per vertex");
        std::vector<Rational> w;
        for (std::size_t i = 0; i < j["weights"].size(); ++i)
            w.push_back(detail::weight_from_json(j["weights"][i], i));
        try {
            inst.weights = WeightAssignment(std::move(w));
        } catch (const std::exception& ex) {
            throw std::runtime_error(std::string("instance: ") + ex.what());
        }
    }
    if (j.contains("meta") && j["meta"].is_object()) {
        const auto& meta = j["meta"];
        inst.name = meta.value("name", "");
        inst.klass = meta.value("class", "");
        if (meta.contains("seed") && meta["seed"].is_number_unsigned())
            inst.seed = meta["seed"].get<std::uint64_t>();
    }
    return inst;
}

inline Instance load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("instance: cannot open " + path);
    return load_instance(in);
}

inline void save_instance(const Instance& inst, std::ostream& out) {
    nlohmann::json j;
    j["n"] = inst.d.vertex_count();
    j["oriented"] = inst.d.oriented();
    auto arcs = nlohmann::json::array();
    for (const auto& [u, v] : inst.d.arcs()) arcs.push_back(nlohmann::json::array({u, v}));
    j["arcs"] = std::move(arcs);
    if (inst.weights) {
        auto w = nlohmann::json::array();
        for (Vertex v = 0; v < inst.d.vertex_count(); ++v)
            w.push_back(detail::weight_to_json(inst.weights->of(v)));
        j["weights"] = std::move(w);
    }
    nlohmann::json meta = nlohmann::json::object();
    if (!inst.name.empty()) meta["name"] = inst.name;
    if (!inst.klass.empty()) meta["class"] = inst.klass;
    if (inst.seed) meta["seed"] = *inst.seed;
    if (!meta.empty()) j["meta"] = std::move(meta);
    out << j.dump(2) << "\n";
}

inline void save_instance_file(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("instance: cannot write " + path);
    save_instance(inst, out);
}

// Graphviz rendering: the digraph with its missing edges dashed, optionally
// the dependency digraph as a boxed cluster, and optionally an ordering as
// left-to-right layout hints.
inline std::string export_dot(const Digraph& d, const DependencyDigraph* delta = nullptr,
                              const Ordering* order = nullptr) {
    std::ostringstream out;
    out << "digraph snp {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        out << "  v" << v << " [label=\"" << v << "\"];\n";
    for (const auto& [u, v] : d.arcs()) out << "  v" << u << " -> v" << v << ";\n";
    for (const MissingEdge& e : missing_graph(d).edges)
        out << "  v" << e.u << " -> v" << e.v << " [style=dashed, dir=none, constraint=false];\n";
    if (order && !order->empty()) {
        out << "  // ordering:";
        for (Vertex v : *order) out << " " << v;
        out << "\n";
        for (std::size_t p = 0; p + 1 < order->size(); ++p)
            out << "  v" << (*order)[p] << " -> v" << (*order)[p + 1]
                << " [style=invis, weight=100];\n";
    }
    if (delta && delta->node_count() > 0) {
        out << "  subgraph cluster_dependency {\n";
        out << "    label=\"dependency digraph\";\n";
        out << "    node [shape=box];\n";
        for (int i = 0; i < delta->node_count(); ++i) {
            const MissingEdge& e = delta->nodes[static_cast<std::size_t>(i)];
            out << "    e" << i << " [label=\"{" << e.u << "," << e.v << "}\"];\n";
        }
        for (const DeltaArc& a : delta->arcs)
            out << "    e" << a.from << " -> e" << a.to << ";\n";
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

// FNV-1a over a canonical rendering of the instance, for run records and
// dump file names.
inline std::uint64_t instance_hash(const Instance& inst) {
    std::ostringstream key;
    key << "n=" << inst.d.vertex_count() << ";o=" << inst.d.oriented() << ";a=";
    for (const auto& [u, v] : inst.d.arcs()) key << u << "," << v << ";";
    key << "w=";
    if (inst.weights)
        for (Vertex v = 0; v < inst.d.vertex_count(); ++v)
            key << inst.weights->of(v).to_string() << ";";
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const char c : key.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace snp
