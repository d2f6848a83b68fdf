#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <stdexcept>

#include "snp/generators.hpp"
#include "snp/io.hpp"

using namespace snp;

TEST_CASE("instances round-trip through JSON", "[io]") {
    Instance inst;
    inst.d = fixture_c3();
    inst.weights = WeightAssignment({Rational(1), Rational(3, 2), Rational(2)});
    inst.name = "triangle";
    inst.klass = "fixture";
    inst.seed = 77;

    std::stringstream buf;
    save_instance(inst, buf);
    const Instance back = load_instance(buf);
    CHECK(back.d == inst.d);
    REQUIRE(back.weights.has_value());
    CHECK(*back.weights == *inst.weights);
    CHECK(back.name == "triangle");
    CHECK(back.klass == "fixture");
    CHECK(back.seed == 77);

    // Unit weights stay implicit.
    Instance plain;
    plain.d = fixture_g4();
    std::stringstream buf2;
    save_instance(plain, buf2);
    CHECK(buf2.str().find("weights") == std::string::npos);
    const Instance back2 = load_instance(buf2);
    CHECK_FALSE(back2.weights.has_value());
    CHECK(back2.weights_or_unit().all_unit());
}

TEST_CASE("integer and pair weight spellings both parse", "[io]") {
    std::stringstream buf(R"({"n": 2, "arcs": [[0, 1]], "weights": [2, [3, 4]]})");
    const Instance inst = load_instance(buf);
    REQUIRE(inst.weights.has_value());
    CHECK(inst.weights->of(0) == Rational(2));
    CHECK(inst.weights->of(1) == Rational(3, 4));
}

TEST_CASE("malformed input is reported with context", "[io]") {
    auto load = [](const char* text) {
        std::stringstream buf(text);
        return load_instance(buf);
    };
    CHECK_THROWS_AS(load("{"), std::runtime_error);
    CHECK_THROWS_AS(load(R"({"arcs": []})"), std::runtime_error);            // no n
    CHECK_THROWS_AS(load(R"({"n": 2, "arcs": [[0, 2]]})"), std::runtime_error);
    CHECK_THROWS_AS(load(R"({"n": 2, "arcs": [[0, 1], [1, 0]]})"), std::runtime_error);
    CHECK_THROWS_AS(load(R"({"n": 2, "arcs": [], "weights": [1]})"), std::runtime_error);
    CHECK_THROWS_AS(load(R"({"n": 2, "arcs": [], "weights": [0, 1]})"), std::runtime_error);
    CHECK_THROWS_AS(load(R"({"n": 2, "arcs": [], "weights": [[1, 0], 1]})"),
                    std::runtime_error);
    CHECK_THROWS_MATCHES(load("{ nope"), std::runtime_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("byte")));

    // Digons are accepted once the instance opts out of orientedness.
    std::stringstream buf(R"({"n": 2, "oriented": false, "arcs": [[0, 1], [1, 0]]})");
    CHECK(load_instance(buf).d.arc_count() == 2);
}

TEST_CASE("graphviz export shows arcs, missing edges and the dependency digraph",
          "[io]") {
    const Digraph g4 = fixture_g4();
    const DependencyDigraph delta = dependency_digraph(g4);
    const Ordering order{0, 2, 1, 3};
    const std::string dot = export_dot(g4, &delta, &order);

    int plain_arcs = 0;
    int dashed = 0;
    std::istringstream lines(dot);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.find("style=dashed") != std::string::npos)
            ++dashed;
        else if (line.find("->") != std::string::npos &&
                 line.find("e") == std::string::npos &&
                 line.find("invis") == std::string::npos)
            ++plain_arcs;
    }
    CHECK(plain_arcs == 4);
    CHECK(dashed == 2);
    CHECK(dot.find("cluster_dependency") != std::string::npos);
    CHECK(dot.find("digraph snp {") == 0);
}

TEST_CASE("instance hashes separate distinct instances", "[io]") {
    Instance a;
    a.d = fixture_c3();
    Instance b = a;
    CHECK(instance_hash(a) == instance_hash(b));
    b.d = fixture_tt3();
    CHECK(instance_hash(a) != instance_hash(b));
    Instance c = a;
    c.weights = WeightAssignment({Rational(1), Rational(1), Rational(2)});
    CHECK(instance_hash(a) != instance_hash(c));
}
