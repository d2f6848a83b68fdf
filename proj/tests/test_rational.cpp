#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <limits>
#include <stdexcept>

#include "snp/rational.hpp"

using snp::Rational;

TEST_CASE("construction reduces and normalizes the sign", "[rational]") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(42).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic follows the field axioms on samples", "[rational]") {
    const Rational a(3, 4);
    const Rational b(5, 6);
    CHECK(a + b == Rational(19, 12));
    CHECK(a - b == Rational(-1, 12));
    CHECK(a * b == Rational(5, 8));
    CHECK(a / b == Rational(9, 10));
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational(0));
    CHECK((a / a) == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);

    Rational acc(0);
    for (int i = 1; i <= 10; ++i) acc += Rational(1, i);
    CHECK(acc == Rational(7381, 2520));
}

TEST_CASE("comparisons order by value", "[rational]") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7, 2) > Rational(3));
    CHECK(Rational(5, 5) == Rational(1));
    CHECK(Rational(1, 3).is_positive());
    CHECK_FALSE(Rational(0).is_positive());
    CHECK(Rational(0).is_zero());
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("overflow in a narrowing product is reported, not wrapped", "[rational]") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
    const Rational huge(big, 1);
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
    // Cross-reduction keeps representable results representable.
    CHECK(Rational(big, 3) * Rational(3, big) == Rational(1));
}

TEST_CASE("string rendering and hashing", "[rational]") {
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(std::hash<Rational>{}(Rational(2, 4)) == std::hash<Rational>{}(Rational(1, 2)));
}
