#include <catch2/catch_amalgamated.hpp>

#include "radgen/field.hpp"

using namespace radgen;

TEST_CASE("rationals are canonical", "[field]") {
    Rational a(Integer(6), Integer(4));
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);
    CHECK(a.str() == "3/2");

    Rational b(Integer(-6), Integer(-4));
    CHECK(b.str() == "3/2");

    Rational c(Integer(1), Integer(-2));
    CHECK(c.numerator() == -1);
    CHECK(c.denominator() == 2);
    CHECK(c.str() == "-1/2");

    CHECK(Rational(7).str() == "7");
    CHECK(Rational::zero().is_zero());
    CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), ValueError);
}

TEST_CASE("rational arithmetic is exact", "[field]") {
    Rational half(Integer(1), Integer(2));
    Rational third(Integer(1), Integer(3));
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
    CHECK(half.inverse().str() == "2");
    CHECK_THROWS_AS(Rational::zero().inverse(), ValueError);
}

TEST_CASE("prime field arithmetic", "[field]") {
    GfP a(5, 7), b(4, 7);
    CHECK((a + b).residue() == 2);
    CHECK((a * b).residue() == 6);
    CHECK((a - b).residue() == 1);
    CHECK((-a).residue() == 2);
    CHECK(a.inverse().residue() == 3);  // 5*3 = 15 = 1 mod 7
    CHECK((a * a.inverse()).is_one());
    CHECK_THROWS_AS(GfP(0, 7).inverse(), ValueError);
    CHECK_THROWS_AS(a + GfP(1, 11), ContextMismatchError);
}

TEST_CASE("prime field inverses over F_32003", "[field]") {
    for (std::uint64_t r : {1ull, 2ull, 5ull, 17ull, 1009ull, 32002ull}) {
        GfP x(r, 32003);
        CHECK((x * x.inverse()).is_one());
    }
}

TEST_CASE("fractions map into F_p when the denominator is a unit", "[field]") {
    GfP proto(1, 7);
    GfP x = FieldTraits<GfP>::from_fraction(Integer(1), Integer(2), proto);
    CHECK((x + x).is_one());
    CHECK_THROWS_AS(FieldTraits<GfP>::from_fraction(Integer(1), Integer(14), proto),
                    ValueError);
    // negative integers reduce into [0, p)
    GfP y = FieldTraits<GfP>::from_fraction(Integer(-1), Integer(1), proto);
    CHECK(y.residue() == 6);
}

TEST_CASE("primality check", "[field]") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(32001));
}
