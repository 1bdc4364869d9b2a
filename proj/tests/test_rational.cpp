#include <catch2/catch_amalgamated.hpp>

#include <conelift/rational.hpp>

using namespace conelift;

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -3).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK_THROWS_AS(a / Rational(0), InputError);
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-7, 3).str() == "-7/3");
    CHECK(Rational(4).str() == "4");
}

TEST_CASE("rational ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(5, 4) > Rational(1));
    CHECK(Rational(5, 4) >= Rational(5, 4));
    CHECK(Rational(1, 3) != Rational(1, 4));
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("a/b"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1.5"), InputError);
}

TEST_CASE("rational overflow guard") {
    long long big = 3037000500LL;            // ceil(sqrt(2^63))
    CHECK_THROWS_AS(Rational(big, 1) * Rational(big, 1), InputError);
    CHECK(Rational(1, big) * Rational(big, 1) == Rational(1));
}

TEST_CASE("rational matrix basics") {
    RationalMatrix z(2, 3);
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z(1, 2) == Rational(0));
    z(0, 0) = Rational(1, 2);
    z(1, 2) = Rational(5);
    CHECK(!z.is_integral());
    CHECK(common_denominator(z) == 2);

    RationalMatrix w = z.scaled(Rational(2));
    CHECK(w(0, 0) == Rational(1));
    CHECK(w(1, 2) == Rational(10));
    CHECK(w.is_integral());
    CHECK(common_denominator(w) == 1);

    RationalMatrix s = z + z;
    CHECK(s == w);
    CHECK_THROWS_AS(z + RationalMatrix(1, 3), InputError);
    CHECK_THROWS_AS(RationalMatrix(2, 0), InputError);
}

TEST_CASE("common denominator is the lcm") {
    RationalMatrix z(1, 3);
    z(0, 0) = Rational(1, 6);
    z(0, 1) = Rational(1, 10);
    z(0, 2) = Rational(3);
    CHECK(common_denominator(z) == 30);
}
