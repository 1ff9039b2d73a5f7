#include <doctest.h>

#include "cubesum/bigint.hpp"

#include <random>

using namespace cubesum;

TEST_CASE("isqrt on small values") {
    CHECK(isqrt(Int(0)) == 0);
    CHECK(isqrt(Int(1)) == 1);
    CHECK(isqrt(Int(2)) == 1);
    CHECK(isqrt(Int(3)) == 1);
    CHECK(isqrt(Int(4)) == 2);
    CHECK(isqrt(Int(99)) == 9);
    CHECK(isqrt(Int(100)) == 10);
    CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt floor property on random values") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 2000; ++trial) {
        Int v = Int(rng()) * Int(rng()) + Int(rng() % 1000);
        Int r = isqrt(v);
        CHECK(r * r <= v);
        CHECK((r + 1) * (r + 1) > v);
    }
}

TEST_CASE("isqrt is exact far beyond the double mantissa") {
    Int big = Int("123456789012345678901234567890");
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
    CHECK(isqrt(big * big + 1) == big);
}

TEST_CASE("perfect_square gate") {
    Int root;
    CHECK(perfect_square(Int(11664), &root));
    CHECK(root == 108);
    CHECK(perfect_square(Int(144), &root));
    CHECK(root == 12);
    CHECK(perfect_square(Int(0), &root));
    CHECK(root == 0);
    CHECK_FALSE(perfect_square(Int(21597)));
    CHECK_FALSE(perfect_square(Int(-4)));
    Int big = Int("98765432109876543210987654321");
    CHECK(perfect_square(big * big));
    CHECK_FALSE(perfect_square(big * big + 1));
}

TEST_CASE("icbrt on both signs") {
    CHECK(icbrt(Int(0)) == 0);
    CHECK(icbrt(Int(1)) == 1);
    CHECK(icbrt(Int(7)) == 1);
    CHECK(icbrt(Int(8)) == 2);
    CHECK(icbrt(Int(26)) == 2);
    CHECK(icbrt(Int(27)) == 3);
    CHECK(icbrt(Int(-1)) == -1);
    CHECK(icbrt(Int(-8)) == -2);
    CHECK(icbrt(Int(-9)) == -3);  // floor, not truncation
}

TEST_CASE("icbrt floor property on random values") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 2000; ++trial) {
        Int v = Int(rng() % 1'000'000'007) * Int(rng() % 1'000'000'007);
        Int r = icbrt(v);
        CHECK(cube(r) <= v);
        CHECK(cube(r + 1) > v);
    }
}

TEST_CASE("perfect_cube detects signed cubes") {
    Int root;
    CHECK(perfect_cube(Int(-125), &root));
    CHECK(root == -5);
    CHECK(perfect_cube(Int(1729) - cube(Int(12)), &root));
    CHECK(root == 1);
    CHECK_FALSE(perfect_cube(Int(9)));
    CHECK_FALSE(perfect_cube(Int(-9)));
    Int big = Int("1000000000000000000000000000001");
    CHECK(perfect_cube(cube(big), &root));
    CHECK(root == big);
}

TEST_CASE("parse_int is strict") {
    CHECK(parse_int("0") == 0);
    CHECK(parse_int("-91") == -91);
    CHECK(parse_int("3587409") == 3587409);
    CHECK(parse_int("123456789012345678901234567890") ==
          Int("123456789012345678901234567890"));
    CHECK_THROWS_AS(parse_int(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("12x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int(" 12"), std::invalid_argument);
    CHECK_THROWS_AS(parse_int("+12"), std::invalid_argument);
}
