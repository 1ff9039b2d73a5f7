#include <doctest.h>

#include "cubesum/core.hpp"
#include "cubesum/fixtures.hpp"

#include <random>

using namespace cubesum;

namespace {

std::vector<std::pair<Branch, Int>> roots_of(long long a, long long b) {
    return solve_pair(Int(a), Int(b)).roots;
}

}  // namespace

TEST_CASE("cube_sum_consecutive") {
    CHECK(cube_sum_consecutive(3) == 91);
    CHECK(cube_sum_consecutive(0) == 1);
    CHECK(cube_sum_consecutive(9) == 1729);
    CHECK(cube_sum_consecutive(-1) == -1);
    CHECK(cube_sum_consecutive(-4) == -91);
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(3, -8) == 11664);
    CHECK(discriminant(3, -8) == Int(108) * 108);
    CHECK(discriminant(2, -7) == 144);
    CHECK(discriminant(1, 0) == 0);
    CHECK(discriminant(5, -5) == 21597);
}

TEST_CASE("discriminant equals the standard quadratic discriminant") {
    // The quartic form must agree with 9B^2 - 12AC of 3n^2 A + 3n B + C = 0.
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 3000; ++trial) {
        Int a = Int(rng() % 4001) - 2000;
        Int b = Int(rng() % 4001) - 2000;
        Int A = a + b - 1;
        Int B = a * a + b * b - 1;
        Int C = cube(a) + cube(b) - 1;
        CHECK(discriminant(a, b) == 9 * B * B - 12 * A * C);
    }
}

TEST_CASE("solve_pair on the published pairs") {
    auto s = solve_pair(3, -8);
    REQUIRE(s.roots.size() == 2);
    CHECK(s.roots[0] == std::pair{Branch::Plus, Int(3)});
    CHECK(s.roots[1] == std::pair{Branch::Minus, Int(9)});
    CHECK(s.D == 11664);
    CHECK_FALSE(s.degenerate);

    // Minus branch would be 14/3: rejected by exact division.
    auto s2 = solve_pair(2, -7);
    REQUIRE(s2.roots.size() == 1);
    CHECK(s2.roots[0] == std::pair{Branch::Plus, Int(4)});
}

TEST_CASE("solve_pair degenerate cases") {
    auto trivial = solve_pair(1, 0);
    CHECK(trivial.degenerate);
    CHECK(trivial.identity);
    CHECK(trivial.roots.empty());

    auto swapped = solve_pair(0, 1);
    CHECK(swapped.degenerate);
    CHECK(swapped.identity);
    CHECK(swapped.roots.empty());

    // a+b = 1 but not the trivial pair: linear form has no integer root.
    auto linear = solve_pair(3, -2);
    CHECK(linear.degenerate);
    CHECK_FALSE(linear.identity);
    CHECK(linear.roots.empty());
}

TEST_CASE("solve_pair rejects non-square discriminants") {
    auto s = solve_pair(5, -5);
    CHECK(s.D == 21597);
    CHECK(s.roots.empty());
    CHECK(solve_pair(4, -5).roots.empty());
}

TEST_CASE("solve_pair roots satisfy the quadratic exactly") {
    std::mt19937_64 rng(99);
    int roots_seen = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        Int a = Int(rng() % 401) - 200;
        Int b = Int(rng() % 401) - 200;
        auto s = solve_pair(a, b);
        if (s.identity) continue;
        for (const auto& [branch, n] : s.roots) {
            ++roots_seen;
            CHECK(quadratic_residual(n, a, b) == 0);
        }
        if (!s.degenerate && !s.roots.empty()) {
            Int sq;
            CHECK(perfect_square(s.D, &sq));
        }
    }
    CHECK(roots_seen > 0);
}

TEST_CASE("alpha_solve") {
    auto hits = alpha_solve(-8);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == std::pair{Branch::Plus, Int(3)});
    CHECK(hits[1] == std::pair{Branch::Minus, Int(9)});

    CHECK(alpha_solve(0).empty());
    CHECK(alpha_solve(-2).empty());  // degenerate denominator, 36n+18=0
}

TEST_CASE("alpha_solve agrees with solve_pair(3, alpha)") {
    for (long long alpha = -500; alpha <= 500; ++alpha)
        CHECK(alpha_solve(alpha) == solve_pair(3, alpha).roots);
}

TEST_CASE("alpha_scan") {
    auto hits = alpha_scan(-10, 10);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0] == AlphaHit{-8, Branch::Plus, 3});
    CHECK(hits[1] == AlphaHit{-8, Branch::Minus, 9});

    CHECK(alpha_scan(0, 10).empty());
    CHECK(alpha_scan(-8, -8).size() == 2);
    CHECK_THROWS_AS(alpha_scan(5, -5), std::invalid_argument);
}

TEST_CASE("verify_record") {
    CHECK(verify_record(make_record(18, 10, -39)));
    CHECK_FALSE(verify_record(make_record(18, 10, -38)));
    CHECK(verify_record(make_record(121, 32, -103)));
    CHECK_FALSE(verify_record(make_record(7, 1, 0)));  // trivial pair excluded

    // Derived-field tampering must fail even when (n, a, b) is a solution.
    CubeSumRecord r = make_record(3, 3, -8);
    r.N += 1;
    CHECK_FALSE(verify_record(r));
    r = make_record(3, 3, -8);
    r.x += 1;
    CHECK_FALSE(verify_record(r));
}

TEST_CASE("mirror on published rows") {
    CubeSumRecord m = mirror(make_record(3, 3, -8));
    CHECK(m.n == -4);
    CHECK(m.a == 9);
    CHECK(m.b == -2);
    CHECK(m.N == -91);
    CHECK(cube(m.x) + cube(m.y) == -91);

    CubeSumRecord m2 = mirror(make_record(4, 2, -7));
    CHECK(m2.n == -5);
    CHECK(m2.a == 8);
    CHECK(m2.b == -1);
    CHECK(m2.N == -189);

    CHECK_THROWS_AS(mirror(make_record(18, 10, -38)), std::invalid_argument);
}

TEST_CASE("mirror is an involution and preserves the quadratic") {
    for (const auto& r : table1_records()) {
        CubeSumRecord m = mirror(r);
        CHECK(quadratic_residual(m.n, m.a, m.b) == 0);
        CHECK(m.N == -r.N);
        CubeSumRecord back = mirror(m);
        CHECK(back.n == r.n);
        CHECK(back.a == r.a);
        CHECK(back.b == r.b);
    }
}

TEST_CASE("scale_representation") {
    Representation taxi{12, 1};
    Representation scaled = scale_representation(taxi, 2);
    CHECK(scaled == Representation{24, 2});
    CHECK(scaled.value() == 13832);

    CHECK(scale_representation({6, -5}, 1) == Representation{6, -5});

    Representation euler = scale_representation({4, 3}, 3);
    CHECK(euler == Representation{12, 9});
    CHECK(euler.value() == 2457);

    CHECK_THROWS_AS(scale_representation({1, 1}, 0), std::invalid_argument);
    CHECK_THROWS_AS(scale_representation({1, 1}, -2), std::invalid_argument);
}

TEST_CASE("scaling preserves the identity at k^3 N") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 500; ++trial) {
        Representation rep{Int(rng() % 5000), Int(rng() % 5000) - 2500};
        if (rep.x < rep.y) std::swap(rep.x, rep.y);
        Int N = rep.value();
        for (Int k : {2, 3, 5}) {
            Representation s = scale_representation(rep, k);
            CHECK(s.value() == cube(k) * N);
        }
    }
}

TEST_CASE("eta") {
    CHECK(eta(make_record(3, 3, -8)) == 1);
    CHECK(eta(make_record(4, 2, -7)) == 3);
    CHECK(eta(make_record(46, 105, -194)) == 3);
}

TEST_CASE("roots from solve_pair always verify as records") {
    for (long long a = 1; a <= 60; ++a) {
        for (long long b = -120; b <= -1; ++b) {
            for (const auto& [branch, n] : roots_of(a, b)) {
                CubeSumRecord r = make_record(n, a, b, branch);
                CHECK(verify_record(r));
            }
        }
    }
}
