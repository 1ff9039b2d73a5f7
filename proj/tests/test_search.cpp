#include <doctest.h>

#include "cubesum/fixtures.hpp"
#include "cubesum/search.hpp"

#include <algorithm>

using namespace cubesum;

TEST_CASE("search_consecutive small windows") {
    CHECK(search_consecutive(2).empty());

    auto first = search_consecutive(4);
    REQUIRE(first.size() == 1);
    CHECK(first[0].n == 3);
    CHECK(first[0].a == 3);
    CHECK(first[0].b == -8);
    CHECK(first[0].root == Branch::Plus);
    CHECK(first[0].N == 91);

    CHECK_THROWS_AS(search_consecutive(1), std::invalid_argument);
    CHECK_THROWS_AS(search_consecutive(100, 0), std::invalid_argument);
}

TEST_CASE("search_consecutive reproduces the record fixture") {
    auto records = search_consecutive(1000);
    const auto& expected = table1_records();
    REQUIRE(records.size() == expected.size());
    for (std::size_t k = 0; k < records.size(); ++k) CHECK(records[k] == expected[k]);
}

TEST_CASE("every searched record verifies and obeys the filter") {
    for (const auto& r : search_consecutive(300)) {
        CHECK(verify_record(r));
        CHECK(r.b < 0);
        CHECK(r.a > 0);
        CHECK(r.a < -r.b);
        CHECK(r.root.has_value());
    }
}

TEST_CASE("search output does not depend on the worker count") {
    auto one = search_consecutive(500, 1);
    auto four = search_consecutive(500, 4);
    auto eight = search_consecutive(500, 8);
    CHECK(one == four);
    CHECK(one == eight);
}

TEST_CASE("search propagates budget errors with the offending n") {
    OracleBudget tiny{40};
    try {
        search_consecutive(1000, 1, tiny);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        REQUIRE(e.n().has_value());
        CHECK(e.N() == cube_sum_consecutive(*e.n()));
    }
    // The same failure regardless of parallelism.
    try {
        search_consecutive(1000, 4, tiny);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        REQUIRE(e.n().has_value());
    }
}

TEST_CASE("scan_ab windows") {
    auto window = scan_ab(3, -8, 1000);
    REQUIRE(window.size() == 3);
    CHECK(window[0].n == 3);
    CHECK(window[0].a == 3);
    CHECK(window[0].b == -8);
    CHECK(window[0].root == Branch::Plus);
    CHECK(window[1].n == 4);
    CHECK(window[1].a == 2);
    CHECK(window[1].b == -7);
    CHECK(window[2].n == 9);
    CHECK(window[2].a == 3);
    CHECK(window[2].b == -8);
    CHECK(window[2].root == Branch::Minus);

    CHECK(scan_ab(1, -1, 1000).empty());

    CHECK_THROWS_AS(scan_ab(0, -8, 100), std::invalid_argument);
    CHECK_THROWS_AS(scan_ab(3, 0, 100), std::invalid_argument);
    CHECK_THROWS_AS(scan_ab(3, -8, 0), std::invalid_argument);
}

TEST_CASE("scan_ab agrees with search_consecutive on a shared window") {
    auto searched = search_consecutive(500);
    // Bound the (a, b) window by what the search actually produced.
    long long amax = 1, bmin = -1;
    for (const auto& r : searched) {
        amax = std::max(amax, r.a.convert_to<long long>());
        bmin = std::min(bmin, r.b.convert_to<long long>());
    }
    auto scanned = scan_ab(amax, bmin, 500);

    // Everything the search found must be rediscovered by the sweep.
    for (const auto& r : searched) {
        CHECK(std::find(scanned.begin(), scanned.end(), r) != scanned.end());
    }
    // And the sweep finds nothing within the window the search missed.
    for (const auto& r : scanned) {
        CHECK(std::find(searched.begin(), searched.end(), r) != searched.end());
    }
}

TEST_CASE("scan_ab records verify") {
    for (const auto& r : scan_ab(50, -150, 2000)) {
        CHECK(verify_record(r));
        CHECK(r.n > 0);
        CHECK(r.n < 2000);
    }
}
