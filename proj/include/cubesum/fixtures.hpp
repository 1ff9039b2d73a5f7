// Golden fixtures: the 31 printed records for n < 1000 and the first twenty
// rows of both families, frozen as data so the generators are checked
// against the published values rather than against themselves.
#pragma once

#include "cubesum/core.hpp"
#include "cubesum/families.hpp"

#include <string>
#include <vector>

namespace cubesum {

// The 31 records (a, b, root, n, N, x, y) in increasing-N order with the
// ascending-a tie-break, exactly as printed.
const std::vector<CubeSumRecord>& table1_records();

// Printed family values for i = 1..20: i, n, x = n+a, y = n+b, eta.
struct FamilyFixtureRow {
    long long i;
    long long n;
    long long x;
    long long y;
    long long eta;
};

const std::vector<FamilyFixtureRow>& table2_fixture(Family f);

// The two built-in tables in their printed layout (markdown).
std::string table1_markdown();
std::string table2_markdown();

}  // namespace cubesum
