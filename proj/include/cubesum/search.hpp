// Exhaustive enumeration of records under the filter b < 0 < a < |b|.
//
// Primary strategy iterates n and decomposes N = n^3+(n+1)^3 through the
// divisor oracle, which is provably exhaustive for n < n_max. The direct
// (a,b)-window scan over the quadratic's closed form is kept as an
// independent validator; it needs a-priori bounds on (a, b) that the
// n-iteration does not.
#pragma once

#include "cubesum/core.hpp"
#include "cubesum/oracle.hpp"

#include <vector>

namespace cubesum {

// Total order used for all record output: N, then a ascending (the printed
// tie-break for equal N), then the remaining fields.
bool record_less(const CubeSumRecord& l, const CubeSumRecord& r);

// All records with 0 < n < n_max, sorted by (N, a). jobs >= 1 partitions the
// n-range into contiguous chunks; neither jobs nor chunk scheduling affects
// the output. Throws std::invalid_argument for n_max < 2; propagates oracle
// budget errors with the offending n attached.
std::vector<CubeSumRecord> search_consecutive(long long n_max, int jobs = 1,
                                              const OracleBudget& budget = {});

// Direct sweep of 1 <= a <= a_max, b_min <= b <= -1, a < |b|, keeping
// integer roots with 0 < n < n_limit; same ordering as search_consecutive.
std::vector<CubeSumRecord> scan_ab(long long a_max, long long b_min,
                                   long long n_limit);

}  // namespace cubesum
