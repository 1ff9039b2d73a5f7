// Ground truth for two-cube decompositions, independent of the quadratic
// solver. Two routes that must agree:
//
//  - divisor_representations: x^3 + y^3 = (x+y)(x^2 - xy + y^2), so every
//    representation corresponds to a divisor s = x+y of N with s^3 <= 4N
//    (since x^2 - xy + y^2 >= s^2/4). With q = N/s and p = xy = (s^2 - q)/3,
//    the pair is recovered from t^2 = s^2 - 4p.
//
//  - naive_representations: direct double-loop over cube candidates, the
//    oracle-of-the-oracle.
//
// Work is bounded by a trial-division candidate budget; exceeding it is a
// reported error, never a silent truncation.
#pragma once

#include "cubesum/core.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cubesum {

struct OracleBudget {
    // Maximum candidate divisors (or scan steps) per call.
    std::uint64_t max_steps = 100'000'000;
};

class BudgetExceeded : public std::runtime_error {
  public:
    BudgetExceeded(Int N, std::uint64_t budget);

    // Attaches the n whose N = n^3+(n+1)^3 triggered the overrun.
    BudgetExceeded with_n(const Int& n) const;

    const Int& N() const { return N_; }
    const std::optional<Int>& n() const { return n_; }

  private:
    BudgetExceeded(Int N, std::optional<Int> n, std::uint64_t budget);

    Int N_;
    std::optional<Int> n_;
    std::uint64_t budget_;
};

// All representations of N, canonically ordered by descending x.
// Complete: every integer solution of x^3 + y^3 = N with x >= y is present
// (y may be negative).
struct RepresentationSet {
    Int N;
    std::vector<Representation> reps;

    bool operator==(const RepresentationSet&) const = default;
};

// Prime factorization by deterministic trial division. Replaceable component:
// everything above it only consumes the (prime, exponent) list.
struct PrimePower {
    Int prime;
    unsigned exponent;

    bool operator==(const PrimePower&) const = default;
};

std::vector<PrimePower> factorize(const Int& N, const OracleBudget& budget = {});

// All positive divisors of the factored number that are <= limit, ascending.
std::vector<Int> divisors_up_to(const std::vector<PrimePower>& factors,
                                const Int& limit);

// Divisor-enumeration route. Throws std::invalid_argument for N < 1,
// BudgetExceeded past the work limit.
RepresentationSet divisor_representations(const Int& N,
                                          const OracleBudget& budget = {});

// Brute-force route: for y >= 0 scan x up to cbrt(N); for y < 0 scan |y| up
// to sqrt(N/3) (x^3 - |y|^3 = N with x >= |y|+1 forces N > 3|y|^2).
RepresentationSet naive_representations(const Int& N,
                                        const OracleBudget& budget = {});

struct MultiEntry {
    Int n;
    RepresentationSet reps;

    bool operator==(const MultiEntry&) const = default;
};

// Every n in [1, n_max] whose N = n^3+(n+1)^3 has at least min_reps
// representations in total (the consecutive pair counts), ascending n.
// min_reps must be >= 2, n_max >= 1.
std::vector<MultiEntry> multi_representations(long long n_max, int min_reps,
                                              const OracleBudget& budget = {});

}  // namespace cubesum
