// Exact algebra for integers N that are both a sum of two consecutive cubes
// and a sum of two other cubes:
//
//     N = n^3 + (n+1)^3 = (n+a)^3 + (n+b)^3
//
// Eliminating the cubes in n reduces the second equality to the quadratic
//
//     3n^2(a+b-1) + 3n(a^2+b^2-1) + (a^3+b^3-1) = 0
//
// with discriminant
//
//     D = 3((a-b)^4 - (a^4 + b^4 + (a-1)^4 + (b-1)^4) + 1)
//
// so integer solutions exist exactly when D is a perfect square and the root
// formula n = (-3(a^2+b^2-1) +/- sqrt(D)) / (6(a+b-1)) divides exactly.
// All arithmetic is arbitrary precision; perfect squares are detected by
// exact integer square root, never floating point.
#pragma once

#include "cubesum/bigint.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cubesum {

// Which sign of sqrt(D) produced a root: Plus = "+sqrt(D)" (the n+ column),
// Minus = "-sqrt(D)" (the n- column).
enum class Branch { Plus, Minus };

char branch_char(Branch b);  // '+' or '-'

// One two-cube decomposition x^3 + y^3 of some integer, canonically x >= y.
// y may be negative; x > 0 whenever the represented integer is positive.
struct Representation {
    Int x;
    Int y;

    Int value() const { return cube(x) + cube(y); }
    bool operator==(const Representation&) const = default;
};

// One solution (n, a, b) of the double identity above, with the derived
// fields stored explicitly: N = n^3+(n+1)^3, x = n+a, y = n+b.
// The trivial self-representation (a,b) = (1,0) is excluded.
struct CubeSumRecord {
    Int n;
    Int a;
    Int b;
    Int N;
    Int x;
    Int y;
    std::optional<Branch> root;

    bool operator==(const CubeSumRecord&) const = default;
};

// Builds a record with derived fields filled in from (n, a, b).
CubeSumRecord make_record(const Int& n, const Int& a, const Int& b,
                          std::optional<Branch> root = std::nullopt);

// Outcome of solving the quadratic for a fixed pair (a, b).
//  - degenerate: the quadratic coefficient a+b-1 vanished (linear equation).
//  - identity:   the equation collapsed to 0 = 0; every n works. Happens only
//                for the trivial pairs (1,0) and (0,1). roots stays empty.
// roots lists every integer solution with its branch tag; for the linear
// degenerate case a single root would be tagged Plus (it provably never
// occurs for integer n: the linear form forces n = -1/2 whenever a+b = 1).
struct PairSolution {
    Int a;
    Int b;
    Int D;
    std::vector<std::pair<Branch, Int>> roots;
    bool degenerate = false;
    bool identity = false;
};

// n^3 + (n+1)^3, any integer n.
Int cube_sum_consecutive(const Int& n);

// The quartic discriminant D above, exact.
Int discriminant(const Int& a, const Int& b);

// All integer roots n of the quadratic for fixed (a, b); total over all
// inputs, every outcome is encoded in the result.
PairSolution solve_pair(const Int& a, const Int& b);

// The alpha-shaped special case N = n^3+(n+1)^3 = (n+3)^3+(n+alpha)^3,
// i.e. solve_pair(3, alpha) restricted to its roots.
std::vector<std::pair<Branch, Int>> alpha_solve(const Int& alpha);

struct AlphaHit {
    Int alpha;
    Branch branch;
    Int n;

    bool operator==(const AlphaHit&) const = default;
};

// Exhaustive sweep of alpha_solve over [alpha_min, alpha_max], ascending.
// Throws std::invalid_argument when alpha_min > alpha_max.
std::vector<AlphaHit> alpha_scan(long long alpha_min, long long alpha_max);

// true iff n^3+(n+1)^3 = (n+a)^3+(n+b)^3 exactly, the derived fields N, x, y
// are consistent, and (a,b) is not the trivial (1,0).
bool verify_record(const CubeSumRecord& r);

// The sign-flipped companion solution a' = -b+1, b' = -a+1, n' = -n-1.
// The returned triple satisfies the same quadratic (its N' equals -N of the
// input) and mirror(mirror(r)) == r up to the recomputed branch tag.
// Throws std::invalid_argument when r does not verify.
CubeSumRecord mirror(const CubeSumRecord& r);

// (x, y) -> (k*x, k*y), representing k^3 * N. Throws for k < 1.
Representation scale_representation(const Representation& rep, const Int& k);

// eta = (n+a) + (n+b) = 2n + a + b.
Int eta(const CubeSumRecord& r);

// Left-hand side of the reduced quadratic at (n, a, b); zero iff the double
// identity holds. Shared by verify/solve and by the property tests.
Int quadratic_residual(const Int& n, const Int& a, const Int& b);

// Branch tag of n among the roots of solve_pair(a, b), if any; Plus wins a
// tie. Used wherever records are (re)tagged after the fact.
std::optional<Branch> branch_of_root(const Int& n, const Int& a, const Int& b);

}  // namespace cubesum
