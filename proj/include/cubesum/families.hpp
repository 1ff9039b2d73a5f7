// The two infinite families of solutions, generated two independent ways:
//
//  - parametric closed forms in the row index i, derived from the
//    substitution n+b = -(n+a) + beta with beta = 2i-1 (Family One) or
//    beta = 3(2i-1) (Family Two);
//
//  - third-order linear recurrences
//        n_i = 3n_{i-1} - 3n_{i-2} + n_{i-3} + kappa
//        x_i = 3x_{i-1} - 3x_{i-2} + x_{i-3} + lambda
//        y_i = 3y_{i-1} - 3y_{i-2} + y_{i-3} - lambda
//    with kappa = 72 / 216 and lambda = 576(i-2) / 1728(i-2) for the two
//    families, lambda evaluated at the index being produced.
//
// The two methods must agree exactly; rows grow like i^9 in N, so everything
// is arbitrary precision.
#pragma once

#include "cubesum/core.hpp"

#include <optional>
#include <vector>

namespace cubesum {

enum class Family { One, Two };

struct FamilyRow {
    Family family;
    Int i;
    Int n;
    Int x;     // n + a
    Int y;     // n + b
    Int eta;   // x + y; 2i-1 for Family One, 3(2i-1) for Family Two
    Int N;
    Int beta;  // offset of the substitution y = -x + beta; equals eta

    bool operator==(const FamilyRow&) const = default;
};

struct FamilyParams {
    Family family;
    int kappa;
    int lambda_coefficient;  // lambda = lambda_coefficient * (i - 2)
};

FamilyParams family_params(Family f);

// Closed-form row i >= 1 of the given family. Throws for i < 1.
FamilyRow parametric_row(Family f, const Int& i);

// Rows i = 1..count; the first three rows seed the recurrence from the
// parametric forms. Throws for count < 1.
std::vector<FamilyRow> recurrence_rows(Family f, long long count);

// Identifies which family row, if any, a verified record is. eta is strictly
// monotone in i within each family, so the candidate index is unique:
// i = (eta+1)/2 for Family One (eta positive odd), i = (eta/3+1)/2 for
// Family Two (eta a positive odd multiple of 3); Family Two is tested first
// when both candidates exist. Throws when r does not verify.
std::optional<std::pair<Family, Int>> classify_family(const CubeSumRecord& r);

// Record view of a family row (root branch recomputed from the quadratic).
CubeSumRecord to_record(const FamilyRow& row);

}  // namespace cubesum
