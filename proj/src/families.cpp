#include "cubesum/families.hpp"

namespace cubesum {

FamilyParams family_params(Family f) {
    if (f == Family::One) return {Family::One, 72, 576};
    return {Family::Two, 216, 1728};
}

FamilyRow parametric_row(Family f, const Int& i) {
    if (i < 1) throw std::invalid_argument("parametric_row: i must be >= 1");

    FamilyRow row;
    row.family = f;
    row.i = i;
    const Int m = 2 * i - 1;

    if (f == Family::One) {
        // beta = 2i-1
        const Int beta = m;
        const Int w = 3 * beta * beta + 4;   // 3*beta^2 + 4
        const Int u = 3 * beta * beta * (beta * beta + 2);
        row.n = (beta * w - 1) / 2;
        row.N = beta * w * (beta * beta * w * w + 3) / 4;
        row.x = (u + 2 * i + 1) / 2;
        row.y = -(u - 2 * i + 3) / 2;
        row.beta = beta;
    } else {
        // beta = 3(2i-1)
        const Int m3 = cube(m);
        row.n = (9 * m3 - 1) / 2;
        row.N = 27 * m3 * (27 * m3 * m3 + 1) / 4;
        row.x = 3 * m * (3 * m3 + 1) / 2;
        row.y = -3 * m * (3 * m3 - 1) / 2;
        row.beta = 3 * m;
    }
    row.eta = row.x + row.y;
    return row;
}

std::vector<FamilyRow> recurrence_rows(Family f, long long count) {
    if (count < 1) throw std::invalid_argument("recurrence_rows: count must be >= 1");

    const FamilyParams params = family_params(f);
    std::vector<FamilyRow> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (long long i = 1; i <= count && i <= 3; ++i)
        rows.push_back(parametric_row(f, i));

    for (long long i = 4; i <= count; ++i) {
        const FamilyRow& r1 = rows[static_cast<std::size_t>(i - 2)];  // i-1
        const FamilyRow& r2 = rows[static_cast<std::size_t>(i - 3)];  // i-2
        const FamilyRow& r3 = rows[static_cast<std::size_t>(i - 4)];  // i-3
        const Int lambda = Int(params.lambda_coefficient) * (i - 2);

        FamilyRow row;
        row.family = f;
        row.i = i;
        row.n = 3 * r1.n - 3 * r2.n + r3.n + params.kappa;
        row.x = 3 * r1.x - 3 * r2.x + r3.x + lambda;
        row.y = 3 * r1.y - 3 * r2.y + r3.y - lambda;
        row.eta = row.x + row.y;
        row.beta = row.eta;
        row.N = cube_sum_consecutive(row.n);
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

bool matches(const CubeSumRecord& r, const FamilyRow& row) {
    return r.n == row.n && r.x == row.x && r.y == row.y;
}

}  // namespace

std::optional<std::pair<Family, Int>> classify_family(const CubeSumRecord& r) {
    if (!verify_record(r))
        throw std::invalid_argument("classify_family: record does not verify");

    const Int e = eta(r);
    if (e <= 0 || e % 2 == 0) return std::nullopt;

    if (e % 3 == 0 && (e / 3) % 2 != 0) {
        const Int i = (e / 3 + 1) / 2;
        if (matches(r, parametric_row(Family::Two, i)))
            return std::make_pair(Family::Two, i);
    }
    const Int i = (e + 1) / 2;
    if (matches(r, parametric_row(Family::One, i)))
        return std::make_pair(Family::One, i);
    return std::nullopt;
}

CubeSumRecord to_record(const FamilyRow& row) {
    const Int a = row.x - row.n;
    const Int b = row.y - row.n;
    return make_record(row.n, a, b, branch_of_root(row.n, a, b));
}

}  // namespace cubesum
