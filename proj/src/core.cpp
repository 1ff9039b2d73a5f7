#include "cubesum/core.hpp"

namespace cubesum {

namespace {

Int fourth(const Int& v) {
    Int sq = v * v;
    return sq * sq;
}

// Quadratic coefficients of 3n^2*A + 3n*B + C = 0.
struct Coeffs {
    Int A;  // a + b - 1
    Int B;  // a^2 + b^2 - 1
    Int C;  // a^3 + b^3 - 1
};

Coeffs coeffs(const Int& a, const Int& b) {
    return {a + b - 1, a * a + b * b - 1, cube(a) + cube(b) - 1};
}

// Appends n = (-3B + sign*s) / (6A) when the division is exact.
void try_branch(const Coeffs& c, const Int& s, Branch branch,
                std::vector<std::pair<Branch, Int>>& roots) {
    Int num = -3 * c.B + (branch == Branch::Plus ? s : -s);
    Int den = 6 * c.A;
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r == 0) roots.emplace_back(branch, q);
}

}  // namespace

char branch_char(Branch b) { return b == Branch::Plus ? '+' : '-'; }

CubeSumRecord make_record(const Int& n, const Int& a, const Int& b,
                          std::optional<Branch> root) {
    CubeSumRecord r;
    r.n = n;
    r.a = a;
    r.b = b;
    r.N = cube_sum_consecutive(n);
    r.x = n + a;
    r.y = n + b;
    r.root = root;
    return r;
}

Int cube_sum_consecutive(const Int& n) { return cube(n) + cube(n + 1); }

Int discriminant(const Int& a, const Int& b) {
    return 3 * (fourth(a - b) -
                (fourth(a) + fourth(b) + fourth(a - 1) + fourth(b - 1)) + 1);
}

Int quadratic_residual(const Int& n, const Int& a, const Int& b) {
    Coeffs c = coeffs(a, b);
    return 3 * n * n * c.A + 3 * n * c.B + c.C;
}

PairSolution solve_pair(const Int& a, const Int& b) {
    PairSolution out;
    out.a = a;
    out.b = b;
    out.D = discriminant(a, b);

    Coeffs c = coeffs(a, b);
    if (c.A == 0) {
        out.degenerate = true;
        if (c.B == 0 && c.C == 0) {
            // 0 = 0: the trivial pairs (1,0) and (0,1); every n solves it.
            out.identity = true;
            return out;
        }
        // Linear: 3n*B + C = 0.
        if (c.B != 0) {
            Int q, r;
            boost::multiprecision::divide_qr(-c.C, 3 * c.B, q, r);
            if (r == 0) out.roots.emplace_back(Branch::Plus, q);
        }
        return out;
    }

    if (out.D < 0) return out;
    Int s;
    if (!perfect_square(out.D, &s)) return out;
    try_branch(c, s, Branch::Plus, out.roots);
    try_branch(c, s, Branch::Minus, out.roots);
    return out;
}

std::vector<std::pair<Branch, Int>> alpha_solve(const Int& alpha) {
    return solve_pair(3, alpha).roots;
}

std::vector<AlphaHit> alpha_scan(long long alpha_min, long long alpha_max) {
    if (alpha_min > alpha_max)
        throw std::invalid_argument("alpha_scan: alpha_min > alpha_max");
    std::vector<AlphaHit> hits;
    for (long long alpha = alpha_min; alpha <= alpha_max; ++alpha) {
        for (const auto& [branch, n] : alpha_solve(alpha))
            hits.push_back({Int(alpha), branch, n});
    }
    return hits;
}

bool verify_record(const CubeSumRecord& r) {
    if (r.a == 1 && r.b == 0) return false;  // trivial self-representation
    if (r.N != cube_sum_consecutive(r.n)) return false;
    if (r.x != r.n + r.a || r.y != r.n + r.b) return false;
    return quadratic_residual(r.n, r.a, r.b) == 0;
}

std::optional<Branch> branch_of_root(const Int& n, const Int& a, const Int& b) {
    for (const auto& [branch, root] : solve_pair(a, b).roots)
        if (root == n) return branch;
    return std::nullopt;
}

CubeSumRecord mirror(const CubeSumRecord& r) {
    if (!verify_record(r))
        throw std::invalid_argument("mirror: record does not verify");
    Int a = -r.b + 1;
    Int b = -r.a + 1;
    Int n = -r.n - 1;
    return make_record(n, a, b, branch_of_root(n, a, b));
}

Representation scale_representation(const Representation& rep, const Int& k) {
    if (k < 1) throw std::invalid_argument("scale_representation: k must be >= 1");
    return {rep.x * k, rep.y * k};
}

Int eta(const CubeSumRecord& r) { return 2 * r.n + r.a + r.b; }

}  // namespace cubesum
