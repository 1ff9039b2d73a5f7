#include "cubesum/oracle.hpp"

#include <algorithm>
#include <limits>

namespace cubesum {

namespace {

std::string budget_message(const Int& N, const std::optional<Int>& n,
                           std::uint64_t budget) {
    std::string msg = "oracle budget exceeded (" + std::to_string(budget) +
                      " steps) while decomposing N=" + N.str();
    if (n) msg += " at n=" + n->str();
    return msg;
}

}  // namespace

BudgetExceeded::BudgetExceeded(Int N, std::uint64_t budget)
    : BudgetExceeded(std::move(N), std::nullopt, budget) {}

BudgetExceeded::BudgetExceeded(Int N, std::optional<Int> n, std::uint64_t budget)
    : std::runtime_error(budget_message(N, n, budget)),
      N_(std::move(N)),
      n_(std::move(n)),
      budget_(budget) {}

BudgetExceeded BudgetExceeded::with_n(const Int& n) const {
    return BudgetExceeded(N_, n, budget_);
}

namespace {

// Trial division over 2, 3, then 6k+/-1. The u64 path and the cpp_int path
// run the identical candidate sequence; the former is exact whenever N fits,
// so results are bit-identical by construction.
void factorize_u64(std::uint64_t n, std::uint64_t& steps,
                   const OracleBudget& budget, const Int& original,
                   std::vector<PrimePower>& out) {
    auto strip = [&](std::uint64_t p) {
        if (++steps > budget.max_steps) throw BudgetExceeded(original, budget.max_steps);
        if (n % p != 0) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({Int(p), e});
    };
    strip(2);
    strip(3);
    for (std::uint64_t c = 5; c <= n / c; c += 6) {
        strip(c);
        strip(c + 2);
    }
    if (n > 1) out.push_back({Int(n), 1});
}

void factorize_big(Int n, std::uint64_t& steps, const OracleBudget& budget,
                   const Int& original, std::vector<PrimePower>& out) {
    auto strip = [&](const Int& p) {
        if (++steps > budget.max_steps) throw BudgetExceeded(original, budget.max_steps);
        if (n % p != 0) return;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    };
    strip(2);
    strip(3);
    for (Int c = 5; c <= n / c; c += 6) {
        strip(c);
        strip(c + 2);
        // Remainder now fits a machine word: finish on the fast path.
        if (n <= std::numeric_limits<std::uint64_t>::max()) {
            std::uint64_t rest = n.convert_to<std::uint64_t>();
            std::uint64_t c64 = (c + 6).convert_to<std::uint64_t>();
            for (std::uint64_t d = c64; d <= rest / d; d += 6) {
                for (std::uint64_t p : {d, d + 2}) {
                    if (++steps > budget.max_steps)
                        throw BudgetExceeded(original, budget.max_steps);
                    if (rest % p != 0) continue;
                    unsigned e = 0;
                    while (rest % p == 0) {
                        rest /= p;
                        ++e;
                    }
                    out.push_back({Int(p), e});
                }
            }
            if (rest > 1) out.push_back({Int(rest), 1});
            return;
        }
    }
    if (n > 1) out.push_back({n, 1});
}

}  // namespace

std::vector<PrimePower> factorize(const Int& N, const OracleBudget& budget) {
    if (N < 1) throw std::invalid_argument("factorize: N must be >= 1");
    std::vector<PrimePower> out;
    std::uint64_t steps = 0;
    if (N <= std::numeric_limits<std::uint64_t>::max())
        factorize_u64(N.convert_to<std::uint64_t>(), steps, budget, N, out);
    else
        factorize_big(N, steps, budget, N, out);
    std::sort(out.begin(), out.end(),
              [](const PrimePower& l, const PrimePower& r) { return l.prime < r.prime; });
    return out;
}

std::vector<Int> divisors_up_to(const std::vector<PrimePower>& factors,
                                const Int& limit) {
    std::vector<Int> divisors{1};
    for (const auto& [prime, exponent] : factors) {
        const std::size_t base = divisors.size();
        Int power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            if (power > limit) break;
            for (std::size_t i = 0; i < base; ++i) {
                Int d = divisors[i] * power;
                if (d <= limit) divisors.push_back(d);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    if (!divisors.empty() && divisors.front() > limit) divisors.clear();
    return divisors;
}

RepresentationSet divisor_representations(const Int& N, const OracleBudget& budget) {
    if (N < 1) throw std::invalid_argument("divisor_representations: N must be >= 1");

    // s = x+y runs over divisors with s^3 <= 4N.
    const Int s_limit = icbrt(4 * N);
    auto factors = factorize(N, budget);

    RepresentationSet out;
    out.N = N;
    for (const Int& s : divisors_up_to(factors, s_limit)) {
        Int q = N / s;                 // x^2 - xy + y^2
        Int s2 = s * s;
        if ((s2 - q) % 3 != 0) continue;
        Int p = (s2 - q) / 3;          // xy
        Int t;
        if (!perfect_square(s2 - 4 * p, &t)) continue;
        if ((s + t) % 2 != 0) continue;
        out.reps.push_back({(s + t) / 2, (s - t) / 2});
    }
    std::sort(out.reps.begin(), out.reps.end(),
              [](const Representation& l, const Representation& r) { return l.x > r.x; });
    return out;
}

RepresentationSet naive_representations(const Int& N, const OracleBudget& budget) {
    if (N < 1) throw std::invalid_argument("naive_representations: N must be >= 1");

    RepresentationSet out;
    out.N = N;
    std::uint64_t steps = 0;
    auto step = [&] {
        if (++steps > budget.max_steps) throw BudgetExceeded(N, budget.max_steps);
    };

    // y >= 0: x^3 <= N.
    const Int x_max = icbrt(N) + 1;
    for (Int x = 1; x <= x_max; ++x) {
        step();
        Int rest = N - cube(x);
        if (rest < 0) break;
        Int y;
        if (perfect_cube(rest, &y) && y <= x) out.reps.push_back({x, y});
    }
    // y < 0: N = x^3 - |y|^3 with x >= |y|+1, so N > 3|y|^2.
    const Int m_max = isqrt(N / 3) + 1;
    for (Int m = 1; m <= m_max; ++m) {
        step();
        Int x;
        if (perfect_cube(N + cube(m), &x)) out.reps.push_back({x, -m});
    }
    std::sort(out.reps.begin(), out.reps.end(),
              [](const Representation& l, const Representation& r) { return l.x > r.x; });
    return out;
}

std::vector<MultiEntry> multi_representations(long long n_max, int min_reps,
                                              const OracleBudget& budget) {
    if (n_max < 1) throw std::invalid_argument("multi_representations: n_max must be >= 1");
    if (min_reps < 2) throw std::invalid_argument("multi_representations: min_reps must be >= 2");

    std::vector<MultiEntry> out;
    for (long long n = 1; n <= n_max; ++n) {
        Int N = cube_sum_consecutive(n);
        RepresentationSet reps;
        try {
            reps = divisor_representations(N, budget);
        } catch (const BudgetExceeded& e) {
            throw e.with_n(n);
        }
        if (reps.reps.size() >= static_cast<std::size_t>(min_reps))
            out.push_back({Int(n), std::move(reps)});
    }
    return out;
}

}  // namespace cubesum
