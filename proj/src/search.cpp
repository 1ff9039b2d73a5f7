#include "cubesum/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

namespace cubesum {

namespace {

int branch_rank(const std::optional<Branch>& b) {
    if (!b) return 2;
    return *b == Branch::Plus ? 0 : 1;
}

}  // namespace

bool record_less(const CubeSumRecord& l, const CubeSumRecord& r) {
    if (l.N != r.N) return l.N < r.N;
    if (l.a != r.a) return l.a < r.a;
    if (l.b != r.b) return l.b < r.b;
    if (l.n != r.n) return l.n < r.n;
    return branch_rank(l.root) < branch_rank(r.root);
}

namespace {

// Records for one n: decompose N, drop the trivial (n+1, n), keep the
// filtered (a, b) window, tag the branch from the quadratic.
void records_for_n(long long n, const OracleBudget& budget,
                   std::vector<CubeSumRecord>& out) {
    const Int big_n = Int(n);
    const Int N = cube_sum_consecutive(big_n);
    RepresentationSet reps;
    try {
        reps = divisor_representations(N, budget);
    } catch (const BudgetExceeded& e) {
        throw e.with_n(big_n);
    }
    for (const Representation& rep : reps.reps) {
        if (rep.x == big_n + 1 && rep.y == big_n) continue;
        const Int a = rep.x - big_n;
        const Int b = rep.y - big_n;
        if (!(b < 0 && 0 < a && a < -b)) continue;
        out.push_back(make_record(big_n, a, b, branch_of_root(big_n, a, b)));
    }
}

}  // namespace

std::vector<CubeSumRecord> search_consecutive(long long n_max, int jobs,
                                              const OracleBudget& budget) {
    if (n_max < 2) throw std::invalid_argument("search_consecutive: n_max must be >= 2");
    if (jobs < 1) throw std::invalid_argument("search_consecutive: jobs must be >= 1");

    std::vector<CubeSumRecord> records;
    if (jobs == 1) {
        for (long long n = 1; n < n_max; ++n) records_for_n(n, budget, records);
    } else {
        constexpr long long kChunk = 64;
        const long long chunk_count = (n_max - 2) / kChunk + 1;
        std::atomic<long long> next{0};
        std::vector<std::vector<CubeSumRecord>> partial(
            static_cast<std::size_t>(chunk_count));
        // First failure by chunk index, so the reported error does not
        // depend on thread scheduling.
        std::vector<std::exception_ptr> errors(
            static_cast<std::size_t>(chunk_count));

        auto worker = [&] {
            while (true) {
                const long long chunk = next.fetch_add(1);
                if (chunk >= chunk_count) return;
                const long long lo = 1 + chunk * kChunk;
                const long long hi = std::min(n_max, lo + kChunk);
                try {
                    for (long long n = lo; n < hi; ++n)
                        records_for_n(n, budget, partial[static_cast<std::size_t>(chunk)]);
                } catch (...) {
                    errors[static_cast<std::size_t>(chunk)] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();

        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
        for (auto& part : partial)
            records.insert(records.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
    }
    std::sort(records.begin(), records.end(), record_less);
    return records;
}

namespace {

using i128 = __int128;

i128 fourth_i128(i128 v) {
    i128 sq = v * v;
    return sq * sq;
}

// Exact discriminant in 128-bit arithmetic; valid for |a|, |b| <= 3*10^4
// (every intermediate stays below 2^68).
i128 discriminant_i128(long long a, long long b) {
    return 3 * (fourth_i128(a - b) -
                (fourth_i128(a) + fourth_i128(b) + fourth_i128(a - 1) +
                 fourth_i128(b - 1)) +
                1);
}

bool is_square_i128(i128 v) {
    if (v < 0) return false;
    i128 r = static_cast<i128>(sqrtl(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

constexpr long long kFastScanBound = 30'000;

}  // namespace

std::vector<CubeSumRecord> scan_ab(long long a_max, long long b_min,
                                   long long n_limit) {
    if (a_max < 1) throw std::invalid_argument("scan_ab: a_max must be >= 1");
    if (b_min > -1) throw std::invalid_argument("scan_ab: b_min must be <= -1");
    if (n_limit < 1) throw std::invalid_argument("scan_ab: n_limit must be >= 1");

    const Int limit = n_limit;
    std::vector<CubeSumRecord> records;
    for (long long a = 1; a <= a_max; ++a) {
        for (long long b = b_min; b <= -1 && -b > a; ++b) {
            if (a <= kFastScanBound && -b <= kFastScanBound) {
                // Fast reject: D < 0 or not a perfect square. Exact in this
                // range, so the fallback path below sees the same set.
                if (!is_square_i128(discriminant_i128(a, b))) continue;
            }
            for (const auto& [branch, n] : solve_pair(a, b).roots) {
                if (n <= 0 || n >= limit) continue;
                records.push_back(make_record(n, a, b, branch));
            }
        }
    }
    std::sort(records.begin(), records.end(), record_less);
    return records;
}

}  // namespace cubesum
