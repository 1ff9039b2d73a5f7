// cubesum: find, generate, verify and export integers that are both a sum of
// two consecutive cubes and a sum of two other cubes.
//
// Exit codes: 0 success, 1 verification failure or method disagreement,
// 2 argument error, 3 oracle budget exceeded. Data goes to stdout,
// diagnostics to stderr.
#include <CLI11.hpp>

#include "cubesum/families.hpp"
#include "cubesum/fixtures.hpp"
#include "cubesum/io.hpp"
#include "cubesum/oracle.hpp"
#include "cubesum/search.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using namespace cubesum;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kArgumentError = 2;
constexpr int kBudgetExceeded = 3;

OracleBudget budget_from_env() {
    OracleBudget budget;
    if (const char* v = std::getenv("CUBESUM_ORACLE_BUDGET")) {
        Int parsed = parse_int(v);
        if (parsed < 1 || parsed > std::numeric_limits<std::uint64_t>::max())
            throw std::invalid_argument("CUBESUM_ORACLE_BUDGET out of range");
        budget.max_steps = parsed.convert_to<std::uint64_t>();
    }
    return budget;
}

struct FormatOpts {
    std::string format = "csv";
    std::string column;
};

void add_format_opts(CLI::App* cmd, FormatOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format: csv, json, markdown, bfile")
        ->default_val("csv");
    cmd->add_option("--column", opts.column,
                    "Column exported when --format bfile (required then)");
}

// Shared render dispatch; each caller passes its four emitters.
template <typename Rows, typename Csv, typename Json, typename Md, typename Bf>
std::string render(const Rows& rows, const FormatOpts& opts, Csv csv, Json json,
                   Md md, Bf bfile) {
    switch (parse_format(opts.format)) {
        case OutputFormat::Csv: return csv(rows);
        case OutputFormat::Json: return json(rows);
        case OutputFormat::Markdown: return md(rows);
        case OutputFormat::Bfile:
            if (opts.column.empty())
                throw std::invalid_argument("--format bfile requires --column");
            return bfile(rows, opts.column);
    }
    throw std::logic_error("unreachable");
}

std::string render_records(const std::vector<CubeSumRecord>& records,
                           const FormatOpts& opts) {
    return render(records, opts, records_to_csv, records_to_json,
                  records_to_markdown, records_to_bfile);
}

std::string render_family_rows(const std::vector<FamilyRow>& rows,
                               const FormatOpts& opts) {
    return render(rows, opts, family_rows_to_csv, family_rows_to_json,
                  family_rows_to_markdown, family_rows_to_bfile);
}

int run_families(const std::string& family, long long count,
                 const std::string& method, const FormatOpts& opts) {
    std::vector<Family> wanted;
    if (family == "1") wanted = {Family::One};
    else if (family == "2") wanted = {Family::Two};
    else if (family == "both") wanted = {Family::One, Family::Two};
    else throw std::invalid_argument("--family must be 1, 2 or both");

    if (method != "parametric" && method != "recurrence" && method != "check")
        throw std::invalid_argument("--method must be parametric, recurrence or check");

    std::vector<FamilyRow> rows;
    bool agree = true;
    for (Family f : wanted) {
        std::vector<FamilyRow> generated;
        if (method == "recurrence") {
            generated = recurrence_rows(f, count);
        } else {
            for (long long i = 1; i <= count; ++i)
                generated.push_back(parametric_row(f, i));
            if (method == "check") {
                const auto recur = recurrence_rows(f, count);
                for (long long i = 0; i < count; ++i) {
                    if (generated[static_cast<std::size_t>(i)] ==
                        recur[static_cast<std::size_t>(i)])
                        continue;
                    agree = false;
                    std::cerr << "family " << (f == Family::One ? 1 : 2)
                              << ": methods disagree at i=" << (i + 1) << "\n";
                }
                if (agree)
                    std::cerr << "family " << (f == Family::One ? 1 : 2)
                              << ": parametric and recurrence agree on " << count
                              << " rows\n";
            }
        }
        rows.insert(rows.end(), generated.begin(), generated.end());
    }
    std::cout << render_family_rows(rows, opts);
    return agree ? kOk : kVerificationFailure;
}

int run_verify(const std::string& path) {
    const auto records = read_records_file(path);
    std::size_t failures = 0;
    std::cout << verify_report(records, &failures);
    if (failures > 0) {
        std::cerr << failures << " of " << records.size() << " records failed\n";
        return kVerificationFailure;
    }
    std::cerr << "all " << records.size() << " records verified\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sums of two consecutive cubes that are also sums of two other cubes"};
    app.require_subcommand(1);

    // search
    long long nmax = 0;
    int jobs = 1;
    FormatOpts search_fmt;
    auto* search_cmd = app.add_subcommand("search", "Enumerate all records with 0 < n < nmax");
    search_cmd->add_option("--nmax", nmax, "Upper bound (exclusive) on n")->required();
    search_cmd->add_option("--jobs", jobs, "Worker threads (output is independent of this)")
        ->default_val(1);
    add_format_opts(search_cmd, search_fmt);

    // scan-ab
    long long amax = 0, bmin = 0, nlimit = 0;
    FormatOpts scan_fmt;
    auto* scan_cmd = app.add_subcommand("scan-ab", "Sweep (a, b) windows through the quadratic");
    scan_cmd->add_option("--amax", amax, "Largest a (a >= 1)")->required();
    scan_cmd->add_option("--bmin", bmin, "Smallest b (b <= -1)")->required();
    scan_cmd->add_option("--nlimit", nlimit, "Keep roots with 0 < n < nlimit")->required();
    add_format_opts(scan_cmd, scan_fmt);

    // oracle
    std::string oracle_n;
    bool positive_only = false;
    FormatOpts oracle_fmt;
    auto* oracle_cmd = app.add_subcommand("oracle", "All two-cube representations of N");
    oracle_cmd->add_option("N", oracle_n, "The integer to decompose")->required();
    oracle_cmd->add_flag("--positive-only", positive_only, "Keep representations with y >= 1");
    add_format_opts(oracle_cmd, oracle_fmt);

    // families
    std::string family = "both";
    long long count = 0;
    std::string method = "parametric";
    FormatOpts family_fmt;
    auto* families_cmd = app.add_subcommand("families", "Generate the two infinite families");
    families_cmd->add_option("--family", family, "1, 2 or both")->required();
    families_cmd->add_option("--count", count, "Rows per family (i = 1..count)")->required();
    families_cmd
        ->add_option("--method", method, "parametric, recurrence or check (both + compare)")
        ->required();
    add_format_opts(families_cmd, family_fmt);

    // alpha
    long long alpha_min = 0, alpha_max = 0;
    FormatOpts alpha_fmt;
    auto* alpha_cmd =
        app.add_subcommand("alpha", "Sweep the (n+3)^3 + (n+alpha)^3 special case");
    alpha_cmd->add_option("--min", alpha_min, "Smallest alpha")->required();
    alpha_cmd->add_option("--max", alpha_max, "Largest alpha")->required();
    add_format_opts(alpha_cmd, alpha_fmt);

    // multi
    long long multi_nmax = 0;
    int min_reps = 0;
    FormatOpts multi_fmt;
    auto* multi_cmd =
        app.add_subcommand("multi", "n whose N has at least min-reps representations");
    multi_cmd->add_option("--nmax", multi_nmax, "Largest n scanned")->required();
    multi_cmd->add_option("--min-reps", min_reps, "Minimum representation count (>= 2)")
        ->required();
    add_format_opts(multi_cmd, multi_fmt);

    // verify
    std::string input_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check records from a .csv or .json file");
    verify_cmd->add_option("--input", input_path, "Input file")->required();

    auto* table1_cmd = app.add_subcommand("table1", "Print the built-in record fixture");
    auto* table2_cmd = app.add_subcommand("table2", "Print the built-in family fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kArgumentError;
    }

    try {
        const OracleBudget budget = budget_from_env();

        if (search_cmd->parsed()) {
            std::cout << render_records(search_consecutive(nmax, jobs, budget), search_fmt);
            return kOk;
        }
        if (scan_cmd->parsed()) {
            std::cout << render_records(scan_ab(amax, bmin, nlimit), scan_fmt);
            return kOk;
        }
        if (oracle_cmd->parsed()) {
            const Int N = parse_int(oracle_n);
            auto reps = divisor_representations(N, budget).reps;
            if (positive_only)
                std::erase_if(reps, [](const Representation& r) { return r.y < 1; });
            std::cout << render(reps, oracle_fmt, representations_to_csv,
                                representations_to_json, representations_to_markdown,
                                representations_to_bfile);
            return kOk;
        }
        if (families_cmd->parsed()) return run_families(family, count, method, family_fmt);
        if (alpha_cmd->parsed()) {
            std::cout << render(alpha_scan(alpha_min, alpha_max), alpha_fmt,
                                alpha_hits_to_csv, alpha_hits_to_json,
                                alpha_hits_to_markdown, alpha_hits_to_bfile);
            return kOk;
        }
        if (multi_cmd->parsed()) {
            std::cout << render(multi_representations(multi_nmax, min_reps, budget),
                                multi_fmt, multi_to_csv, multi_to_json,
                                multi_to_markdown, multi_to_bfile);
            return kOk;
        }
        if (verify_cmd->parsed()) return run_verify(input_path);
        if (table1_cmd->parsed()) {
            std::cout << table1_markdown();
            return kOk;
        }
        if (table2_cmd->parsed()) {
            std::cout << table2_markdown();
            return kOk;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kArgumentError;
    }
    return kArgumentError;
}
