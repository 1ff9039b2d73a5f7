#include "cubesum/io.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace cubesum {

namespace {

using ordered_json = nlohmann::ordered_json;

// All formats render the same header + string-rows table, so encode/decode
// stay aligned by construction.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t k = 0; k < t.header.size(); ++k) {
        if (k) out += ',';
        out += t.header[k];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ',';
            out += row[k];
        }
        out += '\n';
    }
    return out;
}

std::string to_markdown(const Table& t) {
    std::string out = "|";
    for (const auto& h : t.header) out += " " + h + " |";
    out += "\n|";
    for (std::size_t k = 0; k < t.header.size(); ++k) out += "---|";
    out += "\n";
    for (const auto& row : t.rows) {
        out += "|";
        for (const auto& cell : row) out += " " + cell + " |";
        out += "\n";
    }
    return out;
}

std::string to_json(const Table& t) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : t.rows) {
        ordered_json obj = ordered_json::object();
        for (std::size_t k = 0; k < t.header.size(); ++k) obj[t.header[k]] = row[k];
        arr.push_back(std::move(obj));
    }
    return arr.dump() + "\n";
}

std::string to_bfile(const Table& t, std::string_view column) {
    std::size_t col = t.header.size();
    for (std::size_t k = 0; k < t.header.size(); ++k)
        if (t.header[k] == column) col = k;
    if (col == t.header.size())
        throw std::invalid_argument("bfile: unknown column '" + std::string(column) +
                                    "'");
    std::string out;
    std::size_t index = 1;
    for (const auto& row : t.rows) {
        parse_int(row[col]);  // b-file values must be plain integers
        out += std::to_string(index++) + " " + row[col] + "\n";
    }
    return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.emplace_back(text.substr(start));
            return parts;
        }
        parts.emplace_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

// Rows of a CSV document, header validated against the expected schema.
std::vector<std::vector<std::string>> parse_csv(std::string_view text,
                                                const std::vector<std::string>& header) {
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty()) throw std::invalid_argument("csv: missing header line");

    std::string expected;
    for (std::size_t k = 0; k < header.size(); ++k) {
        if (k) expected += ',';
        expected += header[k];
    }
    if (lines.front() != expected)
        throw std::invalid_argument("csv: expected header '" + expected + "', got '" +
                                    lines.front() + "'");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 1; r < lines.size(); ++r) {
        auto fields = split(lines[r], ',');
        if (fields.size() != header.size())
            throw std::invalid_argument("csv: row " + std::to_string(r) + " has " +
                                        std::to_string(fields.size()) + " fields, expected " +
                                        std::to_string(header.size()));
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::vector<std::vector<std::string>> parse_json(std::string_view text,
                                                 const std::vector<std::string>& header) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
    if (!doc.is_array()) throw std::invalid_argument("json: expected a top-level array");
    std::vector<std::vector<std::string>> rows;
    for (const auto& obj : doc) {
        if (!obj.is_object()) throw std::invalid_argument("json: expected row objects");
        std::vector<std::string> fields;
        for (const auto& key : header) {
            if (!obj.contains(key))
                throw std::invalid_argument("json: row missing field '" + key + "'");
            const auto& v = obj.at(key);
            if (!v.is_string())
                throw std::invalid_argument("json: field '" + key +
                                            "' must be a decimal string");
            fields.push_back(v.get<std::string>());
        }
        rows.push_back(std::move(fields));
    }
    return rows;
}

// --- records ---------------------------------------------------------------

const std::vector<std::string> kRecordHeader = {"n", "a", "b", "root",
                                                "N", "x", "y"};

std::string root_text(const std::optional<Branch>& root) {
    if (!root) return "";
    return std::string(1, branch_char(*root));
}

std::optional<Branch> parse_root(const std::string& text) {
    if (text.empty()) return std::nullopt;
    if (text == "+") return Branch::Plus;
    if (text == "-") return Branch::Minus;
    throw std::invalid_argument("records: root must be '+', '-' or empty, got '" +
                                text + "'");
}

Table record_table(const std::vector<CubeSumRecord>& records) {
    Table t{kRecordHeader, {}};
    for (const auto& r : records)
        t.rows.push_back({r.n.str(), r.a.str(), r.b.str(), root_text(r.root),
                          r.N.str(), r.x.str(), r.y.str()});
    return t;
}

CubeSumRecord record_from_fields(const std::vector<std::string>& f) {
    CubeSumRecord r;
    r.n = parse_int(f[0]);
    r.a = parse_int(f[1]);
    r.b = parse_int(f[2]);
    r.root = parse_root(f[3]);
    r.N = parse_int(f[4]);
    r.x = parse_int(f[5]);
    r.y = parse_int(f[6]);
    return r;
}

std::string cube_term(const Int& v) {
    if (v < 0) return "(" + v.str() + ")^3";
    return v.str() + "^3";
}

// "91 = 3^3 + 4^3 = 6^3 + (-5)^3"
std::string decomposition(const CubeSumRecord& r) {
    return r.N.str() + " = " + cube_term(r.n) + " + " + cube_term(r.n + 1) +
           " = " + cube_term(r.x) + " + " + cube_term(r.y);
}

Table record_markdown_table(const std::vector<CubeSumRecord>& records) {
    Table t{{"a", "b", "n+", "n-", "N"}, {}};
    for (const auto& r : records) {
        std::string plus = "--";
        std::string minus = "--";
        if (r.root == Branch::Plus) plus = r.n.str();
        if (r.root == Branch::Minus) minus = r.n.str();
        t.rows.push_back({r.a.str(), r.b.str(), plus, minus, decomposition(r)});
    }
    return t;
}

// --- family rows -------------------------------------------------------------

const std::vector<std::string> kFamilyHeader = {"family", "i", "n", "x",
                                                "y", "eta", "N"};

std::string family_text(Family f) { return f == Family::One ? "1" : "2"; }

Family parse_family(const std::string& text) {
    if (text == "1") return Family::One;
    if (text == "2") return Family::Two;
    throw std::invalid_argument("family rows: family must be '1' or '2', got '" +
                                text + "'");
}

Table family_table(const std::vector<FamilyRow>& rows) {
    Table t{kFamilyHeader, {}};
    for (const auto& r : rows)
        t.rows.push_back({family_text(r.family), r.i.str(), r.n.str(), r.x.str(),
                          r.y.str(), r.eta.str(), r.N.str()});
    return t;
}

FamilyRow family_row_from_fields(const std::vector<std::string>& f) {
    FamilyRow row;
    row.family = parse_family(f[0]);
    row.i = parse_int(f[1]);
    row.n = parse_int(f[2]);
    row.x = parse_int(f[3]);
    row.y = parse_int(f[4]);
    row.eta = parse_int(f[5]);
    row.N = parse_int(f[6]);
    row.beta = row.eta;  // beta is not serialized; it always equals eta
    return row;
}

Table family_markdown_table(const std::vector<FamilyRow>& rows) {
    Table t{{"i", "n", "n+a", "n+b", "eta"}, {}};
    for (const auto& r : rows)
        t.rows.push_back({r.i.str(), r.n.str(), r.x.str(), r.y.str(), r.eta.str()});
    return t;
}

// --- other row shapes --------------------------------------------------------

Table representation_table(const std::vector<Representation>& reps) {
    Table t{{"x", "y"}, {}};
    for (const auto& rep : reps) t.rows.push_back({rep.x.str(), rep.y.str()});
    return t;
}

Table alpha_table(const std::vector<AlphaHit>& hits) {
    Table t{{"alpha", "root", "n"}, {}};
    for (const auto& h : hits)
        t.rows.push_back({h.alpha.str(), std::string(1, branch_char(h.branch)),
                          h.n.str()});
    return t;
}

Table multi_table(const std::vector<MultiEntry>& entries) {
    Table t{{"n", "N", "x", "y"}, {}};
    for (const auto& e : entries)
        for (const auto& rep : e.reps.reps)
            t.rows.push_back({e.n.str(), e.reps.N.str(), rep.x.str(), rep.y.str()});
    return t;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    if (name == "markdown") return OutputFormat::Markdown;
    if (name == "bfile") return OutputFormat::Bfile;
    throw std::invalid_argument("unknown format '" + std::string(name) +
                                "' (expected csv, json, markdown or bfile)");
}

std::string records_to_csv(const std::vector<CubeSumRecord>& records) {
    return to_csv(record_table(records));
}

std::vector<CubeSumRecord> records_from_csv(std::string_view text) {
    std::vector<CubeSumRecord> out;
    for (const auto& fields : parse_csv(text, kRecordHeader))
        out.push_back(record_from_fields(fields));
    return out;
}

std::string records_to_json(const std::vector<CubeSumRecord>& records) {
    return to_json(record_table(records));
}

std::vector<CubeSumRecord> records_from_json(std::string_view text) {
    std::vector<CubeSumRecord> out;
    for (const auto& fields : parse_json(text, kRecordHeader))
        out.push_back(record_from_fields(fields));
    return out;
}

std::string records_to_markdown(const std::vector<CubeSumRecord>& records) {
    return to_markdown(record_markdown_table(records));
}

std::string records_to_bfile(const std::vector<CubeSumRecord>& records,
                             std::string_view column) {
    return to_bfile(record_table(records), column);
}

std::string family_rows_to_csv(const std::vector<FamilyRow>& rows) {
    return to_csv(family_table(rows));
}

std::vector<FamilyRow> family_rows_from_csv(std::string_view text) {
    std::vector<FamilyRow> out;
    for (const auto& fields : parse_csv(text, kFamilyHeader))
        out.push_back(family_row_from_fields(fields));
    return out;
}

std::string family_rows_to_json(const std::vector<FamilyRow>& rows) {
    return to_json(family_table(rows));
}

std::vector<FamilyRow> family_rows_from_json(std::string_view text) {
    std::vector<FamilyRow> out;
    for (const auto& fields : parse_json(text, kFamilyHeader))
        out.push_back(family_row_from_fields(fields));
    return out;
}

std::string family_rows_to_markdown(const std::vector<FamilyRow>& rows) {
    return to_markdown(family_markdown_table(rows));
}

std::string family_rows_to_bfile(const std::vector<FamilyRow>& rows,
                                 std::string_view column) {
    return to_bfile(family_table(rows), column);
}

std::string representations_to_csv(const std::vector<Representation>& reps) {
    return to_csv(representation_table(reps));
}

std::string representations_to_json(const std::vector<Representation>& reps) {
    return to_json(representation_table(reps));
}

std::string representations_to_markdown(const std::vector<Representation>& reps) {
    return to_markdown(representation_table(reps));
}

std::string representations_to_bfile(const std::vector<Representation>& reps,
                                     std::string_view column) {
    return to_bfile(representation_table(reps), column);
}

std::string alpha_hits_to_csv(const std::vector<AlphaHit>& hits) {
    return to_csv(alpha_table(hits));
}

std::string alpha_hits_to_json(const std::vector<AlphaHit>& hits) {
    return to_json(alpha_table(hits));
}

std::string alpha_hits_to_markdown(const std::vector<AlphaHit>& hits) {
    return to_markdown(alpha_table(hits));
}

std::string alpha_hits_to_bfile(const std::vector<AlphaHit>& hits,
                                std::string_view column) {
    return to_bfile(alpha_table(hits), column);
}

std::string multi_to_csv(const std::vector<MultiEntry>& entries) {
    return to_csv(multi_table(entries));
}

std::string multi_to_json(const std::vector<MultiEntry>& entries) {
    return to_json(multi_table(entries));
}

std::string multi_to_markdown(const std::vector<MultiEntry>& entries) {
    return to_markdown(multi_table(entries));
}

std::string multi_to_bfile(const std::vector<MultiEntry>& entries,
                           std::string_view column) {
    return to_bfile(multi_table(entries), column);
}

std::vector<CubeSumRecord> read_records_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot);
    if (ext == ".csv") return records_from_csv(text);
    if (ext == ".json") return records_from_json(text);
    throw std::invalid_argument("cannot detect input format of '" + path +
                                "' (expected a .csv or .json extension)");
}

std::string verify_report(const std::vector<CubeSumRecord>& records,
                          std::size_t* failures) {
    std::size_t failed = 0;
    std::string out;
    auto root_matches = [](const CubeSumRecord& r) {
        for (const auto& [branch, root] : solve_pair(r.a, r.b).roots)
            if (branch == *r.root && root == r.n) return true;
        return false;
    };
    for (const auto& r : records) {
        bool ok = verify_record(r);
        if (ok && r.root && !root_matches(r)) ok = false;
        if (!ok) ++failed;
        out += std::string(ok ? "PASS" : "FAIL") + " n=" + r.n.str() +
               " a=" + r.a.str() + " b=" + r.b.str() + " N=" + r.N.str() + "\n";
    }
    if (failures) *failures = failed;
    return out;
}

}  // namespace cubesum
