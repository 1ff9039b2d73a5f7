// Serialization for every row shape the CLI emits: CSV (machine), JSON
// (machine, same field names as the CSV headers), Markdown (mirrors the
// printed table layouts for human diffing), and OEIS-style b-files
// ("<index> <value>" per line, 1-based).
//
// Integers are decimal with no separators; family exports exceed 64 bits,
// so parsers accept arbitrary-length decimal strings. Encode -> decode ->
// encode is byte-identical.
#pragma once

#include "cubesum/core.hpp"
#include "cubesum/families.hpp"
#include "cubesum/oracle.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cubesum {

enum class OutputFormat { Csv, Json, Markdown, Bfile };

// Accepts "csv", "json", "markdown", "bfile"; throws std::invalid_argument.
OutputFormat parse_format(std::string_view name);

// --- records: schema n,a,b,root,N,x,y (root is "+", "-" or empty) ---------
std::string records_to_csv(const std::vector<CubeSumRecord>& records);
std::vector<CubeSumRecord> records_from_csv(std::string_view text);
std::string records_to_json(const std::vector<CubeSumRecord>& records);
std::vector<CubeSumRecord> records_from_json(std::string_view text);
// Printed-table layout: a | b | n+ | n- | N with the full decomposition.
std::string records_to_markdown(const std::vector<CubeSumRecord>& records);
std::string records_to_bfile(const std::vector<CubeSumRecord>& records,
                             std::string_view column);

// --- family rows: schema family,i,n,x,y,eta,N (family is 1 or 2) ----------
std::string family_rows_to_csv(const std::vector<FamilyRow>& rows);
std::vector<FamilyRow> family_rows_from_csv(std::string_view text);
std::string family_rows_to_json(const std::vector<FamilyRow>& rows);
std::vector<FamilyRow> family_rows_from_json(std::string_view text);
std::string family_rows_to_markdown(const std::vector<FamilyRow>& rows);
std::string family_rows_to_bfile(const std::vector<FamilyRow>& rows,
                                 std::string_view column);

// --- representations: schema x,y -------------------------------------------
std::string representations_to_csv(const std::vector<Representation>& reps);
std::string representations_to_json(const std::vector<Representation>& reps);
std::string representations_to_markdown(const std::vector<Representation>& reps);
std::string representations_to_bfile(const std::vector<Representation>& reps,
                                     std::string_view column);

// --- alpha hits: schema alpha,root,n ---------------------------------------
std::string alpha_hits_to_csv(const std::vector<AlphaHit>& hits);
std::string alpha_hits_to_json(const std::vector<AlphaHit>& hits);
std::string alpha_hits_to_markdown(const std::vector<AlphaHit>& hits);
std::string alpha_hits_to_bfile(const std::vector<AlphaHit>& hits,
                                std::string_view column);

// --- multi entries, flattened to one row per representation: n,N,x,y -------
std::string multi_to_csv(const std::vector<MultiEntry>& entries);
std::string multi_to_json(const std::vector<MultiEntry>& entries);
std::string multi_to_markdown(const std::vector<MultiEntry>& entries);
std::string multi_to_bfile(const std::vector<MultiEntry>& entries,
                           std::string_view column);

// Reads records from a file, format detected by extension (.csv / .json).
std::vector<CubeSumRecord> read_records_file(const std::string& path);

// One PASS/FAIL line per record; failure count reported through *failures.
std::string verify_report(const std::vector<CubeSumRecord>& records,
                          std::size_t* failures);

}  // namespace cubesum
