#pragma once

// Text and JSON forms of the library's values. JSON documents carry a
// top-level "schema": 1 wherever they are objects.

#include <span>
#include <string>
#include <vector>

#include "gpf/bounds.hpp"
#include "gpf/construction.hpp"
#include "gpf/progressions.hpp"
#include "gpf/search.hpp"

namespace gpf::io {

inline constexpr int kSchemaVersion = 1;

/// One progression per line, comma-separated ascending integers.
std::string gpsets_to_text(std::span<const GpSet> sets);
/// Array of integer arrays.
std::string gpsets_to_json(std::span<const GpSet> sets);
std::vector<GpSet> gpsets_from_text(const std::string& text);
std::vector<GpSet> gpsets_from_json(const std::string& text);

/// {schema, n, k, L, blocks: [{label, params, elements}]}
std::string family_to_json(const Family& family);
/// Reads the document as written; no validation beyond shape (use verify_family).
Family family_from_json(const std::string& text);

/// One block per line: "X ℓ=2 a=5 : 32,64,128", "Y b=29 : 261,435,725", "Z c=11 : ...".
std::string family_certificate(const Family& family);

std::string verification_to_json(const Family& family, const VerificationReport& report);

std::string bounds_to_table(std::span<const BoundReport> reports);
std::string bounds_to_csv(std::span<const BoundReport> reports);
std::string bounds_to_json(std::span<const BoundReport> reports);

std::string table_to_json(std::span<const TableRow> rows);
std::string table_to_csv(std::span<const TableRow> rows);

std::string search_to_json(const DensityReport& report);
std::string search_to_text(const DensityReport& report);

/// Parses "8,12,18,27" (whitespace tolerated). Throws DomainError on junk.
std::vector<std::uint64_t> parse_integer_list(const std::string& text);

}  // namespace gpf::io
