#pragma once

#include <string>

#include "torusq/chartab.hpp"
#include "torusq/torusq.hpp"

namespace torusq {

/// JSON document with every report field; cyclotomic entries are written in terms of
/// z = zeta_N for the report's "conductor" N. Layout documented in docs/report-schema.md.
std::string report_json(const QuotientReport& report, int indent = 2);
/// The same fields as report_json, one `path: value` line each.
std::string report_text(const QuotientReport& report);

/// Character table as a grid: one row per irreducible, one column per class.
std::string table_text(const CharacterTable& table);
std::string table_json(const CharacterTable& table, int indent = 2);

}  // namespace torusq
