#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torusq/chartab.hpp"
#include "torusq/group_file.hpp"
#include "torusq/torusq.hpp"

namespace torusq::cli {

enum ExitCode { kOk = 0, kCheckMismatch = 1, kInputError = 2, kResourceLimit = 3 };

enum class RepChoice { Natural, ConjugateSum, Auto };

/// Closes the file's generators with its own limit, or `limit` when given.
std::shared_ptr<const FiniteGroup> close_group(const GroupFile& file, std::optional<std::size_t> limit = std::nullopt);

/// Auto: rho for quaternionic irreducible rho, rho + conj(rho) for other irreducibles,
/// the natural representation when it is reducible.
AnalyticRep choose_rep(std::shared_ptr<const FiniteGroup> group, const CharacterTable& table, RepChoice choice);

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

/// Runs the full pipeline on a built-in fixture (s4, s4-standard, g216, g1280) and compares
/// against the expected values. Throws InvalidInput for unknown names.
std::vector<Check> check_example(std::string_view name);

struct SearchRow {
  std::size_t irreducible;
  long degree;
  int indicator;
  bool faithful;
  bool eigenvalue_one_all;
  bool candidate;
};

struct SearchEntry {
  std::string file;
  std::size_t order;
  bool primitive;
  std::vector<SearchRow> rows;
};

/// Scans `dir` for *.grp files in name order. Unreadable or oversized entries are reported
/// on `warnings` and skipped.
std::vector<SearchEntry> search_catalog(const std::filesystem::path& dir, std::size_t max_order,
                                        std::ostream& warnings);

/// Command-line entry point; returns the process exit code.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace torusq::cli
