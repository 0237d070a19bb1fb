#pragma once

// Text format for generator sets:
//
//   # comment
//   conductor 3             entries are written in terms of z = zeta_3
//   degree 8
//   limit 50000             optional closure limit
//   generator monomial      row i is scalars[i] * z_{perm[i]}
//   perm 3 4 5 6 7 8 1 2    1-based image list, blanks or commas
//   scalars 1, z, -z^2, ... comma-separated cyclotomic entries
//   end
//   generator dense
//   row z, 0
//   row 0, -z
//   end
//   generator perm
//   perm 2 3 1
//   end
//   form 16 wedge 1-9, 2-10 optional size (default: degree), then a wedge list or
//                           `row` lines closed by `end`
//   lattice z^1             ring generator omega of (Z + omega Z)^n, or 1

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torusq/cyclotomic.hpp"
#include "torusq/group.hpp"
#include "torusq/matrix.hpp"

namespace torusq {

struct GroupFile {
  int conductor = 1;
  std::size_t degree = 0;
  std::optional<std::size_t> limit;
  std::vector<GroupElement> generators;
  std::optional<Matrix> form;
  std::optional<Cyclotomic> lattice;
};

/// Throws ParseError (1-based line and column) on syntax errors and on size mismatches.
GroupFile parse_group_file(std::string_view text);
/// Throws InvalidInput if the file cannot be read.
GroupFile load_group_file(const std::filesystem::path& path);
std::string serialize_group_file(const GroupFile& file);

/// Parses the inline form syntax `wedge:1-4,2-5` or `wedge 1-4, 2-5` for a given degree.
Matrix parse_wedge_form(std::string_view spec, std::size_t degree);

}  // namespace torusq
