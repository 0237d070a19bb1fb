#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "torusq/chartab.hpp"
#include "torusq/group_file.hpp"
#include "torusq/torusq.hpp"

namespace torusq::testing {

struct GroupCase {
  std::string name;
  GroupFile file;
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const CharacterTable> table;
};

/// Closes a built-in fixture and computes its table (cached per name).
const GroupCase& group_case(std::string_view fixture);
/// Closes group-file text given inline.
GroupCase make_case(std::string name, std::string_view text);

struct RepCase {
  std::string name;
  AnalyticRep rep;
  std::shared_ptr<const CharacterTable> table;
};

/// Assembled representations over small groups: natural, rho + conj(rho), trivial,
/// regular, linear characters, their conjugate sums and mixed direct sums.
const std::vector<RepCase>& corpus();

/// Random invertible integer matrix, reproducible from `seed`.
Matrix random_basis_change(std::size_t n, unsigned seed);

}  // namespace torusq::testing
