#pragma once

#include <span>
#include <string_view>

namespace torusq {

/// A built-in group file.
struct Fixture {
  std::string_view name;
  std::string_view description;
  std::string_view text;
};

std::span<const Fixture> fixtures();
/// nullptr for unknown names.
const Fixture* find_fixture(std::string_view name);

}  // namespace torusq
