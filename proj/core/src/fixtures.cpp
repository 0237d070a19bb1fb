#include "torusq/fixtures.hpp"

#include <array>

namespace torusq {

namespace {

// Rotation group of the cube: the standard representation of S4 twisted by the sign.
constexpr std::string_view kS4 = R"(# S4 as rotations of the cube, real type
conductor 1
degree 3
generator monomial
perm 2 1 3
scalars -1, 1, 1
end
generator perm
perm 2 3 1
end
form 6 wedge 1-4, 2-5, 3-6
lattice 1
)";

// Untwisted standard representation of S4: the same generators times the sign character.
constexpr std::string_view kS4Standard = R"(# S4 standard representation (eigenvalue-1 negative control)
conductor 1
degree 3
generator monomial
perm 2 1 3
scalars 1, -1, -1
end
generator perm
perm 2 3 1
end
lattice 1
)";

// The three printed degree-8 generators, read literally. They close to 6^6 = 46656 elements,
// above the default limit, hence the explicit limit.
constexpr std::string_view kG216 = R"(# complex type, degree 8, printed generators
conductor 3
degree 8
limit 50000
generator perm
perm 3 4 5 6 7 8 1 2
end
generator monomial
perm 4 3 8 7 5 6 1 2
scalars z, z, z, z, z, z, z, z
end
generator monomial
perm 1 2 3 4 5 6 7 8
scalars z^2, z, z^2, z, z, z^2, 1, 1
end
form 16 wedge 1-9, 2-10, 3-11, 4-12, 5-13, 6-14, 7-15, 8-16
lattice z
)";

constexpr std::string_view kG1280 = R"(# quaternionic type, degree 20
conductor 4
degree 20
generator perm
perm 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 1 2 3 4
end
generator monomial
perm 1 2 3 4 6 5 8 7 10 9 12 11 16 15 14 13 20 19 18 17
scalars -z, z, z, -z, -1, 1, 1, -1, -z, -z, z, z, -z, -z, -z, -z, -z, -z, z, z
end
form wedge 1-2, 3-4, 5-6, 7-8, 9-10, 11-12, 13-14, 15-16, 17-18, 19-20
lattice z
)";

constexpr std::string_view kQ8 = R"(# quaternion group, dense generators
conductor 4
degree 2
generator dense
row z, 0
row 0, -z
end
generator dense
row 0, 1
row -1, 0
end
lattice z
)";

constexpr std::string_view kC2 = R"(# cyclic group of order 2
conductor 1
degree 1
generator monomial
perm 1
scalars -1
end
)";

constexpr std::string_view kC3 = R"(# cyclic group of order 3
conductor 3
degree 1
generator monomial
perm 1
scalars z
end
)";

constexpr std::string_view kC6 = R"(# cyclic group of order 6
conductor 6
degree 1
generator monomial
perm 1
scalars z
end
)";

constexpr std::string_view kA5 = R"(# alternating group A5, permutation input
conductor 1
degree 5
generator perm
perm 2 3 4 5 1
end
generator perm
perm 2 3 1 4 5
end
)";

constexpr std::string_view kTorus2 = R"(# trivial action on a 2-torus
conductor 1
degree 2
generator perm
perm 1 2
end
form wedge 1-2
lattice 1
)";

constexpr std::array kFixtures = {
    Fixture{"s4", "S4, twisted degree-3 representation (real type)", kS4},
    Fixture{"s4-standard", "S4, untwisted standard representation", kS4Standard},
    Fixture{"g216", "printed degree-8 generators (complex type)", kG216},
    Fixture{"g1280", "order 1280, degree-20 representation (quaternionic type)", kG1280},
    Fixture{"q8", "quaternion group Q8", kQ8},
    Fixture{"c2", "cyclic group C2", kC2},
    Fixture{"c3", "cyclic group C3", kC3},
    Fixture{"c6", "cyclic group C6", kC6},
    Fixture{"a5", "alternating group A5", kA5},
    Fixture{"torus2", "trivial degree-2 representation", kTorus2},
};

}  // namespace

std::span<const Fixture> fixtures() { return kFixtures; }

const Fixture* find_fixture(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

}  // namespace torusq
