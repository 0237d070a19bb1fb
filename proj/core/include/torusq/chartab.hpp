#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "torusq/cyclotomic.hpp"
#include "torusq/group.hpp"

namespace torusq {

/// A class function on a finite group, one value per conjugacy class.
class Character {
 public:
  Character(std::shared_ptr<const FiniteGroup> group, std::vector<Cyclotomic> values);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  std::span<const Cyclotomic> values() const noexcept { return values_; }
  const Cyclotomic& operator[](std::size_t c) const { return values_[c]; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Value at the identity class.
  const Cyclotomic& degree() const { return values_[0]; }
  /// The degree as an integer; throws InvalidCharacter when it is not a positive integer.
  long integer_degree() const;
  bool is_trivial() const;
  bool is_real() const;
  Character conj() const;
  /// lcm of the conductors of the values.
  int conductor() const;

  friend Character operator+(const Character& a, const Character& b);
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character& a, const Character& b);

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Cyclotomic> values_;
};

/// Irreducible characters of a group, ordered by degree (the trivial character first),
/// then lexicographically on their canonical values.
class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const FiniteGroup> group, std::vector<Character> irreducibles, long prime);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  std::size_t size() const noexcept { return irreducibles_.size(); }
  const Character& operator[](std::size_t i) const { return irreducibles_[i]; }
  std::span<const Character> irreducibles() const noexcept { return irreducibles_; }
  /// Row index of a character, if it is one of the irreducibles.
  std::optional<std::size_t> index_of(const Character& chi) const;
  /// Row index of the complex conjugate of row i.
  std::size_t conjugate_index(std::size_t i) const;
  /// Prime used by the modular computation.
  long prime() const noexcept { return prime_; }
  /// Common conductor of all values.
  int conductor() const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<Character> irreducibles_;
  long prime_;
};

/// Character from matrices given per class representative: value = trace.
Character natural_character(std::shared_ptr<const FiniteGroup> group,
                            std::span<const GroupElement> class_representative_matrices);
/// Character of the group's own defining matrices.
Character natural_character(std::shared_ptr<const FiniteGroup> group);
/// Character of the right-regular representation.
Character regular_character(std::shared_ptr<const FiniteGroup> group);
Character trivial_character(std::shared_ptr<const FiniteGroup> group);

/// (a|b) = 1/|G| sum_g a(g) b(g^-1). Throws InvalidPair for characters of different groups.
Cyclotomic inner_product(const Character& a, const Character& b);

/// 1/|G| sum_g chi(g^2), in {-1, 0, 1}. Throws InvalidCharacter unless (chi|chi) = 1.
int frobenius_schur(const Character& chi);

/// Class-wise (chi(g)^2 - chi(g^2)) / 2.
Character exterior_square(const Character& chi);
/// Class-wise (chi(g)^2 + chi(g^2)) / 2.
Character symmetric_square(const Character& chi);

/// Multiplicities (chi|chi_i); throws InconsistentCharacter if one is not a non-negative integer.
std::vector<long> decompose(const Character& chi, const CharacterTable& table);

/// Per class: multiplicity of the eigenvalue 1 of rho(g), computed from the character alone
/// as 1/o sum_{l<o} chi(g^l) with o the order of g.
std::vector<long> eigenvalue_one_multiplicities(const Character& chi);

/// True iff chi(g) = chi(1) only for g = 1.
bool is_faithful(const Character& chi);

struct DixonOptions {
  /// Check row orthogonality exactly over the cyclotomics before returning.
  bool verify_exact = false;
  /// Number of admissible primes to try before giving up.
  int max_primes = 8;
};

/// Irreducible characters via simultaneous eigenvectors of the class matrices over F_p.
/// Throws TableFailure if no admissible prime splits the class algebra.
CharacterTable dixon_schneider(std::shared_ptr<const FiniteGroup> group, const DixonOptions& options = {});

/// Row orthogonality, column orthogonality and sum of squared degrees, checked exactly.
bool verify_table(const CharacterTable& table, std::string* failure = nullptr);

}  // namespace torusq
