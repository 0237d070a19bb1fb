#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <variant>
#include <vector>

#include "torusq/cyclotomic.hpp"
#include "torusq/matrix.hpp"

namespace torusq {

/// Monomial matrix: row i has its single nonzero entry `scalars[i]` in column `perm[i]`,
/// i.e. the linear map z -> (scalars[i] * z[perm[i]])_i.
struct Monomial {
  std::vector<std::uint32_t> perm;
  std::vector<Cyclotomic> scalars;
};

/// An invertible matrix, kept in monomial form whenever possible.
class GroupElement {
 public:
  static GroupElement monomial(std::vector<std::uint32_t> perm, std::vector<Cyclotomic> scalars);
  static GroupElement permutation(std::vector<std::uint32_t> perm);
  static GroupElement dense(Matrix m);
  static GroupElement identity(std::size_t degree);

  std::size_t degree() const;
  bool is_monomial() const noexcept { return std::holds_alternative<Monomial>(value_); }
  const Monomial& as_monomial() const { return std::get<Monomial>(value_); }
  const Matrix& as_dense() const { return std::get<Matrix>(value_); }
  Matrix to_dense() const;
  /// Entry (r, c) without densifying.
  Cyclotomic entry(std::size_t r, std::size_t c) const;

  Cyclotomic trace() const;
  /// Throws InvalidGenerator if the matrix is singular.
  GroupElement inverse() const;
  GroupElement conj() const;
  GroupElement transpose() const;
  /// Conjugation by a fixed basis change: p * this * p^-1 (always dense).
  GroupElement conjugated_by(const Matrix& p, const Matrix& p_inverse) const;
  bool is_identity() const;

  /// lcm of the conductors of the entries.
  int conductor() const;
  /// Hash consistent with operator== for elements whose entries lie in Q(zeta_m).
  std::size_t hash_at(int m) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b);

  static GroupElement direct_sum(const GroupElement& a, const GroupElement& b);

 private:
  explicit GroupElement(std::variant<Monomial, Matrix> v) : value_(std::move(v)) {}
  std::variant<Monomial, Matrix> value_;
};

/// A fully enumerated finite matrix group with Cayley access and conjugacy classes.
/// Element 0 is the identity; elements are indexed in breadth-first order from the
/// generators, so the indexing is deterministic.
class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultLimit = 20000;

  /// Breadth-first closure under right multiplication by the generators.
  /// Throws GroupTooLarge past `limit` elements, InvalidGenerator for singular input
  /// and InvalidInput for empty or mixed-degree generator lists.
  static std::shared_ptr<const FiniteGroup> close(std::span<const GroupElement> generators,
                                                  std::size_t limit = kDefaultLimit);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  int conductor() const noexcept { return conductor_; }
  const GroupElement& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> find(const GroupElement& g) const;

  std::size_t generator_count() const noexcept { return generators_.size(); }
  /// Element index of generator slot s.
  std::size_t generator(std::size_t s) const { return generators_[s]; }
  std::span<const std::uint32_t> generators() const noexcept { return generators_; }

  /// Element x = parent(x) * generator(parent_slot(x)); undefined for the identity.
  std::size_t parent(std::size_t x) const { return parent_[x]; }
  std::size_t parent_slot(std::size_t x) const { return parent_slot_[x]; }
  std::size_t times_generator(std::size_t x, std::size_t s) const {
    return right_[x * generators_.size() + s];
  }

  std::size_t mult(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t power(std::size_t a, long k) const;
  /// by^-1 * x * by
  std::size_t conjugate(std::size_t x, std::size_t by) const;

  std::size_t element_order(std::size_t x) const { return element_order_[x]; }
  std::size_t exponent() const noexcept { return exponent_; }
  /// Histogram order -> number of elements of that order.
  std::map<std::size_t, std::size_t> element_orders() const;

  std::size_t class_count() const noexcept { return classes_.size(); }
  const std::vector<std::uint32_t>& class_members(std::size_t c) const { return classes_[c]; }
  std::size_t class_size(std::size_t c) const { return classes_[c].size(); }
  /// Smallest element index in the class.
  std::size_t class_representative(std::size_t c) const { return classes_[c].front(); }
  std::size_t class_of(std::size_t x) const { return class_of_[x]; }
  std::size_t inverse_class(std::size_t c) const { return class_of(inverse(class_representative(c))); }
  /// Class-level k-th power map: c -> class of rep(c)^k.
  std::vector<std::size_t> power_classes(long k) const;

  /// True iff the Sylow p-subgroup is cyclic, i.e. some element has order equal to the
  /// p-part of |G|. Throws InvalidPrime unless p is a prime dividing |G|.
  bool sylow_cyclic(long p) const;
  std::size_t commutator_subgroup_order() const;
  /// |G / [G, G]|
  std::size_t abelianization_order() const;
  bool is_abelian() const;

  /// Membership bitmap of the subgroup generated by `gens` (element indices).
  std::vector<bool> subgroup_closure(std::span<const std::size_t> gens) const;

 private:
  FiniteGroup() = default;
  void build_cayley();
  void build_classes();

  std::size_t degree_ = 0;
  int conductor_ = 1;
  std::vector<GroupElement> elements_;
  std::vector<std::uint32_t> generators_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_slot_;
  std::vector<std::uint32_t> right_;
  std::vector<std::uint32_t> table_;  // full Cayley table when small enough
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> element_order_;
  std::size_t exponent_ = 1;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::uint32_t> class_of_;
  std::unordered_multimap<std::size_t, std::uint32_t> index_;
};

}  // namespace torusq
