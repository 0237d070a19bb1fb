#pragma once

// Invariants of a torus quotient T/G read off from the analytic representation
// L: G -> GL(C^n): reflexive form counts, the symplectic classification,
// eigenvalue-1 obstruction, primitivity and Lagrangian-fibration subspaces.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "torusq/chartab.hpp"
#include "torusq/cyclotomic.hpp"
#include "torusq/group.hpp"
#include "torusq/matrix.hpp"

namespace torusq {

/// A matrix representation of an enumerated group, with a matrix for every element.
class AnalyticRep {
 public:
  /// Extends generator images along the breadth-first words of the group and checks
  /// M(x) M(s) = M(x s) for every element x and generator s. Throws NotAHomomorphism.
  static AnalyticRep assemble(std::shared_ptr<const FiniteGroup> group, std::vector<GroupElement> generator_images);
  /// The group's own defining matrices.
  static AnalyticRep natural(std::shared_ptr<const FiniteGroup> group);
  /// rho + conj(rho) in block form.
  static AnalyticRep conjugate_sum(const AnalyticRep& rho);
  static AnalyticRep direct_sum(const AnalyticRep& a, const AnalyticRep& b);
  /// Permutation matrices of right multiplication.
  static AnalyticRep regular(std::shared_ptr<const FiniteGroup> group);
  static AnalyticRep trivial(std::shared_ptr<const FiniteGroup> group, std::size_t degree);
  /// 1x1 representation of a linear character. Throws InvalidCharacter if chi has degree != 1.
  static AnalyticRep linear(const Character& chi);

  /// P M(g) P^-1 for every g.
  AnalyticRep conjugated_by(const Matrix& p) const;

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::shared_ptr<const FiniteGroup>& group_ptr() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }
  const GroupElement& matrix(std::size_t element) const { return matrices_[element]; }
  const GroupElement& generator_image(std::size_t slot) const { return matrices_[group_->generator(slot)]; }
  const Character& character() const noexcept { return character_; }
  bool faithful() const noexcept { return faithful_; }
  bool is_trivial() const;

 private:
  AnalyticRep(std::shared_ptr<const FiniteGroup> group, std::vector<GroupElement> matrices);

  std::shared_ptr<const FiniteGroup> group_;
  std::size_t degree_;
  std::vector<GroupElement> matrices_;
  Character character_;
  bool faithful_;
};

/// Antisymmetric matrix Omega; the form is (u, v) -> u^T Omega v.
class SymplecticForm {
 public:
  /// Throws InvalidForm unless the matrix is square and antisymmetric.
  explicit SymplecticForm(Matrix omega);
  /// sum of dz_a ^ dz_b over 0-based pairs (a, b).
  static SymplecticForm wedge(std::size_t degree, std::span<const std::pair<std::size_t, std::size_t>> pairs);

  std::size_t degree() const noexcept { return omega_.rows(); }
  const Matrix& matrix() const noexcept { return omega_; }
  bool is_degenerate() const;
  Cyclotomic evaluate(std::span<const Cyclotomic> u, std::span<const Cyclotomic> v) const;

  friend bool operator==(const SymplecticForm& a, const SymplecticForm& b) { return a.omega_ == b.omega_; }

 private:
  Matrix omega_;
};

/// The lattice (Z + omega Z)^n, or Z^n when omega = 1.
class LatticeSpec {
 public:
  /// Throws InvalidLattice unless omega is 1 or a non-real root of unity.
  explicit LatticeSpec(Cyclotomic omega);
  const Cyclotomic& omega() const noexcept { return omega_; }
  /// True iff a * Lambda is contained in Lambda for the rank-2 lattice Lambda = Z + omega Z.
  bool preserves(const Cyclotomic& a) const;
  bool contains(const Cyclotomic& a) const;

 private:
  Cyclotomic omega_;
};

enum class PairType { Real, Complex, Trivial };

struct SymplecticClass {
  enum class Kind { QuaternionicIrreducible, ConjugatePair, NotUniSymplectic };
  Kind kind = Kind::NotUniSymplectic;
  PairType pair = PairType::Real;  // meaningful for ConjugatePair only
  /// Table rows of the constituents (one for the quaternionic case, two for a pair).
  std::vector<std::size_t> constituents;

  friend bool operator==(const SymplecticClass&, const SymplecticClass&) = default;
};

std::string to_string(const SymplecticClass& c);
std::string_view to_string(PairType t);

enum class Verdict { TorusOnly, SmoothImpliesTwoTorus, TwoTorus, NoObstructionRecorded };

std::string_view to_string(Verdict v);
/// "singular-unless-torus" for TorusOnly and SmoothImpliesTwoTorus, "two-torus" and
/// "no-obstruction-recorded" otherwise.
std::string_view summary(Verdict v);

struct EigenvalueOneResult {
  bool all = true;
  /// Classes whose representative has no eigenvalue 1, with the representative's order.
  std::vector<std::size_t> failing_classes;
  std::vector<std::size_t> failing_orders;
};

struct IsotypicComponent {
  std::size_t irreducible;  // table row
  long multiplicity;
  Matrix projection;
};

struct FibrationData {
  /// Basis vectors as rows.
  Matrix v1;
  Matrix v2;
};

std::size_t h0_reflexive_1forms(const AnalyticRep& rep);
std::size_t h0_reflexive_2forms(const AnalyticRep& rep);

SymplecticClass classify_symplectic(const AnalyticRep& rep, const CharacterTable& table);

/// Group average of M(g)^T A M(g) over the seeds A = E_ab - E_ba in order (a < b); the first
/// nonzero average, rescaled so its first nonzero entry is 1. nullopt if all averages vanish.
std::optional<SymplecticForm> invariant_form(const AnalyticRep& rep);

/// M^T Omega M = Omega on every generator image. Throws InvalidForm on a degree mismatch.
bool preserves_form(const AnalyticRep& rep, const SymplecticForm& omega);
bool preserves_lattice(const AnalyticRep& rep, const LatticeSpec& lattice);

EigenvalueOneResult eigenvalue_one_all(const AnalyticRep& rep);
/// Whether 1 is an eigenvalue, exactly.
bool has_eigenvalue_one(const GroupElement& m);

/// No prime p with a cyclic Sylow p-subgroup that also divides |G^ab|.
bool is_primitive(const FiniteGroup& group);

/// The constituents of L are one irreducible, or one irreducible and its conjugate.
bool homogeneous_decomplexification(const AnalyticRep& rep, const CharacterTable& table);

struct VerdictInput {
  SymplecticClass symplectic_class;
  bool homogeneous = false;
  bool trivial_rep = false;
  std::size_t degree = 0;
};
Verdict smoothness_verdict(const VerdictInput& in);

/// pi_i = d_i/|G| sum_g conj(chi_i(g)) M(g) for each constituent of L, in table order.
std::vector<IsotypicComponent> isotypic_projections(const AnalyticRep& rep, const CharacterTable& table);

/// Two complementary invariant Lagrangian subspaces of dimension n/2, for a conjugate pair.
/// nullopt when L is not a conjugate pair, Omega is degenerate, or no split is found.
/// Throws InvalidForm if Omega is not invariant.
std::optional<FibrationData> lagrangian_fibration_data(const AnalyticRep& rep, const SymplecticForm& omega,
                                                       const CharacterTable& table);

struct FormCheck {
  SymplecticForm form;
  bool preserved;
  bool degenerate;
};

struct QuotientReport {
  /// Common conductor of the group entries and the character table.
  int conductor = 1;
  std::size_t group_order = 0;
  std::size_t class_count = 0;
  std::size_t degree = 0;
  bool faithful = false;
  std::vector<long> decomposition;
  std::vector<int> constituent_indicators;  // Frobenius-Schur indicator per constituent row
  std::size_t h10 = 0;
  std::size_t h20 = 0;
  SymplecticClass symplectic_class;
  bool homogeneous_decomplexification = false;
  EigenvalueOneResult eigenvalue_one;
  bool primitive = false;
  Verdict verdict = Verdict::NoObstructionRecorded;
  std::optional<SymplecticForm> invariant_form;
  bool invariant_form_degenerate = true;
  std::optional<FormCheck> supplied_form;
  std::optional<bool> lattice_preserved;
  std::optional<Cyclotomic> lattice_omega;
  std::optional<FibrationData> fibration;
};

/// Runs every check above. The fibration uses the supplied form when it is invariant and
/// non-degenerate, otherwise the computed invariant form.
QuotientReport analyze(const AnalyticRep& rep, const CharacterTable& table,
                       const std::optional<SymplecticForm>& omega = std::nullopt,
                       const std::optional<LatticeSpec>& lattice = std::nullopt);

}  // namespace torusq
