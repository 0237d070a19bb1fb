#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "torusq/error.hpp"
#include "torusq/torusq.hpp"

namespace torusq {
namespace {

using testing::corpus;
using testing::group_case;

Eigen::MatrixXcd to_eigen(const GroupElement& m) {
  const auto n = static_cast<Eigen::Index>(m.degree());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = m.entry(r, c).to_complex();
  }
  return out;
}

long float_eigenvalue_one_count(const GroupElement& m) {
  const Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), false);
  const auto& ev = solver.eigenvalues();
  return std::count_if(ev.begin(), ev.end(), [](const std::complex<double>& l) { return std::abs(l - 1.0) < 1e-6; });
}

Matrix dense(const GroupElement& m) { return m.to_dense(); }

TEST(Corpus, IsLargeEnough) { EXPECT_GE(corpus().size(), 30u); }

TEST(EigenvalueOne, AgreesWithFloatingPointSpectrum) {
  for (const auto& c : corpus()) {
    const auto& g = c.rep.group();
    const auto mult = eigenvalue_one_multiplicities(c.rep.character());
    for (std::size_t k = 0; k < g.class_count(); ++k) {
      const auto& m = c.rep.matrix(g.class_representative(k));
      const long count = float_eigenvalue_one_count(m);
      EXPECT_EQ(has_eigenvalue_one(m), count > 0) << c.name << " class " << k;
      EXPECT_EQ(mult[k], count) << c.name << " class " << k;
    }
    const auto all = eigenvalue_one_all(c.rep);
    EXPECT_EQ(all.all, std::all_of(mult.begin(), mult.end(), [](long m) { return m > 0; })) << c.name;
    EXPECT_EQ(all.failing_classes.size(), all.failing_orders.size());
  }
}

TEST(EigenvalueOne, StandardS4FailsOnFourCycles) {
  const auto rep = AnalyticRep::natural(group_case("s4-standard").group);
  const auto result = eigenvalue_one_all(rep);
  EXPECT_FALSE(result.all);
  ASSERT_EQ(result.failing_orders.size(), 1u);
  EXPECT_EQ(result.failing_orders[0], 4u);
  const auto& g = rep.group();
  EXPECT_TRUE(rep.matrix(g.class_representative(result.failing_classes[0])).to_dense().determinant() != Cyclotomic(0));
  EXPECT_TRUE(eigenvalue_one_all(AnalyticRep::natural(group_case("s4").group)).all);
}

TEST(Symplectic, ClassificationMatchesUniqueInvariantForm) {
  for (const auto& c : corpus()) {
    const auto cls = classify_symplectic(c.rep, *c.table);
    const auto form = invariant_form(c.rep);
    const bool unique_nondegenerate = h0_reflexive_2forms(c.rep) == 1 && form && !form->is_degenerate();
    EXPECT_EQ(cls.kind != SymplecticClass::Kind::NotUniSymplectic, unique_nondegenerate) << c.name;
    if (form) EXPECT_TRUE(preserves_form(c.rep, *form)) << c.name;
  }
}

TEST(Symplectic, KnownClassifications) {
  const auto& s4 = group_case("s4");
  const auto rho = AnalyticRep::natural(s4.group);
  const auto pair = classify_symplectic(AnalyticRep::conjugate_sum(rho), *s4.table);
  EXPECT_EQ(to_string(pair), "ConjugatePair(real)");
  EXPECT_EQ(classify_symplectic(rho, *s4.table).kind, SymplecticClass::Kind::NotUniSymplectic);

  const auto& q8 = group_case("q8");
  const auto quaternionic = classify_symplectic(AnalyticRep::natural(q8.group), *q8.table);
  EXPECT_EQ(quaternionic.kind, SymplecticClass::Kind::QuaternionicIrreducible);
  EXPECT_EQ(quaternionic.constituents, std::vector<std::size_t>{4});

  const auto& c3 = group_case("c3");
  const auto complex = classify_symplectic(AnalyticRep::conjugate_sum(AnalyticRep::natural(c3.group)), *c3.table);
  EXPECT_EQ(complex.pair, PairType::Complex);
  EXPECT_EQ(complex.constituents.size(), 2u);

  const auto& t = group_case("torus2");
  EXPECT_EQ(to_string(classify_symplectic(AnalyticRep::natural(t.group), *t.table)), "ConjugatePair(trivial)");
}

TEST(Symplectic, InvariantFormOfS4PairIsTheWedgeForm) {
  const auto& s4 = group_case("s4");
  const auto l = AnalyticRep::conjugate_sum(AnalyticRep::natural(s4.group));
  const auto form = invariant_form(l);
  ASSERT_TRUE(form.has_value());
  const std::vector<std::pair<std::size_t, std::size_t>> pairs{{0, 3}, {1, 4}, {2, 5}};
  EXPECT_EQ(*form, SymplecticForm::wedge(6, pairs));
  EXPECT_FALSE(form->is_degenerate());
}

TEST(ReflexiveForms, CountsFromCharacters) {
  const auto& s4 = group_case("s4");
  const auto l = AnalyticRep::conjugate_sum(AnalyticRep::natural(s4.group));
  EXPECT_EQ(h0_reflexive_1forms(l), 0u);
  EXPECT_EQ(h0_reflexive_2forms(l), 1u);
  const auto& t = group_case("torus2");
  const auto triv = AnalyticRep::natural(t.group);
  EXPECT_EQ(h0_reflexive_1forms(triv), 2u);
  EXPECT_EQ(h0_reflexive_2forms(triv), 1u);
  const auto four = AnalyticRep::trivial(s4.group, 4);
  EXPECT_EQ(h0_reflexive_1forms(four), 4u);
  EXPECT_EQ(h0_reflexive_2forms(four), 6u);
}

TEST(ReflexiveForms, InvariantUnderBasisChange) {
  unsigned seed = 1;
  for (const auto& c : corpus()) {
    if (c.rep.degree() > 6) continue;
    const auto p = testing::random_basis_change(c.rep.degree(), seed++);
    const auto moved = c.rep.conjugated_by(p);
    EXPECT_EQ(h0_reflexive_1forms(moved), h0_reflexive_1forms(c.rep)) << c.name;
    EXPECT_EQ(h0_reflexive_2forms(moved), h0_reflexive_2forms(c.rep)) << c.name;
    EXPECT_EQ(moved.character(), c.rep.character()) << c.name;
    const auto& g = c.rep.group();
    for (std::size_t s = 0; s < g.generator_count(); ++s) {
      EXPECT_EQ(dense(moved.generator_image(s)) * p, p * dense(c.rep.generator_image(s))) << c.name;
    }
  }
}

TEST(Projections, IdempotentCompleteAndEquivariant) {
  for (const auto& c : corpus()) {
    const auto comps = isotypic_projections(c.rep, *c.table);
    const std::size_t n = c.rep.degree();
    Matrix sum(n, n);
    std::size_t rank_total = 0;
    for (const auto& comp : comps) {
      const Matrix& pi = comp.projection;
      EXPECT_EQ(pi * pi, pi) << c.name;
      sum += pi;
      const long d = (*c.table)[comp.irreducible].integer_degree();
      EXPECT_EQ(static_cast<long>(pi.rank()), d * comp.multiplicity) << c.name;
      rank_total += pi.rank();
      for (std::size_t s = 0; s < c.rep.group().generator_count(); ++s) {
        const Matrix m = dense(c.rep.generator_image(s));
        EXPECT_EQ(pi * m, m * pi) << c.name;
      }
      for (const auto& other : comps) {
        if (&other != &comp) EXPECT_TRUE((pi * other.projection).is_zero()) << c.name;
      }
    }
    EXPECT_EQ(sum, Matrix::identity(n)) << c.name;
    EXPECT_EQ(rank_total, n) << c.name;
  }
}

TEST(Projections, RegularRepresentationOfC2) {
  const auto& c2 = group_case("c2");
  const auto reg = AnalyticRep::regular(c2.group);
  const auto comps = isotypic_projections(reg, *c2.table);
  ASSERT_EQ(comps.size(), 2u);
  const Matrix swap = dense(reg.generator_image(0));
  const Matrix id = Matrix::identity(2);
  EXPECT_EQ(comps[0].projection, (id + swap) * Cyclotomic(Rational(1, 2)));
  EXPECT_EQ(comps[1].projection, (id - swap) * Cyclotomic(Rational(1, 2)));
}

TEST(Verdict, SoundOverCorpus) {
  for (const auto& c : corpus()) {
    const auto report = analyze(c.rep, *c.table);
    if (report.homogeneous_decomplexification && !c.rep.is_trivial()) {
      EXPECT_EQ(summary(report.verdict), "singular-unless-torus") << c.name;
    }
    if (c.rep.is_trivial() && c.rep.degree() == 2) EXPECT_EQ(report.verdict, Verdict::TwoTorus) << c.name;
  }
}

TEST(Verdict, Precedence) {
  SymplecticClass pair{SymplecticClass::Kind::ConjugatePair, PairType::Trivial, {0}};
  EXPECT_EQ(smoothness_verdict({pair, true, true, 2}), Verdict::TwoTorus);
  pair.pair = PairType::Real;
  EXPECT_EQ(smoothness_verdict({pair, true, false, 6}), Verdict::TorusOnly);
  EXPECT_EQ(smoothness_verdict({pair, false, false, 6}), Verdict::SmoothImpliesTwoTorus);
  EXPECT_EQ(smoothness_verdict({SymplecticClass{}, false, false, 6}), Verdict::NoObstructionRecorded);
  EXPECT_EQ(summary(Verdict::TorusOnly), summary(Verdict::SmoothImpliesTwoTorus));
}

TEST(Homogeneity, PairsAndMixtures) {
  const auto& s4 = group_case("s4");
  const auto rho = AnalyticRep::natural(s4.group);
  EXPECT_TRUE(homogeneous_decomplexification(AnalyticRep::conjugate_sum(rho), *s4.table));
  EXPECT_FALSE(homogeneous_decomplexification(AnalyticRep::direct_sum(rho, AnalyticRep::trivial(s4.group, 1)),
                                              *s4.table));
  const auto& c3 = group_case("c3");
  EXPECT_TRUE(homogeneous_decomplexification(AnalyticRep::conjugate_sum(AnalyticRep::natural(c3.group)), *c3.table));
}

// |G^ab| from an independent commutator closure over element indices.
std::size_t brute_abelianization(const FiniteGroup& g) {
  std::set<std::size_t> h{0};
  std::vector<std::size_t> queue{0};
  std::vector<std::size_t> commutators;
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      commutators.push_back(g.mult(g.mult(g.inverse(a), g.inverse(b)), g.mult(a, b)));
    }
  }
  std::sort(commutators.begin(), commutators.end());
  commutators.erase(std::unique(commutators.begin(), commutators.end()), commutators.end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t c : commutators) {
      const std::size_t y = g.mult(queue[i], c);
      if (h.insert(y).second) queue.push_back(y);
    }
  }
  return g.order() / h.size();
}

TEST(Primitivity, MatchesCriterionWithIndependentAbelianization) {
  for (const char* name : {"s4", "q8", "c2", "c3", "c4", "c6", "s3", "d4", "a5", "torus2"}) {
    const auto& g = *group_case(name).group;
    const std::size_t ab = brute_abelianization(g);
    EXPECT_EQ(g.abelianization_order(), ab) << name;
    bool primitive = true;
    for (int p : prime_factors(static_cast<long>(g.order()))) {
      if (g.sylow_cyclic(p) && ab % p == 0) primitive = false;
    }
    EXPECT_EQ(is_primitive(g), primitive) << name;
  }
  EXPECT_TRUE(is_primitive(*group_case("s4").group));
  EXPECT_FALSE(is_primitive(*group_case("c2").group));
  EXPECT_TRUE(is_primitive(*group_case("a5").group));
}

TEST(Lattice, MembershipAndPreservation) {
  const LatticeSpec gaussian(Cyclotomic::zeta(4));
  EXPECT_TRUE(gaussian.contains(Cyclotomic(3) - Cyclotomic::zeta(4) * Rational(2)));
  EXPECT_FALSE(gaussian.contains(Cyclotomic::zeta(4) * Rational(1, 2)));
  EXPECT_TRUE(gaussian.preserves(Cyclotomic::zeta(4)));
  EXPECT_FALSE(gaussian.preserves(Cyclotomic::zeta(3)));
  const LatticeSpec eisenstein(Cyclotomic::zeta(3));
  EXPECT_TRUE(eisenstein.preserves(Cyclotomic::zeta(3, 2)));
  EXPECT_TRUE(eisenstein.preserves(Cyclotomic::zeta(6)));
  EXPECT_FALSE(eisenstein.preserves(Cyclotomic::zeta(4)));
  const LatticeSpec integers(Cyclotomic(1));
  EXPECT_TRUE(integers.preserves(Cyclotomic(-3)));
  EXPECT_FALSE(integers.preserves(Cyclotomic::zeta(4)));
  EXPECT_THROW(LatticeSpec(Cyclotomic(-1)), Error);
  EXPECT_THROW(LatticeSpec(Cyclotomic(2)), Error);
  EXPECT_THROW(LatticeSpec(Cyclotomic::zeta(3) * Rational(2)), Error);

  const auto& q8 = group_case("q8");
  EXPECT_TRUE(preserves_lattice(AnalyticRep::natural(q8.group), gaussian));
  EXPECT_FALSE(preserves_lattice(AnalyticRep::natural(q8.group), integers));
}

TEST(Forms, ValidationAndPreservation) {
  Matrix symmetric(2, 2);
  symmetric(0, 1) = 1;
  symmetric(1, 0) = 1;
  EXPECT_THROW(SymplecticForm{symmetric}, Error);
  EXPECT_THROW(SymplecticForm{Matrix(2, 3)}, Error);
  const std::vector<std::pair<std::size_t, std::size_t>> wrong{{0, 1}, {2, 3}, {4, 5}};
  const auto& s4 = group_case("s4");
  const auto l = AnalyticRep::conjugate_sum(AnalyticRep::natural(s4.group));
  EXPECT_FALSE(preserves_form(l, SymplecticForm::wedge(6, wrong)));
  EXPECT_THROW(preserves_form(l, SymplecticForm::wedge(4, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}})),
               Error);
  EXPECT_TRUE(SymplecticForm(Matrix(2, 2)).is_degenerate());
}

bool invariant_subspace(const AnalyticRep& rep, const Matrix& basis) {
  for (std::size_t s = 0; s < rep.group().generator_count(); ++s) {
    const Matrix image = basis * dense(rep.generator_image(s)).transpose();
    Matrix both(basis.rows() * 2, basis.cols());
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      for (std::size_t c = 0; c < basis.cols(); ++c) {
        both(r, c) = basis(r, c);
        both(r + basis.rows(), c) = image(r, c);
      }
    }
    if (both.rank() != basis.rows()) return false;
  }
  return true;
}

TEST(Fibration, RealPairSplitsIntoLagrangians) {
  for (const char* name : {"s4", "c3", "torus2", "s3"}) {
    const auto& c = group_case(name);
    const auto l = AnalyticRep::conjugate_sum(AnalyticRep::natural(c.group));
    const auto form = invariant_form(l);
    ASSERT_TRUE(form) << name;
    const auto fib = lagrangian_fibration_data(l, *form, *c.table);
    if (classify_symplectic(l, *c.table).kind != SymplecticClass::Kind::ConjugatePair) {
      EXPECT_FALSE(fib) << name;
      continue;
    }
    ASSERT_TRUE(fib) << name;
    const std::size_t half = l.degree() / 2;
    EXPECT_EQ(fib->v1.rows(), half);
    EXPECT_EQ(fib->v2.rows(), half);
    EXPECT_TRUE((fib->v1 * form->matrix() * fib->v1.transpose()).is_zero()) << name;
    EXPECT_TRUE((fib->v2 * form->matrix() * fib->v2.transpose()).is_zero()) << name;
    EXPECT_TRUE(invariant_subspace(l, fib->v1)) << name;
    EXPECT_TRUE(invariant_subspace(l, fib->v2)) << name;
    Matrix both(l.degree(), l.degree());
    for (std::size_t r = 0; r < half; ++r) {
      for (std::size_t col = 0; col < l.degree(); ++col) {
        both(r, col) = fib->v1(r, col);
        both(r + half, col) = fib->v2(r, col);
      }
    }
    EXPECT_EQ(both.rank(), l.degree()) << name;
  }
}

TEST(Fibration, NoneForIrreducibleOrNonInvariantForm) {
  const auto& q8 = group_case("q8");
  const auto rho = AnalyticRep::natural(q8.group);
  const auto form = invariant_form(rho);
  ASSERT_TRUE(form);
  EXPECT_FALSE(lagrangian_fibration_data(rho, *form, *q8.table));
  const auto& s4 = group_case("s4");
  const auto l = AnalyticRep::conjugate_sum(AnalyticRep::natural(s4.group));
  const std::vector<std::pair<std::size_t, std::size_t>> wrong{{0, 1}, {2, 3}, {4, 5}};
  EXPECT_THROW(lagrangian_fibration_data(l, SymplecticForm::wedge(6, wrong), *s4.table), Error);
}

TEST(AnalyticRepresentation, AssembleChecksHomomorphism) {
  // Generator 0 of the s4 fixture is a rotation of order 4, generator 1 has order 3.
  const auto& s4 = group_case("s4");
  ASSERT_EQ(s4.group->element_order(s4.group->generator(0)), 4u);
  ASSERT_EQ(s4.group->element_order(s4.group->generator(1)), 3u);
  auto scalar = [](long v) { return GroupElement::monomial({0}, {Cyclotomic(v)}); };
  const auto sign = AnalyticRep::assemble(s4.group, {scalar(-1), scalar(1)});
  EXPECT_EQ(decompose(sign.character(), *s4.table), (std::vector<long>{0, 1, 0, 0, 0}));
  try {
    AnalyticRep::assemble(s4.group, {scalar(-1), scalar(-1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAHomomorphism);
  }
}

TEST(Analysis, ReportForS4Pair) {
  const auto& s4 = group_case("s4");
  const auto l = AnalyticRep::conjugate_sum(AnalyticRep::natural(s4.group));
  const std::vector<std::pair<std::size_t, std::size_t>> wrong{{0, 1}, {2, 3}, {4, 5}};
  const auto report = analyze(l, *s4.table, SymplecticForm::wedge(6, wrong), LatticeSpec(Cyclotomic(1)));
  EXPECT_EQ(report.group_order, 24u);
  EXPECT_EQ(report.h10, 0u);
  EXPECT_EQ(report.h20, 1u);
  ASSERT_TRUE(report.supplied_form);
  EXPECT_FALSE(report.supplied_form->preserved);
  EXPECT_TRUE(report.lattice_preserved.value_or(false));
  EXPECT_EQ(report.verdict, Verdict::TorusOnly);
  EXPECT_TRUE(report.primitive);
  EXPECT_TRUE(report.fibration.has_value());
  EXPECT_EQ(report.decomposition, (std::vector<long>{0, 0, 0, 0, 2}));
}

}  // namespace
}  // namespace torusq
