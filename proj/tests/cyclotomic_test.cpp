#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "torusq/cyclotomic.hpp"
#include "torusq/error.hpp"

namespace torusq {
namespace {

std::complex<double> root(int n, long k) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n);
}

// Random element of Q(zeta_n) together with its complex value, built term by term.
struct Sample {
  Cyclotomic exact;
  std::complex<double> approx;
};

Sample random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<long> power(0, n - 1);
  Sample s{Cyclotomic(0), 0.0};
  for (int t = 0; t < 4; ++t) {
    const Rational q(coef(rng), den(rng));
    const long k = power(rng);
    s.exact += Cyclotomic::zeta(n, k) * q;
    s.approx += q.get_d() * root(n, k);
  }
  return s;
}

TEST(Cyclotomic, RootProductLiftsToLcm) {
  EXPECT_EQ(Cyclotomic::zeta(3) * Cyclotomic::zeta(4), Cyclotomic::zeta(12, 7));
}

TEST(Cyclotomic, RootsSumToZero) {
  for (int n : {2, 3, 5, 6, 8, 9, 12, 15}) {
    Cyclotomic sum(0);
    for (long k = 0; k < n; ++k) sum += Cyclotomic::zeta(n, k);
    EXPECT_TRUE(sum.is_zero()) << n;
  }
}

TEST(Cyclotomic, ConductorRules) {
  EXPECT_EQ(Cyclotomic::zeta(2), Cyclotomic(-1));
  EXPECT_TRUE(Cyclotomic::zeta(2).is_rational());
  // zeta_6 = -zeta_3^2
  EXPECT_EQ(Cyclotomic::zeta(6), -Cyclotomic::zeta(3, 2));
  EXPECT_EQ(Cyclotomic::zeta(6).conductor(), 3);
  EXPECT_EQ((Cyclotomic::zeta(12) * Cyclotomic::zeta(12, 11)).conductor(), 1);
  EXPECT_EQ(Cyclotomic::zeta(8, 2).reduced_conductor().conductor(), 4);
}

TEST(Cyclotomic, FieldAxioms) {
  std::mt19937 rng(17);
  for (int n : {3, 4, 5, 7, 8, 12}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(rng, n).exact;
      const auto b = random_element(rng, n).exact;
      const auto c = random_element(rng, n).exact;
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), Cyclotomic(1));
    }
  }
}

TEST(Cyclotomic, ComplexEmbeddingAgrees) {
  std::mt19937 rng(5);
  for (int n : {3, 5, 8, 9, 12, 20}) {
    for (int trial = 0; trial < 20; ++trial) {
      const Sample a = random_element(rng, n);
      const Sample b = random_element(rng, n);
      EXPECT_LT(std::abs(a.exact.to_complex() - a.approx), 1e-10);
      EXPECT_LT(std::abs((a.exact * b.exact).to_complex() - a.approx * b.approx), 1e-10);
      EXPECT_LT(std::abs((a.exact + b.exact).to_complex() - (a.approx + b.approx)), 1e-10);
      EXPECT_LT(std::abs(a.exact.conj().to_complex() - std::conj(a.approx)), 1e-10);
    }
  }
}

TEST(Cyclotomic, GaloisActionComposes) {
  std::mt19937 rng(11);
  const int n = 15;
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(rng, n).exact;
    for (long a : {1, 2, 4, 7, 8, 11, 13, 14}) {
      for (long b : {2, 7, 11}) {
        EXPECT_EQ(x.galois(a).galois(b), x.galois(a * b));
      }
    }
    EXPECT_EQ(x.galois(-1), x.conj());
  }
  EXPECT_THROW(Cyclotomic::zeta(15).galois(5), Error);
}

TEST(Cyclotomic, GaloisIsRingHomomorphism) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_element(rng, 12).exact;
    const auto b = random_element(rng, 12).exact;
    EXPECT_EQ((a * b).galois(5), a.galois(5) * b.galois(5));
    EXPECT_EQ((a + b).galois(7), a.galois(7) + b.galois(7));
  }
}

TEST(Cyclotomic, ParseAndPrintRoundTrip) {
  std::mt19937 rng(23);
  for (int n : {1, 3, 4, 5, 8, 12}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto x = random_element(rng, std::max(n, 1)).exact;
      EXPECT_EQ(Cyclotomic::parse(x.to_string(n), n), x) << x.to_string(n);
    }
  }
  EXPECT_EQ(Cyclotomic::parse("z^2", 3).to_string(3), "z^2");
  EXPECT_EQ(Cyclotomic::parse("-1 - z", 3), Cyclotomic::zeta(3, 2));
  EXPECT_EQ(Cyclotomic::parse("1/2*z + 3", 4), Cyclotomic(3) + Cyclotomic::zeta(4) * Rational(1, 2));
}

TEST(Cyclotomic, ParseErrorsCarryColumn) {
  try {
    Cyclotomic::parse("1 + z^", 3);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_GE(e.column(), 5);
  }
  EXPECT_THROW(Cyclotomic::parse("", 3), ParseError);
  EXPECT_THROW(Cyclotomic::parse("2 * * z", 3), ParseError);
}

TEST(Cyclotomic, IntegerRingMembership) {
  EXPECT_TRUE(Cyclotomic::zeta(3).in_integer_ring(3));
  EXPECT_FALSE((Cyclotomic::zeta(3) * Rational(1, 2)).in_integer_ring(3));
  EXPECT_FALSE(Cyclotomic::zeta(4).in_integer_ring(3));
  EXPECT_TRUE(Cyclotomic(7).is_integer());
}

TEST(Cyclotomic, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto phi105 = cyclotomic_polynomial(105);
  EXPECT_EQ(phi105.size(), 49u);
  EXPECT_EQ(phi105[7], -2);
  for (int n = 1; n <= 60; ++n) EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(n).size()) - 1, euler_phi(n));
}

}  // namespace
}  // namespace torusq
