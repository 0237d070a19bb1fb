#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// A value is a polynomial in zeta_n with rational coefficients, stored reduced
// modulo the n-th cyclotomic polynomial Phi_n, i.e. as phi(n) coefficients in
// the power basis 1, zeta_n, ..., zeta_n^(phi(n)-1). Binary operations lift both
// operands to the lcm of their conductors. Rational results collapse to
// conductor 1; conductors n = 2 mod 4 are rewritten to n/2. Beyond that the
// stored conductor is not guaranteed to be minimal; use reduced_conductor()
// when a minimal representation is wanted (e.g. for display).

#include <gmpxx.h>

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace torusq {

using Rational = mpq_class;

class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1) {}
  Cyclotomic(long value) : n_(1), c_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  explicit Cyclotomic(Rational value) : n_(1), c_{std::move(value)} { c_[0].canonicalize(); }

  /// zeta_n^k, for any integer k.
  static Cyclotomic zeta(int n, long k = 1);

  /// Builds the canonical form from a raw coefficient sequence of length `conductor`
  /// (coefficient of zeta^k at index k). Throws InvalidInput on conductor < 1 or a
  /// length mismatch.
  static Cyclotomic normalize(std::span<const Rational> raw, int conductor);

  /// Parses the text syntax `a/b*z^k + ...` where z is the primitive
  /// `conductor`-th root of unity. Throws ParseError with a 1-based column.
  static Cyclotomic parse(std::string_view text, int conductor);

  int conductor() const noexcept { return n_; }

  /// Canonical coefficients, padded with zeros to length conductor().
  std::vector<Rational> coefficients() const;
  /// Canonical coefficients of length phi(conductor()).
  const std::vector<Rational>& basis_coefficients() const noexcept { return c_; }

  bool is_zero() const;
  bool is_rational() const noexcept { return n_ == 1; }
  std::optional<Rational> as_rational() const;
  /// True iff the value is a rational integer.
  bool is_integer() const;

  Cyclotomic conj() const { return galois(-1); }
  /// Applies zeta_n -> zeta_n^k. Throws InvalidAutomorphism if gcd(k, n) != 1.
  Cyclotomic galois(long k) const;
  /// Multiplicative inverse; throws InvalidInput on zero.
  Cyclotomic inverse() const;

  /// Same value written at conductor m; requires conductor() | m.
  Cyclotomic lifted(int m) const;
  /// The value at conductor m if it lies in Q(zeta_m), otherwise nullopt.
  std::optional<Cyclotomic> restricted(int m) const;
  /// Same value at its minimal conductor.
  Cyclotomic reduced_conductor() const;

  /// True iff every canonical coefficient at conductor m is an integer, i.e. the value
  /// lies in Z[zeta_m]. Returns false if the value is not in Q(zeta_m).
  bool in_integer_ring(int m) const;

  std::complex<double> to_complex() const;

  /// Text form in terms of z = zeta_m; m must be a multiple of conductor().
  std::string to_string(int m) const;
  /// Text form in terms of z = zeta_c for the minimal conductor c of the value.
  std::string to_string() const;

  /// Hash that is stable for values written at the same conductor m.
  std::size_t hash_at(int m) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& b, Cyclotomic a) { return a *= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order: lexicographic on canonical coefficients at the common conductor.
  friend std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}

  // Reduces a raw length-n vector modulo Phi_n and applies the conductor rules.
  static Cyclotomic from_raw(std::vector<Rational> raw, int n);
  void simplify();

  int n_;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

// Number-theory helpers shared by the other modules.
int euler_phi(int n);
std::vector<int> prime_factors(long n);
bool is_prime(long n);
/// Coefficients of Phi_n, lowest degree first.
std::vector<long> cyclotomic_polynomial(int n);

}  // namespace torusq
