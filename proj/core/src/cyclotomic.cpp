#include "torusq/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "rational_solve.hpp"
#include "torusq/error.hpp"

namespace torusq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::InvalidAutomorphism: return "invalid-automorphism";
    case ErrorKind::GroupTooLarge: return "group-too-large";
    case ErrorKind::InvalidGenerator: return "invalid-generator";
    case ErrorKind::InvalidPrime: return "invalid-prime";
    case ErrorKind::InvalidPair: return "invalid-pair";
    case ErrorKind::InvalidCharacter: return "invalid-character";
    case ErrorKind::TableFailure: return "table-failure";
    case ErrorKind::InconsistentCharacter: return "inconsistent-character";
    case ErrorKind::NotAHomomorphism: return "not-a-homomorphism";
    case ErrorKind::InvalidForm: return "invalid-form";
    case ErrorKind::InvalidLattice: return "invalid-lattice";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "unknown";
}

int euler_phi(int n) {
  int result = n;
  for (int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

std::vector<int> prime_factors(long n) {
  std::vector<int> primes;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(static_cast<int>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(static_cast<int>(n));
  return primes;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

namespace {

// Phi_n and the table of x^k mod Phi_n for phi(n) <= k < n.
struct FieldData {
  int n = 1;
  int phi = 1;
  std::vector<long> phi_poly;
  std::vector<std::vector<long>> tail;
};

std::vector<long> compute_cyclotomic_polynomial(int n);

const FieldData& field_data(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<FieldData>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;
  }
  auto data = std::make_unique<FieldData>();
  data->n = n;
  data->phi_poly = compute_cyclotomic_polynomial(n);
  data->phi = static_cast<int>(data->phi_poly.size()) - 1;
  const int phi = data->phi;
  // row = x^phi mod Phi_n = -(lower coefficients of Phi_n), then multiply by x repeatedly.
  std::vector<long> row(phi);
  for (int j = 0; j < phi; ++j) row[j] = -data->phi_poly[j];
  for (int k = phi; k < n; ++k) {
    data->tail.push_back(row);
    const long top = row[phi - 1];
    for (int j = phi - 1; j > 0; --j) row[j] = row[j - 1] - top * data->phi_poly[j];
    row[0] = -top * data->phi_poly[0];
    for (long v : row) {
      if (std::llabs(v) > (1LL << 60)) throw Error(ErrorKind::InvalidInput, "conductor too large");
    }
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(data));
  return *it->second;
}

std::vector<long> compute_cyclotomic_polynomial(int n) {
  // x^n - 1 divided exactly by Phi_d for every proper divisor d of n.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& divisor = field_data(d).phi_poly;
    const int dd = static_cast<int>(divisor.size()) - 1;
    const int deg = static_cast<int>(poly.size()) - 1;
    std::vector<long> quotient(deg - dd + 1, 0);
    for (int k = deg; k >= dd; --k) {
      const long coef = poly[k];
      quotient[k - dd] = coef;
      if (coef == 0) continue;
      for (int j = 0; j <= dd; ++j) poly[k - dd + j] -= coef * divisor[j];
    }
    poly = std::move(quotient);
  }
  return poly;
}

bool all_zero(const std::vector<Rational>& v, std::size_t from = 0) {
  for (std::size_t i = from; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return false;
  }
  return true;
}

long positive_mod(long a, long n) {
  long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
  return field_data(n).phi_poly;
}

Cyclotomic Cyclotomic::from_raw(std::vector<Rational> raw, int n) {
  const FieldData& data = field_data(n);
  for (int k = data.phi; k < n; ++k) {
    if (sgn(raw[k]) == 0) continue;
    const auto& t = data.tail[k - data.phi];
    for (int j = 0; j < data.phi; ++j) {
      if (t[j] != 0) raw[j] += raw[k] * t[j];
    }
  }
  raw.resize(data.phi);
  Cyclotomic out(n, std::move(raw));
  out.simplify();
  return out;
}

void Cyclotomic::simplify() {
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    if (all_zero(c_, 1)) {
      c_.resize(1);
      n_ = 1;
      return;
    }
    if (n_ % 4 == 2) {
      // zeta_{2m} = -zeta_m^((m+1)/2) for odd m.
      const int m = n_ / 2;
      std::vector<Rational> raw(m);
      for (std::size_t k = 0; k < c_.size(); ++k) {
        if (sgn(c_[k]) == 0) continue;
        const long idx = static_cast<long>(k) * ((m + 1) / 2) % m;
        if (k % 2 == 0) {
          raw[idx] += c_[k];
        } else {
          raw[idx] -= c_[k];
        }
      }
      const FieldData& data = field_data(m);
      for (int k = data.phi; k < m; ++k) {
        if (sgn(raw[k]) == 0) continue;
        const auto& t = data.tail[k - data.phi];
        for (int j = 0; j < data.phi; ++j) {
          if (t[j] != 0) raw[j] += raw[k] * t[j];
        }
      }
      raw.resize(data.phi);
      c_ = std::move(raw);
      n_ = m;
      changed = true;
      continue;
    }
    for (int p : prime_factors(n_)) {
      if (n_ % (p * p) != 0) continue;
      bool only_multiples = true;
      for (std::size_t k = 0; k < c_.size() && only_multiples; ++k) {
        if (k % p != 0 && sgn(c_[k]) != 0) only_multiples = false;
      }
      if (!only_multiples) continue;
      std::vector<Rational> sub(c_.size() / p);
      for (std::size_t k = 0; k < sub.size(); ++k) sub[k] = c_[k * p];
      c_ = std::move(sub);
      n_ /= p;
      changed = true;
      break;
    }
  }
}

Cyclotomic Cyclotomic::zeta(int n, long k) {
  if (n < 1) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
  std::vector<Rational> raw(n);
  raw[positive_mod(k, n)] = 1;
  return from_raw(std::move(raw), n);
}

Cyclotomic Cyclotomic::normalize(std::span<const Rational> raw, int conductor) {
  if (conductor < 1) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
  if (raw.size() != static_cast<std::size_t>(conductor)) {
    throw Error(ErrorKind::InvalidInput, "coefficient sequence length must equal the conductor");
  }
  std::vector<Rational> copy(raw.begin(), raw.end());
  for (auto& q : copy) q.canonicalize();
  return from_raw(std::move(copy), conductor);
}

std::vector<Rational> Cyclotomic::coefficients() const {
  std::vector<Rational> out(c_);
  out.resize(n_);
  return out;
}

bool Cyclotomic::is_zero() const { return n_ == 1 && sgn(c_[0]) == 0; }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (n_ == 1) return c_[0];
  return std::nullopt;
}

bool Cyclotomic::is_integer() const { return n_ == 1 && c_[0].get_den() == 1; }

Cyclotomic Cyclotomic::galois(long k) const {
  if (std::gcd(k, static_cast<long>(n_)) != 1) {
    throw Error(ErrorKind::InvalidAutomorphism,
                "gcd(" + std::to_string(k) + ", " + std::to_string(n_) + ") != 1");
  }
  if (n_ == 1) return *this;
  const long kk = positive_mod(k, n_);
  std::vector<Rational> raw(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) raw[static_cast<long>(i) * kk % n_] = c_[i];
  return from_raw(std::move(raw), n_);
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m < 1 || m % n_ != 0) {
    throw Error(ErrorKind::InvalidInput,
                "cannot lift conductor " + std::to_string(n_) + " to " + std::to_string(m));
  }
  if (m == n_) return *this;
  const int step = m / n_;
  std::vector<Rational> raw(m);
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
  const FieldData& data = field_data(m);
  for (int k = data.phi; k < m; ++k) {
    if (sgn(raw[k]) == 0) continue;
    const auto& t = data.tail[k - data.phi];
    for (int j = 0; j < data.phi; ++j) {
      if (t[j] != 0) raw[j] += raw[k] * t[j];
    }
  }
  raw.resize(data.phi);
  return Cyclotomic(m, std::move(raw));
}

std::optional<Cyclotomic> Cyclotomic::restricted(int m) const {
  if (m < 1) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
  if (m % n_ == 0) return lifted(m);
  const int big = static_cast<int>(std::lcm(static_cast<long>(m), static_cast<long>(n_)));
  const Cyclotomic target = lifted(big);
  const int phi_big = euler_phi(big);
  const int phi_m = euler_phi(m);
  detail::RationalMatrix a(phi_big, std::vector<Rational>(phi_m));
  for (int j = 0; j < phi_m; ++j) {
    std::vector<Rational> raw(big);
    raw[static_cast<long>(j) * (big / m) % big] = 1;
    const FieldData& data = field_data(big);
    for (int k = data.phi; k < big; ++k) {
      if (sgn(raw[k]) == 0) continue;
      const auto& t = data.tail[k - data.phi];
      for (int i = 0; i < data.phi; ++i) raw[i] += raw[k] * t[i];
    }
    for (int i = 0; i < phi_big; ++i) a[i][j] = raw[i];
  }
  auto sol = detail::solve_rational(std::move(a), target.c_);
  if (!sol) return std::nullopt;
  return Cyclotomic(m, std::move(*sol));
}

Cyclotomic Cyclotomic::reduced_conductor() const {
  Cyclotomic x = *this;
  x.simplify();
  bool changed = true;
  while (changed && x.n_ > 1) {
    changed = false;
    for (int p : prime_factors(x.n_)) {
      if (auto sub = x.restricted(x.n_ / p)) {
        sub->simplify();
        x = std::move(*sub);
        changed = true;
        break;
      }
    }
  }
  return x;
}

bool Cyclotomic::in_integer_ring(int m) const {
  auto r = restricted(m);
  if (!r) return false;
  return std::all_of(r->c_.begin(), r->c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidInput, "inverse of zero");
  if (n_ == 1) return Cyclotomic(Rational(1 / c_[0]));
  // Solve (x * y) = 1 in the power basis: column j is x * zeta^j.
  const int phi = static_cast<int>(c_.size());
  detail::RationalMatrix a(phi, std::vector<Rational>(phi));
  for (int j = 0; j < phi; ++j) {
    Cyclotomic col = *this * zeta(n_, j);
    col = col.lifted(n_);
    for (int i = 0; i < phi; ++i) a[i][j] = col.c_[i];
  }
  std::vector<Rational> rhs(phi);
  rhs[0] = 1;
  auto sol = detail::solve_rational(std::move(a), std::move(rhs));
  if (!sol) throw Error(ErrorKind::InvalidInput, "singular multiplication map");
  Cyclotomic out(n_, std::move(*sol));
  out.simplify();
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum = 0;
  const double two_pi = 2.0 * std::acos(-1.0);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (sgn(c_[k]) == 0) continue;
    const double angle = two_pi * static_cast<double>(k) / n_;
    sum += c_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

namespace {

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

namespace {

std::string term_text(const Rational& q, long k) {
  if (k == 0) return rational_text(q);
  const std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
  if (q == 1) return power;
  if (q == -1) return "-" + power;
  return rational_text(q) + "*" + power;
}

std::string join_terms(const std::vector<std::pair<Rational, long>>& terms) {
  std::string out;
  for (const auto& [q, k] : terms) {
    if (out.empty()) {
      out = term_text(q, k);
    } else if (sgn(q) < 0) {
      out += " - " + term_text(-q, k);
    } else {
      out += " + " + term_text(q, k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string Cyclotomic::to_string(int m) const {
  const Cyclotomic x = lifted(m);
  std::vector<std::pair<Rational, long>> terms;
  for (std::size_t k = 0; k < x.c_.size(); ++k) {
    if (sgn(x.c_[k]) != 0) terms.emplace_back(x.c_[k], static_cast<long>(k));
  }
  // Multiples of a power outside the basis, e.g. z^2 at conductor 3, print as one term.
  if (terms.size() > 1) {
    for (long k = static_cast<long>(x.c_.size()); k < m; ++k) {
      const Cyclotomic z = zeta(m, k).lifted(m);
      std::size_t lead = 0;
      while (sgn(z.c_[lead]) == 0) ++lead;
      const Rational q = x.c_[lead] / z.c_[lead];
      if (x == z * q) return join_terms({{q, k}});
    }
  }
  return join_terms(terms);
}

std::string Cyclotomic::to_string() const {
  const Cyclotomic x = reduced_conductor();
  return x.to_string(x.n_);
}

std::size_t Cyclotomic::hash_at(int m) const {
  const Cyclotomic x = n_ == m ? *this : lifted(m);
  std::size_t h = std::hash<int>{}(m);
  for (const Rational& q : x.c_) {
    const std::size_t num = mpz_get_si(q.get_num_mpz_t());
    const std::size_t den = mpz_get_ui(q.get_den_mpz_t());
    h ^= num + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= den + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& q : out.c_) q = -q;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (n_ == rhs.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  } else if (rhs.n_ == 1) {
    c_[0] += rhs.c_[0];
    return *this;
  } else {
    const int m = static_cast<int>(std::lcm(static_cast<long>(n_), static_cast<long>(rhs.n_)));
    Cyclotomic a = lifted(m);
    const Cyclotomic b = rhs.lifted(m);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    *this = std::move(a);
  }
  simplify();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  if (sgn(rhs) == 0) {
    n_ = 1;
    c_.assign(1, Rational(0));
    return *this;
  }
  Rational r = rhs;
  r.canonicalize();
  for (auto& q : c_) q *= r;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == 1) return b * a.c_[0];
  if (b.n_ == 1) return a * b.c_[0];
  const int m = static_cast<int>(std::lcm(static_cast<long>(a.n_), static_cast<long>(b.n_)));
  const Cyclotomic x = a.lifted(m);
  const Cyclotomic y = b.lifted(m);
  std::vector<Rational> raw(m);
  Rational prod;
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (sgn(x.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (sgn(y.c_[j]) == 0) continue;
      std::size_t idx = i + j;
      if (idx >= static_cast<std::size_t>(m)) idx -= m;
      mpq_mul(prod.get_mpq_t(), x.c_[i].get_mpq_t(), y.c_[j].get_mpq_t());
      raw[idx] += prod;
    }
  }
  return Cyclotomic::from_raw(std::move(raw), m);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  *this = *this * rhs;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) {
  if (rhs.n_ == 1) {
    if (sgn(rhs.c_[0]) == 0) throw Error(ErrorKind::InvalidInput, "division by zero");
    return *this *= Rational(1 / rhs.c_[0]);
  }
  return *this *= rhs.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const int m = static_cast<int>(std::lcm(static_cast<long>(a.n_), static_cast<long>(b.n_)));
  return a.lifted(m).c_ == b.lifted(m).c_;
}

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  const int m = static_cast<int>(std::lcm(static_cast<long>(a.n_), static_cast<long>(b.n_)));
  const Cyclotomic x = a.lifted(m);
  const Cyclotomic y = b.lifted(m);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    const int c = cmp(x.c_[i], y.c_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
  const Cyclotomic r = x.reduced_conductor();
  os << r.to_string(r.conductor());
  if (r.conductor() > 1) os << " [z=E(" << r.conductor() << ")]";
  return os;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, int conductor) : conductor_(conductor) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        cols_.push_back(static_cast<int>(i) + 1);
      }
    }
    end_col_ = static_cast<int>(text.size()) + 1;
  }

  std::vector<Rational> parse() {
    std::vector<Rational> raw(conductor_);
    if (chars_.empty()) fail("empty expression");
    bool first = true;
    while (pos_ < chars_.size()) {
      int sign = 1;
      if (!first) {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          ++pos_;
          sign = -1;
        } else {
          fail(std::string("expected '+' or '-' but found '") + peek() + "'");
        }
      }
      if (peek() == '+') {
        ++pos_;
      } else if (peek() == '-') {
        ++pos_;
        sign = -sign;
      }
      parse_term(sign, raw);
      first = false;
    }
    return raw;
  }

 private:
  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }
  int column() const { return pos_ < cols_.size() ? cols_[pos_] : end_col_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, column()); }

  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += chars_[pos_++];
    return out;
  }

  void parse_term(int sign, std::vector<Rational>& raw) {
    Rational coef = sign;
    bool have_number = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      if (peek() == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected denominator digits");
        if (mpz_class(den) == 0) fail("zero denominator");
      }
      Rational q{mpz_class(num), mpz_class(den)};
      q.canonicalize();
      coef *= q;
      have_number = true;
      if (peek() == '*') {
        ++pos_;
        if (peek() != 'z') fail("expected 'z' after '*'");
      }
    }
    long exponent = 0;
    if (peek() == 'z') {
      ++pos_;
      exponent = 1;
      if (peek() == '^') {
        ++pos_;
        bool neg = false;
        if (peek() == '-') {
          neg = true;
          ++pos_;
        }
        const std::string e = digits();
        if (e.empty()) fail("expected exponent digits after '^'");
        exponent = std::stol(e);
        if (neg) exponent = -exponent;
      }
    } else if (!have_number) {
      fail(pos_ < chars_.size() ? std::string("unexpected character '") + peek() + "'"
                                : std::string("unexpected end of expression"));
    }
    raw[positive_mod(exponent, conductor_)] += coef;
  }

  int conductor_;
  std::vector<char> chars_;
  std::vector<int> cols_;
  int end_col_ = 1;
  std::size_t pos_ = 0;
};

}  // namespace

Cyclotomic Cyclotomic::parse(std::string_view text, int conductor) {
  if (conductor < 1) throw Error(ErrorKind::InvalidInput, "conductor must be positive");
  TermParser parser(text, conductor);
  return from_raw(parser.parse(), conductor);
}

}  // namespace torusq
