#include "torusq/chartab.hpp"

#include <algorithm>
#include <numeric>

#include "torusq/error.hpp"

namespace torusq {

Character::Character(std::shared_ptr<const FiniteGroup> group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw Error(ErrorKind::InvalidInput, "character without a group");
  if (values_.size() != group_->class_count()) {
    throw Error(ErrorKind::InvalidInput, "character needs one value per conjugacy class");
  }
}

long Character::integer_degree() const {
  const auto q = values_[0].as_rational();
  if (!q || q->get_den() != 1 || sgn(*q) <= 0) {
    throw Error(ErrorKind::InvalidCharacter, "degree is not a positive integer");
  }
  return q->get_num().get_si();
}

bool Character::is_trivial() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

bool Character::is_real() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v == v.conj(); });
}

Character Character::conj() const {
  std::vector<Cyclotomic> out;
  out.reserve(values_.size());
  for (const auto& v : values_) out.push_back(v.conj());
  return Character(group_, std::move(out));
}

int Character::conductor() const {
  long n = 1;
  for (const auto& v : values_) n = std::lcm(n, static_cast<long>(v.conductor()));
  return static_cast<int>(n);
}

namespace {

void require_same_group(const Character& a, const Character& b) {
  if (a.group_ptr() != b.group_ptr()) throw Error(ErrorKind::InvalidPair, "characters of different groups");
}

}  // namespace

Character operator+(const Character& a, const Character& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] + b[c];
  return Character(a.group_ptr(), std::move(out));
}

Character operator*(const Character& a, const Character& b) {
  require_same_group(a, b);
  std::vector<Cyclotomic> out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] * b[c];
  return Character(a.group_ptr(), std::move(out));
}

bool operator==(const Character& a, const Character& b) {
  return a.group_ptr() == b.group_ptr() && a.values_ == b.values_;
}

// ---------------------------------------------------------------------------

CharacterTable::CharacterTable(std::shared_ptr<const FiniteGroup> group, std::vector<Character> irreducibles,
                               long prime)
    : group_(std::move(group)), irreducibles_(std::move(irreducibles)), prime_(prime) {}

std::optional<std::size_t> CharacterTable::index_of(const Character& chi) const {
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    if (irreducibles_[i] == chi) return i;
  }
  return std::nullopt;
}

std::size_t CharacterTable::conjugate_index(std::size_t i) const {
  auto j = index_of(irreducibles_[i].conj());
  if (!j) throw Error(ErrorKind::TableFailure, "table is not closed under complex conjugation");
  return *j;
}

int CharacterTable::conductor() const {
  long n = 1;
  for (const auto& chi : irreducibles_) n = std::lcm(n, static_cast<long>(chi.conductor()));
  return static_cast<int>(n);
}

// ---------------------------------------------------------------------------

Character natural_character(std::shared_ptr<const FiniteGroup> group,
                            std::span<const GroupElement> class_representative_matrices) {
  if (class_representative_matrices.size() != group->class_count()) {
    throw Error(ErrorKind::InvalidInput, "need one matrix per class representative");
  }
  std::vector<Cyclotomic> values;
  values.reserve(class_representative_matrices.size());
  for (const auto& m : class_representative_matrices) values.push_back(m.trace());
  return Character(std::move(group), std::move(values));
}

Character natural_character(std::shared_ptr<const FiniteGroup> group) {
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < group->class_count(); ++c) {
    values.push_back(group->element(group->class_representative(c)).trace());
  }
  return Character(std::move(group), std::move(values));
}

Character regular_character(std::shared_ptr<const FiniteGroup> group) {
  std::vector<Cyclotomic> values(group->class_count());
  values[0] = static_cast<long>(group->order());
  return Character(std::move(group), std::move(values));
}

Character trivial_character(std::shared_ptr<const FiniteGroup> group) {
  std::vector<Cyclotomic> values(group->class_count(), Cyclotomic(1));
  return Character(std::move(group), std::move(values));
}

Cyclotomic inner_product(const Character& a, const Character& b) {
  require_same_group(a, b);
  const FiniteGroup& g = a.group();
  Cyclotomic sum;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const Cyclotomic& x = a[c];
    const Cyclotomic& y = b[g.inverse_class(c)];
    if (x.is_zero() || y.is_zero()) continue;
    sum += (x * y) * Rational(static_cast<long>(g.class_size(c)));
  }
  return sum * Rational(1, static_cast<long>(g.order()));
}

int frobenius_schur(const Character& chi) {
  if (!(inner_product(chi, chi) == Cyclotomic(1))) {
    throw Error(ErrorKind::InvalidCharacter, "Frobenius-Schur indicator needs an irreducible character");
  }
  const FiniteGroup& g = chi.group();
  const auto squares = g.power_classes(2);
  Cyclotomic sum;
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    sum += chi[squares[c]] * Rational(static_cast<long>(g.class_size(c)));
  }
  sum *= Rational(1, static_cast<long>(g.order()));
  const auto q = sum.as_rational();
  if (!q || (*q != 1 && *q != 0 && *q != -1)) {
    throw Error(ErrorKind::InconsistentCharacter, "indicator outside {-1, 0, 1}");
  }
  return static_cast<int>(q->get_num().get_si());
}

namespace {

Character half_square(const Character& chi, int sign) {
  const FiniteGroup& g = chi.group();
  const auto squares = g.power_classes(2);
  std::vector<Cyclotomic> out(chi.size());
  const Rational half(1, 2);
  for (std::size_t c = 0; c < chi.size(); ++c) {
    Cyclotomic v = chi[c] * chi[c];
    if (sign > 0) {
      v += chi[squares[c]];
    } else {
      v -= chi[squares[c]];
    }
    out[c] = v * half;
  }
  return Character(chi.group_ptr(), std::move(out));
}

}  // namespace

Character exterior_square(const Character& chi) { return half_square(chi, -1); }

Character symmetric_square(const Character& chi) { return half_square(chi, +1); }

std::vector<long> decompose(const Character& chi, const CharacterTable& table) {
  if (chi.group_ptr() != table.group_ptr()) throw Error(ErrorKind::InvalidPair, "character and table differ in group");
  std::vector<long> mult;
  mult.reserve(table.size());
  for (const auto& irr : table.irreducibles()) {
    const auto q = inner_product(chi, irr).as_rational();
    if (!q || q->get_den() != 1 || sgn(*q) < 0) {
      throw Error(ErrorKind::InconsistentCharacter, "multiplicity is not a non-negative integer");
    }
    mult.push_back(q->get_num().get_si());
  }
  return mult;
}

std::vector<long> eigenvalue_one_multiplicities(const Character& chi) {
  const FiniteGroup& g = chi.group();
  std::vector<long> out(g.class_count());
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const std::size_t rep = g.class_representative(c);
    const std::size_t order = g.element_order(rep);
    Cyclotomic sum;
    std::size_t cur = 0;
    for (std::size_t l = 0; l < order; ++l) {
      sum += chi[g.class_of(cur)];
      cur = g.mult(cur, rep);
    }
    const auto q = (sum * Rational(1, static_cast<long>(order))).as_rational();
    if (!q || q->get_den() != 1 || sgn(*q) < 0) {
      throw Error(ErrorKind::InconsistentCharacter, "eigenvalue multiplicity is not a non-negative integer");
    }
    out[c] = q->get_num().get_si();
  }
  return out;
}

bool is_faithful(const Character& chi) {
  for (std::size_t c = 1; c < chi.size(); ++c) {
    if (chi[c] == chi[0]) return false;
  }
  return true;
}

bool verify_table(const CharacterTable& table, std::string* failure) {
  auto fail = [&](std::string why) {
    if (failure) *failure = std::move(why);
    return false;
  };
  const FiniteGroup& g = table.group();
  const std::size_t k = g.class_count();
  if (table.size() != k) return fail("row count differs from class count");
  long sum_squares = 0;
  for (const auto& chi : table.irreducibles()) {
    const long d = chi.integer_degree();
    sum_squares += d * d;
  }
  if (sum_squares != static_cast<long>(g.order())) return fail("sum of squared degrees differs from |G|");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const Cyclotomic ip = inner_product(table[i], table[j]);
      if (!(ip == Cyclotomic(i == j ? 1 : 0))) {
        return fail("row orthogonality fails for rows " + std::to_string(i) + ", " + std::to_string(j));
      }
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) {
      Cyclotomic sum;
      for (std::size_t i = 0; i < k; ++i) sum += table[i][c] * table[i][d].conj();
      const Cyclotomic expected =
          c == d ? Cyclotomic(Rational(static_cast<long>(g.order()), static_cast<long>(g.class_size(c))))
                 : Cyclotomic(0);
      if (!(sum == expected)) {
        return fail("column orthogonality fails for classes " + std::to_string(c) + ", " + std::to_string(d));
      }
    }
  }
  return true;
}

}  // namespace torusq
