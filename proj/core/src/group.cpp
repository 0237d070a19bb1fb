#include "torusq/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "torusq/error.hpp"

namespace torusq {

namespace {

constexpr std::size_t kFullTableLimit = 4096;

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// GroupElement

GroupElement GroupElement::monomial(std::vector<std::uint32_t> perm, std::vector<Cyclotomic> scalars) {
  if (perm.size() != scalars.size()) throw Error(ErrorKind::InvalidInput, "perm/scalar length mismatch");
  std::vector<bool> seen(perm.size());
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw Error(ErrorKind::InvalidGenerator, "image list is not a permutation");
    seen[p] = true;
  }
  for (const auto& s : scalars) {
    if (s.is_zero()) throw Error(ErrorKind::InvalidGenerator, "monomial scalar is zero");
  }
  return GroupElement(Monomial{std::move(perm), std::move(scalars)});
}

GroupElement GroupElement::permutation(std::vector<std::uint32_t> perm) {
  std::vector<Cyclotomic> ones(perm.size(), Cyclotomic(1));
  return monomial(std::move(perm), std::move(ones));
}

GroupElement GroupElement::dense(Matrix m) {
  if (!m.is_square()) throw Error(ErrorKind::InvalidInput, "matrix is not square");
  return GroupElement(std::move(m));
}

GroupElement GroupElement::identity(std::size_t degree) {
  std::vector<std::uint32_t> perm(degree);
  std::iota(perm.begin(), perm.end(), 0U);
  return permutation(std::move(perm));
}

std::size_t GroupElement::degree() const {
  if (is_monomial()) return as_monomial().perm.size();
  return as_dense().rows();
}

Matrix GroupElement::to_dense() const {
  if (!is_monomial()) return as_dense();
  const auto& m = as_monomial();
  Matrix out(m.perm.size(), m.perm.size());
  for (std::size_t i = 0; i < m.perm.size(); ++i) out(i, m.perm[i]) = m.scalars[i];
  return out;
}

Cyclotomic GroupElement::entry(std::size_t r, std::size_t c) const {
  if (!is_monomial()) return as_dense()(r, c);
  const auto& m = as_monomial();
  return m.perm[r] == c ? m.scalars[r] : Cyclotomic(0);
}

Cyclotomic GroupElement::trace() const {
  if (!is_monomial()) return as_dense().trace();
  const auto& m = as_monomial();
  Cyclotomic sum;
  for (std::size_t i = 0; i < m.perm.size(); ++i) {
    if (m.perm[i] == i) sum += m.scalars[i];
  }
  return sum;
}

GroupElement GroupElement::inverse() const {
  if (is_monomial()) {
    const auto& m = as_monomial();
    Monomial inv{std::vector<std::uint32_t>(m.perm.size()), std::vector<Cyclotomic>(m.perm.size())};
    for (std::size_t i = 0; i < m.perm.size(); ++i) {
      inv.perm[m.perm[i]] = static_cast<std::uint32_t>(i);
      inv.scalars[m.perm[i]] = m.scalars[i].inverse();
    }
    return GroupElement(std::move(inv));
  }
  try {
    return GroupElement(as_dense().inverse());
  } catch (const Error&) {
    throw Error(ErrorKind::InvalidGenerator, "matrix is singular");
  }
}

GroupElement GroupElement::conj() const {
  if (!is_monomial()) return GroupElement(as_dense().conj());
  Monomial out = as_monomial();
  for (auto& s : out.scalars) s = s.conj();
  return GroupElement(std::move(out));
}

GroupElement GroupElement::transpose() const {
  if (!is_monomial()) return GroupElement(as_dense().transpose());
  // Entry (perm[i], i) = scalars[i].
  const auto& m = as_monomial();
  Monomial t{std::vector<std::uint32_t>(m.perm.size()), std::vector<Cyclotomic>(m.perm.size())};
  for (std::size_t i = 0; i < m.perm.size(); ++i) {
    t.perm[m.perm[i]] = static_cast<std::uint32_t>(i);
    t.scalars[m.perm[i]] = m.scalars[i];
  }
  return GroupElement(std::move(t));
}

GroupElement GroupElement::conjugated_by(const Matrix& p, const Matrix& p_inverse) const {
  return GroupElement(p * to_dense() * p_inverse);
}

bool GroupElement::is_identity() const {
  if (is_monomial()) {
    const auto& m = as_monomial();
    for (std::size_t i = 0; i < m.perm.size(); ++i) {
      if (m.perm[i] != i || !(m.scalars[i] == Cyclotomic(1))) return false;
    }
    return true;
  }
  return as_dense() == Matrix::identity(degree());
}

int GroupElement::conductor() const {
  long n = 1;
  if (is_monomial()) {
    for (const auto& s : as_monomial().scalars) n = std::lcm(n, static_cast<long>(s.conductor()));
  } else {
    const Matrix& m = as_dense();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) n = std::lcm(n, static_cast<long>(m(r, c).conductor()));
    }
  }
  return static_cast<int>(n);
}

std::size_t GroupElement::hash_at(int m) const {
  std::size_t h = is_monomial() ? 1 : 2;
  if (is_monomial()) {
    const auto& mono = as_monomial();
    for (auto p : mono.perm) h = mix(h, p);
    for (const auto& s : mono.scalars) h = mix(h, s.hash_at(m));
  } else {
    const Matrix& d = as_dense();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (std::size_t c = 0; c < d.cols(); ++c) h = mix(h, d(r, c).hash_at(m));
    }
  }
  return h;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.degree() != b.degree()) throw Error(ErrorKind::InvalidInput, "degree mismatch in product");
  if (a.is_monomial() && b.is_monomial()) {
    const auto& x = a.as_monomial();
    const auto& y = b.as_monomial();
    Monomial out{std::vector<std::uint32_t>(x.perm.size()), std::vector<Cyclotomic>(x.perm.size())};
    for (std::size_t i = 0; i < x.perm.size(); ++i) {
      const auto j = x.perm[i];
      out.perm[i] = y.perm[j];
      out.scalars[i] = x.scalars[i] * y.scalars[j];
    }
    return GroupElement(std::move(out));
  }
  return GroupElement(a.to_dense() * b.to_dense());
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  if (a.is_monomial() && b.is_monomial()) {
    const auto& x = a.as_monomial();
    const auto& y = b.as_monomial();
    return x.perm == y.perm && x.scalars == y.scalars;
  }
  return a.to_dense() == b.to_dense();
}

GroupElement GroupElement::direct_sum(const GroupElement& a, const GroupElement& b) {
  if (a.is_monomial() && b.is_monomial()) {
    const auto& x = a.as_monomial();
    const auto& y = b.as_monomial();
    Monomial out = x;
    const auto offset = static_cast<std::uint32_t>(x.perm.size());
    for (std::size_t i = 0; i < y.perm.size(); ++i) {
      out.perm.push_back(y.perm[i] + offset);
      out.scalars.push_back(y.scalars[i]);
    }
    return GroupElement(std::move(out));
  }
  return GroupElement(Matrix::direct_sum(a.to_dense(), b.to_dense()));
}

// ---------------------------------------------------------------------------
// FiniteGroup

std::shared_ptr<const FiniteGroup> FiniteGroup::close(std::span<const GroupElement> generators,
                                                      std::size_t limit) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "no generators");
  if (limit < 1) throw Error(ErrorKind::InvalidInput, "closure limit must be positive");
  const std::size_t degree = generators[0].degree();
  bool all_monomial = true;
  long conductor = 1;
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(ErrorKind::InvalidInput, "generators have different degrees");
    all_monomial = all_monomial && g.is_monomial();
    conductor = std::lcm(conductor, static_cast<long>(g.conductor()));
    (void)g.inverse();  // throws InvalidGenerator when singular
  }

  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  group->degree_ = degree;
  group->conductor_ = static_cast<int>(conductor);
  std::vector<GroupElement> gens;
  for (const auto& g : generators) gens.push_back(all_monomial ? g : GroupElement::dense(g.to_dense()));

  auto& elements = group->elements_;
  auto& index = group->index_;
  const int n = group->conductor_;
  auto lookup = [&](const GroupElement& g, std::size_t h) -> std::optional<std::uint32_t> {
    auto [lo, hi] = index.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (elements[it->second] == g) return it->second;
    }
    return std::nullopt;
  };
  auto insert = [&](GroupElement g, std::size_t h) {
    if (elements.size() >= limit) {
      throw Error(ErrorKind::GroupTooLarge, "closure exceeds " + std::to_string(limit) + " elements");
    }
    const auto idx = static_cast<std::uint32_t>(elements.size());
    index.emplace(h, idx);
    elements.push_back(std::move(g));
    return idx;
  };

  GroupElement id = all_monomial ? GroupElement::identity(degree) : GroupElement::dense(Matrix::identity(degree));
  insert(id, id.hash_at(n));
  group->parent_.push_back(0);
  group->parent_slot_.push_back(0);
  const std::size_t ngens = gens.size();
  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t s = 0; s < ngens; ++s) {
      GroupElement y = elements[x] * gens[s];
      const std::size_t h = y.hash_at(n);
      std::uint32_t idx;
      if (auto found = lookup(y, h)) {
        idx = *found;
      } else {
        idx = insert(std::move(y), h);
        group->parent_.push_back(static_cast<std::uint32_t>(x));
        group->parent_slot_.push_back(static_cast<std::uint32_t>(s));
      }
      group->right_.push_back(idx);
    }
  }
  for (const auto& g : gens) group->generators_.push_back(*lookup(g, g.hash_at(n)));
  group->build_cayley();
  group->build_classes();
  return group;
}

std::optional<std::size_t> FiniteGroup::find(const GroupElement& g) const {
  if (g.degree() != degree_) return std::nullopt;
  const GroupElement probe = elements_[0].is_monomial() || !g.is_monomial() ? g : GroupElement::dense(g.to_dense());
  if (conductor_ % probe.conductor() != 0) return std::nullopt;
  auto [lo, hi] = index_.equal_range(probe.hash_at(conductor_));
  for (auto it = lo; it != hi; ++it) {
    if (elements_[it->second] == probe) return it->second;
  }
  return std::nullopt;
}

void FiniteGroup::build_cayley() {
  const std::size_t order = elements_.size();
  if (order <= kFullTableLimit) {
    table_.resize(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      std::uint32_t* row = &table_[a * order];
      row[0] = static_cast<std::uint32_t>(a);
      for (std::size_t b = 1; b < order; ++b) row[b] = static_cast<std::uint32_t>(times_generator(row[parent_[b]], parent_slot_[b]));
    }
  }
  // inverse(y) = inverse(gen) * inverse(parent(y)) along the BFS tree.
  std::vector<std::uint32_t> gen_inverse(generators_.size());
  for (std::size_t s = 0; s < generators_.size(); ++s) {
    std::size_t g = generators_[s];
    std::size_t prev = 0;
    std::size_t cur = g;
    while (cur != 0) {
      prev = cur;
      cur = mult(cur, g);
    }
    gen_inverse[s] = static_cast<std::uint32_t>(g == 0 ? 0 : prev);
  }
  inverse_.assign(order, 0);
  for (std::size_t y = 1; y < order; ++y) {
    inverse_[y] = static_cast<std::uint32_t>(mult(gen_inverse[parent_slot_[y]], inverse_[parent_[y]]));
  }
  element_order_.assign(order, 1);
  exponent_ = 1;
  for (std::size_t x = 1; x < order; ++x) {
    std::size_t k = 1;
    std::size_t cur = x;
    while (cur != 0) {
      cur = mult(cur, x);
      ++k;
    }
    element_order_[x] = static_cast<std::uint32_t>(k);
    exponent_ = std::lcm(exponent_, k);
  }
}

std::size_t FiniteGroup::mult(std::size_t a, std::size_t b) const {
  const std::size_t order = elements_.size();
  if (!table_.empty()) return table_[a * order + b];
  std::vector<std::uint32_t> word;
  for (std::size_t y = b; y != 0; y = parent_[y]) word.push_back(parent_slot_[y]);
  std::size_t cur = a;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = times_generator(cur, *it);
  return cur;
}

std::size_t FiniteGroup::power(std::size_t a, long k) const {
  const long ord = static_cast<long>(element_order_.empty() ? 0 : element_order_[a]);
  long e = k;
  if (ord > 0) {
    e %= ord;
    if (e < 0) e += ord;
  } else if (e < 0) {
    throw Error(ErrorKind::InvalidInput, "negative power before orders are known");
  }
  std::size_t result = 0;
  std::size_t base = a;
  while (e > 0) {
    if (e & 1) result = mult(result, base);
    base = mult(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::conjugate(std::size_t x, std::size_t by) const {
  return mult(mult(inverse_[by], x), by);
}

void FiniteGroup::build_classes() {
  const std::size_t order = elements_.size();
  constexpr std::uint32_t kUnset = ~0U;
  class_of_.assign(order, kUnset);
  classes_.clear();
  for (std::size_t x = 0; x < order; ++x) {
    if (class_of_[x] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(classes_.size());
    std::vector<std::uint32_t> members{static_cast<std::uint32_t>(x)};
    class_of_[x] = c;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto g : generators_) {
        const std::size_t y = conjugate(members[i], g);
        if (class_of_[y] == kUnset) {
          class_of_[y] = c;
          members.push_back(static_cast<std::uint32_t>(y));
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
}

std::map<std::size_t, std::size_t> FiniteGroup::element_orders() const {
  std::map<std::size_t, std::size_t> hist;
  for (auto o : element_order_) ++hist[o];
  return hist;
}

std::vector<std::size_t> FiniteGroup::power_classes(long k) const {
  std::vector<std::size_t> map(classes_.size());
  for (std::size_t c = 0; c < classes_.size(); ++c) map[c] = class_of(power(class_representative(c), k));
  return map;
}

bool FiniteGroup::sylow_cyclic(long p) const {
  const std::size_t order = elements_.size();
  if (!is_prime(p) || order % static_cast<std::size_t>(p) != 0) {
    throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not a prime divisor of |G|");
  }
  std::size_t part = 1;
  for (std::size_t m = order; m % p == 0; m /= p) part *= p;
  return std::any_of(element_order_.begin(), element_order_.end(), [&](auto o) { return o == part; });
}

std::vector<bool> FiniteGroup::subgroup_closure(std::span<const std::size_t> gens) const {
  std::vector<bool> member(elements_.size(), false);
  std::vector<std::size_t> queue{0};
  member[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto g : gens) {
      const std::size_t y = mult(queue[i], g);
      if (!member[y]) {
        member[y] = true;
        queue.push_back(y);
      }
    }
  }
  return member;
}

std::size_t FiniteGroup::commutator_subgroup_order() const {
  std::vector<std::size_t> gens;
  for (auto a : generators_) {
    for (auto b : generators_) {
      const std::size_t c = mult(mult(inverse_[a], inverse_[b]), mult(a, b));
      if (c != 0) gens.push_back(c);
    }
  }
  // Normal closure: add conjugates of subgroup generators until stable.
  std::vector<bool> member = subgroup_closure(gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (auto g : generators_) {
        const std::size_t c = conjugate(gens[i], g);
        if (!member[c]) {
          gens.push_back(c);
          member = subgroup_closure(gens);
          grew = true;
        }
      }
    }
  }
  return static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
}

std::size_t FiniteGroup::abelianization_order() const { return order() / commutator_subgroup_order(); }

bool FiniteGroup::is_abelian() const { return classes_.size() == elements_.size(); }

}  // namespace torusq
