#include "torusq/torusq.hpp"

#include <algorithm>
#include <numeric>

#include "torusq/error.hpp"

namespace torusq {

namespace {

using Vector = std::vector<Cyclotomic>;

Vector act(const GroupElement& m, const Vector& v) {
  const std::size_t n = v.size();
  Vector out(n);
  if (m.is_monomial()) {
    const auto& mono = m.as_monomial();
    for (std::size_t i = 0; i < n; ++i) {
      if (!v[mono.perm[i]].is_zero()) out[i] = mono.scalars[i] * v[mono.perm[i]];
    }
    return out;
  }
  const Matrix& d = m.as_dense();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!d(i, j).is_zero() && !v[j].is_zero()) out[i] += d(i, j) * v[j];
    }
  }
  return out;
}

// Echelon basis grown one vector at a time. Each stored row is 1 at its pivot and zero at
// the pivots of the rows stored before it.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t n) : n_(n) {}

  // Returns true if v was independent of the current span.
  bool insert(Vector v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Cyclotomic f = v[pivots_[k]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
      }
    }
    std::size_t p = 0;
    while (p < n_ && v[p].is_zero()) ++p;
    if (p == n_) return false;
    const Cyclotomic inv = v[p].inverse();
    for (auto& x : v) {
      if (!x.is_zero()) x *= inv;
    }
    pivots_.push_back(p);
    rows_.push_back(std::move(v));
    return true;
  }

  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<Vector>& rows() const noexcept { return rows_; }

 private:
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Matrix rows_to_matrix(const std::vector<Vector>& rows, std::size_t n) {
  Matrix m(rows.size(), n);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

// Canonical basis of a row span: the nonzero rows of its reduced echelon form.
Matrix canonical_basis(const std::vector<Vector>& rows, std::size_t n) {
  const Matrix r = rows_to_matrix(rows, n).rref();
  std::vector<Vector> kept;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    Vector row(n);
    bool nonzero = false;
    for (std::size_t c = 0; c < n; ++c) {
      row[c] = r(i, c);
      nonzero = nonzero || !row[c].is_zero();
    }
    if (nonzero) kept.push_back(std::move(row));
  }
  return rows_to_matrix(kept, n);
}

// Smallest L-invariant subspace containing the seeds, stopping early past `cap` dimensions.
EchelonSpan spin(const AnalyticRep& rep, const std::vector<Vector>& seeds, std::size_t cap) {
  EchelonSpan span(rep.degree());
  std::vector<Vector> queue;
  for (const auto& s : seeds) {
    if (span.insert(s)) queue.push_back(s);
  }
  for (std::size_t i = 0; i < queue.size() && span.dimension() <= cap; ++i) {
    for (std::size_t s = 0; s < rep.group().generator_count(); ++s) {
      Vector w = act(rep.generator_image(s), queue[i]);
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span;
}

std::vector<Vector> null_space(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix r = m.rref(&pivots);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_lagrangian(const SymplecticForm& omega, const std::vector<Vector>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (!omega.evaluate(basis[i], basis[j]).is_zero()) return false;
    }
  }
  return true;
}

bool complementary(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t n) {
  EchelonSpan span(n);
  for (const auto& v : a) span.insert(v);
  for (const auto& v : b) span.insert(v);
  return span.dimension() == n;
}

std::size_t nonnegative_integer(const Cyclotomic& value, const char* what) {
  const auto q = value.as_rational();
  if (!q || q->get_den() != 1 || sgn(*q) < 0) {
    throw Error(ErrorKind::InconsistentCharacter, std::string(what) + " is not a non-negative integer");
  }
  return q->get_num().get_ui();
}

}  // namespace

// ---------------------------------------------------------------------------
// AnalyticRep

AnalyticRep::AnalyticRep(std::shared_ptr<const FiniteGroup> group, std::vector<GroupElement> matrices)
    : group_(std::move(group)),
      degree_(matrices.empty() ? 0 : matrices[0].degree()),
      matrices_(std::move(matrices)),
      character_(trivial_character(group_)),
      faithful_(true) {
  std::vector<Cyclotomic> values;
  values.reserve(group_->class_count());
  for (std::size_t c = 0; c < group_->class_count(); ++c) {
    values.push_back(matrices_[group_->class_representative(c)].trace());
  }
  character_ = Character(group_, std::move(values));
  for (std::size_t x = 1; x < matrices_.size() && faithful_; ++x) faithful_ = !matrices_[x].is_identity();
}

AnalyticRep AnalyticRep::assemble(std::shared_ptr<const FiniteGroup> group, std::vector<GroupElement> images) {
  if (images.size() != group->generator_count()) {
    throw Error(ErrorKind::NotAHomomorphism, "need one image per generator");
  }
  const std::size_t degree = images[0].degree();
  bool all_monomial = true;
  for (const auto& m : images) {
    if (m.degree() != degree) throw Error(ErrorKind::NotAHomomorphism, "generator images differ in degree");
    all_monomial = all_monomial && m.is_monomial();
  }
  if (!all_monomial) {
    for (auto& m : images) m = GroupElement::dense(m.to_dense());
  }
  const FiniteGroup& g = *group;
  std::vector<GroupElement> matrices;
  matrices.reserve(g.order());
  matrices.push_back(all_monomial ? GroupElement::identity(degree) : GroupElement::dense(Matrix::identity(degree)));
  for (std::size_t x = 1; x < g.order(); ++x) matrices.push_back(matrices[g.parent(x)] * images[g.parent_slot(x)]);
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t s = 0; s < images.size(); ++s) {
      if (!(matrices[x] * images[s] == matrices[g.times_generator(x, s)])) {
        throw Error(ErrorKind::NotAHomomorphism,
                    "images violate a relation at element " + std::to_string(x) + ", generator " + std::to_string(s));
      }
    }
  }
  return AnalyticRep(std::move(group), std::move(matrices));
}

AnalyticRep AnalyticRep::natural(std::shared_ptr<const FiniteGroup> group) {
  std::vector<GroupElement> matrices;
  matrices.reserve(group->order());
  for (std::size_t x = 0; x < group->order(); ++x) matrices.push_back(group->element(x));
  return AnalyticRep(std::move(group), std::move(matrices));
}

AnalyticRep AnalyticRep::conjugate_sum(const AnalyticRep& rho) {
  std::vector<GroupElement> matrices;
  matrices.reserve(rho.matrices_.size());
  for (const auto& m : rho.matrices_) matrices.push_back(GroupElement::direct_sum(m, m.conj()));
  return AnalyticRep(rho.group_, std::move(matrices));
}

AnalyticRep AnalyticRep::direct_sum(const AnalyticRep& a, const AnalyticRep& b) {
  if (a.group_ != b.group_) throw Error(ErrorKind::InvalidPair, "representations of different groups");
  std::vector<GroupElement> matrices;
  matrices.reserve(a.matrices_.size());
  for (std::size_t x = 0; x < a.matrices_.size(); ++x) {
    matrices.push_back(GroupElement::direct_sum(a.matrices_[x], b.matrices_[x]));
  }
  return AnalyticRep(a.group_, std::move(matrices));
}

AnalyticRep AnalyticRep::regular(std::shared_ptr<const FiniteGroup> group) {
  std::vector<GroupElement> images;
  for (std::size_t s = 0; s < group->generator_count(); ++s) {
    std::vector<std::uint32_t> perm(group->order());
    for (std::size_t x = 0; x < group->order(); ++x) perm[x] = static_cast<std::uint32_t>(group->times_generator(x, s));
    images.push_back(GroupElement::permutation(std::move(perm)));
  }
  return assemble(std::move(group), std::move(images));
}

AnalyticRep AnalyticRep::trivial(std::shared_ptr<const FiniteGroup> group, std::size_t degree) {
  std::vector<GroupElement> matrices(group->order(), GroupElement::identity(degree));
  return AnalyticRep(std::move(group), std::move(matrices));
}

AnalyticRep AnalyticRep::linear(const Character& chi) {
  if (!(chi.degree() == Cyclotomic(1))) throw Error(ErrorKind::InvalidCharacter, "linear character must have degree 1");
  const auto& group = chi.group_ptr();
  std::vector<GroupElement> matrices;
  matrices.reserve(group->order());
  for (std::size_t x = 0; x < group->order(); ++x) {
    matrices.push_back(GroupElement::monomial({0}, {chi[group->class_of(x)]}));
  }
  return AnalyticRep(group, std::move(matrices));
}

AnalyticRep AnalyticRep::conjugated_by(const Matrix& p) const {
  const Matrix p_inverse = p.inverse();
  std::vector<GroupElement> matrices;
  matrices.reserve(matrices_.size());
  for (const auto& m : matrices_) matrices.push_back(m.conjugated_by(p, p_inverse));
  return AnalyticRep(group_, std::move(matrices));
}

bool AnalyticRep::is_trivial() const {
  const Cyclotomic n(static_cast<long>(degree_));
  return std::all_of(character_.values().begin(), character_.values().end(),
                     [&](const Cyclotomic& v) { return v == n; });
}

// ---------------------------------------------------------------------------
// SymplecticForm, LatticeSpec

SymplecticForm::SymplecticForm(Matrix omega) : omega_(std::move(omega)) {
  if (!omega_.is_square()) throw Error(ErrorKind::InvalidForm, "form matrix is not square");
  if (!(omega_.transpose() + omega_).is_zero()) throw Error(ErrorKind::InvalidForm, "form matrix is not antisymmetric");
}

SymplecticForm SymplecticForm::wedge(std::size_t degree, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  Matrix m(degree, degree);
  for (const auto& [a, b] : pairs) {
    if (a >= degree || b >= degree || a == b) throw Error(ErrorKind::InvalidForm, "wedge index out of range");
    m(a, b) += 1;
    m(b, a) -= 1;
  }
  return SymplecticForm(std::move(m));
}

bool SymplecticForm::is_degenerate() const { return omega_.determinant().is_zero(); }

Cyclotomic SymplecticForm::evaluate(std::span<const Cyclotomic> u, std::span<const Cyclotomic> v) const {
  Cyclotomic sum;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!v[j].is_zero() && !omega_(i, j).is_zero()) sum += u[i] * omega_(i, j) * v[j];
    }
  }
  return sum;
}

LatticeSpec::LatticeSpec(Cyclotomic omega) : omega_(std::move(omega)) {
  if (omega_ == Cyclotomic(1)) return;
  const long bound = std::lcm(2L, static_cast<long>(omega_.conductor()));
  Cyclotomic power = omega_;
  long order = 1;
  while (!(power == Cyclotomic(1)) && order <= bound) {
    power *= omega_;
    ++order;
  }
  if (order > bound) throw Error(ErrorKind::InvalidLattice, "lattice generator is not a root of unity");
  if (omega_ == omega_.conj()) throw Error(ErrorKind::InvalidLattice, "Z + omega Z is not a lattice for real omega");
}

bool LatticeSpec::contains(const Cyclotomic& a) const {
  if (omega_ == Cyclotomic(1)) return a.is_integer();
  // a = x + y omega with x, y real forces y = (a - conj a) / (omega - conj omega).
  const Cyclotomic y = (a - a.conj()) / (omega_ - omega_.conj());
  const Cyclotomic x = a - y * omega_;
  return x.is_integer() && y.is_integer();
}

bool LatticeSpec::preserves(const Cyclotomic& a) const {
  if (omega_ == Cyclotomic(1)) return a.is_integer();
  return contains(a) && contains(a * omega_);
}

// ---------------------------------------------------------------------------
// Names

std::string_view to_string(PairType t) {
  switch (t) {
    case PairType::Real: return "real";
    case PairType::Complex: return "complex";
    case PairType::Trivial: return "trivial";
  }
  return "?";
}

std::string to_string(const SymplecticClass& c) {
  switch (c.kind) {
    case SymplecticClass::Kind::QuaternionicIrreducible: return "QuaternionicIrreducible";
    case SymplecticClass::Kind::ConjugatePair: return "ConjugatePair(" + std::string(to_string(c.pair)) + ")";
    case SymplecticClass::Kind::NotUniSymplectic: return "NotUniSymplectic";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::TorusOnly: return "TORUS_ONLY";
    case Verdict::SmoothImpliesTwoTorus: return "SMOOTH_IMPLIES_2TORUS";
    case Verdict::TwoTorus: return "TWO_TORUS";
    case Verdict::NoObstructionRecorded: return "NO_OBSTRUCTION_RECORDED";
  }
  return "?";
}

std::string_view summary(Verdict v) {
  switch (v) {
    case Verdict::TorusOnly:
    case Verdict::SmoothImpliesTwoTorus: return "singular-unless-torus";
    case Verdict::TwoTorus: return "two-torus";
    case Verdict::NoObstructionRecorded: return "no-obstruction-recorded";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Character-level invariants

std::size_t h0_reflexive_1forms(const AnalyticRep& rep) {
  return nonnegative_integer(inner_product(rep.character(), trivial_character(rep.group_ptr())), "h0 of 1-forms");
}

std::size_t h0_reflexive_2forms(const AnalyticRep& rep) {
  return nonnegative_integer(inner_product(exterior_square(rep.character()), trivial_character(rep.group_ptr())),
                             "h0 of 2-forms");
}

SymplecticClass classify_symplectic(const AnalyticRep& rep, const CharacterTable& table) {
  const auto mult = decompose(rep.character(), table);
  std::vector<std::size_t> support;
  long total = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] > 0) support.push_back(i);
    total += mult[i];
  }
  SymplecticClass out;
  if (total == 1) {
    if (frobenius_schur(table[support[0]]) == -1) {
      out.kind = SymplecticClass::Kind::QuaternionicIrreducible;
      out.constituents = support;
    }
    return out;
  }
  if (total != 2) return out;
  if (support.size() == 1) {
    const std::size_t i = support[0];
    const int indicator = frobenius_schur(table[i]);
    if (indicator != 1) return out;  // rho + rho for quaternionic rho carries three invariant 2-forms
    out.kind = SymplecticClass::Kind::ConjugatePair;
    out.pair = table[i].is_trivial() ? PairType::Trivial : PairType::Real;
    out.constituents = {i, i};
    return out;
  }
  if (table.conjugate_index(support[0]) == support[1]) {
    out.kind = SymplecticClass::Kind::ConjugatePair;
    out.pair = PairType::Complex;
    out.constituents = support;
  }
  return out;
}

std::optional<SymplecticForm> invariant_form(const AnalyticRep& rep) {
  const std::size_t n = rep.degree();
  const FiniteGroup& g = rep.group();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix acc(n, n);
      for (std::size_t x = 0; x < g.order(); ++x) {
        const GroupElement& m = rep.matrix(x);
        if (m.is_monomial()) {
          const auto& mono = m.as_monomial();
          const Cyclotomic s = mono.scalars[a] * mono.scalars[b];
          acc(mono.perm[a], mono.perm[b]) += s;
          acc(mono.perm[b], mono.perm[a]) -= s;
          continue;
        }
        const Matrix& d = m.as_dense();
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (!d(a, i).is_zero() && !d(b, j).is_zero()) acc(i, j) += d(a, i) * d(b, j);
            if (!d(b, i).is_zero() && !d(a, j).is_zero()) acc(i, j) -= d(b, i) * d(a, j);
          }
        }
      }
      if (acc.is_zero()) continue;
      Cyclotomic lead;
      for (std::size_t i = 0; i < n && lead.is_zero(); ++i) {
        for (std::size_t j = 0; j < n && lead.is_zero(); ++j) lead = acc(i, j);
      }
      acc *= lead.inverse();
      return SymplecticForm(std::move(acc));
    }
  }
  return std::nullopt;
}

bool preserves_form(const AnalyticRep& rep, const SymplecticForm& omega) {
  if (omega.degree() != rep.degree()) throw Error(ErrorKind::InvalidForm, "form degree differs from the representation");
  for (std::size_t s = 0; s < rep.group().generator_count(); ++s) {
    const Matrix m = rep.generator_image(s).to_dense();
    if (!(m.transpose() * omega.matrix() * m == omega.matrix())) return false;
  }
  return true;
}

bool preserves_lattice(const AnalyticRep& rep, const LatticeSpec& lattice) {
  const std::size_t n = rep.degree();
  for (std::size_t s = 0; s < rep.group().generator_count(); ++s) {
    const GroupElement& m = rep.generator_image(s);
    if (m.is_monomial()) {
      for (const auto& v : m.as_monomial().scalars) {
        if (!lattice.preserves(v)) return false;
      }
      continue;
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const Cyclotomic& v = m.as_dense()(r, c);
        if (!v.is_zero() && !lattice.preserves(v)) return false;
      }
    }
  }
  return true;
}

bool has_eigenvalue_one(const GroupElement& m) {
  if (!m.is_monomial()) return (m.as_dense() - Matrix::identity(m.degree())).determinant().is_zero();
  // A cycle of length l with scalar product c contributes x^l - c to the characteristic polynomial.
  const auto& mono = m.as_monomial();
  std::vector<bool> seen(mono.perm.size(), false);
  for (std::size_t start = 0; start < mono.perm.size(); ++start) {
    if (seen[start]) continue;
    Cyclotomic product(1);
    for (std::size_t i = start; !seen[i]; i = mono.perm[i]) {
      seen[i] = true;
      product *= mono.scalars[i];
    }
    if (product == Cyclotomic(1)) return true;
  }
  return false;
}

EigenvalueOneResult eigenvalue_one_all(const AnalyticRep& rep) {
  EigenvalueOneResult out;
  const FiniteGroup& g = rep.group();
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    const std::size_t x = g.class_representative(c);
    if (has_eigenvalue_one(rep.matrix(x))) continue;
    out.failing_classes.push_back(c);
    out.failing_orders.push_back(g.element_order(x));
  }
  out.all = out.failing_classes.empty();
  return out;
}

bool is_primitive(const FiniteGroup& group) {
  const std::size_t ab = group.abelianization_order();
  for (int p : prime_factors(static_cast<long>(group.order()))) {
    if (group.sylow_cyclic(p) && ab % static_cast<std::size_t>(p) == 0) return false;
  }
  return true;
}

bool homogeneous_decomplexification(const AnalyticRep& rep, const CharacterTable& table) {
  const auto mult = decompose(rep.character(), table);
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] > 0) support.push_back(i);
  }
  if (support.size() == 1) return true;
  return support.size() == 2 && table.conjugate_index(support[0]) == support[1];
}

Verdict smoothness_verdict(const VerdictInput& in) {
  using Kind = SymplecticClass::Kind;
  if (in.symplectic_class.kind == Kind::ConjugatePair && in.symplectic_class.pair == PairType::Trivial &&
      in.degree == 2) {
    return Verdict::TwoTorus;
  }
  if (in.homogeneous && !in.trivial_rep) return Verdict::TorusOnly;
  if (in.symplectic_class.kind != Kind::NotUniSymplectic && in.degree > 2) return Verdict::SmoothImpliesTwoTorus;
  return Verdict::NoObstructionRecorded;
}

// ---------------------------------------------------------------------------
// Projections and fibrations

std::vector<IsotypicComponent> isotypic_projections(const AnalyticRep& rep, const CharacterTable& table) {
  const auto mult = decompose(rep.character(), table);
  const FiniteGroup& g = rep.group();
  const std::size_t n = rep.degree();
  std::vector<Matrix> class_sums(g.class_count(), Matrix(n, n));
  for (std::size_t x = 0; x < g.order(); ++x) {
    Matrix& sum = class_sums[g.class_of(x)];
    const GroupElement& m = rep.matrix(x);
    if (m.is_monomial()) {
      const auto& mono = m.as_monomial();
      for (std::size_t i = 0; i < n; ++i) sum(i, mono.perm[i]) += mono.scalars[i];
    } else {
      sum += m.as_dense();
    }
  }
  std::vector<IsotypicComponent> out;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    Matrix pi(n, n);
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      const Cyclotomic w = table[i][c].conj();
      if (!w.is_zero()) pi += class_sums[c] * w;
    }
    pi *= Cyclotomic(Rational(table[i].integer_degree(), static_cast<long>(g.order())));
    out.push_back({i, mult[i], std::move(pi)});
  }
  return out;
}

std::optional<FibrationData> lagrangian_fibration_data(const AnalyticRep& rep, const SymplecticForm& omega,
                                                       const CharacterTable& table) {
  if (!preserves_form(rep, omega)) throw Error(ErrorKind::InvalidForm, "form is not invariant");
  if (omega.is_degenerate()) return std::nullopt;
  const SymplecticClass cls = classify_symplectic(rep, table);
  if (cls.kind != SymplecticClass::Kind::ConjugatePair) return std::nullopt;
  const std::size_t n = rep.degree();
  const std::size_t half = n / 2;

  auto accept = [&](const std::vector<Vector>& a, const std::vector<Vector>& b) -> std::optional<FibrationData> {
    if (a.size() != half || b.size() != half) return std::nullopt;
    if (!complementary(a, b, n) || !is_lagrangian(omega, a) || !is_lagrangian(omega, b)) return std::nullopt;
    return FibrationData{canonical_basis(a, n), canonical_basis(b, n)};
  };

  if (cls.pair == PairType::Complex) {
    const auto comps = isotypic_projections(rep, table);
    if (comps.size() != 2) return std::nullopt;
    return accept(comps[0].projection.column_space_basis(), comps[1].projection.column_space_basis());
  }

  // rho + rho: the invariant half-dimensional subspaces form a family; look for two among the
  // spans of standard basis vectors first.
  std::vector<std::vector<Vector>> candidates;
  for (std::size_t j = 0; j < n; ++j) {
    Vector e(n);
    e[j] = 1;
    EchelonSpan span = spin(rep, {e}, half);
    if (span.dimension() != half) continue;
    for (const auto& previous : candidates) {
      if (auto found = accept(previous, span.rows())) return found;
    }
    candidates.push_back(span.rows());
  }
  // Image and kernel of a commutant element of rank n/2.
  const FiniteGroup& g = rep.group();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Matrix r(n, n);
      for (std::size_t x = 0; x < g.order(); ++x) {
        const Matrix m = rep.matrix(x).to_dense();
        const Matrix m_inv = rep.matrix(g.inverse(x)).to_dense();
        for (std::size_t i = 0; i < n; ++i) {
          if (m(i, a).is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k) {
            if (!m_inv(b, k).is_zero()) r(i, k) += m(i, a) * m_inv(b, k);
          }
        }
      }
      if (r.rank() != half) continue;
      if (auto found = accept(r.column_space_basis(), null_space(r))) return found;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

QuotientReport analyze(const AnalyticRep& rep, const CharacterTable& table, const std::optional<SymplecticForm>& omega,
                       const std::optional<LatticeSpec>& lattice) {
  if (rep.group_ptr() != table.group_ptr()) throw Error(ErrorKind::InvalidPair, "table belongs to another group");
  QuotientReport r;
  const FiniteGroup& g = rep.group();
  r.conductor = static_cast<int>(std::lcm(static_cast<long>(g.conductor()), static_cast<long>(table.conductor())));
  r.group_order = g.order();
  r.class_count = g.class_count();
  r.degree = rep.degree();
  r.faithful = rep.faithful();
  r.decomposition = decompose(rep.character(), table);
  for (std::size_t i = 0; i < r.decomposition.size(); ++i) {
    if (r.decomposition[i] > 0) r.constituent_indicators.push_back(frobenius_schur(table[i]));
  }
  r.h10 = h0_reflexive_1forms(rep);
  r.h20 = h0_reflexive_2forms(rep);
  r.symplectic_class = classify_symplectic(rep, table);
  r.homogeneous_decomplexification = homogeneous_decomplexification(rep, table);
  r.eigenvalue_one = eigenvalue_one_all(rep);
  r.primitive = is_primitive(g);
  r.verdict = smoothness_verdict({r.symplectic_class, r.homogeneous_decomplexification, rep.is_trivial(), rep.degree()});

  r.invariant_form = invariant_form(rep);
  r.invariant_form_degenerate = !r.invariant_form || r.invariant_form->is_degenerate();
  if (omega) {
    const bool preserved = preserves_form(rep, *omega);
    r.supplied_form = FormCheck{*omega, preserved, omega->is_degenerate()};
  }
  if (lattice) {
    r.lattice_preserved = preserves_lattice(rep, *lattice);
    r.lattice_omega = lattice->omega();
  }

  if (r.symplectic_class.kind == SymplecticClass::Kind::ConjugatePair) {
    const SymplecticForm* chosen = nullptr;
    if (r.supplied_form && r.supplied_form->preserved && !r.supplied_form->degenerate) {
      chosen = &r.supplied_form->form;
    } else if (r.invariant_form && !r.invariant_form_degenerate) {
      chosen = &*r.invariant_form;
    }
    if (chosen) r.fibration = lagrangian_fibration_data(rep, *chosen, table);
  }
  return r;
}

}  // namespace torusq
