// Dixon-Schneider: the central characters omega_i(K_s) = |C_s| chi_i(g_s) / chi_i(1) are the
// common eigenvectors of the class multiplication matrices. Over F_p with p = 1 mod exp(G)
// the class algebra splits completely, so the eigenvectors are found by repeatedly
// splitting eigenspaces. Each modular character is then lifted to Q(zeta_e) through the
// eigenvalue multiplicities of rho(g), which are small integers determined by the
// character values on the powers of g.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>

#include "torusq/chartab.hpp"
#include "torusq/error.hpp"

namespace torusq {

namespace {

using u64 = std::uint64_t;

constexpr std::size_t kMaxClasses = 2000;

class Fp {
 public:
  explicit Fp(u64 p) : p_(p) {}
  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return a * b % p_; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p_ - 2); }
  u64 from(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<u64>(r < 0 ? r + static_cast<long>(p_) : r);
  }

 private:
  u64 p_;
};

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

// Row-reduces `m` in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Mat& m, const Fp& f) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = f.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = f.mul(m[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Basis of the null space of a square matrix.
std::vector<Vec> null_space(Mat m, const Fp& f) {
  const std::size_t n = m.size();
  const auto pivots = row_reduce(m, f);
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial via reduction to Hessenberg form; coefficients low degree first.
Vec characteristic_polynomial(Mat h, const Fp& f) {
  const std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const u64 inv = f.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h[r][m - 1] == 0) continue;
      const u64 u = f.mul(h[r][m - 1], inv);
      for (std::size_t j = 0; j < n; ++j) h[r][j] = f.sub(h[r][j], f.mul(u, h[m][j]));
      for (std::size_t j = 0; j < n; ++j) h[j][m] = f.add(h[j][m], f.mul(u, h[j][r]));
    }
  }
  std::vector<Vec> polys(n + 1);
  polys[0] = Vec{1};
  for (std::size_t m = 1; m <= n; ++m) {
    // p_m = (x - h[m-1][m-1]) p_{m-1} - sum_i t_i h[m-1-i][m-1] p_{m-1-i}
    Vec pm(m + 1, 0);
    const Vec& prev = polys[m - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pm[d + 1] = f.add(pm[d + 1], prev[d]);
      pm[d] = f.sub(pm[d], f.mul(h[m - 1][m - 1], prev[d]));
    }
    u64 t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      const u64 coef = f.mul(t, h[m - i - 1][m - 1]);
      if (coef == 0) continue;
      const Vec& q = polys[m - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) pm[d] = f.sub(pm[d], f.mul(coef, q[d]));
    }
    polys[m] = std::move(pm);
  }
  return polys[n];
}

u64 evaluate(const Vec& poly, u64 x, const Fp& f) {
  u64 acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
  return acc;
}

u64 primitive_root(const Fp& f) {
  const u64 p = f.p();
  const auto factors = prime_factors(static_cast<long>(p - 1));
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : factors) {
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  return 1;
}

struct Subspace {
  std::vector<Vec> basis;  // reduced row echelon form
  std::vector<std::size_t> pivots;
};

Subspace make_subspace(std::vector<Vec> vectors, const Fp& f) {
  Subspace s;
  s.pivots = row_reduce(vectors, f);
  s.basis = std::move(vectors);
  return s;
}

class ModularTable {
 public:
  ModularTable(const FiniteGroup& g, u64 p) : g_(g), f_(p) {}

  // Returns the modular central characters, or nullopt if the class algebra did not split.
  std::optional<std::vector<Vec>> central_characters() {
    const std::size_t k = g_.class_count();
    class_matrices_.assign(k, Mat{});
    std::vector<Subspace> spaces;
    {
      std::vector<Vec> unit(k, Vec(k, 0));
      for (std::size_t i = 0; i < k; ++i) unit[i][i] = 1;
      spaces.push_back(make_subspace(std::move(unit), f_));
    }
    for (std::size_t r = 1; r < k; ++r) {
      if (std::all_of(spaces.begin(), spaces.end(), [](const Subspace& s) { return s.basis.size() == 1; })) break;
      std::vector<Subspace> next;
      for (auto& space : spaces) {
        if (space.basis.size() == 1) {
          next.push_back(std::move(space));
          continue;
        }
        auto split = split_space(space, r);
        if (!split) return std::nullopt;
        for (auto& s : *split) next.push_back(std::move(s));
      }
      spaces = std::move(next);
    }
    std::vector<Vec> result;
    for (auto& s : spaces) {
      if (s.basis.size() != 1) return std::nullopt;
      Vec v = s.basis[0];
      if (v[0] == 0) return std::nullopt;
      const u64 inv = f_.inv(v[0]);
      for (auto& x : v) x = f_.mul(x, inv);
      result.push_back(std::move(v));
    }
    return result;
  }

  const Fp& field() const { return f_; }

 private:
  // (M_r)[s][t] = number of x in C_r with x^-1 z_t in C_s, reduced mod p; built on first use.
  const Mat& class_matrix(std::size_t r) {
    auto& slot = class_matrices_[r];
    if (!slot.empty()) return slot;
    const std::size_t k = g_.class_count();
    slot.assign(k, Vec(k, 0));
    for (std::size_t t = 0; t < k; ++t) {
      const std::size_t z = g_.class_representative(t);
      for (std::uint32_t x : g_.class_members(r)) {
        const std::size_t s = g_.class_of(g_.mult(g_.inverse(x), z));
        slot[s][t] = f_.add(slot[s][t], 1);
      }
    }
    return slot;
  }

  std::optional<std::vector<Subspace>> split_space(const Subspace& space, std::size_t r) {
    const std::size_t k = g_.class_count();
    const Mat& mr = class_matrix(r);
    const std::size_t m = space.basis.size();
    // Restricted operator in the echelon basis: coordinates are the values at pivot columns.
    Mat restricted(m, Vec(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
      const Vec& b = space.basis[j];
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t s = space.pivots[i];
        u64 acc = 0;
        for (std::size_t t = 0; t < k; ++t) {
          if (b[t] == 0) continue;
          acc = f_.add(acc, f_.mul(mr[s][t], b[t]));
        }
        restricted[i][j] = acc;
      }
    }
    const Vec poly = characteristic_polynomial(restricted, f_);
    std::vector<Subspace> pieces;
    std::size_t total = 0;
    for (u64 lambda = 0; lambda < f_.p() && total < m; ++lambda) {
      if (evaluate(poly, lambda, f_) != 0) continue;
      Mat shifted = restricted;
      for (std::size_t i = 0; i < m; ++i) shifted[i][i] = f_.sub(shifted[i][i], lambda);
      const auto kernel = null_space(std::move(shifted), f_);
      if (kernel.empty()) continue;
      std::vector<Vec> vectors;
      for (const auto& coords : kernel) {
        Vec v(k, 0);
        for (std::size_t j = 0; j < m; ++j) {
          if (coords[j] == 0) continue;
          for (std::size_t t = 0; t < k; ++t) v[t] = f_.add(v[t], f_.mul(coords[j], space.basis[j][t]));
        }
        vectors.push_back(std::move(v));
      }
      total += vectors.size();
      pieces.push_back(make_subspace(std::move(vectors), f_));
    }
    if (total != m) return std::nullopt;
    return pieces;
  }

  const FiniteGroup& g_;
  Fp f_;
  std::vector<Mat> class_matrices_;
};

std::optional<CharacterTable> attempt(const std::shared_ptr<const FiniteGroup>& group, u64 p) {
  const FiniteGroup& g = *group;
  const std::size_t k = g.class_count();
  const std::size_t order = g.order();
  const std::size_t e = g.exponent();
  ModularTable modular(g, p);
  auto central = modular.central_characters();
  if (!central || central->size() != k) return std::nullopt;
  const Fp& f = modular.field();

  // power_class[s][l] = class of rep(s)^l
  std::vector<std::vector<std::size_t>> power_class(k, std::vector<std::size_t>(e));
  for (std::size_t s = 0; s < k; ++s) {
    const std::size_t rep = g.class_representative(s);
    std::size_t cur = 0;
    for (std::size_t l = 0; l < e; ++l) {
      power_class[s][l] = g.class_of(cur);
      cur = g.mult(cur, rep);
    }
  }
  const u64 zeta = f.pow(primitive_root(f), (p - 1) / e);
  std::vector<u64> zeta_pow(e);
  for (std::size_t j = 0; j < e; ++j) zeta_pow[j] = f.pow(zeta, j);
  const u64 inv_e = f.inv(e % p);

  const auto max_degree = static_cast<u64>(std::floor(std::sqrt(static_cast<double>(order)))) + 1;
  std::vector<Character> rows;
  for (const Vec& omega : *central) {
    u64 norm = 0;
    for (std::size_t s = 0; s < k; ++s) {
      const u64 term = f.mul(f.mul(omega[s], omega[g.inverse_class(s)]), f.inv(g.class_size(s) % p));
      norm = f.add(norm, term);
    }
    if (norm == 0) return std::nullopt;
    const u64 degree_squared = f.mul(order % p, f.inv(norm));
    u64 degree = 0;
    for (u64 d = 1; d <= max_degree; ++d) {
      if (d * d <= order && f.mul(d, d) == degree_squared) {
        degree = d;
        break;
      }
    }
    if (degree == 0) return std::nullopt;
    Vec chi(k);
    for (std::size_t s = 0; s < k; ++s) chi[s] = f.mul(f.mul(omega[s], degree), f.inv(g.class_size(s) % p));

    std::vector<Cyclotomic> values(k);
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<Rational> raw(e);
      u64 total = 0;
      for (std::size_t j = 0; j < e; ++j) {
        u64 acc = 0;
        for (std::size_t l = 0; l < e; ++l) {
          acc = f.add(acc, f.mul(chi[power_class[s][l]], zeta_pow[(e - (j * l) % e) % e]));
        }
        const u64 mult = f.mul(acc, inv_e);
        if (mult > degree) return std::nullopt;
        total += mult;
        raw[j] = static_cast<long>(mult);
      }
      if (total != degree) return std::nullopt;
      values[s] = Cyclotomic::normalize(raw, static_cast<int>(e));
    }
    rows.emplace_back(group, std::move(values));
  }

  long sum_squares = 0;
  for (const auto& chi : rows) {
    const long d = chi.integer_degree();
    sum_squares += d * d;
  }
  if (sum_squares != static_cast<long>(order)) return std::nullopt;

  std::sort(rows.begin(), rows.end(), [](const Character& a, const Character& b) {
    if (a.is_trivial() != b.is_trivial()) return a.is_trivial();
    const long da = a.integer_degree();
    const long db = b.integer_degree();
    if (da != db) return da < db;
    for (std::size_t c = 0; c < a.size(); ++c) {
      const auto ord = compare(a[c], b[c]);
      if (ord != std::strong_ordering::equal) return ord == std::strong_ordering::less;
    }
    return false;
  });
  return CharacterTable(group, std::move(rows), static_cast<long>(p));
}

}  // namespace

CharacterTable dixon_schneider(std::shared_ptr<const FiniteGroup> group, const DixonOptions& options) {
  const std::size_t order = group->order();
  if (group->class_count() > kMaxClasses) {
    throw Error(ErrorKind::GroupTooLarge,
                std::to_string(group->class_count()) + " classes exceed the table limit " + std::to_string(kMaxClasses));
  }
  const long e = static_cast<long>(group->exponent());
  const long bound = 2 * static_cast<long>(std::ceil(std::sqrt(static_cast<double>(order))));
  long candidate = 1;
  int tried = 0;
  while (tried < options.max_primes) {
    candidate += e;
    if (candidate <= bound || !is_prime(candidate)) continue;
    ++tried;
    auto table = attempt(group, static_cast<u64>(candidate));
    if (!table) continue;
    if (options.verify_exact && !verify_table(*table)) continue;
    return std::move(*table);
  }
  throw Error(ErrorKind::TableFailure,
              "class algebra did not split for " + std::to_string(options.max_primes) + " primes");
}

}  // namespace torusq
