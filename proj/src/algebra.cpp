#include "cremona/algebra.hpp"

#include <algorithm>
#include <mutex>

#include "cremona/error.hpp"

namespace cremona {

// ---------------------------------------------------------------------------
// Structure constants.

StructureConstants::StructureConstants(std::vector<std::string> basis, const std::vector<ProductEntry>& entries)
    : basis_(std::move(basis)) {
  std::size_t n = basis_.size();
  if (n == 0) throw StructuralError("an algebra needs a nonempty basis");
  table_.assign(n * (n + 1) / 2, Vector(n, Scalar(0)));
  std::vector<bool> seen(table_.size(), false);
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n) throw StructuralError("product index out of range");
    if (e.coeffs.size() != n) throw StructuralError("product coefficient vector has the wrong length");
    std::size_t k = index(e.i, e.j);
    if (seen[k] && table_[k] != e.coeffs) {
      throw StructuralError("products b" + std::to_string(e.i) + "·b" + std::to_string(e.j) +
                            " listed twice with different values (commutativity)");
    }
    seen[k] = true;
    table_[k] = e.coeffs;
  }
}

std::size_t StructureConstants::index(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  // Row-major upper triangle.
  std::size_t n = basis_.size();
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::vector<ProductEntry> StructureConstants::entries() const {
  std::vector<ProductEntry> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i; j < dim(); ++j) {
      const Vector& c = product(i, j);
      bool nonzero = std::any_of(c.begin(), c.end(), [](const Scalar& s) { return !cremona::is_zero(s); });
      if (nonzero) out.push_back({i, j, c});
    }
  }
  return out;
}

Vector StructureConstants::multiply(const Vector& a, const Vector& b) const {
  std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw StructuralError("vector length differs from the algebra dimension");
  Vector r(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (cremona::is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (cremona::is_zero(b[j])) continue;
      Scalar ab = a[i] * b[j];
      const Vector& c = product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!cremona::is_zero(c[k])) r[k] += ab * c[k];
      }
    }
  }
  return r;
}

std::vector<Polynomial> StructureConstants::multiply(const std::vector<Polynomial>& a,
                                                     const std::vector<Polynomial>& b) const {
  std::size_t n = dim();
  if (a.size() != n || b.size() != n) throw StructuralError("vector length differs from the algebra dimension");
  VarsPtr v = a.front().vars_ptr();
  std::vector<Polynomial> r(n, Polynomial(v));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Vector& c = product(i, j);
      bool any = std::any_of(c.begin(), c.end(), [](const Scalar& s) { return !cremona::is_zero(s); });
      if (!any) continue;
      Polynomial ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!cremona::is_zero(c[k])) r[k] += ab * c[k];
      }
    }
  }
  return r;
}

StructureConstants parse_products(std::vector<std::string> basis, std::string_view text) {
  VarsPtr v = make_vars(basis);
  std::size_t n = basis.size();
  std::vector<ProductEntry> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    start = end + 1;
    if (item.find_first_not_of(" \t\n") == std::string_view::npos) continue;
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) throw StructuralError("product '" + std::string(item) + "' lacks '='");
    Polynomial lhs = parse_polynomial(item.substr(0, eq), v);
    Polynomial rhs = parse_polynomial(item.substr(eq + 1), v);
    if (lhs.size() != 1 || lhs.degree() != 2 || lhs.terms().begin()->second != 1) {
      throw StructuralError("left side of '" + std::string(item) + "' must be a product of two basis elements");
    }
    if (!rhs.is_zero() && (rhs.degree() != 1 || !rhs.is_homogeneous())) {
      throw StructuralError("right side of '" + std::string(item) + "' must be a linear combination of the basis");
    }
    const Monomial& m = lhs.terms().begin()->first;
    std::size_t i = n, j = n;
    for (std::size_t k = 0; k < n; ++k) {
      for (unsigned e = 0; e < m[k]; ++e) (i == n ? i : j) = k;
    }
    Vector c(n, Scalar(0));
    for (const auto& [mm, cc] : rhs.terms()) {
      for (std::size_t k = 0; k < n; ++k) {
        if (mm[k] == 1) c[k] = cc;
      }
    }
    entries.push_back({i, j, c});
  }
  return StructureConstants(std::move(basis), entries);
}

// ---------------------------------------------------------------------------
// Algebra.

Polynomial RankProfile::quad() const {
  if (rank >= 2) return sigma.at(2);
  return Polynomial(sigma.at(0).vars_ptr());
}

struct Algebra::Cache {
  std::once_flag once;
  std::unique_ptr<RankProfile> profile;
};

Algebra::Algebra(StructureConstants table, Vector unit)
    : table_(std::move(table)), unit_(std::move(unit)), cache_(std::make_shared<Cache>()) {
  std::size_t n = table_.dim();
  if (unit_.size() != n) throw StructuralError("unit vector has the wrong length");
  if (n > kMaxVars / 2) throw StructuralError("algebras of dimension above 8 are not supported");
  for (std::size_t j = 0; j < n; ++j) {
    Vector bj(n, Scalar(0));
    bj[j] = 1;
    if (table_.multiply(unit_, bj) != bj) {
      throw StructuralError("unit axiom fails: e·" + table_.basis()[j] + " differs from " + table_.basis()[j]);
    }
  }
  coords_ = coordinate_vars(n);
}

std::vector<Polynomial> Algebra::generic_element() const {
  std::vector<Polynomial> x;
  for (std::size_t i = 0; i < dim(); ++i) x.push_back(Polynomial::variable(coords_, i));
  return x;
}

Matrix Algebra::multiplication_matrix(const Vector& a) const {
  std::size_t n = dim();
  Matrix m(n, Vector(n, Scalar(0)));
  for (std::size_t j = 0; j < n; ++j) {
    Vector bj(n, Scalar(0));
    bj[j] = 1;
    Vector col = multiply(a, bj);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return m;
}

const RankProfile& Algebra::rank_profile() const {
  std::call_once(cache_->once, [this] { cache_->profile = std::make_unique<RankProfile>(compute_rank_profile(*this)); });
  return *cache_->profile;
}

// ---------------------------------------------------------------------------
// Jordan and power-associativity checks.

JordanCheck check_jordan(const Algebra& a) {
  std::size_t n = a.dim();
  VarList names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) names.push_back("y" + std::to_string(i + 1));
  VarsPtr v = make_vars(std::move(names));
  std::vector<Polynomial> x, y;
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(Polynomial::variable(v, i));
    y.push_back(Polynomial::variable(v, n + i));
  }
  auto x2 = a.multiply(x, x);
  auto lhs = a.multiply(x2, a.multiply(x, y));
  auto rhs = a.multiply(x, a.multiply(x2, y));
  JordanCheck res;
  res.holds = true;
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial d = lhs[k] - rhs[k];
    if (!d.is_zero()) {
      res.holds = false;
      res.witness = d;
      res.component = k;
      break;
    }
  }
  return res;
}

bool check_power_associative(const Algebra& a) {
  auto x = a.generic_element();
  auto x2 = a.multiply(x, x);
  return a.multiply(x2, x2) == a.multiply(x, a.multiply(x, x2));
}

// ---------------------------------------------------------------------------
// Fraction-free linear algebra over Q[x].

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Bareiss elimination; returns the pivot columns (their count is the rank).
std::vector<std::size_t> bareiss_pivots(PolyMatrix m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  VarsPtr v = m[0][0].vars_ptr();
  Polynomial prev = Polynomial::constant(v, 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Polynomial num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        m[i][j] = num.exact_divide(prev);
      }
      m[i][c] = Polynomial(v);
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Polynomial bareiss_det(PolyMatrix m) {
  std::size_t n = m.size();
  VarsPtr v = m[0][0].vars_ptr();
  Polynomial prev = Polynomial::constant(v, 1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Polynomial(v);
    if (p != k) {
      std::swap(m[p], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_divide(prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace

RankProfile compute_rank_profile(const Algebra& a) {
  std::size_t n = a.dim();
  VarsPtr v = a.coordinates();
  std::vector<std::vector<Polynomial>> powers;
  std::vector<Polynomial> e;
  for (const auto& c : a.unit()) e.push_back(Polynomial::constant(v, c));
  powers.push_back(e);
  auto x = a.generic_element();
  for (std::size_t r = 1; r <= n; ++r) {
    powers.push_back(r == 1 ? x : a.multiply(x, powers.back()));
    PolyMatrix m(powers.begin(), powers.end());
    if (bareiss_pivots(m).size() == r + 1) continue;
    // e, x, ..., x^(r-1) independent and x^r dependent: solve for the coefficients.
    PolyMatrix base(powers.begin(), powers.begin() + r);
    auto cols = bareiss_pivots(base);
    if (cols.size() != r) throw InternalError("rank elimination lost a pivot");
    // Transposed system: Σ_k c_k powers[k][col] = powers[r][col].
    PolyMatrix sys(r, std::vector<Polynomial>(r, Polynomial(v)));
    for (std::size_t row = 0; row < r; ++row) {
      for (std::size_t k = 0; k < r; ++k) sys[row][k] = powers[k][cols[row]];
    }
    Polynomial det = bareiss_det(sys);
    std::vector<Polynomial> coef(r, Polynomial(v));
    for (std::size_t k = 0; k < r; ++k) {
      PolyMatrix rep = sys;
      for (std::size_t row = 0; row < r; ++row) rep[row][k] = powers[r][cols[row]];
      try {
        coef[k] = bareiss_det(rep).exact_divide(det);
      } catch (const DomainError&) {
        throw InternalError("minimal polynomial coefficients are not polynomial (input not power-associative)");
      }
    }
    for (std::size_t col = 0; col < n; ++col) {
      Polynomial s = powers[r][col];
      for (std::size_t k = 0; k < r; ++k) s -= coef[k] * powers[k][col];
      if (!s.is_zero()) throw InternalError("generic minimal polynomial identity fails");
    }
    RankProfile p;
    p.rank = int(r);
    p.sigma.assign(r + 1, Polynomial(v));
    p.sigma[0] = Polynomial::constant(v, 1);
    // x^r = Σ_k coef[k] x^k, so σ_j = (−1)^(j+1) coef[r − j].
    for (std::size_t j = 1; j <= r; ++j) p.sigma[j] = (j % 2 == 1) ? coef[r - j] : -coef[r - j];
    return p;
  }
  throw InternalError("no dependency among the powers of the generic element");
}

RationalMap adjoint_map(const Algebra& a) {
  const RankProfile& p = a.rank_profile();
  if (p.rank != 3) throw DomainError("the adjoint map needs a rank 3 algebra (rank is " + std::to_string(p.rank) + ")");
  auto x = a.generic_element();
  auto x2 = a.multiply(x, x);
  VarsPtr v = a.coordinates();
  std::vector<Polynomial> sharp;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    sharp.push_back(x2[i] - p.trace() * x[i] + p.quad() * Polynomial::constant(v, a.unit()[i]));
  }
  RationalMap f(sharp);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (sharp[i].substitute(sharp) != p.norm() * x[i]) throw InternalError("adjoint identity (x#)# = N(x)x fails");
  }
  return f;
}

// ---------------------------------------------------------------------------
// Radical.

namespace {

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v[i] = 1;
  return v;
}

bool in_span(const std::vector<Vector>& basis, const Vector& v) {
  Matrix m(basis.begin(), basis.end());
  std::size_t r = matrix_rank(m);
  m.push_back(v);
  return matrix_rank(m) == r;
}

bool same_span(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(b.begin(), b.end(), [&](const Vector& v) { return in_span(a, v); });
}

}  // namespace

Matrix trace_form_generic(const Algebra& a) {
  std::size_t n = a.dim();
  const Polynomial& t = a.rank_profile().trace();
  Matrix g(n, Vector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = t.eval(a.multiply(basis_vector(n, i), basis_vector(n, j)));
  }
  return g;
}

Matrix trace_form_polarized(const Algebra& a) {
  std::size_t n = a.dim();
  const RankProfile& p = a.rank_profile();
  Polynomial s = p.quad();
  Matrix g(n, Vector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector bi = basis_vector(n, i), bj = basis_vector(n, j), sum = bi;
      sum[j] += 1;
      Scalar s_ij = s.eval(sum) - s.eval(bi) - s.eval(bj);
      g[i][j] = p.trace().eval(bi) * p.trace().eval(bj) - s_ij;
    }
  }
  return g;
}

Matrix trace_form_operator(const Algebra& a) {
  std::size_t n = a.dim();
  Matrix g(n, Vector(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix l = a.multiplication_matrix(a.multiply(basis_vector(n, i), basis_vector(n, j)));
      Scalar tr = 0;
      for (std::size_t k = 0; k < n; ++k) tr += l[k][k];
      g[i][j] = tr;
    }
  }
  return g;
}

bool is_nil_ideal(const Algebra& a, const std::vector<Vector>& basis) {
  std::size_t n = a.dim();
  int r = a.rank_profile().rank;
  for (const auto& z : basis) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!in_span(basis, a.multiply(z, basis_vector(n, j)))) return false;
    }
    Vector p = z;
    for (int k = 1; k < r; ++k) p = a.multiply(p, z);
    if (std::any_of(p.begin(), p.end(), [](const Scalar& s) { return !cremona::is_zero(s); })) return false;
  }
  if (basis.empty()) return true;
  // A generic element of the span must be nilpotent too.
  VarsPtr v = coordinate_vars(basis.size(), "r");
  std::vector<Polynomial> z(n, Polynomial(v));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) z[i] += Polynomial::variable(v, k) * basis[k][i];
  }
  std::vector<Polynomial> p = z;
  for (int k = 1; k < r; ++k) p = a.multiply(p, z);
  return std::all_of(p.begin(), p.end(), [](const Polynomial& q) { return q.is_zero(); });
}

RadicalResult radical(const Algebra& a) {
  RadicalResult res;
  auto generic = kernel(trace_form_generic(a));
  auto polar = kernel(trace_form_polarized(a));
  res.forms_agree = same_span(generic, polar);
  res.basis = generic;
  res.method = "generic-trace";
  res.nil_verified = is_nil_ideal(a, res.basis);
  if (!res.nil_verified) {
    auto op = kernel(trace_form_operator(a));
    if (!is_nil_ideal(a, op)) throw InternalError("no trace-form kernel passes the nil-ideal verification");
    res.basis = op;
    res.method = "operator-trace";
    res.nil_verified = true;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Peirce decomposition and constructions.

PeirceDecomposition peirce(const Algebra& a, const Vector& u) {
  std::size_t n = a.dim();
  if (u.size() != n) throw StructuralError("idempotent has the wrong length");
  if (std::all_of(u.begin(), u.end(), [](const Scalar& s) { return cremona::is_zero(s); })) {
    throw DomainError("the zero vector is not a valid idempotent");
  }
  if (a.multiply(u, u) != u) throw DomainError("vector is not idempotent");
  Matrix l = a.multiplication_matrix(u);
  auto eigen = [&](const Scalar& lambda) {
    Matrix m = l;
    for (std::size_t i = 0; i < n; ++i) m[i][i] -= lambda;
    return kernel(m);
  };
  PeirceDecomposition d;
  d.idempotent = u;
  d.j0 = eigen(0);
  d.j1 = eigen(1);
  d.j_half = eigen(Scalar(1, 2));
  if (d.j0.size() + d.j1.size() + d.j_half.size() != n) {
    throw DomainError("multiplication by the idempotent is not diagonalizable with eigenvalues 0, 1, 1/2");
  }
  return d;
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::vector<std::string> names;
  for (const auto& s : a.basis()) names.push_back(s + "'");
  for (const auto& s : b.basis()) names.push_back(s + "''");
  std::vector<ProductEntry> entries;
  for (const auto& e : a.table().entries()) {
    Vector c(n, Scalar(0));
    std::copy(e.coeffs.begin(), e.coeffs.end(), c.begin());
    entries.push_back({e.i, e.j, c});
  }
  for (const auto& e : b.table().entries()) {
    Vector c(n, Scalar(0));
    std::copy(e.coeffs.begin(), e.coeffs.end(), c.begin() + long(na));
    entries.push_back({na + e.i, na + e.j, c});
  }
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra(StructureConstants(names, entries), unit);
}

Algebra unitalize(const StructureConstants& r) {
  std::size_t m = r.dim(), n = m + 1;
  std::vector<std::string> names = {"e"};
  names.insert(names.end(), r.basis().begin(), r.basis().end());
  std::vector<ProductEntry> entries;
  for (std::size_t j = 0; j < n; ++j) entries.push_back({0, j, basis_vector(n, j)});
  for (const auto& e : r.entries()) {
    Vector c(n, Scalar(0));
    std::copy(e.coeffs.begin(), e.coeffs.end(), c.begin() + 1);
    entries.push_back({e.i + 1, e.j + 1, c});
  }
  return Algebra(StructureConstants(names, entries), basis_vector(n, 0));
}

Algebra quadratic_form_algebra(std::size_t m, std::size_t r) {
  if (m < 1 || r > m - 1) throw DomainError("J_{q,r}^m needs 0 <= r <= m - 1");
  Vector q(m - 1, Scalar(0));
  for (std::size_t i = 0; i < r; ++i) q[i] = 1;
  return quadratic_form_algebra(q);
}

Algebra quadratic_form_algebra(const Vector& q) {
  std::size_t m = q.size() + 1;
  std::vector<std::string> names = {"l"};
  for (std::size_t i = 1; i < m; ++i) names.push_back("w" + std::to_string(i));
  std::vector<ProductEntry> entries;
  for (std::size_t j = 0; j < m; ++j) entries.push_back({0, j, basis_vector(m, j)});
  for (std::size_t i = 1; i < m; ++i) {
    if (cremona::is_zero(q[i - 1])) continue;
    Vector c(m, Scalar(0));
    c[0] = -q[i - 1];
    entries.push_back({i, i, c});
  }
  return Algebra(StructureConstants(names, entries), basis_vector(m, 0));
}

Algebra algebra_from_adjoint(const RationalMap& f, const Vector& unit) {
  std::size_t n = f.n() + 1;
  if (unit.size() != n) throw StructuralError("unit has the wrong length");
  if (f.degree() != 2) throw DomainError("an adjoint map is quadratic");
  if (f.eval(unit) != unit) throw DomainError("F(e) differs from e");
  const VarsPtr& v = f.vars_ptr();
  const auto& comps = f.components();
  Polynomial norm(v);
  bool found = false;
  for (std::size_t i = 0; i < n && !found; ++i) {
    Polynomial ff = comps[i].substitute(comps);
    if (ff.is_zero()) continue;
    try {
      norm = ff.exact_divide(Polynomial::variable(v, i));
      found = true;
    } catch (const DomainError&) {
      throw DomainError("F(F(x)) is not a multiple of x");
    }
  }
  if (!found) throw DomainError("F(F(x)) vanishes identically");
  for (std::size_t i = 0; i < n; ++i) {
    if (comps[i].substitute(comps) != norm * Polynomial::variable(v, i)) {
      throw DomainError("F(F(x)) is not N(x)·x");
    }
  }
  if (norm.eval(unit) != 1) throw DomainError("N(e) differs from 1");
  // N(e + s x) = 1 + s T(x) + s² S(x) + s³ N(x).
  VarList ext = *v;
  ext.push_back("_s");
  VarsPtr w = make_vars(ext);
  Polynomial s = Polynomial::variable(w, n);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::constant(w, unit[i]) + s * Polynomial::variable(w, i));
  Polynomial shifted = norm.substitute(images);
  Polynomial t(v), q(v);
  for (const auto& [m, c] : shifted.terms()) {
    Monomial mm = m;
    mm.set(n, 0);
    Polynomial term(v);
    term.add_term(mm, c);
    if (m[n] == 1) t += term;
    if (m[n] == 2) q += term;
  }
  auto sharp = [&](const Vector& x) { return f.eval(x); };
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Vector bi = basis_vector(n, i), bj = basis_vector(n, j), sum = bi;
      sum[j] += 1;
      Vector fs = sharp(sum), fi = sharp(bi), fj = sharp(bj);
      Scalar s_ij = q.eval(sum) - q.eval(bi) - q.eval(bj);
      Scalar ti = t.eval(bi), tj = t.eval(bj);
      Vector c(n, Scalar(0));
      for (std::size_t k = 0; k < n; ++k) {
        c[k] = (fs[k] - fi[k] - fj[k] + ti * bj[k] + tj * bi[k] - s_ij * unit[k]) / 2;
      }
      entries.push_back({i, j, c});
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("b" + std::to_string(i + 1));
  return Algebra(StructureConstants(names, entries), unit);
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  std::size_t n = a.dim();
  Matrix inv = invert(p);
  auto column = [&](std::size_t j) {
    Vector c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = p[i][j];
    return c;
  };
  std::vector<ProductEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) entries.push_back({i, j, cremona::apply(inv, a.multiply(column(i), column(j)))});
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("f" + std::to_string(i + 1));
  return Algebra(StructureConstants(names, entries), cremona::apply(inv, a.unit()));
}

}  // namespace cremona
