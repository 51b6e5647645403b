#include "cremona/map.hpp"

#include "cremona/error.hpp"

namespace cremona {

RationalMap::RationalMap(std::vector<Polynomial> components) : components_(std::move(components)) {
  if (components_.empty()) throw StructuralError("a map needs at least one component");
  const VarsPtr& v = components_.front().vars_ptr();
  if (components_.size() != v->size()) {
    throw StructuralError("a self-map of P^n needs n+1 components in n+1 variables");
  }
  degree_ = -1;
  for (const auto& c : components_) {
    if (!same_vars(c.vars_ptr(), v)) throw StructuralError("map components use different variable lists");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw StructuralError("map component " + c.to_string() + " is not homogeneous");
    if (degree_ == -1) degree_ = c.degree();
    if (c.degree() != degree_) throw StructuralError("map components have different degrees");
  }
  if (degree_ == -1) throw StructuralError("all map components are zero");
  if (degree_ == 0) throw StructuralError("a map needs components of degree at least 1");
}

RationalMap RationalMap::identity(const VarsPtr& vars) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < vars->size(); ++i) c.push_back(Polynomial::variable(vars, i));
  return RationalMap(std::move(c));
}

RationalMap RationalMap::linear(const VarsPtr& vars, const Matrix& m) {
  if (m.size() != vars->size()) throw StructuralError("linear map matrix has the wrong size");
  std::vector<Polynomial> c;
  for (const auto& row : m) {
    if (row.size() != vars->size()) throw StructuralError("linear map matrix has the wrong size");
    Polynomial p(vars);
    for (std::size_t j = 0; j < row.size(); ++j) p.add_term(Monomial::variable(j), row[j]);
    c.push_back(std::move(p));
  }
  return RationalMap(std::move(c));
}

std::vector<Scalar> RationalMap::eval(std::span<const Scalar> point) const {
  std::vector<Scalar> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.eval(point));
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMap& f) {
  os << '(';
  for (std::size_t i = 0; i < f.components().size(); ++i) os << (i ? ", " : "") << f[i].to_string();
  return os << ')';
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t p = b.empty() ? 0 : b[0].size();
  Matrix r(a.size(), std::vector<Scalar>(p, Scalar(0)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (cremona::is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  }
  return r;
}

std::vector<Scalar> apply(const Matrix& m, std::span<const Scalar> v) {
  std::vector<Scalar> r(m.size(), Scalar(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && cremona::is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Scalar inv = Scalar(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || cremona::is_zero(m[i][c])) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(Matrix m) { return rref(m).size(); }

std::vector<std::vector<Scalar>> kernel(Matrix m) {
  if (m.empty()) return {};
  std::size_t cols = m[0].size();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix invert(const Matrix& m) {
  std::size_t n = m.size();
  Matrix aug(n, std::vector<Scalar>(2 * n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw StructuralError("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix inv(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  }
  return inv;
}

}  // namespace cremona
