#pragma once

#include <ostream>
#include <vector>

#include "cremona/polynomial.hpp"

namespace cremona {

using Matrix = std::vector<std::vector<Scalar>>;

/// Homogeneous self-map [f_0 : ... : f_n] of P^n given by forms of one degree.
class RationalMap {
 public:
  /// Throws StructuralError unless there are n+1 forms in n+1 variables, all
  /// homogeneous of one degree d >= 1 and not all zero.
  explicit RationalMap(std::vector<Polynomial> components);

  static RationalMap identity(const VarsPtr& vars);
  /// x ↦ M x.
  static RationalMap linear(const VarsPtr& vars, const Matrix& m);

  std::size_t n() const { return components_.size() - 1; }
  int degree() const { return degree_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  const VarsPtr& vars_ptr() const { return components_.front().vars_ptr(); }

  /// Componentwise image of a point.
  std::vector<Scalar> eval(std::span<const Scalar> point) const;

  friend bool operator==(const RationalMap& a, const RationalMap& b) { return a.components_ == b.components_; }

 private:
  std::vector<Polynomial> components_;
  int degree_ = 0;
};

std::ostream& operator<<(std::ostream& os, const RationalMap& f);

/// Exact inverse of a square rational matrix; throws DomainError if singular.
Matrix invert(const Matrix& m);
Matrix identity_matrix(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
std::vector<Scalar> apply(const Matrix& m, std::span<const Scalar> v);
/// Rank of a rational matrix.
std::size_t matrix_rank(Matrix m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Scalar>> kernel(Matrix m);

}  // namespace cremona
