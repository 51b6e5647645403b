#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/monomial.hpp"
#include "cremona/scalar.hpp"

namespace cremona {

/// Ordered variable names of a polynomial ring.
using VarList = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const VarList>;

VarsPtr make_vars(VarList names);
VarsPtr make_vars(std::initializer_list<const char*> names);
/// Names x0, x1, ... ; the usual coordinate names x, y, z, t, u, v, w, s are used for n <= 8.
VarsPtr coordinate_vars(std::size_t n, std::string_view prefix = "");

bool same_vars(const VarsPtr& a, const VarsPtr& b);

/// Sparse multivariate polynomial over Q. The term map never holds a zero
/// coefficient; its key order (lex on exponents) is storage order only.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Polynomial() : vars_(make_vars(VarList{})) {}
  explicit Polynomial(VarsPtr vars) : vars_(std::move(vars)) {}
  Polynomial(VarsPtr vars, TermMap terms);

  static Polynomial constant(VarsPtr vars, const Scalar& c);
  static Polynomial variable(VarsPtr vars, std::size_t index);
  static Polynomial term(VarsPtr vars, const Monomial& m, const Scalar& c);

  const VarList& vars() const { return *vars_; }
  const VarsPtr& vars_ptr() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Polynomial homogeneous_part(unsigned d) const;

  Scalar coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Scalar& c) { return p *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }

  friend bool operator==(const Polynomial& p, const Polynomial& q);

  Polynomial pow(unsigned k) const;
  Polynomial multiply_monomial(const Monomial& m, const Scalar& c) const;

  Scalar eval(std::span<const Scalar> point) const;

  /// Replaces variable i by images[i]; the result lives over the images' variables.
  Polynomial substitute(std::span<const Polynomial> images) const;

  /// Moves the polynomial into `target`, sending variable i to target index index_map[i].
  Polynomial embed(VarsPtr target, std::span<const std::size_t> index_map) const;

  /// Positive rational c such that p / c has coprime integer coefficients.
  Scalar content() const;
  /// p / content(p), with the sign of the leading lex term made positive.
  Polynomial primitive() const;

  /// Exact quotient p / d; throws DomainError when d does not divide p.
  Polynomial exact_divide(const Polynomial& d) const;

  /// Partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const;

  std::string to_string() const;

 private:
  void require_same_vars(const Polynomial& q, const char* op) const;

  VarsPtr vars_;
  TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// Parses expressions such as "x^2 - 3/2*x*y + 2*(y+z)^2" over `vars`.
Polynomial parse_polynomial(std::string_view text, const VarsPtr& vars);

/// Binomial coefficient as a rational.
Scalar binomial(long n, long k);

}  // namespace cremona
