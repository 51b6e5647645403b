#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/map.hpp"
#include "cremona/polynomial.hpp"

namespace cremona {

using Vector = std::vector<Scalar>;

/// One nonzero product b_i * b_j = Σ_k coeffs[k] b_k.
struct ProductEntry {
  std::size_t i = 0, j = 0;
  Vector coeffs;
};

/// Commutative (not necessarily unital) multiplication table.
class StructureConstants {
 public:
  StructureConstants() = default;
  /// Sparse input: unlisted products are zero. Listing (i,j) and (j,i) with
  /// different values is a StructuralError.
  StructureConstants(std::vector<std::string> basis, const std::vector<ProductEntry>& entries);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const Vector& product(std::size_t i, std::size_t j) const { return table_[index(i, j)]; }
  /// Nonzero products with i <= j.
  std::vector<ProductEntry> entries() const;

  Vector multiply(const Vector& a, const Vector& b) const;
  std::vector<Polynomial> multiply(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;
  std::vector<std::string> basis_;
  std::vector<Vector> table_;
};

/// Reads products such as "e1*e1 = e1; e1*a = 1/2*a" over the given basis
/// names; right-hand sides are linear forms in the basis.
StructureConstants parse_products(std::vector<std::string> basis, std::string_view text);

/// Generic minimal polynomial x^r − σ_1 x^(r−1) + σ_2 x^(r−2) − … ± σ_r e = 0.
struct RankProfile {
  int rank = 0;
  /// sigma[k] for k = 1..rank; sigma[0] = 1.
  std::vector<Polynomial> sigma;

  const Polynomial& trace() const { return sigma.at(1); }
  /// Second coefficient S; zero polynomial when rank < 2.
  Polynomial quad() const;
  const Polynomial& norm() const { return sigma.at(rank); }
};

/// Commutative unital algebra over Q with coordinates x_i on its basis.
class Algebra {
 public:
  /// Validates the unit axiom e·b_j = b_j.
  Algebra(StructureConstants table, Vector unit);

  std::size_t dim() const { return table_.dim(); }
  const std::vector<std::string>& basis() const { return table_.basis(); }
  const Vector& unit() const { return unit_; }
  const StructureConstants& table() const { return table_; }
  /// Coordinate ring variables of the algebra (x, y, z, ... for dim <= 8).
  const VarsPtr& coordinates() const { return coords_; }

  Vector multiply(const Vector& a, const Vector& b) const { return table_.multiply(a, b); }
  std::vector<Polynomial> multiply(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) const {
    return table_.multiply(a, b);
  }
  /// The generic element (x_1, ..., x_n).
  std::vector<Polynomial> generic_element() const;
  /// Left multiplication matrix of a: column j is a·b_j.
  Matrix multiplication_matrix(const Vector& a) const;

  /// Write-once cached generic minimal polynomial data.
  const RankProfile& rank_profile() const;

 private:
  StructureConstants table_;
  Vector unit_;
  VarsPtr coords_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

struct JordanCheck {
  bool holds = false;
  /// A nonzero component of x²(xy) − x(x²y) when the identity fails.
  std::optional<Polynomial> witness;
  std::size_t component = 0;
};

JordanCheck check_jordan(const Algebra& a);
/// x²·x² = x·(x·x²) symbolically.
bool check_power_associative(const Algebra& a);

/// Rank and generic minimal polynomial by fraction-free elimination over Q[x].
RankProfile compute_rank_profile(const Algebra& a);

/// x# = x² − T(x)x + S(x)e as a quadratic map; checks (x#)# = N(x)x.
RationalMap adjoint_map(const Algebra& a);

struct RadicalResult {
  std::vector<Vector> basis;
  /// Kernels of T(x∘y) and of T(x)T(y) − S(x,y) coincide.
  bool forms_agree = false;
  /// The nil-ideal post-check passed for the reported basis.
  bool nil_verified = false;
  /// Which computation produced `basis`.
  std::string method;

  std::size_t dim() const { return basis.size(); }
};

/// Gram matrices of the bilinear forms used for the radical.
Matrix trace_form_generic(const Algebra& a);
Matrix trace_form_polarized(const Algebra& a);
Matrix trace_form_operator(const Algebra& a);

RadicalResult radical(const Algebra& a);

/// True when span(basis) is an ideal of nilpotent elements of index <= rank.
bool is_nil_ideal(const Algebra& a, const std::vector<Vector>& basis);

struct PeirceDecomposition {
  Vector idempotent;
  std::vector<Vector> j0, j1, j_half;
};

PeirceDecomposition peirce(const Algebra& a, const Vector& u);

Algebra direct_product(const Algebra& a, const Algebra& b);

/// C·e ⊕ R with e the unit; e is the first basis vector.
Algebra unitalize(const StructureConstants& r);

/// J_{q,r}^m: pairs (λ, w) with w ∈ Q^(m−1), q(w) = w_1² + … + w_r²,
/// product (λ, w)(λ', w') = (λλ' − q(w, w'), λw' + λ'w), unit (1, 0).
Algebra quadratic_form_algebra(std::size_t m, std::size_t r);
/// Same construction for the diagonal form q(w) = Σ q_i w_i².
Algebra quadratic_form_algebra(const Vector& q);

/// The algebra whose adjoint is F for the unit e (F(e) = e): N from
/// F(F(x)) = N(x)x, T and S from N(e + s x), and
/// x∘y = ½(x#y + T(x)y + T(y)x − S(x,y)e).
Algebra algebra_from_adjoint(const RationalMap& f, const Vector& unit);

/// Structure constants in the basis given by the columns of p.
Algebra change_basis(const Algebra& a, const Matrix& p);

}  // namespace cremona
