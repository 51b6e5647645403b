#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cremona/algebra.hpp"
#include "cremona/cremona.hpp"

namespace cremona {

/// One radical block R_i of a gluing, in one of two encodings.
struct ModuleBlock {
  enum class Kind { adjoint, module };
  Kind kind = Kind::adjoint;
  std::size_t dim = 0;
  /// adjoint: bilinear[k][a] is the R_i-vector multiplying z_k y_a in
  /// 𝓕_i((x, y), y), where z = (x, y) runs over V ⊕ R_i.
  std::vector<std::vector<Vector>> bilinear;
  /// module: action[k][a] = e_k · r_a and product[a][b] = r_a r_b; the block
  /// component is 2x·m + m² − T(x)m.
  std::vector<std::vector<Vector>> action;
  std::vector<std::vector<Vector>> product;
};

struct GluingSpec {
  /// Involutive quadratic map F_ss on V with F_ss∘F_ss = N·id.
  RationalMap fss;
  /// Unit of the semisimple algebra; only needed for module blocks.
  std::optional<Vector> unit;
  std::vector<ModuleBlock> blocks;
  /// One automorphism of V per block, or empty for all identity.
  std::vector<Matrix> twists;
};

/// Checks shapes, the involution of F_ss and, for every twist φ,
/// φ∘F_ss = F_ss∘φ and N∘φ = N. Throws DomainError or StructuralError.
void validate(const GluingSpec& spec);

/// (F_ss(x), 𝓕_1(φ_1(x), y_1), …, 𝓕_m(φ_m(x), y_m)); throws DomainError
/// unless the result is an involution with scaling N.
RationalMap glue(const GluingSpec& spec);

/// J(M_1, …, M_m) for specs whose blocks are all in module form.
Algebra glued_algebra(const GluingSpec& spec);

/// F^α(x, a) = (x_2x_3, x_1x_3, x_1x_2, x_1 a_1, x_2 a_2, x_3 a_3) on P^(2+α).
RationalMap falpha(unsigned a1, unsigned a2, unsigned a3);

/// F_n(a, b_1, c_1, …) = (a², −ab_1, b_1² − ac_1, …) on P^(2n).
RationalMap f_n(unsigned n);

/// [x : r] ↦ [r f(x) : N(x)]. Requires deg N = deg f + 1 and
/// f∘f = N^(deg f − 1)·id; checks g∘g = (rN)^(deg f)·id.
RationalMap spampinato_lift(const RationalMap& f, const Polynomial& norm);

/// [x_2⋯x_n : … : x_1⋯x_(n−1)] on P^(n−1); n ≥ 3.
RationalMap standard_involution(unsigned n);

/// Zorn matrices (a x; y b) over a rank-3 Jordan algebra J.
class ZornAlgebra {
 public:
  struct Element {
    Polynomial a, b;
    std::vector<Polynomial> x, y;
  };

  explicit ZornAlgebra(const Algebra& j);

  const Algebra& base() const { return j_; }
  std::size_t dim() const { return 2 + 2 * j_.dim(); }
  /// Coordinates (a, x_1..x_n, y_1..y_n, b).
  const VarsPtr& coordinates() const { return vars_; }

  Element generic() const;
  Element sigma() const;
  Element constant(const Vector& v) const;
  std::vector<Polynomial> flatten(const Element& m) const;

  Element product(const Element& m, const Element& n) const;
  Element bar(const Element& m) const;
  Element add(const Element& m, const Element& n, int sign = 1) const;
  /// [M, N, P] = (M•N̄)•P + (P•N̄)•M − (P•M̄)•N.
  Element triple(const Element& m, const Element& n, const Element& p) const;

  /// x#y = (x+y)^# − x^# − y^#.
  std::vector<Polynomial> sharp(const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) const;
  /// T(x)T(y) − ΔS(x, y).
  Polynomial trace_pairing(const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) const;

 private:
  Algebra j_;
  RationalMap adjoint_;
  VarsPtr vars_;
  Polynomial trace_, quad_;
};

/// M ↦ σ•[M, σ•M, M] on P^(2 dim J + 1). Throws DomainError if rank J ≠ 3.
RationalMap zorn_cubic_map(const Algebra& j);

struct InvolutionCheck {
  bool ok = false;
  /// "symbolic" or "sampled".
  std::string mode;
  std::optional<Polynomial> scaling;
  int points = 0;
  std::string detail;
};

/// Symbolic check_involution, or exact checks at `points` seeded rational
/// points that f(f(p)) = λ(p)·p with λ(p) ≠ 0.
InvolutionCheck verify_involution(const RationalMap& f, bool sampled, std::uint64_t seed = 1, int points = 20);

/// T(x∘y) and T(x)T(y) − ΔS(x, y) have the same Gram matrix.
bool trace_forms_agree(const Algebra& j);

}  // namespace cremona
