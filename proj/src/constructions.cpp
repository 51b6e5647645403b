#include "cremona/constructions.hpp"

#include "cremona/error.hpp"

namespace cremona {

namespace {

std::vector<Polynomial> linear_image(const Matrix& m, const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out;
  for (const auto& row : m) {
    Polynomial p(v.front().vars_ptr());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!cremona::is_zero(row[j])) p += v[j] * row[j];
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Polynomial> variables(const VarsPtr& v, std::size_t from, std::size_t count) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(Polynomial::variable(v, from + i));
  return out;
}

void check_vectors(const std::vector<std::vector<Vector>>& t, std::size_t rows, std::size_t cols, std::size_t len,
                   const std::string& what) {
  if (t.size() != rows) throw StructuralError(what + " has " + std::to_string(t.size()) + " rows, expected " +
                                              std::to_string(rows));
  for (const auto& r : t) {
    if (r.size() != cols) throw StructuralError(what + " has a row of the wrong length");
    for (const auto& v : r) {
      if (v.size() != len) throw StructuralError(what + " has a vector of the wrong length");
    }
  }
}

Polynomial fss_norm(const RationalMap& fss) {
  if (fss.degree() != 2) throw DomainError("the semisimple map must be quadratic");
  auto r = check_involution(fss);
  if (!r.ok) throw DomainError("the semisimple map is not an involution: " + r.detail);
  return *r.scaling;
}

}  // namespace

void validate(const GluingSpec& spec) {
  const RationalMap& f = spec.fss;
  std::size_t p = f.n() + 1;
  Polynomial norm = fss_norm(f);
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    std::string name = "block " + std::to_string(i);
    if (b.dim == 0) throw StructuralError(name + " has dimension 0");
    if (b.kind == ModuleBlock::Kind::adjoint) {
      check_vectors(b.bilinear, p + b.dim, b.dim, b.dim, name + " bilinear");
    } else {
      if (!spec.unit) throw StructuralError("module blocks need the unit of the semisimple algebra");
      check_vectors(b.action, p, b.dim, b.dim, name + " action");
      check_vectors(b.product, b.dim, b.dim, b.dim, name + " product");
    }
  }
  if (spec.unit && spec.unit->size() != p) throw StructuralError("unit has the wrong length");
  if (!spec.twists.empty() && spec.twists.size() != spec.blocks.size()) {
    throw StructuralError("give one twist per block or none");
  }
  for (std::size_t i = 0; i < spec.twists.size(); ++i) {
    const Matrix& phi = spec.twists[i];
    if (phi.size() != p) throw StructuralError("twist " + std::to_string(i) + " has the wrong size");
    if (matrix_rank(phi) != p) throw DomainError("twist " + std::to_string(i) + " is not invertible");
    RationalMap l = RationalMap::linear(f.vars_ptr(), phi);
    if (compose(l, f) != compose(f, l)) {
      throw DomainError("twist " + std::to_string(i) + " does not commute with the semisimple map");
    }
    if (norm.substitute(l.components()) != norm) {
      throw DomainError("twist " + std::to_string(i) + " does not preserve the norm");
    }
  }
}

RationalMap glue(const GluingSpec& spec) {
  validate(spec);
  const RationalMap& f = spec.fss;
  std::size_t p = f.n() + 1, total = p;
  for (const auto& b : spec.blocks) total += b.dim;
  VarsPtr v = coordinate_vars(total);
  std::vector<Polynomial> x = variables(v, 0, p);
  std::vector<Polynomial> out;
  for (const auto& c : f.components()) out.push_back(c.substitute(x));
  Polynomial norm = fss_norm(f).substitute(x);

  // T = dN_e, the trace attached to the cubic norm.
  std::optional<Polynomial> trace;
  if (spec.unit) {
    Polynomial n0 = fss_norm(f);
    trace = Polynomial(f.vars_ptr());
    for (std::size_t k = 0; k < p; ++k) {
      *trace += Polynomial::variable(f.vars_ptr(), k) * n0.derivative(k).eval(*spec.unit);
    }
  }

  std::size_t offset = p;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    std::vector<Polynomial> px = spec.twists.empty() ? x : linear_image(spec.twists[i], x);
    std::vector<Polynomial> y = variables(v, offset, b.dim);
    std::vector<Polynomial> comp(b.dim, Polynomial(v));
    if (b.kind == ModuleBlock::Kind::adjoint) {
      std::vector<Polynomial> z = px;
      z.insert(z.end(), y.begin(), y.end());
      for (std::size_t k = 0; k < z.size(); ++k) {
        for (std::size_t a = 0; a < b.dim; ++a) {
          Polynomial zy = z[k] * y[a];
          for (std::size_t c = 0; c < b.dim; ++c) {
            if (!cremona::is_zero(b.bilinear[k][a][c])) comp[c] += zy * b.bilinear[k][a][c];
          }
        }
      }
    } else {
      Polynomial t = trace->substitute(px);
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t a = 0; a < b.dim; ++a) {
          Polynomial xy = px[k] * y[a];
          for (std::size_t c = 0; c < b.dim; ++c) {
            if (!cremona::is_zero(b.action[k][a][c])) comp[c] += xy * (2 * b.action[k][a][c]);
          }
        }
      }
      for (std::size_t a = 0; a < b.dim; ++a) {
        for (std::size_t a2 = 0; a2 < b.dim; ++a2) {
          Polynomial yy = y[a] * y[a2];
          for (std::size_t c = 0; c < b.dim; ++c) {
            if (!cremona::is_zero(b.product[a][a2][c])) comp[c] += yy * b.product[a][a2][c];
          }
        }
      }
      for (std::size_t c = 0; c < b.dim; ++c) comp[c] -= t * y[c];
    }
    out.insert(out.end(), comp.begin(), comp.end());
    offset += b.dim;
  }
  RationalMap g(std::move(out));
  auto r = check_involution(g);
  if (!r.ok) throw DomainError("glued map is not an involution: " + r.detail);
  if (*r.scaling != norm) throw DomainError("glued map squares to " + r.scaling->to_string() + " instead of N");
  return g;
}

Algebra glued_algebra(const GluingSpec& spec) {
  validate(spec);
  if (!spec.unit) throw StructuralError("glued_algebra needs the unit of the semisimple algebra");
  std::size_t p = spec.fss.n() + 1, total = p;
  for (const auto& b : spec.blocks) {
    if (b.kind != ModuleBlock::Kind::module) throw StructuralError("glued_algebra needs module blocks");
    total += b.dim;
  }
  Algebra j = algebra_from_adjoint(spec.fss, *spec.unit);
  std::vector<std::string> names = j.basis();
  std::vector<ProductEntry> entries;
  for (const auto& e : j.table().entries()) {
    Vector c(total, Scalar(0));
    std::copy(e.coeffs.begin(), e.coeffs.end(), c.begin());
    entries.push_back({e.i, e.j, c});
  }
  std::size_t offset = p;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    const auto& b = spec.blocks[i];
    for (std::size_t a = 0; a < b.dim; ++a) names.push_back("m" + std::to_string(i + 1) + "_" + std::to_string(a + 1));
    Matrix phi = spec.twists.empty() ? identity_matrix(p) : spec.twists[i];
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t a = 0; a < b.dim; ++a) {
        // e_k ·_φ r_a = φ(e_k) · r_a.
        Vector c(total, Scalar(0));
        for (std::size_t l = 0; l < p; ++l) {
          if (cremona::is_zero(phi[l][k])) continue;
          for (std::size_t d = 0; d < b.dim; ++d) c[offset + d] += phi[l][k] * b.action[l][a][d];
        }
        entries.push_back({k, offset + a, c});
      }
    }
    for (std::size_t a = 0; a < b.dim; ++a) {
      for (std::size_t a2 = a; a2 < b.dim; ++a2) {
        Vector c(total, Scalar(0));
        for (std::size_t d = 0; d < b.dim; ++d) c[offset + d] = b.product[a][a2][d];
        entries.push_back({offset + a, offset + a2, c});
      }
    }
    offset += b.dim;
  }
  Vector unit = *spec.unit;
  unit.resize(total, Scalar(0));
  return Algebra(StructureConstants(names, entries), unit);
}

RationalMap falpha(unsigned a1, unsigned a2, unsigned a3) {
  std::size_t n = 3 + a1 + a2 + a3;
  VarsPtr v = coordinate_vars(n);
  auto x = [&](std::size_t i) { return Polynomial::variable(v, i); };
  std::vector<Polynomial> c = {x(1) * x(2), x(0) * x(2), x(0) * x(1)};
  std::size_t next = 3;
  unsigned sizes[3] = {a1, a2, a3};
  for (std::size_t i = 0; i < 3; ++i) {
    for (unsigned k = 0; k < sizes[i]; ++k) c.push_back(x(i) * x(next++));
  }
  return RationalMap(std::move(c));
}

RationalMap f_n(unsigned n) {
  if (n < 1) throw DomainError("f_n needs n >= 1");
  VarsPtr v = coordinate_vars(2 * n + 1);
  auto x = [&](std::size_t i) { return Polynomial::variable(v, i); };
  std::vector<Polynomial> c = {x(0) * x(0)};
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial b = x(1 + 2 * i), cc = x(2 + 2 * i);
    c.push_back(-(x(0) * b));
    c.push_back(b * b - x(0) * cc);
  }
  return RationalMap(std::move(c));
}

RationalMap spampinato_lift(const RationalMap& f, const Polynomial& norm) {
  int d = f.degree();
  if (!same_vars(norm.vars_ptr(), f.vars_ptr())) throw StructuralError("norm uses other variables than the map");
  if (norm.is_zero() || !norm.is_homogeneous() || norm.degree() != d + 1) {
    throw DomainError("the norm must be a form of degree deg f + 1");
  }
  auto r = check_involution(f);
  if (!r.ok) throw DomainError("map is not an involution: " + r.detail);
  if (*r.scaling != norm.pow(unsigned(d - 1))) {
    throw DomainError("f∘f is not N^(deg f − 1)·id for the given N");
  }
  std::size_t n = f.n() + 1;
  VarsPtr v = coordinate_vars(n + 1);
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  Polynomial rr = Polynomial::variable(v, n);
  std::vector<Polynomial> c;
  for (const auto& p : f.components()) c.push_back(rr * p.embed(v, idx));
  Polynomial nn = norm.embed(v, idx);
  c.push_back(nn);
  RationalMap g(std::move(c));
  auto s = check_involution(g);
  if (!s.ok || *s.scaling != (rr * nn).pow(unsigned(d))) {
    throw InternalError("lifted map fails g∘g = (rN)^(deg f)·id");
  }
  return g;
}

RationalMap standard_involution(unsigned n) {
  if (n < 3) throw DomainError("standard_involution needs n >= 3; n = 2 gives a linear map of bidegree (1,1)");
  VarsPtr v = coordinate_vars(n);
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p = Polynomial::constant(v, 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) p *= Polynomial::variable(v, j);
    }
    c.push_back(std::move(p));
  }
  return RationalMap(std::move(c));
}

// ---------------------------------------------------------------------------
// Zorn matrices.

ZornAlgebra::ZornAlgebra(const Algebra& j) : j_(j), adjoint_(adjoint_map(j)), vars_(coordinate_vars(2 + 2 * j.dim())) {
  const auto& rp = j_.rank_profile();
  trace_ = rp.trace();
  quad_ = rp.quad();
}

ZornAlgebra::Element ZornAlgebra::generic() const {
  std::size_t n = j_.dim();
  Element m{Polynomial::variable(vars_, 0), Polynomial::variable(vars_, 2 * n + 1), variables(vars_, 1, n),
            variables(vars_, 1 + n, n)};
  return m;
}

ZornAlgebra::Element ZornAlgebra::constant(const Vector& v) const {
  std::size_t n = j_.dim();
  if (v.size() != dim()) throw StructuralError("Zorn element has the wrong length");
  Element m{Polynomial::constant(vars_, v[0]), Polynomial::constant(vars_, v[2 * n + 1]), {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    m.x.push_back(Polynomial::constant(vars_, v[1 + i]));
    m.y.push_back(Polynomial::constant(vars_, v[1 + n + i]));
  }
  return m;
}

ZornAlgebra::Element ZornAlgebra::sigma() const {
  Vector v(dim(), Scalar(0));
  v.front() = 1;
  v.back() = -1;
  return constant(v);
}

std::vector<Polynomial> ZornAlgebra::flatten(const Element& m) const {
  std::vector<Polynomial> out = {m.a};
  out.insert(out.end(), m.x.begin(), m.x.end());
  out.insert(out.end(), m.y.begin(), m.y.end());
  out.push_back(m.b);
  return out;
}

std::vector<Polynomial> ZornAlgebra::sharp(const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) const {
  std::vector<Polynomial> s(x.size(), Polynomial(vars_));
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  std::vector<Polynomial> out;
  for (const auto& c : adjoint_.components()) out.push_back(c.substitute(s) - c.substitute(x) - c.substitute(y));
  return out;
}

Polynomial ZornAlgebra::trace_pairing(const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) const {
  std::vector<Polynomial> s(x.size(), Polynomial(vars_));
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] + y[i];
  Polynomial ds = quad_.substitute(s) - quad_.substitute(x) - quad_.substitute(y);
  return trace_.substitute(x) * trace_.substitute(y) - ds;
}

ZornAlgebra::Element ZornAlgebra::product(const Element& m, const Element& n) const {
  std::size_t d = j_.dim();
  Element r{m.a * n.a + trace_pairing(m.x, n.y), m.b * n.b + trace_pairing(n.x, m.y), {}, {}};
  auto xs = sharp(m.y, n.y), ys = sharp(m.x, n.x);
  for (std::size_t i = 0; i < d; ++i) {
    r.x.push_back(m.a * n.x[i] + n.b * m.x[i] + xs[i]);
    r.y.push_back(n.a * m.y[i] + m.b * n.y[i] + ys[i]);
  }
  return r;
}

ZornAlgebra::Element ZornAlgebra::bar(const Element& m) const { return {m.b, m.a, m.x, m.y}; }

ZornAlgebra::Element ZornAlgebra::add(const Element& m, const Element& n, int sign) const {
  Scalar s(sign);
  Element r{m.a + n.a * s, m.b + n.b * s, m.x, m.y};
  for (std::size_t i = 0; i < r.x.size(); ++i) {
    r.x[i] += n.x[i] * s;
    r.y[i] += n.y[i] * s;
  }
  return r;
}

ZornAlgebra::Element ZornAlgebra::triple(const Element& m, const Element& n, const Element& p) const {
  Element nb = bar(n);
  Element r = add(product(product(m, nb), p), product(product(p, nb), m));
  return add(r, product(product(p, bar(m)), n), -1);
}

RationalMap zorn_cubic_map(const Algebra& j) {
  if (j.rank_profile().rank != 3) throw DomainError("the Zorn map needs a rank 3 algebra");
  ZornAlgebra z(j);
  auto m = z.generic();
  auto s = z.sigma();
  return RationalMap(z.flatten(z.product(s, z.triple(m, z.product(s, m), m))));
}

InvolutionCheck verify_involution(const RationalMap& f, bool sampled, std::uint64_t seed, int points) {
  InvolutionCheck c;
  if (!sampled) {
    auto r = check_involution(f);
    c.mode = "symbolic";
    c.ok = r.ok;
    c.scaling = r.scaling;
    c.detail = r.detail;
    return c;
  }
  c.mode = "sampled";
  SplitMix64 rng(seed);
  std::size_t n = f.n() + 1;
  for (int k = 0; k < points; ++k) {
    std::vector<Scalar> p(n);
    for (auto& s : p) s = Scalar(rng.uniform(-20, 20)) / Scalar(rng.uniform(1, 7));
    auto q = f.eval(f.eval(p));
    std::optional<Scalar> lambda;
    for (std::size_t i = 0; i < n && !lambda; ++i) {
      if (!cremona::is_zero(p[i])) lambda = q[i] / p[i];
    }
    bool prop = lambda && !cremona::is_zero(*lambda);
    for (std::size_t i = 0; prop && i < n; ++i) prop = q[i] == *lambda * p[i];
    if (!prop) {
      c.detail = "f(f(p)) is not a nonzero multiple of p at sample " + std::to_string(k);
      c.points = k + 1;
      return c;
    }
  }
  c.ok = true;
  c.points = points;
  return c;
}

bool trace_forms_agree(const Algebra& j) { return trace_form_generic(j) == trace_form_polarized(j); }

}  // namespace cremona
