#include "cremona/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

// ---------------------------------------------------------------------------
// Univariate helper polynomials.

void UniPoly::trim() {
  while (!c.empty() && cremona::is_zero(c.back())) c.pop_back();
}

int UniPoly::degree() const {
  for (std::size_t i = c.size(); i > 0; --i) {
    if (!cremona::is_zero(c[i - 1])) return int(i - 1);
  }
  return -1;
}

Scalar UniPoly::eval(const Scalar& t) const {
  Scalar r = 0;
  for (std::size_t i = c.size(); i > 0; --i) r = r * t + c[i - 1];
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  x.trim();
  y.trim();
  return x.c == y.c;
}

std::string UniPoly::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& a = c[i];
    if (cremona::is_zero(a)) continue;
    if (first) {
      if (sgn(a) < 0) os << "-";
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    first = false;
    Scalar m = abs(a);
    if (i == 0 || m != 1) os << m.get_str();
    if (i > 0) {
      if (m != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

UniPoly parse_unipoly(const std::string& text) {
  Polynomial p = parse_polynomial(text, make_vars({"t"}));
  UniPoly u;
  u.c.assign(std::max(p.degree(), 0) + 1, Scalar(0));
  for (const auto& [m, c] : p.terms()) u.c[m[0]] = c;
  u.trim();
  return u;
}

// ---------------------------------------------------------------------------
// Leading terms.

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw DomainError("leading monomial of the zero polynomial");
  auto it = p.terms().begin();
  Monomial best = it->first;
  for (++it; it != p.terms().end(); ++it) {
    if (ord.compare(it->first, best) > 0) best = it->first;
  }
  return best;
}

Scalar leading_coefficient(const Polynomial& p, const MonomialOrder& ord) {
  return p.coefficient(leading_monomial(p, ord));
}

// ---------------------------------------------------------------------------
// Integer-coefficient Buchberger engine. Polynomials are stored as term
// vectors sorted by decreasing monomial, scaled to primitive integer form.

namespace {

struct Term {
  Monomial m;
  Integer c;
};

using Terms = std::vector<Term>;

std::uint32_t support_mask(const Monomial& m) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (m[i] != 0) mask |= 1U << i;
  }
  return mask;
}

struct GPoly {
  Terms t;
  unsigned sugar = 0;
  std::uint32_t mask = 0;

  const Monomial& lm() const { return t.front().m; }
  const Integer& lc() const { return t.front().c; }
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Engine {
 public:
  explicit Engine(const MonomialOrder& ord) : ord_(ord) {}

  bool greater(const Monomial& a, const Monomial& b) const { return ord_.compare(a, b) > 0; }

  Terms from_polynomial(const Polynomial& p) const {
    Terms t;
    t.reserve(p.size());
    Integer den = 1;
    for (const auto& [m, c] : p.terms()) den = lcm(den, c.get_den());
    for (const auto& [m, c] : p.terms()) {
      Integer v = c.get_num() * (den / c.get_den());
      t.push_back({m, v});
    }
    std::sort(t.begin(), t.end(), [this](const Term& a, const Term& b) { return greater(a.m, b.m); });
    make_primitive(t);
    return t;
  }

  static Polynomial to_polynomial(const Terms& t, const VarsPtr& vars, bool monic) {
    Polynomial::TermMap map;
    if (t.empty()) return Polynomial(vars);
    Scalar scale = monic ? Scalar(1) / Scalar(t.front().c) : Scalar(1);
    for (const auto& term : t) map.emplace(term.m, Scalar(term.c) * scale);
    return Polynomial(vars, std::move(map));
  }

  static void make_primitive(Terms& t) {
    if (t.empty()) return;
    Integer g = 0;
    for (const auto& term : t) {
      g = gcd(g, term.c);
      if (g == 1) break;
    }
    if (sgn(t.front().c) < 0) g = -g;
    if (g != 1) {
      for (auto& term : t) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), g.get_mpz_t());
    }
  }

  // Returns a*p[from..] - b*mono*q[from_q..], both inputs sorted.
  Terms combine(const Terms& p, std::size_t from, const Integer& a, const Terms& q, std::size_t from_q,
                const Monomial& mono, const Integer& b) const {
    Terms r;
    r.reserve(p.size() - from + q.size() - from_q);
    std::size_t i = from, j = from_q;
    Integer tmp;
    while (i < p.size() || j < q.size()) {
      if (j == q.size()) {
        r.push_back({p[i].m, p[i].c * a});
        ++i;
        continue;
      }
      Monomial qm = q[j].m * mono;
      if (i == p.size()) {
        r.push_back({qm, -(q[j].c * b)});
        ++j;
        continue;
      }
      auto cmp = ord_.compare(p[i].m, qm);
      if (cmp > 0) {
        r.push_back({p[i].m, p[i].c * a});
        ++i;
      } else if (cmp < 0) {
        r.push_back({qm, -(q[j].c * b)});
        ++j;
      } else {
        tmp = p[i].c * a - q[j].c * b;
        if (sgn(tmp) != 0) r.push_back({qm, tmp});
        ++i;
        ++j;
      }
    }
    return r;
  }

  // Full reduction of p by the polynomials basis[idx] for idx in `active`.
  // The result equals mult * p - (combination); `mult` is returned when asked.
  Terms reduce(Terms p, const std::vector<GPoly>& basis, const std::vector<std::size_t>& active,
               Integer* mult = nullptr) const {
    Terms done;
    if (mult) *mult = 1;
    std::size_t steps = 0;
    while (!p.empty()) {
      const Term& lead = p.front();
      std::uint32_t mask = support_mask(lead.m);
      const GPoly* div = nullptr;
      for (std::size_t idx : active) {
        const GPoly& g = basis[idx];
        if ((g.mask & ~mask) != 0) continue;
        if (g.lm().divides(lead.m)) {
          div = &g;
          break;
        }
      }
      if (div == nullptr) {
        done.push_back(std::move(p.front()));
        p.erase(p.begin());
        continue;
      }
      Integer g = gcd(lead.c, div->lc());
      Integer a = div->lc() / g;
      Integer b = lead.c / g;
      if (sgn(a) < 0) {
        a = -a;
        b = -b;
      }
      Monomial mono = div->lm().quotient_of(lead.m);
      p = combine(p, 1, a, div->t, 1, mono, b);
      if (a != 1) {
        for (auto& term : done) term.c *= a;
        if (mult) *mult *= a;
      }
      // Keep coefficients in check on long reductions.
      if (++steps % 16 == 0 && !mult) {
        Integer cg = 0;
        for (const auto& term : done) cg = gcd(cg, term.c);
        for (const auto& term : p) cg = gcd(cg, term.c);
        if (cg > 1) {
          for (auto& term : done) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), cg.get_mpz_t());
          for (auto& term : p) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), cg.get_mpz_t());
        }
      }
    }
    return done;
  }

  // Adds h to the current basis, updating pairs with the Gebauer–Möller criteria.
  void update(std::size_t h) {
    const Monomial& lh = polys_[h].lm();
    std::vector<Pair> c;
    c.reserve(active_.size());
    for (std::size_t g : active_) {
      const GPoly& gp = polys_[g];
      Monomial l = gp.lm().lcm(lh);
      unsigned s = std::max(gp.sugar + l.degree() - gp.lm().degree(), polys_[h].sugar + l.degree() - lh.degree());
      c.push_back({g, h, l, s});
    }
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = polys_[p.i].lm().coprime(lh);
      if (!keep) {
        keep = true;
        for (std::size_t q = k + 1; q < c.size() && keep; ++q) {
          if (c[q].lcm.divides(p.lcm)) keep = false;
        }
        for (std::size_t q = 0; q < d.size() && keep; ++q) {
          if (d[q].lcm.divides(p.lcm)) keep = false;
        }
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs_.size() + d.size());
    for (const Pair& p : pairs_) {
      bool drop = lh.divides(p.lcm) && polys_[p.i].lm().lcm(lh) != p.lcm && polys_[p.j].lm().lcm(lh) != p.lcm;
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : d) {
      if (!polys_[p.i].lm().coprime(lh)) next.push_back(p);
    }
    pairs_ = std::move(next);
    std::vector<std::size_t> kept;
    for (std::size_t g : active_) {
      if (!lh.divides(polys_[g].lm())) kept.push_back(g);
    }
    kept.push_back(h);
    active_ = std::move(kept);
  }

  std::size_t add(Terms t, unsigned sugar) {
    GPoly g;
    g.t = std::move(t);
    g.sugar = sugar;
    g.mask = support_mask(g.lm());
    polys_.push_back(std::move(g));
    return polys_.size() - 1;
  }

  Terms spoly(const Pair& p) const {
    const GPoly& f = polys_[p.i];
    const GPoly& g = polys_[p.j];
    Integer q = gcd(f.lc(), g.lc());
    Integer a = g.lc() / q, b = f.lc() / q;
    Monomial mf = f.lm().quotient_of(p.lcm);
    Monomial mg = g.lm().quotient_of(p.lcm);
    Terms scaled_f;
    scaled_f.reserve(f.t.size());
    for (const auto& term : f.t) scaled_f.push_back({term.m * mf, term.c});
    return combine(scaled_f, 1, a, g.t, 1, mg, b);
  }

  std::vector<Terms> run(std::vector<Terms> inputs) {
    std::sort(inputs.begin(), inputs.end(), [this](const Terms& a, const Terms& b) { return greater(b[0].m, a[0].m); });
    for (auto& in : inputs) {
      unsigned sugar = 0;
      for (const auto& term : in) sugar = std::max(sugar, ord_.weighted_degree(term.m));
      Terms r = reduce(std::move(in), polys_, active_);
      if (r.empty()) continue;
      make_primitive(r);
      if (r.front().m.is_one()) return {r};
      update(add(std::move(r), sugar));
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        return ord_.compare(a.lcm, b.lcm) < 0;
      });
      Pair p = *best;
      *best = pairs_.back();
      pairs_.pop_back();
      Terms s = spoly(p);
      Terms r = reduce(std::move(s), polys_, active_);
      if (r.empty()) continue;
      make_primitive(r);
      if (r.front().m.is_one()) return {r};
      update(add(std::move(r), p.sugar));
    }
    // Interreduce the minimal basis.
    std::vector<Terms> out;
    for (std::size_t k = 0; k < active_.size(); ++k) {
      std::vector<std::size_t> others;
      for (std::size_t q = 0; q < active_.size(); ++q) {
        if (q != k) others.push_back(active_[q]);
      }
      const GPoly& g = polys_[active_[k]];
      Terms tail(g.t.begin() + 1, g.t.end());
      Integer mult;
      Terms red = reduce(std::move(tail), polys_, others, &mult);
      Terms full;
      full.push_back({g.lm(), g.lc() * mult});
      for (auto& term : red) full.push_back(std::move(term));
      make_primitive(full);
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [this](const Terms& a, const Terms& b) { return greater(b[0].m, a[0].m); });
    return out;
  }

  const MonomialOrder& order() const { return ord_; }

 private:
  MonomialOrder ord_;
  std::vector<GPoly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

VarsPtr common_vars(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw StructuralError("empty generator list has no variable list");
  const VarsPtr& v = gens.front().vars_ptr();
  for (const auto& g : gens) {
    if (!same_vars(g.vars_ptr(), v)) throw StructuralError("generators use different variable lists");
  }
  return v;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  std::vector<Polynomial> out;
  if (gens.empty()) return out;
  VarsPtr vars = common_vars(gens);
  Engine eng(ord);
  std::vector<Terms> inputs;
  for (const auto& g : gens) {
    if (!g.is_zero()) inputs.push_back(eng.from_polynomial(g));
  }
  if (inputs.empty()) return out;
  for (const Terms& t : eng.run(std::move(inputs))) out.push_back(Engine::to_polynomial(t, vars, true));
  return out;
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
  if (p.is_zero()) return p;
  Engine eng(ord);
  std::vector<GPoly> polys;
  std::vector<std::size_t> active;
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    GPoly g;
    g.t = eng.from_polynomial(b);
    g.mask = support_mask(g.lm());
    polys.push_back(std::move(g));
    active.push_back(polys.size() - 1);
  }
  Integer den = 1;
  for (const auto& [m, c] : p.terms()) den = lcm(den, c.get_den());
  Terms t;
  for (const auto& [m, c] : p.terms()) t.push_back({m, c.get_num() * (den / c.get_den())});
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return eng.greater(a.m, b.m); });
  Integer mult;
  Terms r = eng.reduce(std::move(t), polys, active, &mult);
  Polynomial::TermMap map;
  Scalar scale = Scalar(1) / (Scalar(den) * Scalar(mult));
  for (auto& term : r) map.emplace(term.m, Scalar(term.c) * scale);
  return Polynomial(p.vars_ptr(), std::move(map));
}

bool is_groebner_basis(const std::vector<Polynomial>& basis, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Polynomial& f = basis[i];
      const Polynomial& g = basis[j];
      Monomial lf = leading_monomial(f, ord), lg = leading_monomial(g, ord);
      Monomial l = lf.lcm(lg);
      Polynomial s = f.multiply_monomial(lf.quotient_of(l), Scalar(1) / f.coefficient(lf)) -
                     g.multiply_monomial(lg.quotient_of(l), Scalar(1) / g.coefficient(lg));
      if (!reduce(s, basis, ord).is_zero()) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Ideals.

struct Ideal::Cache {
  std::mutex mutex;
  std::map<MonomialOrder, std::shared_ptr<const std::vector<Polynomial>>> bases;
};

Ideal::Ideal(VarsPtr vars, std::vector<Polynomial> gens)
    : vars_(std::move(vars)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!same_vars(g.vars_ptr(), vars_)) throw StructuralError("ideal generator uses a different variable list");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(ord);
    if (it != cache_->bases.end()) return *it->second;
  }
  auto basis = std::make_shared<const std::vector<Polynomial>>(groebner_basis(gens_, ord));
  std::lock_guard lock(cache_->mutex);
  auto [it, inserted] = cache_->bases.emplace(ord, basis);
  return *it->second;
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_unit() const {
  const auto& g = groebner();
  return g.size() == 1 && g.front().is_constant();
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& p) { return p.is_homogeneous(); });
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string();
  }
  return s + ")";
}

Polynomial normal_form(const Polynomial& p, const Ideal& I, const MonomialOrder& ord) {
  if (!same_vars(p.vars_ptr(), I.vars_ptr())) throw StructuralError("normal form across different rings");
  return reduce(p, I.groebner(ord), ord);
}

bool contains(const Ideal& I, const Polynomial& p) { return normal_form(p, I).is_zero(); }

bool contains(const Ideal& I, const Ideal& J) {
  return std::all_of(J.generators().begin(), J.generators().end(),
                     [&](const Polynomial& g) { return contains(I, g); });
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!same_vars(I.vars_ptr(), J.vars_ptr())) throw StructuralError("comparing ideals of different rings");
  return I.groebner() == J.groebner();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g = I.generators();
  g.insert(g.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.vars_ptr(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g;
  for (const auto& a : I.generators()) {
    for (const auto& b : J.generators()) g.push_back(a * b);
  }
  return Ideal(I.vars_ptr(), std::move(g));
}

namespace {

// Ring with `extra` fresh variables prepended (before == true) or appended.
VarsPtr extend_vars(const VarsPtr& vars, const std::vector<std::string>& extra, bool before) {
  VarList v;
  if (before) v = extra;
  for (const auto& name : *vars) v.push_back(name);
  if (!before) v.insert(v.end(), extra.begin(), extra.end());
  return make_vars(std::move(v));
}

std::vector<std::size_t> shifted_map(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), offset);
  return m;
}

}  // namespace

Ideal eliminate_leading(const Ideal& I, std::size_t k, VarsPtr target) {
  if (target->size() + k != I.nvars()) throw StructuralError("elimination target has the wrong size");
  std::vector<Polynomial> kept;
  for (const auto& g : I.groebner(MonomialOrder::elimination(k))) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(),
                            [k](const auto& kv) { return kv.first.block_degree(0, k) == 0; });
    if (!free) continue;
    Polynomial r(target);
    for (const auto& [m, c] : g.terms()) {
      Monomial mm;
      for (std::size_t i = k; i < I.nvars(); ++i) mm.set(i - k, m[i]);
      r.add_term(mm, c);
    }
    kept.push_back(std::move(r));
  }
  return Ideal(std::move(target), std::move(kept));
}

Ideal intersection(const Ideal& I, const Ideal& J) {
  if (!same_vars(I.vars_ptr(), J.vars_ptr())) throw StructuralError("intersecting ideals of different rings");
  if (I.is_zero() || J.is_zero()) return Ideal(I.vars_ptr());
  VarsPtr ext = extend_vars(I.vars_ptr(), {"_t"}, true);
  auto map = shifted_map(I.nvars(), 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(t * g.embed(ext, map));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.embed(ext, map));
  return eliminate_leading(Ideal(ext, std::move(gens)), 1, I.vars_ptr());
}

Ideal intersection(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw StructuralError("intersection of no ideals");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersection(acc, ideals[i]);
  return acc;
}

Ideal quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
  Ideal meet = intersection(I, Ideal(I.vars_ptr(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : meet.groebner()) gens.push_back(g.exact_divide(f));
  return Ideal(I.vars_ptr(), std::move(gens));
}

Ideal quotient_homogeneous(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) throw DomainError("quotient by the zero polynomial");
  if (!I.is_homogeneous() || !f.is_homogeneous()) throw DomainError("homogeneous quotient needs homogeneous input");
  if (f.is_constant() || I.is_zero()) return I;
  std::size_t n = I.nvars();
  VarsPtr ext = extend_vars(I.vars_ptr(), {"_w"}, false);
  auto map = shifted_map(n, 0);
  std::vector<unsigned> weights(n + 1, 1);
  weights[n] = static_cast<unsigned>(f.degree());
  MonomialOrder ord = MonomialOrder::weighted_degrevlex(weights);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.embed(ext, map));
  gens.push_back(Polynomial::variable(ext, n) - f.embed(ext, map));
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial::variable(I.vars_ptr(), i));
  images.push_back(f);
  std::vector<Polynomial> out;
  for (const auto& g : groebner_basis(gens, ord)) {
    bool divisible = std::all_of(g.terms().begin(), g.terms().end(), [n](const auto& kv) { return kv.first[n] > 0; });
    Polynomial h = g;
    if (divisible) h = g.exact_divide(Polynomial::variable(ext, n));
    out.push_back(h.substitute(images));
  }
  return Ideal(I.vars_ptr(), std::move(out));
}

Ideal saturation(const Ideal& I, const Polynomial& g, SaturationMethod method) {
  if (I.is_zero()) return I;
  if (g.is_zero()) return Ideal(I.vars_ptr(), {Polynomial::constant(I.vars_ptr(), 1)});
  bool homog = method == SaturationMethod::automatic && I.is_homogeneous() && g.is_homogeneous();
  Ideal current = I;
  for (int step = 0; step < 50; ++step) {
    Ideal next = homog ? quotient_homogeneous(current, g) : quotient(current, g);
    if (next.groebner() == current.groebner()) return next;
    current = std::move(next);
  }
  throw InternalError("saturation did not stabilize within 50 quotient steps");
}

Ideal saturation(const Ideal& I, const Ideal& J, SaturationMethod method) {
  if (!same_vars(I.vars_ptr(), J.vars_ptr())) throw StructuralError("saturating across different rings");
  if (I.is_zero()) return I;
  if (J.is_zero()) return Ideal(I.vars_ptr(), {Polynomial::constant(I.vars_ptr(), 1)});
  std::vector<Ideal> parts;
  for (const auto& g : J.generators()) parts.push_back(saturation(I, g, method));
  return intersection(parts);
}

Ideal saturate_irrelevant(const Ideal& I) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < I.nvars(); ++i) vars.push_back(Polynomial::variable(I.vars_ptr(), i));
  return saturation(I, Ideal(I.vars_ptr(), std::move(vars)));
}

// ---------------------------------------------------------------------------
// Hilbert series.

namespace {

using IntPoly = std::vector<Integer>;

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void add_shifted(IntPoly& a, const IntPoly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& q) { return q.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

IntPoly k_poly(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {Integer(1)};
  if (gens.front().is_one()) return {};
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  }
  if (coprime) {
    IntPoly r = {Integer(1)};
    for (const auto& m : gens) {
      IntPoly f(m.degree() + 1, Integer(0));
      f[0] = 1;
      f[m.degree()] = -1;
      r = mul(r, f);
    }
    return r;
  }
  // Pivot on the variable occurring in the most generators.
  std::array<int, kMaxVars> count{};
  for (const auto& m : gens) {
    for (std::size_t i = 0; i < kMaxVars; ++i) count[i] += m[i] > 0;
  }
  std::size_t v = std::max_element(count.begin(), count.end()) - count.begin();
  std::vector<unsigned> exps;
  for (const auto& m : gens) {
    if (m[v] > 0) exps.push_back(m[v]);
  }
  std::sort(exps.begin(), exps.end());
  Monomial pivot = Monomial::variable(v, exps[(exps.size() - 1) / 2]);
  std::vector<Monomial> with = gens;
  with.push_back(pivot);
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    Monomial q = m;
    q.set(v, m[v] > pivot[v] ? m[v] - pivot[v] : 0);
    colon.push_back(q);
  }
  IntPoly r = k_poly(std::move(with));
  add_shifted(r, k_poly(std::move(colon)), pivot.degree());
  trim(r);
  return r;
}

}  // namespace

std::vector<Integer> monomial_k_polynomial(std::vector<Monomial> gens, std::size_t n) {
  for (const auto& m : gens) {
    if (m.support_end() > n) throw StructuralError("monomial outside the ring");
  }
  IntPoly r = k_poly(std::move(gens));
  trim(r);
  return r;
}

Integer HilbertData::hilbert_function(int s) const {
  if (s < 0) return 0;
  std::size_t n = static_cast<std::size_t>(dimension + 1);
  // Use the reduced form: h(t) / (1 − t)^(dimension + 1).
  if (dimension < 0) {
    return s < int(reduced_numerator.size()) ? reduced_numerator[s] : Integer(0);
  }
  Integer v = 0;
  for (std::size_t j = 0; j < reduced_numerator.size() && int(j) <= s; ++j) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(s - int(j) + n - 1), static_cast<unsigned long>(n - 1));
    v += reduced_numerator[j] * b;
  }
  return v;
}

HilbertData hilbert(const Ideal& I) {
  if (!I.is_homogeneous()) throw DomainError("Hilbert series needs a homogeneous ideal");
  std::size_t n = I.nvars();
  std::vector<Monomial> leads;
  for (const auto& g : I.groebner()) leads.push_back(leading_monomial(g, MonomialOrder::degrevlex()));
  HilbertData h;
  h.series_numerator = monomial_k_polynomial(leads, n);
  h.regularity_bound = int(h.series_numerator.size());  // deg K + 1
  if (h.series_numerator.empty()) {
    h.dimension = -1;
    h.degree = 0;
    return h;
  }
  IntPoly num = h.series_numerator;
  std::size_t divisions = 0;
  while (divisions < n) {
    Integer at_one = 0;
    for (const auto& c : num) at_one += c;
    if (at_one != 0) break;
    // Synthetic division by (1 − t): q_i = -(sum of num_0..num_i) gives num = (1 - t) q.
    IntPoly q(num.size() - 1, Integer(0));
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < num.size(); ++i) {
      acc += num[i];
      q[i] = acc;
    }
    num = std::move(q);
    trim(num);
    ++divisions;
  }
  h.reduced_numerator = num;
  h.dimension = int(n) - int(divisions) - 1;
  if (h.dimension < 0) {
    h.degree = 0;
    return h;
  }
  for (const auto& c : num) h.degree += c;
  // HP(s) = Σ_i h_i binom(s − i + d, d), expanded in powers of s.
  int d = h.dimension;
  UniPoly hp;
  hp.c.assign(d + 1, Scalar(0));
  Scalar dfact = 1;
  for (int j = 2; j <= d; ++j) dfact *= j;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    std::vector<Scalar> b = {Scalar(1)};
    for (int j = 1; j <= d; ++j) {
      Scalar shift = Scalar(j) - Scalar(long(i));
      std::vector<Scalar> nb(b.size() + 1, Scalar(0));
      for (std::size_t k = 0; k < b.size(); ++k) {
        nb[k + 1] += b[k];
        nb[k] += b[k] * shift;
      }
      b = std::move(nb);
    }
    for (std::size_t k = 0; k < b.size(); ++k) hp.c[k] += Scalar(num[i]) * b[k] / dfact;
  }
  hp.trim();
  h.hilbert_polynomial = hp;
  return h;
}

}  // namespace cremona
