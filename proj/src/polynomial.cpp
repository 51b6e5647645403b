#include "cremona/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cremona/error.hpp"

namespace cremona {

Scalar scalar_from_strings(std::string_view num, std::string_view den) {
  Integer n, d;
  if (n.set_str(std::string(num), 10) != 0) {
    throw StructuralError("invalid integer '" + std::string(num) + "'");
  }
  if (d.set_str(std::string(den), 10) != 0) {
    throw StructuralError("invalid integer '" + std::string(den) + "'");
  }
  if (d == 0) throw StructuralError("zero denominator");
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return scalar_from_strings(text, "1");
  return scalar_from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::string to_string(const Scalar& q) { return q.get_str(); }

VarsPtr make_vars(VarList names) {
  if (names.size() > kMaxVars) {
    throw StructuralError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  return std::make_shared<const VarList>(std::move(names));
}

VarsPtr make_vars(std::initializer_list<const char*> names) {
  VarList v;
  for (const char* n : names) v.emplace_back(n);
  return make_vars(std::move(v));
}

VarsPtr coordinate_vars(std::size_t n, std::string_view prefix) {
  static const char* kNames[] = {"x", "y", "z", "t", "u", "v", "w", "s"};
  VarList v;
  for (std::size_t i = 0; i < n; ++i) {
    if (prefix.empty() && n <= 8) {
      v.emplace_back(kNames[i]);
    } else {
      v.push_back(std::string(prefix.empty() ? "x" : prefix) + std::to_string(i));
    }
  }
  return make_vars(std::move(v));
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) { return a == b || *a == *b; }

Polynomial::Polynomial(VarsPtr vars, TermMap terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return cremona::is_zero(kv.second); });
}

Polynomial Polynomial::constant(VarsPtr vars, const Scalar& c) {
  Polynomial p(std::move(vars));
  p.add_term(Monomial(), c);
  return p;
}

Polynomial Polynomial::variable(VarsPtr vars, std::size_t index) {
  if (index >= vars->size()) throw StructuralError("variable index out of range");
  Polynomial p(std::move(vars));
  p.add_term(Monomial::variable(index), 1);
  return p;
}

Polynomial Polynomial::term(VarsPtr vars, const Monomial& m, const Scalar& c) {
  Polynomial p(std::move(vars));
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, int(m.degree()));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& kv) { return kv.first.degree() == d; });
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (cremona::is_zero(c)) return;
  if (m.support_end() > nvars()) throw StructuralError("monomial uses a variable outside the ring");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (cremona::is_zero(it->second)) terms_.erase(it);
  }
}

void Polynomial::require_same_vars(const Polynomial& q, const char* op) const {
  if (!same_vars(vars_, q.vars_)) {
    throw StructuralError(std::string("variable-list mismatch in ") + op);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  require_same_vars(q, "add");
  for (const auto& [m, c] : q.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  require_same_vars(q, "sub");
  for (const auto& [m, c] : q.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.require_same_vars(q, "mul");
  Polynomial r(p.vars_);
  for (const auto& [mp, cp] : p.terms_) {
    for (const auto& [mq, cq] : q.terms_) {
      auto [it, inserted] = r.terms_.try_emplace(mp * mq, cp * cq);
      if (!inserted) it->second += cp * cq;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return cremona::is_zero(kv.second); });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) { return *this = *this * q; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (cremona::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  return same_vars(p.vars_, q.vars_) && p.terms_ == q.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::multiply_monomial(const Monomial& m, const Scalar& c) const {
  Polynomial r(vars_);
  if (cremona::is_zero(c)) return r;
  for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm * m, cc * c);
  return r;
}

Scalar Polynomial::eval(std::span<const Scalar> point) const {
  if (point.size() != nvars()) throw StructuralError("evaluation point has wrong length");
  Scalar sum = 0;
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < m.support_end(); ++i) {
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars()) throw StructuralError("substitution needs one image per variable");
  if (images.empty()) return *this;
  const VarsPtr& target = images[0].vars_ptr();
  for (const auto& im : images) {
    if (!same_vars(im.vars_ptr(), target)) throw StructuralError("substitution images use different variables");
  }
  // Cache powers of each image, built lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < m.support_end(); ++i) {
      if (m[i] > 0) t = t * power(i, m[i]);
    }
    result += t;
  }
  return result;
}

Polynomial Polynomial::embed(VarsPtr target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != nvars()) throw StructuralError("embedding map has wrong length");
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial mm;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (index_map[i] >= target->size()) throw StructuralError("embedding index out of range");
      mm.set(index_map[i], mm[index_map[i]] + m[i]);
    }
    r.add_term(mm, c);
  }
  return r;
}

Scalar Polynomial::content() const {
  if (terms_.empty()) throw DomainError("content of the zero polynomial");
  Integer num = 0, den = 1;
  for (const auto& [m, c] : terms_) {
    num = gcd(num, c.get_num());
    den = lcm(den, c.get_den());
  }
  Scalar r(abs(num), den);
  r.canonicalize();
  return r;
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  Scalar c = content();
  if (sgn(terms_.rbegin()->second) < 0) c = -c;
  Polynomial r(*this);
  for (auto& [m, coef] : r.terms_) coef /= c;
  return r;
}

Polynomial Polynomial::exact_divide(const Polynomial& d) const {
  require_same_vars(d, "divide");
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  // With lex storage order, rbegin() is the lex-leading term, and lex is
  // multiplicative, so the leading term of an exact quotient is forced.
  Polynomial rem(*this), quot(vars_);
  const auto& [dm, dc] = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto [rm, rc] = *rem.terms_.rbegin();
    if (!dm.divides(rm)) throw DomainError("polynomial division is not exact");
    Monomial qm = dm.quotient_of(rm);
    Scalar qc = rc / dc;
    quot.add_term(qm, qc);
    rem -= d.multiply_monomial(qm, qc);
  }
  return quot;
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[i] == 0) continue;
    Monomial mm = m;
    mm.set(i, m[i] - 1);
    r.add_term(mm, c * m[i]);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print in decreasing degree, lex-decreasing inside a degree.
  std::vector<std::pair<Monomial, Scalar>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first > b.first;
  });
  for (const auto& [m, c] : sorted) {
    Scalar a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || m.is_one()) {
      os << a.get_str();
      if (!m.is_one()) os << "*";
    }
    bool firstvar = true;
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!firstvar) os << "*";
      firstvar = false;
      os << (*vars_)[i];
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

Scalar binomial(long n, long k) {
  if (k < 0) return 0;
  Scalar r = 1;
  for (long i = 0; i < k; ++i) {
    r *= Scalar(n - i);
    r /= Scalar(i + 1);
  }
  return r;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarsPtr& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw StructuralError("cannot parse polynomial \"" + std::string(text_) + "\": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p(vars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    p = term();
    if (negate) p = -p;
    for (;;) {
      if (accept('+')) p += term();
      else if (accept('-')) p -= term();
      else return p;
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip();
      if (accept('*')) {
        p = p * factor();
      } else if (accept('/')) {
        Scalar d = number_token();
        if (is_zero(d)) fail("division by zero");
        p *= Scalar(1) / d;
      } else if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        p = p * factor();  // implicit product such as 2x or x(y+z)
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent expected");
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return b;
  }

  Scalar number_token() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("number expected");
    return scalar_from_strings(text_.substr(start, pos_ - start), "1");
  }

  Polynomial base() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("')' expected");
      return p;
    }
    if (ch == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Polynomial::constant(vars_, number_token());
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_->begin(), vars_->end(), name);
      if (it != vars_->end()) return Polynomial::variable(vars_, std::size_t(it - vars_->begin()));
      // Single-letter names glued together ("xy") are read as a product.
      Polynomial p = Polynomial::constant(vars_, 1);
      for (char c : name) {
        auto jt = std::find(vars_->begin(), vars_->end(), std::string(1, c));
        if (jt == vars_->end()) fail("unknown variable '" + name + "'");
        p = p * Polynomial::variable(vars_, std::size_t(jt - vars_->begin()));
      }
      return p;
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const VarsPtr& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarsPtr& vars) { return Parser(text, vars).parse(); }

}  // namespace cremona
