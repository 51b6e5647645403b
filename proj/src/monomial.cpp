#include "cremona/monomial.hpp"

#include <algorithm>

#include "cremona/error.hpp"
#include "cremona/order.hpp"

namespace cremona {

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > kMaxVars) {
    throw StructuralError("monomial has more than " + std::to_string(kMaxVars) + " variables");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw StructuralError("negative exponent");
    set(i, static_cast<unsigned>(exponents[i]));
  }
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw StructuralError("variable index out of range");
  if (e > 255) throw DomainError("exponent exceeds 255");
  degree_ = static_cast<std::uint16_t>(degree_ - exp_[i] + e);
  exp_[i] = static_cast<std::uint8_t>(e);
}

std::size_t Monomial::support_end() const {
  std::size_t end = kMaxVars;
  while (end > 0 && exp_[end - 1] == 0) --end;
  return end;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp_[i]) + other.exp_[i];
    if (e > 255) throw DomainError("exponent exceeds 255");
    r.exp_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = static_cast<std::uint8_t>(other.exp_[i] - exp_[i]);
  }
  r.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(exp_[i], other.exp_[i]);
    d += r.exp_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(d);
  return r;
}

unsigned Monomial::block_degree(std::size_t begin, std::size_t end) const {
  unsigned d = 0;
  for (std::size_t i = begin; i < end && i < kMaxVars; ++i) d += exp_[i];
  return d;
}

namespace {

// Reverse lexicographic tie-break on [begin, end): the monomial with the
// smaller exponent in the last differing slot is the larger one.
std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, std::size_t begin,
                                 std::size_t end) {
  for (std::size_t i = end; i > begin; --i) {
    if (a[i - 1] != b[i - 1]) {
      return a[i - 1] < b[i - 1] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering degrevlex_block(const Monomial& a, const Monomial& b, std::size_t begin,
                                     std::size_t end) {
  unsigned da = a.block_degree(begin, end);
  unsigned db = b.block_degree(begin, end);
  if (da != db) return da <=> db;
  return revlex_tail(a, b, begin, end);
}

}  // namespace

MonomialOrder MonomialOrder::weighted_degrevlex(std::span<const unsigned> weights) {
  if (weights.size() > kMaxVars) throw StructuralError("too many weights");
  MonomialOrder o(Kind::degrevlex, 0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0 || weights[i] > 255) throw DomainError("weights must lie in [1, 255]");
    o.weights_[i] = static_cast<std::uint8_t>(weights[i]);
    if (weights[i] != 1) o.weighted_ = true;
  }
  return o;
}

unsigned MonomialOrder::weighted_degree(const Monomial& m) const {
  if (!weighted_) return m.degree();
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) d += weights_[i] * m[i];
  return d;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::degrevlex:
      if (weighted_) {
        unsigned wa = weighted_degree(a), wb = weighted_degree(b);
        if (wa != wb) return wa <=> wb;
      } else if (a.degree() != b.degree()) {
        return a.degree() <=> b.degree();
      }
      return revlex_tail(a, b, 0, kMaxVars);
    case Kind::lex:
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    case Kind::elimination: {
      auto first = degrevlex_block(a, b, 0, block_);
      if (first != 0) return first;
      return degrevlex_block(a, b, block_, kMaxVars);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::degrevlex:
      return weighted_ ? "weighted-degrevlex" : "degrevlex";
    case Kind::lex:
      return "lex";
    case Kind::elimination:
      return "elimination(" + std::to_string(block_) + ")";
  }
  return "?";
}

}  // namespace cremona
