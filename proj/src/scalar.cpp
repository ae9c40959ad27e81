#include "staralg/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

namespace staralg {

namespace {

bool is_odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

void RingConfig::validate() const {
  if (characteristic != 0 && !is_odd_prime(characteristic))
    throw DomainError("characteristic must be 0 or an odd prime, got " +
                      std::to_string(characteristic));
}

TMono TMono::variable(std::uint32_t k, std::uint32_t exp) {
  TMono m;
  if (exp > 0) m.factors_.push_back({k, exp});
  return m;
}

TMono TMono::from_factors(
    std::vector<std::pair<std::uint32_t, std::uint32_t>> factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].second == 0) throw DomainError("zero exponent in monomial");
    if (i && factors[i - 1].first >= factors[i].first)
      throw DomainError("monomial factors must be strictly ascending");
  }
  TMono m;
  m.factors_ = std::move(factors);
  return m;
}

unsigned TMono::degree() const {
  unsigned d = 0;
  for (auto& [v, e] : factors_) d += e;
  return d;
}

TMono operator*(const TMono& a, const TMono& b) {
  TMono r;
  auto ia = a.factors_.begin(), ib = b.factors_.begin();
  while (ia != a.factors_.end() || ib != b.factors_.end()) {
    if (ib == b.factors_.end() ||
        (ia != a.factors_.end() && ia->first < ib->first)) {
      r.factors_.push_back(*ia++);
    } else if (ia == a.factors_.end() || ib->first < ia->first) {
      r.factors_.push_back(*ib++);
    } else {
      r.factors_.push_back({ia->first, ia->second + ib->second});
      ++ia, ++ib;
    }
  }
  return r;
}

bool TMono::operator<(const TMono& other) const {
  unsigned da = degree(), db = other.degree();
  if (da != db) return da < db;
  // Same degree: walk variables ascending; a larger exponent on an earlier
  // variable makes the monomial greater.
  auto ia = factors_.begin(), ib = other.factors_.begin();
  while (ia != factors_.end() && ib != other.factors_.end()) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia, ++ib;
  }
  return false;  // equal
}

std::string TMono::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, e] : factors_) {
    if (!first) os << "*";
    first = false;
    os << "t" << v;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

BigInt invert_mod_p(const BigInt& a, unsigned p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  if (r == 0) throw DomainError("division by zero in F_" + std::to_string(p));
  // extended Euclid
  BigInt t0 = 0, t1 = 1, r0 = p, r1 = r;
  while (r1 != 0) {
    BigInt q = r0 / r1;
    BigInt tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw DomainError("non-invertible element mod " + std::to_string(p));
  t0 %= p;
  if (t0 < 0) t0 += p;
  return t0;
}

BigInt rational_mod_p(const BigRat& v, unsigned p) {
  BigInt num = boost::multiprecision::numerator(v) % p;
  if (num < 0) num += p;
  BigInt den = boost::multiprecision::denominator(v) % p;
  if (den < 0) den += p;
  return (num * invert_mod_p(den, p)) % p;
}

void Scalar::reduce_coeff(BigRat& c) const {
  if (p_ == 0) return;
  c = BigRat(rational_mod_p(c, p_));
}

void Scalar::prune() {
  for (auto it = tail_.begin(); it != tail_.end();) {
    if (it->second == 0)
      it = tail_.erase(it);
    else
      ++it;
  }
}

void Scalar::require_same_ring(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_)
    throw RingMismatchError("scalar rings differ (characteristic " +
                            std::to_string(a.p_) + " vs " +
                            std::to_string(b.p_) + ")");
}

Scalar Scalar::zero(unsigned characteristic) {
  RingConfig{characteristic, false}.validate();
  Scalar s;
  s.p_ = characteristic;
  return s;
}

Scalar Scalar::one(unsigned characteristic) { return integer(1, characteristic); }

Scalar Scalar::integer(long v, unsigned characteristic) {
  return integer(BigInt(v), characteristic);
}

Scalar Scalar::integer(const BigInt& v, unsigned characteristic) {
  Scalar s = zero(characteristic);
  s.cst_ = BigRat(v);
  s.reduce_coeff(s.cst_);
  return s;
}

Scalar Scalar::rational(const BigInt& num, const BigInt& den,
                        unsigned characteristic) {
  if (den == 0) throw DomainError("zero denominator");
  Scalar s = zero(characteristic);
  s.cst_ = BigRat(num) / BigRat(den);
  s.reduce_coeff(s.cst_);
  return s;
}

Scalar Scalar::of_rat(const BigRat& v, unsigned characteristic) {
  Scalar s = zero(characteristic);
  s.cst_ = v;
  s.reduce_coeff(s.cst_);
  return s;
}

Scalar Scalar::variable(std::uint32_t k, unsigned characteristic) {
  Scalar s = zero(characteristic);
  s.tail_[TMono::variable(k)] = 1;
  return s;
}

Scalar Scalar::monomial(const TMono& m, const BigRat& c, unsigned characteristic) {
  Scalar s = zero(characteristic);
  if (m.is_unit()) {
    s.cst_ = c;
    s.reduce_coeff(s.cst_);
    return s;
  }
  BigRat r = c;
  s.reduce_coeff(r);
  if (r != 0) s.tail_[m] = r;
  return s;
}

Scalar Scalar::inverse_of_two(unsigned characteristic) {
  if (characteristic == 0) return rational(1, 2, 0);
  return integer(BigInt((characteristic + 1) / 2), characteristic);
}

const BigRat& Scalar::rational_value() const {
  if (!tail_.empty())
    throw DomainError("scalar has symbolic terms; no rational value");
  return cst_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.cst_ = -r.cst_;
  r.reduce_coeff(r.cst_);
  for (auto& [m, c] : r.tail_) {
    c = -c;
    r.reduce_coeff(c);
  }
  r.prune();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_ring(*this, o);
  cst_ += o.cst_;
  reduce_coeff(cst_);
  for (auto& [m, c] : o.tail_) {
    BigRat& dst = tail_[m];
    dst += c;
    reduce_coeff(dst);
  }
  prune();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_ring(*this, o);
  cst_ -= o.cst_;
  reduce_coeff(cst_);
  for (auto& [m, c] : o.tail_) {
    BigRat& dst = tail_[m];
    dst -= c;
    reduce_coeff(dst);
  }
  prune();
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar::require_same_ring(a, b);
  Scalar r = Scalar::zero(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  r.cst_ = a.cst_ * b.cst_;
  r.reduce_coeff(r.cst_);
  if (a.cst_ != 0)
    for (auto& [m, c] : b.tail_) {
      BigRat& dst = r.tail_[m];
      dst += a.cst_ * c;
      r.reduce_coeff(dst);
    }
  if (b.cst_ != 0)
    for (auto& [m, c] : a.tail_) {
      BigRat& dst = r.tail_[m];
      dst += b.cst_ * c;
      r.reduce_coeff(dst);
    }
  for (auto& [ma, ca] : a.tail_)
    for (auto& [mb, cb] : b.tail_) {
      BigRat& dst = r.tail_[ma * mb];
      dst += ca * cb;
      r.reduce_coeff(dst);
    }
  r.prune();
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }

Scalar Scalar::inverse() const {
  if (!tail_.empty())
    throw DomainError("cannot invert a symbolic scalar");
  if (cst_ == 0) throw DomainError("division by zero");
  Scalar r = zero(p_);
  if (p_ == 0) {
    r.cst_ = BigRat(1) / cst_;
  } else {
    r.cst_ = BigRat(invert_mod_p(rational_mod_p(cst_, p_), p_));
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  return p_ == o.p_ && cst_ == o.cst_ && tail_ == o.tail_;
}

std::size_t Scalar::term_count() const {
  return tail_.size() + (cst_ != 0 ? 1 : 0);
}

bool Scalar::is_sum_like() const { return term_count() > 1; }

std::uint32_t Scalar::max_symbol() const {
  std::uint32_t m = 0;
  for (auto& [mono, c] : tail_)
    for (auto& [v, e] : mono.factors()) m = std::max(m, v);
  return m;
}

namespace {

std::string rat_to_string(const BigRat& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // symbolic terms, largest monomial first, then the constant
  for (auto it = tail_.rbegin(); it != tail_.rend(); ++it) {
    const BigRat& c = it->second;
    BigRat mag = c < 0 ? BigRat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << rat_to_string(mag) << "*";
    os << it->first.to_string();
  }
  if (cst_ != 0) {
    if (first) {
      os << rat_to_string(cst_);
    } else {
      BigRat mag = cst_ < 0 ? BigRat(-cst_) : cst_;
      os << (cst_ < 0 ? " - " : " + ") << rat_to_string(mag);
    }
  }
  return os.str();
}

Scalar Scalar::parse(const std::string& text, unsigned characteristic) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  skip_ws();
  auto read_int = [&]() -> BigInt {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected digits", start);
    return BigInt(text.substr(start, i - start));
  };
  BigInt num = read_int();
  BigInt den = 1;
  skip_ws();
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_int();
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters in scalar", i);
  if (neg) num = -num;
  return rational(num, den, characteristic);
}

}  // namespace staralg
