#include "hopfforge/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace hopfforge {

namespace {

// exact division of integer polynomials, remainder must vanish
std::vector<mpz_class> poly_div_exact(const std::vector<mpz_class>& num,
                                      const std::vector<mpz_class>& den) {
  std::vector<mpz_class> rem = num;
  if (den.empty() || den.back() != 1) throw std::logic_error("poly_div_exact: divisor not monic");
  if (rem.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<mpz_class> quot(rem.size() - den.size() + 1, mpz_class(0));
  for (size_t k = quot.size(); k-- > 0;) {
    mpz_class q = rem[k + den.size() - 1];
    quot[k] = q;
    if (q != 0)
      for (size_t j = 0; j < den.size(); ++j) rem[k + j] -= q * den[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

std::map<uint32_t, std::vector<mpz_class>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<mpz_class> compute_cyclotomic(uint32_t L, std::map<uint32_t, std::vector<mpz_class>>& cache);

const std::vector<mpz_class>& cached_cyclotomic(uint32_t L, std::map<uint32_t, std::vector<mpz_class>>& cache) {
  auto it = cache.find(L);
  if (it == cache.end()) it = cache.emplace(L, compute_cyclotomic(L, cache)).first;
  return it->second;
}

std::vector<mpz_class> compute_cyclotomic(uint32_t L, std::map<uint32_t, std::vector<mpz_class>>& cache) {
  if (L == 0) throw input_error("conductor must be >= 1");
  if (L == 1) return {mpz_class(-1), mpz_class(1)};  // z - 1
  std::vector<mpz_class> num(L + 1, mpz_class(0));
  num[0] = -1;
  num[L] = 1;
  std::vector<mpz_class> acc{mpz_class(1)};
  auto mul = [](const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
    std::vector<mpz_class> r(a.size() + b.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  for (uint32_t d = 1; d < L; ++d)
    if (L % d == 0) acc = mul(acc, cached_cyclotomic(d, cache));
  return poly_div_exact(num, acc);
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(uint32_t L) {
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return cached_cyclotomic(L, g_phi_cache);
}

uint32_t euler_phi(uint32_t L) {
  return uint32_t(cyclotomic_polynomial(L).size() - 1);
}

CyclotomicScalar CyclotomicScalar::zero(uint32_t L) {
  CyclotomicScalar x;
  x.L_ = L;
  x.c_.assign(euler_phi(L), Rational(0));
  return x;
}

CyclotomicScalar CyclotomicScalar::one(uint32_t L) {
  CyclotomicScalar x = zero(L);
  x.c_[0] = 1;
  return x;
}

CyclotomicScalar CyclotomicScalar::root_power(uint32_t L, long long k) {
  CyclotomicScalar x = zero(L);
  long long r = k % (long long)L;
  if (r < 0) r += L;
  std::vector<Rational> raw(size_t(r) + 1, Rational(0));
  raw[size_t(r)] = 1;
  x.reduce_inplace(raw);
  x.c_ = std::move(raw);
  return x;
}

bool CyclotomicScalar::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CyclotomicScalar::is_one() const {
  if (c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool CyclotomicScalar::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CyclotomicScalar::rational_value() const {
  if (!is_rational()) throw std::logic_error("rational_value on non-rational scalar");
  return c_[0];
}

CyclotomicScalar CyclotomicScalar::promoted(uint32_t L) const {
  if (L_ == L) return *this;
  if (L_ != 1) throw conductor_mismatch("cannot promote conductor " + std::to_string(L_) + " to " + std::to_string(L));
  CyclotomicScalar x = zero(L);
  x.c_[0] = c_[0];
  return x;
}

void CyclotomicScalar::align(CyclotomicScalar& a, CyclotomicScalar& b) {
  if (a.L_ == b.L_) return;
  if (a.L_ == 1) {
    a = a.promoted(b.L_);
  } else if (b.L_ == 1) {
    b = b.promoted(a.L_);
  } else {
    throw conductor_mismatch("conductor mismatch: " + std::to_string(a.L_) + " vs " + std::to_string(b.L_));
  }
}

CyclotomicScalar CyclotomicScalar::operator-() const {
  CyclotomicScalar x = *this;
  for (auto& q : x.c_) q = -q;
  return x;
}

CyclotomicScalar& CyclotomicScalar::operator+=(const CyclotomicScalar& o) {
  CyclotomicScalar rhs = o;
  align(*this, rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

CyclotomicScalar& CyclotomicScalar::operator-=(const CyclotomicScalar& o) {
  CyclotomicScalar rhs = o;
  align(*this, rhs);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

// fold z^k for k >= phi(L) using z^phi = -(lower terms of Phi_L), top down
void CyclotomicScalar::reduce_inplace(std::vector<Rational>& raw) const {
  const auto& phi = cyclotomic_polynomial(L_);
  size_t m = phi.size() - 1;
  while (raw.size() > m) {
    Rational top = raw.back();
    raw.pop_back();
    if (top != 0) {
      size_t base = raw.size() - m;
      for (size_t j = 0; j < m; ++j) raw[base + j] -= top * Rational(phi[j]);
    }
  }
  raw.resize(m, Rational(0));
}

CyclotomicScalar& CyclotomicScalar::operator*=(const CyclotomicScalar& o) {
  CyclotomicScalar rhs = o;
  align(*this, rhs);
  std::vector<Rational> raw(c_.size() + rhs.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      raw[i + j] += c_[i] * rhs.c_[j];
    }
  }
  reduce_inplace(raw);
  c_ = std::move(raw);
  return *this;
}

bool CyclotomicScalar::operator==(const CyclotomicScalar& o) const {
  CyclotomicScalar a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

namespace {

using QPoly = std::vector<Rational>;  // dense, may carry leading zeros

size_t qdeg(const QPoly& p) {
  size_t i = p.size();
  while (i > 0 && p[i - 1] == 0) --i;
  return i;  // 0 means zero polynomial; else degree + 1
}

QPoly qsub_scaled(const QPoly& a, const QPoly& b, const Rational& s, size_t shift) {
  QPoly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, Rational(0));
  for (size_t i = 0; i < b.size(); ++i) r[i + shift] -= s * b[i];
  return r;
}

// division with remainder over Q[z]
void qdivmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
  size_t db = qdeg(b);
  if (db == 0) throw std::logic_error("qdivmod by zero");
  rem = a;
  quot.assign(a.size(), Rational(0));
  Rational lead = b[db - 1];
  while (true) {
    size_t dr = qdeg(rem);
    if (dr < db) break;
    Rational s = rem[dr - 1] / lead;
    quot[dr - db] += s;
    rem = qsub_scaled(rem, b, s, dr - db);
    rem[dr - 1] = 0;
  }
}

}  // namespace

CyclotomicScalar CyclotomicScalar::inverse() const {
  if (is_zero()) throw input_error("division by zero scalar");
  if (L_ == 1) {
    CyclotomicScalar x;
    x.c_[0] = Rational(1) / c_[0];
    return x;
  }
  // extended Euclid: s*f + t*Phi = gcd, gcd must be a unit since Phi_L is
  // irreducible over Q and f != 0 has smaller degree
  const auto& phiz = cyclotomic_polynomial(L_);
  QPoly r0(phiz.size());
  for (size_t i = 0; i < phiz.size(); ++i) r0[i] = Rational(phiz[i]);
  QPoly r1 = c_;
  QPoly s0{Rational(0)}, s1{Rational(1)};  // coefficients of f in the combination
  while (qdeg(r1) > 1) {
    QPoly q, rem;
    qdivmod(r0, r1, q, rem);
    // s_next = s0 - q*s1
    QPoly snext = s0;
    size_t dq = qdeg(q);
    for (size_t i = 0; i < dq; ++i)
      if (q[i] != 0) snext = qsub_scaled(snext, s1, q[i], i);
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = snext;
  }
  if (qdeg(r1) == 0) throw std::logic_error("inverse: gcd with Phi_L vanished");
  Rational g = r1[0];
  CyclotomicScalar x = zero(L_);
  size_t dm = qdeg(s1);
  std::vector<Rational> raw(std::max<size_t>(dm, 1), Rational(0));
  for (size_t i = 0; i < dm; ++i) raw[i] = s1[i] / g;
  reduce_inplace(raw);
  x.c_ = std::move(raw);
  return x;
}

CyclotomicScalar CyclotomicScalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CyclotomicScalar base = *this;
  CyclotomicScalar acc = (L_ == 1) ? CyclotomicScalar(1) : one(L_);
  unsigned long long k = (unsigned long long)e;
  while (k) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

std::optional<uint32_t> CyclotomicScalar::multiplicative_order() const {
  if (is_zero()) return std::nullopt;
  uint32_t bound = (L_ % 2 == 0) ? L_ : 2 * L_;
  CyclotomicScalar p = *this;
  for (uint32_t n = 1; n <= bound; ++n) {
    if (p.is_one()) return n;
    p *= *this;
  }
  return std::nullopt;
}

std::string CyclotomicScalar::str() const { return print_scalar(*this); }

std::string print_scalar(const CyclotomicScalar& x) {
  const auto& c = x.coeffs();
  std::ostringstream out;
  bool first = true;
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Rational q = c[k];
    bool neg = q < 0;
    if (first) {
      if (neg) out << "-";
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    Rational mag = neg ? Rational(-q) : q;
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << "z";
      if (k > 1) out << "^" << k;
    }
  }
  if (first) return "0";
  return out.str();
}

namespace {

struct ScalarParser {
  const std::string& s;
  size_t pos = 0;
  uint32_t L;

  explicit ScalarParser(const std::string& text, uint32_t conductor) : s(text), L(conductor) {}

  [[noreturn]] void fail(const std::string& what) {
    throw input_error("scalar syntax error at position " + std::to_string(pos) + ": " + what);
  }
  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool peek(char ch) {
    skip_ws();
    return pos < s.size() && s[pos] == ch;
  }
  bool eat(char ch) {
    if (peek(ch)) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    if (pos == start) fail("expected integer");
    return mpz_class(s.substr(start, pos - start));
  }

  CyclotomicScalar base() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char ch = s[pos];
    if (ch == 'z') {
      ++pos;
      return CyclotomicScalar::root(L);
    }
    if (ch == '(') {
      ++pos;
      CyclotomicScalar e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (isdigit((unsigned char)ch)) {
      mpz_class p = integer();
      if (eat('/')) {
        mpz_class q = integer();
        if (q == 0) fail("zero denominator");
        Rational r(p, q);
        r.canonicalize();
        return CyclotomicScalar(r);
      }
      return CyclotomicScalar(Rational(p));
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  CyclotomicScalar factor() {
    CyclotomicScalar b = base();
    if (eat('^')) {
      skip_ws();
      mpz_class e = integer();
      if (e > mpz_class("4611686018427387904")) fail("exponent too large");
      return b.pow(e.get_si());
    }
    return b;
  }

  CyclotomicScalar term() {
    CyclotomicScalar t = factor();
    while (eat('*')) t *= factor();
    return t;
  }

  CyclotomicScalar expr() {
    skip_ws();
    bool neg = eat('-');
    CyclotomicScalar acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

};

}  // namespace

CyclotomicScalar parse_scalar(const std::string& text, uint32_t L) {
  ScalarParser p(text, L);
  CyclotomicScalar e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  // rationals stay at conductor 1; anything touching z is already at L
  return e;
}

}  // namespace hopfforge
