#pragma once

/*
 * Exact arithmetic in Q(zeta_L): elements are stored in the power basis
 * 1, z, ..., z^(phi(L)-1) of Q[z]/Phi_L(z) with exact rational coefficients.
 * Conductor 1 plays the role of Q itself; rationals embed into any Q(zeta_L)
 * on contact.  Mixing two distinct conductors > 1 is a hard error: there is
 * no implicit coercion between different cyclotomic fields.
 */

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hopfforge {

using Rational = mpq_class;

struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct cap_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct conductor_mismatch : input_error {
  using input_error::input_error;
};

// Phi_L as monic integer polynomial, computed by recursive exact division of
// x^L - 1 by the proper-divisor cyclotomics.  Cached per conductor.
const std::vector<mpz_class>& cyclotomic_polynomial(uint32_t L);
uint32_t euler_phi(uint32_t L);

class CyclotomicScalar {
 public:
  CyclotomicScalar() : L_(1), c_(1, Rational(0)) {}
  explicit CyclotomicScalar(long n) : L_(1), c_(1, Rational(n)) {}
  explicit CyclotomicScalar(const Rational& r) : L_(1), c_(1, r) {}

  static CyclotomicScalar zero(uint32_t L);
  static CyclotomicScalar one(uint32_t L);
  // z^k at conductor L (k may be any integer, reduced mod L)
  static CyclotomicScalar root_power(uint32_t L, long long k);
  static CyclotomicScalar root(uint32_t L) { return root_power(L, 1); }

  uint32_t conductor() const { return L_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // valid only when is_rational()
  Rational rational_value() const;

  CyclotomicScalar operator-() const;
  CyclotomicScalar& operator+=(const CyclotomicScalar& o);
  CyclotomicScalar& operator-=(const CyclotomicScalar& o);
  CyclotomicScalar& operator*=(const CyclotomicScalar& o);
  friend CyclotomicScalar operator+(CyclotomicScalar a, const CyclotomicScalar& b) { return a += b; }
  friend CyclotomicScalar operator-(CyclotomicScalar a, const CyclotomicScalar& b) { return a -= b; }
  friend CyclotomicScalar operator*(CyclotomicScalar a, const CyclotomicScalar& b) { return a *= b; }

  // extended gcd against Phi_L; throws on zero
  CyclotomicScalar inverse() const;
  CyclotomicScalar pow(long long e) const;
  CyclotomicScalar& operator/=(const CyclotomicScalar& o) { return *this *= o.inverse(); }
  friend CyclotomicScalar operator/(CyclotomicScalar a, const CyclotomicScalar& b) { return a /= b; }

  bool operator==(const CyclotomicScalar& o) const;
  bool operator!=(const CyclotomicScalar& o) const { return !(*this == o); }

  // least n >= 1 with x^n = 1; roots of unity in Q(zeta_L) have order
  // dividing lcm(2, L), so the search is bounded
  std::optional<uint32_t> multiplicative_order() const;

  // promote a rational (conductor 1) into Q(zeta_L); identity if already there
  CyclotomicScalar promoted(uint32_t L) const;

  std::string str() const;

 private:
  uint32_t L_;
  std::vector<Rational> c_;  // size phi(L_)

  void reduce_inplace(std::vector<Rational>& raw) const;
  static void align(CyclotomicScalar& a, CyclotomicScalar& b);
};

using Cyc = CyclotomicScalar;

// canonical text form: terms in ascending powers of z, " + "/" - " separators
std::string print_scalar(const CyclotomicScalar& x);
// LL(1) parser over integers, rationals p/q, z, + - * ^, parentheses;
// throws input_error with a position on syntax errors
CyclotomicScalar parse_scalar(const std::string& text, uint32_t L);

}  // namespace hopfforge
