#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace anabelkit {

// Raised when a result cannot be certified at the working precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input or unsupported construction.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long kInfiniteValuation = 1L << 40;
inline constexpr long kDefaultPrecision = 64;

bool is_prime(unsigned long n);

// Cached p^k for k >= 0.
const mpz_class& prime_power(unsigned p, long k);

// p-adic valuation of a nonzero integer.
long mpz_valuation(const mpz_class& n, unsigned p);

/*
 * Element of Q_p in relative-precision form p^v * u with u a unit known
 * modulo p^N.  A value with no significant digits is "zero to precision"
 * and only carries a lower bound on its valuation; exact zero has an
 * infinite bound.  A default-constructed scalar is an exact zero that
 * adopts the prime of whatever it is combined with.
 */
class PadicScalar {
 public:
  PadicScalar() = default;

  static PadicScalar from_integer(unsigned p, const mpz_class& n, long precision = kDefaultPrecision);
  static PadicScalar from_rational(unsigned p, const mpq_class& q, long precision = kDefaultPrecision);
  static PadicScalar zero_to(unsigned p, long valuation_bound);
  static PadicScalar exact_zero(unsigned p);
  // p^v * unit with unit reduced mod p^precision; unit must be prime to p.
  static PadicScalar from_parts(unsigned p, long v, const mpz_class& unit, long precision);

  unsigned prime() const { return p_; }
  bool is_zero() const { return prec_ == 0; }
  bool is_exact_zero() const { return prec_ == 0 && val_ >= kInfiniteValuation; }

  // Exact valuation; throws PrecisionError when zero to precision.
  long valuation() const;
  // Valuation if known, otherwise the lower bound carried by the zero.
  long valuation_bound() const { return val_; }
  long relative_precision() const { return prec_; }
  long absolute_precision() const { return prec_ == 0 ? val_ : val_ + prec_; }
  const mpz_class& unit() const { return unit_; }

  // Reduce to absolute precision at most a.
  PadicScalar truncated(long a) const;
  // Residue mod p of an integral element.
  unsigned long residue() const;
  // Rational representative p^v * unit.
  mpq_class lift() const;
  // Integer representative of an integral element mod p^absolute_precision.
  mpz_class lift_integer() const;

  PadicScalar operator-() const;
  PadicScalar& operator+=(const PadicScalar& o);
  PadicScalar& operator-=(const PadicScalar& o);
  PadicScalar& operator*=(const PadicScalar& o);
  PadicScalar& operator/=(const PadicScalar& o);
  friend PadicScalar operator+(PadicScalar a, const PadicScalar& b) { return a += b; }
  friend PadicScalar operator-(PadicScalar a, const PadicScalar& b) { return a -= b; }
  friend PadicScalar operator*(PadicScalar a, const PadicScalar& b) { return a *= b; }
  friend PadicScalar operator/(PadicScalar a, const PadicScalar& b) { return a /= b; }

  PadicScalar inverse() const;
  PadicScalar pow(long k) const;
  // Multiply by p^k.
  PadicScalar shifted(long k) const;

  // True when a - b is zero to the combined precision.
  friend bool equal_to_precision(const PadicScalar& a, const PadicScalar& b);

  std::string to_string() const;

 private:
  void normalize_sum(mpz_class s, long v, long abs_prec);

  unsigned p_ = 0;
  long val_ = kInfiniteValuation;
  long prec_ = 0;
  mpz_class unit_ = 0;
};

// Iwasawa logarithm (log p = 0).  Absolute precision of the result is
// capped at that of the input unit part.
PadicScalar padic_log(const PadicScalar& x);

}  // namespace anabelkit
