#include "anabelkit/padic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <vector>

namespace anabelkit {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

const mpz_class& prime_power(unsigned p, long k) {
  // deque: growing it must not move entries callers still reference
  thread_local std::map<unsigned, std::deque<mpz_class>> cache;
  auto& tab = cache[p];
  if (tab.empty()) tab.emplace_back(1);
  while (static_cast<long>(tab.size()) <= k) tab.push_back(tab.back() * p);
  return tab[k];
}

long mpz_valuation(const mpz_class& n, unsigned p) {
  if (n == 0) return kInfiniteValuation;
  mpz_class t = n;
  long k = 0;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++k;
  }
  return k;
}

namespace {

void check_prime(unsigned p) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

unsigned common_prime(unsigned a, unsigned b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw DomainError("prime mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

PadicScalar PadicScalar::from_parts(unsigned p, long v, const mpz_class& unit, long precision) {
  PadicScalar r;
  r.p_ = p;
  if (precision <= 0) {
    r.val_ = v;
    return r;
  }
  r.val_ = v;
  r.prec_ = precision;
  mpz_fdiv_r(r.unit_.get_mpz_t(), unit.get_mpz_t(), prime_power(p, precision).get_mpz_t());
  return r;
}

PadicScalar PadicScalar::from_integer(unsigned p, const mpz_class& n, long precision) {
  check_prime(p);
  if (precision < 1) throw DomainError("precision must be positive");
  if (n == 0) return exact_zero(p);
  mpz_class u = n;
  long v = 0;
  while (mpz_divisible_ui_p(u.get_mpz_t(), p)) {
    mpz_divexact_ui(u.get_mpz_t(), u.get_mpz_t(), p);
    ++v;
  }
  return from_parts(p, v, u, precision);
}

PadicScalar PadicScalar::from_rational(unsigned p, const mpq_class& q, long precision) {
  check_prime(p);
  if (precision < 1) throw DomainError("precision must be positive");
  if (q == 0) return exact_zero(p);
  mpz_class num = q.get_num(), den = q.get_den();
  long v = 0;
  while (mpz_divisible_ui_p(num.get_mpz_t(), p)) {
    mpz_divexact_ui(num.get_mpz_t(), num.get_mpz_t(), p);
    ++v;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    --v;
  }
  const mpz_class& mod = prime_power(p, precision);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  return from_parts(p, v, num * inv, precision);
}

PadicScalar PadicScalar::zero_to(unsigned p, long bound) {
  PadicScalar r;
  r.p_ = p;
  r.val_ = bound;
  return r;
}

PadicScalar PadicScalar::exact_zero(unsigned p) {
  PadicScalar r;
  r.p_ = p;
  return r;
}

long PadicScalar::valuation() const {
  if (prec_ == 0) throw PrecisionError("valuation of an element that is zero to precision");
  return val_;
}

PadicScalar PadicScalar::truncated(long a) const {
  if (prec_ == 0) return zero_to(p_, std::min(val_, a));
  if (a <= val_) return zero_to(p_, a);
  if (a - val_ >= prec_) return *this;
  return from_parts(p_, val_, unit_, a - val_);
}

unsigned long PadicScalar::residue() const {
  if (prec_ == 0) {
    if (val_ >= 1) return 0;
    throw PrecisionError("residue of an element that is zero to precision");
  }
  if (val_ < 0) throw DomainError("residue of a non-integral element");
  if (val_ > 0) return 0;
  return mpz_fdiv_ui(unit_.get_mpz_t(), p_);
}

mpq_class PadicScalar::lift() const {
  if (prec_ == 0) return 0;
  mpq_class r(unit_);
  if (val_ >= 0)
    r *= mpq_class(prime_power(p_, val_));
  else
    r /= mpq_class(prime_power(p_, -val_));
  r.canonicalize();
  return r;
}

mpz_class PadicScalar::lift_integer() const {
  if (prec_ == 0) return 0;
  if (val_ < 0) throw DomainError("integer lift of a non-integral element");
  return unit_ * prime_power(p_, val_);
}

PadicScalar PadicScalar::operator-() const {
  if (prec_ == 0) return *this;
  PadicScalar r = *this;
  mpz_sub(r.unit_.get_mpz_t(), prime_power(p_, prec_).get_mpz_t(), unit_.get_mpz_t());
  return r;
}

void PadicScalar::normalize_sum(mpz_class s, long v, long abs_prec) {
  long n = abs_prec - v;
  mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), prime_power(p_, n).get_mpz_t());
  if (s == 0) {
    val_ = abs_prec;
    prec_ = 0;
    unit_ = 0;
    return;
  }
  long k = 0;
  while (mpz_divisible_ui_p(s.get_mpz_t(), p_)) {
    mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), p_);
    ++k;
  }
  val_ = v + k;
  prec_ = n - k;
  unit_ = std::move(s);
}

PadicScalar& PadicScalar::operator+=(const PadicScalar& o) {
  if (o.is_exact_zero()) {
    if (p_ == 0) p_ = o.p_;
    return *this;
  }
  if (is_exact_zero()) {
    unsigned keep = p_;
    *this = o;
    p_ = common_prime(keep, o.p_);
    return *this;
  }
  p_ = common_prime(p_, o.p_);
  if (prec_ == 0 && o.prec_ == 0) {
    val_ = std::min(val_, o.val_);
    return *this;
  }
  if (prec_ == 0 || o.prec_ == 0) {
    const PadicScalar& nz = prec_ == 0 ? o : *this;
    long bound = prec_ == 0 ? val_ : o.val_;
    long a = std::min(bound, nz.absolute_precision());
    *this = nz.truncated(a);
    return *this;
  }
  long v = std::min(val_, o.val_);
  long a = std::min(absolute_precision(), o.absolute_precision());
  mpz_class s = unit_ * prime_power(p_, val_ - v) + o.unit_ * prime_power(p_, o.val_ - v);
  normalize_sum(std::move(s), v, a);
  return *this;
}

PadicScalar& PadicScalar::operator-=(const PadicScalar& o) { return *this += -o; }

PadicScalar& PadicScalar::operator*=(const PadicScalar& o) {
  p_ = common_prime(p_, o.p_);
  if (is_exact_zero()) return *this;
  if (o.is_exact_zero()) {
    *this = exact_zero(p_);
    return *this;
  }
  if (prec_ == 0 || o.prec_ == 0) {
    val_ += o.val_;
    prec_ = 0;
    unit_ = 0;
    return *this;
  }
  val_ += o.val_;
  prec_ = std::min(prec_, o.prec_);
  unit_ *= o.unit_;
  mpz_fdiv_r(unit_.get_mpz_t(), unit_.get_mpz_t(), prime_power(p_, prec_).get_mpz_t());
  return *this;
}

PadicScalar PadicScalar::inverse() const {
  if (prec_ == 0) throw PrecisionError("inverse of an element that is zero to precision");
  PadicScalar r;
  r.p_ = p_;
  r.val_ = -val_;
  r.prec_ = prec_;
  mpz_invert(r.unit_.get_mpz_t(), unit_.get_mpz_t(), prime_power(p_, prec_).get_mpz_t());
  return r;
}

PadicScalar& PadicScalar::operator/=(const PadicScalar& o) { return *this *= o.inverse(); }

PadicScalar PadicScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return from_parts(p_, 0, 1, prec_ > 0 ? prec_ : kDefaultPrecision);
  if (is_exact_zero()) return *this;
  if (prec_ == 0) return zero_to(p_, val_ * k);
  PadicScalar r = *this;
  r.val_ = val_ * k;
  mpz_powm_ui(r.unit_.get_mpz_t(), unit_.get_mpz_t(), static_cast<unsigned long>(k),
              prime_power(p_, prec_).get_mpz_t());
  return r;
}

PadicScalar PadicScalar::shifted(long k) const {
  if (is_exact_zero()) return *this;
  PadicScalar r = *this;
  r.val_ += k;
  return r;
}

bool equal_to_precision(const PadicScalar& a, const PadicScalar& b) { return (a - b).is_zero(); }

std::string PadicScalar::to_string() const {
  std::ostringstream os;
  if (is_exact_zero()) return "0";
  if (prec_ == 0) {
    os << "O(" << p_ << "^" << val_ << ")";
    return os.str();
  }
  if (val_ != 0) os << p_ << "^" << val_ << "*";
  os << unit_.get_str() << " + O(" << p_ << "^" << absolute_precision() << ")";
  return os.str();
}

PadicScalar padic_log(const PadicScalar& x) {
  if (x.is_zero()) throw DomainError("logarithm of zero");
  const unsigned p = x.prime();
  const long a = x.relative_precision();
  long digits = 0;
  for (long n = a + 64; n > 0; n /= p) ++digits;
  const long work = a + digits + 4;
  // Kill the Teichmuller part so the series converges.
  const unsigned long m = p == 2 ? 2 : p - 1;
  mpz_class y;
  mpz_powm_ui(y.get_mpz_t(), x.unit().get_mpz_t(), m, prime_power(p, work).get_mpz_t());
  PadicScalar z = PadicScalar::from_integer(p, y - 1, work);
  if (z.is_zero()) return PadicScalar::zero_to(p, a);
  const long vz = z.valuation();
  const long target = a + (p == 2 ? 1 : 0);
  PadicScalar sum = PadicScalar::exact_zero(p);
  PadicScalar zn = z;
  for (long n = 1;; ++n) {
    long logn = 0;
    for (long t = n; t >= static_cast<long>(p); t /= p) ++logn;
    if (n * vz - logn >= target + 1 && n > 1) break;
    PadicScalar term = zn / PadicScalar::from_integer(p, n, work);
    if (n % 2 == 0) term = -term;
    sum += term;
    zn *= z;
  }
  sum /= PadicScalar::from_integer(p, m, work);
  if (sum.absolute_precision() < a) throw PrecisionError("logarithm lost precision");
  return sum.truncated(a);
}

}  // namespace anabelkit
