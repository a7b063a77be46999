#include "anabelkit/cyclotomic.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "anabelkit/padic.hpp"

namespace anabelkit {

namespace {

using ZPoly = std::vector<mpz_class>;

// Exact division of integer polynomials by a monic divisor.
ZPoly divide_monic(ZPoly a, const ZPoly& d) {
  const size_t dd = d.size() - 1;
  ZPoly q(a.size() - dd, 0);
  for (size_t i = a.size(); i-- > dd;) {
    mpz_class c = a[i];
    q[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) a[i - dd + j] -= c * d[j];
  }
  return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("cyclotomic index must be positive");
  thread_local std::map<long, ZPoly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  ZPoly f(n + 1, 0);
  f[0] = -1;
  f[n] = 1;
  for (long d = 1; d < n; ++d)
    if (n % d == 0) f = divide_monic(f, cyclotomic_polynomial(d));
  cache[n] = f;
  return f;
}

CycloRational::CycloRational(long n, const mpq_class& c) : n_(n) {
  const auto phi = cyclotomic_polynomial(n);
  c_.assign(phi.size() - 1, 0);
  c_[0] = c;
}

CycloRational CycloRational::root_of_unity(long n, long k) {
  CycloRational r(n, 0);
  k %= n;
  if (k < 0) k += n;
  std::vector<mpq_class> big(k + 1, 0);
  big[k] = 1;
  r.c_ = big;
  r.reduce();
  return r;
}

void CycloRational::reduce() {
  const auto phi = cyclotomic_polynomial(n_);
  const size_t d = phi.size() - 1;
  for (size_t i = c_.size(); i-- > d;) {
    mpq_class c = c_[i];
    if (c == 0) continue;
    for (size_t j = 0; j <= d; ++j) c_[i - d + j] -= c * mpq_class(phi[j]);
  }
  c_.resize(d, 0);
}

bool CycloRational::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

mpq_class CycloRational::rational_value() const {
  if (!is_rational()) throw DomainError("cyclotomic value is not rational");
  return c_.empty() ? mpq_class(0) : c_[0];
}

CycloRational& CycloRational::operator+=(const CycloRational& o) {
  if (n_ != o.n_) throw DomainError("cyclotomic order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloRational& CycloRational::operator-=(const CycloRational& o) {
  if (n_ != o.n_) throw DomainError("cyclotomic order mismatch");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloRational& CycloRational::operator*=(const CycloRational& o) {
  if (n_ != o.n_) throw DomainError("cyclotomic order mismatch");
  std::vector<mpq_class> r(c_.size() + o.c_.size(), 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  c_ = std::move(r);
  reduce();
  return *this;
}

CycloRational CycloRational::operator*(const mpq_class& s) const {
  CycloRational r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

CycloRational CycloRational::conjugate() const {
  CycloRational r(n_, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) r += root_of_unity(n_, -static_cast<long>(i)) * c_[i];
  return r;
}

CycloRational CycloRational::in_order(long m) const {
  if (m % n_ != 0) throw DomainError("cyclotomic order does not divide the target");
  if (m == n_) return *this;
  CycloRational r(m, 0);
  std::vector<mpq_class> big((c_.size() ? c_.size() - 1 : 0) * (m / n_) + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) big[i * (m / n_)] = c_[i];
  r.c_ = std::move(big);
  r.reduce();
  return r;
}

// Values from different orders compare in the common cyclotomic field.
bool CycloRational::operator==(const CycloRational& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  const long l = std::lcm(n_, o.n_);
  return in_order(l).c_ == o.in_order(l).c_;
}

std::string CycloRational::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*w" << n_ << (i > 1 ? "^" + std::to_string(i) : "");
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace anabelkit
