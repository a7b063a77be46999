#include "anabelkit/residue_field.hpp"

#include <sstream>
#include <stdexcept>

#include "anabelkit/padic.hpp"

namespace anabelkit {

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

long fp_inverse(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw DomainError("inverse of zero in F_p");
  long r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& m, long p) {
  FpPoly r = a;
  fp_trim(r);
  FpPoly mm = m;
  fp_trim(mm);
  if (mm.empty()) throw DomainError("polynomial division by zero");
  const long lead_inv = fp_inverse(mm.back(), p);
  const size_t dm = mm.size() - 1;
  while (r.size() > dm) {
    long c = r.back() * lead_inv % p;
    size_t shift = r.size() - 1 - dm;
    for (size_t i = 0; i <= dm; ++i) {
      r[shift + i] = ((r[shift + i] - c * mm[i]) % p + p) % p;
    }
    fp_trim(r);
  }
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  fp_trim(r);
  return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    long li = fp_inverse(a.back(), p);
    for (auto& c : a) c = c * li % p;
  }
  return a;
}

bool fp_is_irreducible(const FpPoly& f0, long p) {
  FpPoly f = f0;
  fp_trim(f);
  const long n = static_cast<long>(f.size()) - 1;
  if (n < 1) return false;
  if (n == 1) return true;
  // x^(p^i) mod f for i = 1..n/2; gcd(x^(p^i) - x, f) must be 1.
  FpPoly xp = {0, 1};
  for (long i = 1; i <= n / 2; ++i) {
    FpPoly base = xp, acc = {1};
    long e = p;
    while (e > 0) {
      if (e & 1) acc = fp_mod(fp_mul(acc, base, p), f, p);
      base = fp_mod(fp_mul(base, base, p), f, p);
      e >>= 1;
    }
    xp = acc;
    FpPoly d = xp;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = ((d[1] - 1) % p + p) % p;
    fp_trim(d);
    FpPoly g = fp_gcd(f, d, p);
    if (g.size() > 1) return false;
  }
  return true;
}

ResidueField::ResidueField(long p, FpPoly modulus) : p_(p), mod_(std::move(modulus)) {
  fp_trim(mod_);
  f_ = static_cast<int>(mod_.size()) - 1;
  if (f_ < 1) throw DomainError("residue field modulus must have positive degree");
  q_ = 1;
  for (int i = 0; i < f_; ++i) q_ *= p_;
}

ResidueField::Elem ResidueField::one() const {
  Elem e(f_, 0);
  e[0] = 1;
  return e;
}

ResidueField::Elem ResidueField::from_int(long a) const {
  Elem e(f_, 0);
  e[0] = ((a % p_) + p_) % p_;
  return e;
}

ResidueField::Elem ResidueField::element(long idx) const {
  Elem e(f_, 0);
  for (int i = 0; i < f_; ++i) {
    e[i] = idx % p_;
    idx /= p_;
  }
  return e;
}

long ResidueField::index(const Elem& x) const {
  long r = 0;
  for (int i = f_ - 1; i >= 0; --i) r = r * p_ + x[i];
  return r;
}

bool ResidueField::is_zero(const Elem& x) const {
  for (long c : x)
    if (c != 0) return false;
  return true;
}

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const {
  Elem r(f_);
  for (int i = 0; i < f_; ++i) r[i] = (a[i] + b[i]) % p_;
  return r;
}

ResidueField::Elem ResidueField::neg(const Elem& a) const {
  Elem r(f_);
  for (int i = 0; i < f_; ++i) r[i] = (p_ - a[i]) % p_;
  return r;
}

ResidueField::Elem ResidueField::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
  if (f_ == 1) return Elem{a[0] * b[0] % p_};
  FpPoly r = fp_mod(fp_mul(FpPoly(a.begin(), a.end()), FpPoly(b.begin(), b.end()), p_), mod_, p_);
  r.resize(f_, 0);
  return r;
}

ResidueField::Elem ResidueField::pow(Elem a, long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Elem r = one();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

ResidueField::Elem ResidueField::inv(const Elem& a) const {
  if (is_zero(a)) throw DomainError("inverse of zero in residue field");
  if (f_ == 1) return Elem{fp_inverse(a[0], p_)};
  return pow(a, q_ - 2);
}

bool ResidueField::root(const Elem& a, long k, Elem& out) const {
  for (long i = 0; i < q_; ++i) {
    Elem x = element(i);
    if (pow(x, k) == a) {
      out = x;
      return true;
    }
  }
  return false;
}

ResidueField::Elem ResidueField::eval(const std::vector<Elem>& poly, const Elem& x) const {
  Elem r = zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = add(mul(r, x), *it);
  return r;
}

std::vector<ResidueField::Elem> ResidueField::roots(const std::vector<Elem>& poly) const {
  std::vector<Elem> out;
  bool all_zero = true;
  for (const auto& c : poly)
    if (!is_zero(c)) all_zero = false;
  if (all_zero) throw DomainError("root search on the zero polynomial");
  for (long i = 0; i < q_; ++i) {
    Elem x = element(i);
    if (is_zero(eval(poly, x))) out.push_back(x);
  }
  return out;
}

std::string ResidueField::to_string(const Elem& x) const {
  if (f_ == 1) return std::to_string(x[0]);
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < f_; ++i) os << (i ? "," : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace anabelkit
