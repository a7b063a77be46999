#include "anabelkit/detail/flat_ring.hpp"

#include <algorithm>

namespace anabelkit::detail {

namespace {

long sat_add(long a, long b) {
  if (a >= kInfiniteValuation || b >= kInfiniteValuation) return kInfiniteValuation;
  return std::min(a + b, kInfiniteValuation);
}

long ceil_div(long a, long b) {
  long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

size_t bit_length(unsigned long n) {
  size_t b = 0;
  while (n) {
    ++b;
    n >>= 1;
  }
  return b;
}

}  // namespace

FlatRing::FlatRing(unsigned p, long e, int f, long cap, std::vector<mpz_class> g, std::vector<mpz_class> E,
                   ResidueField residue)
    : p_(p), e_(e), f_(f), K_(cap), mod_(prime_power(p, cap)), g_(std::move(g)), E_(std::move(E)),
      residue_(std::move(residue)) {
  for (auto& c : g_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), mod_.get_mpz_t());
  for (auto& c : E_) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), mod_.get_mpz_t());
  // pi^e / p = -E_0 / p mod pi
  ResidueField::Elem u(f_, 0);
  for (int j = 0; j < f_; ++j) {
    mpz_class q = E_[j];
    if (!mpz_divisible_ui_p(q.get_mpz_t(), p_)) throw DomainError("constant term of E is not divisible by p");
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), p_);
    q = -q;
    mpz_fdiv_r_ui(q.get_mpz_t(), q.get_mpz_t(), p_);
    u[j] = static_cast<long>(q.get_ui());
  }
  if (residue_.is_zero(u)) throw DomainError("E is not Eisenstein");
  ures_inv_ = residue_.inv(u);
  if (e_ > 1) {
    // inverse of rev(E) = 1 + E_{e-1} X + ... mod X^{e-1}
    einv_.assign((e_ - 1) * f_, 0);
    einv_[0] = 1;
    for (long k = 1; k < e_ - 1; ++k) {
      std::vector<mpz_class> acc(f_, 0);
      for (long j = 1; j <= k; ++j) {
        auto prod = mul_poly(&E_[(e_ - j) * f_], 1, &einv_[(k - j) * f_], 1);
        for (int l = 0; l < f_; ++l) acc[l] -= prod[l];
      }
      for (int l = 0; l < f_; ++l) {
        mpz_fdiv_r(acc[l].get_mpz_t(), acc[l].get_mpz_t(), mod_.get_mpz_t());
        einv_[k * f_ + l] = acc[l];
      }
    }
  }
  if (e_ > 1) {
    pi_.c.assign(e_ * f_, 0);
    pi_.c[f_] = 1;
  } else {
    pi_.c.assign(f_, 0);
    pi_.c[0] = 1;
    pi_.sh = 1;
  }
  normalize(pi_);
  pinv_ = inverse(pi_);
}

void FlatRing::reduce_base(mpz_class* c, int len) const {
  for (int l = len - 1; l >= f_; --l) {
    if (c[l] == 0) continue;
    mpz_fdiv_r(c[l].get_mpz_t(), c[l].get_mpz_t(), mod_.get_mpz_t());
    for (int j = 0; j < f_; ++j)
      if (g_[j] != 0) mpz_submul(c[l - f_ + j].get_mpz_t(), c[l].get_mpz_t(), g_[j].get_mpz_t());
  }
  for (int j = 0; j < f_; ++j) mpz_fdiv_r(c[j].get_mpz_t(), c[j].get_mpz_t(), mod_.get_mpz_t());
}

FlatRing::Poly FlatRing::mul_poly(const mpz_class* a, long na, const mpz_class* b, long nb) const {
  const long S = 2 * f_ - 1;
  const long nout = na + nb - 1;
  const size_t bits = 2 * mpz_sizeinbase(mod_.get_mpz_t(), 2) +
                      bit_length(static_cast<unsigned long>(std::min(na, nb) * f_)) + 1;
  const size_t nl = (bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS;
  auto pack = [&](const mpz_class* x, long n, mpz_class& z) {
    const size_t total = static_cast<size_t>(n * S) * nl;
    mp_limb_t* w = mpz_limbs_write(z.get_mpz_t(), total);
    std::fill(w, w + total, 0);
    for (long i = 0; i < n; ++i)
      for (int j = 0; j < f_; ++j) {
        mpz_srcptr c = x[i * f_ + j].get_mpz_t();
        const size_t sz = mpz_size(c);
        const mp_limb_t* src = mpz_limbs_read(c);
        std::copy(src, src + sz, w + static_cast<size_t>(i * S + j) * nl);
      }
    mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(total));
  };
  mpz_class za, zb, prod;
  pack(a, na, za);
  if (a == b && na == nb) {
    mpz_mul(prod.get_mpz_t(), za.get_mpz_t(), za.get_mpz_t());
  } else {
    pack(b, nb, zb);
    mpz_mul(prod.get_mpz_t(), za.get_mpz_t(), zb.get_mpz_t());
  }
  const mp_limb_t* r = mpz_limbs_read(prod.get_mpz_t());
  const size_t sz = mpz_size(prod.get_mpz_t());
  Poly out(nout * f_);
  std::vector<mpz_class> tmp(S);
  for (long i = 0; i < nout; ++i) {
    for (long s = 0; s < S; ++s) {
      const size_t start = static_cast<size_t>(i * S + s) * nl;
      if (start >= sz) {
        tmp[s] = 0;
        continue;
      }
      const size_t len = std::min(nl, sz - start);
      mp_limb_t* w = mpz_limbs_write(tmp[s].get_mpz_t(), len);
      std::copy(r + start, r + start + len, w);
      mpz_limbs_finish(tmp[s].get_mpz_t(), static_cast<mp_size_t>(len));
    }
    reduce_base(tmp.data(), static_cast<int>(S));
    for (int j = 0; j < f_; ++j) out[i * f_ + j] = std::move(tmp[j]);
  }
  return out;
}

FlatRing::Poly FlatRing::reduce(Poly prod) const {
  const long n = static_cast<long>(prod.size()) / f_;
  if (n <= e_) {
    prod.resize(e_ * f_, 0);
    return prod;
  }
  // n == 2e - 1: Barrett division by the monic E.
  const long q = n - e_;  // quotient length, <= e - 1
  Poly top(q * f_);
  for (long k = 0; k < q; ++k)
    for (int j = 0; j < f_; ++j) top[k * f_ + j] = prod[(n - 1 - k) * f_ + j];
  Poly qrev = mul_poly(top.data(), q, einv_.data(), q);
  qrev.resize(q * f_);
  Poly quo(q * f_);
  for (long k = 0; k < q; ++k)
    for (int j = 0; j < f_; ++j) quo[k * f_ + j] = qrev[(q - 1 - k) * f_ + j];
  Poly qe = mul_poly(quo.data(), q, E_.data(), e_);
  Poly out(e_ * f_);
  for (long i = 0; i < e_ * f_; ++i) {
    out[i] = prod[i] - qe[i];
    mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), mod_.get_mpz_t());
  }
  return out;
}

void FlatRing::normalize(FlatValue& x) const {
  if (x.c.empty()) {
    x.sh = 0;
    x.vy = 0;
    return;
  }
  x.prec = std::min(x.prec, e_ * (x.sh + K_));
  for (;;) {
    bool nonzero = false, all_div = true;
    for (const auto& c : x.c) {
      if (c == 0) continue;
      nonzero = true;
      if (!mpz_divisible_ui_p(c.get_mpz_t(), p_)) {
        all_div = false;
        break;
      }
    }
    if (!nonzero) {
      x.c.clear();
      x.sh = 0;
      x.vy = 0;
      return;
    }
    if (!all_div) break;
    for (auto& c : x.c) mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), p_);
    ++x.sh;
  }
  x.vy = 0;
  for (long i = 0; i < e_; ++i) {
    bool unit = false;
    for (int j = 0; j < f_ && !unit; ++j) unit = !mpz_divisible_ui_p(x.c[i * f_ + j].get_mpz_t(), p_);
    if (unit) {
      x.vy = i;
      break;
    }
  }
  if (e_ * x.sh + x.vy >= x.prec) {
    x.c.clear();
    x.sh = 0;
    x.vy = 0;
  }
}

FlatValue FlatRing::zero(long prec) const {
  FlatValue z;
  z.prec = prec;
  return z;
}

FlatValue FlatRing::one() const {
  FlatValue x;
  x.c.assign(e_ * f_, 0);
  x.c[0] = 1;
  normalize(x);
  return x;
}

FlatValue FlatRing::lift(const ResidueField::Elem& r) const {
  FlatValue x;
  x.c.assign(e_ * f_, 0);
  for (int j = 0; j < f_ && j < static_cast<int>(r.size()); ++j) x.c[j] = r[j];
  normalize(x);
  return x;
}

FlatValue FlatRing::uniformizer() const { return pi_; }

FlatValue FlatRing::from_scalar(const PadicScalar& s) const {
  Vec v(e_ * f_, PadicScalar::exact_zero(p_));
  v[0] = s;
  return from_vec(v);
}

FlatValue FlatRing::from_vec(const Vec& v) const {
  if (static_cast<long>(v.size()) != e_ * f_) throw DomainError("flat coefficient vector has the wrong length");
  FlatValue x;
  long sh = kInfiniteValuation;
  for (long k = 0; k < e_ * f_; ++k) {
    const PadicScalar& s = v[k];
    const long i = k / f_;
    const long a = s.absolute_precision();
    if (!(s.is_exact_zero())) x.prec = std::min(x.prec, sat_add(e_ * a, i));
    if (!s.is_zero()) sh = std::min(sh, s.valuation());
  }
  if (sh >= kInfiniteValuation) {
    x.c.clear();
    return x;
  }
  x.sh = sh;
  x.c.assign(e_ * f_, 0);
  for (long k = 0; k < e_ * f_; ++k) {
    const PadicScalar& s = v[k];
    if (s.is_zero()) continue;
    const long d = s.valuation() - sh;
    if (d >= K_) continue;
    mpz_class u = s.unit() * prime_power(p_, d);
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod_.get_mpz_t());
    x.c[k] = u;
  }
  normalize(x);
  return x;
}

Vec FlatRing::to_vec(const FlatValue& x) const {
  Vec out(e_ * f_);
  for (long k = 0; k < e_ * f_; ++k) {
    const long i = k / f_;
    const bool exact = x.prec >= kInfiniteValuation;
    const long a = exact ? kInfiniteValuation : ceil_div(x.prec - i, e_);
    if (x.is_zero() || x.c[k] == 0) {
      out[k] = exact ? PadicScalar::exact_zero(p_) : PadicScalar::zero_to(p_, a);
      continue;
    }
    PadicScalar s = PadicScalar::from_integer(p_, x.c[k], K_).shifted(x.sh);
    out[k] = exact ? s : s.truncated(a);
  }
  return out;
}

ResidueField::Elem FlatRing::residue(const FlatValue& x) const {
  if (x.is_zero()) {
    if (x.prec <= 0) throw PrecisionError("residue undetermined at working precision");
    return residue_.zero();
  }
  const long v = valuation_bound(x);
  if (v < 0) throw DomainError("residue of a non-integral element");
  if (v > 0) return residue_.zero();
  ResidueField::Elem r(f_, 0);
  for (int j = 0; j < f_; ++j) r[j] = static_cast<long>(mpz_fdiv_ui(x.c[j].get_mpz_t(), p_));
  return r;
}

FlatValue FlatRing::add(const FlatValue& a, const FlatValue& b) const {
  if (a.is_zero() || b.is_zero()) {
    FlatValue r = a.is_zero() ? b : a;
    r.prec = std::min(a.prec, b.prec);
    normalize(r);
    return r;
  }
  FlatValue r;
  const long m = std::min(a.sh, b.sh);
  const long da = a.sh - m, db = b.sh - m;
  r.sh = m;
  r.prec = std::min(a.prec, b.prec);
  r.c.assign(e_ * f_, 0);
  for (long k = 0; k < e_ * f_; ++k) {
    mpz_class& t = r.c[k];
    if (da < K_) t = da == 0 ? a.c[k] : a.c[k] * prime_power(p_, da);
    if (db < K_) {
      if (db == 0)
        t += b.c[k];
      else
        mpz_addmul(t.get_mpz_t(), b.c[k].get_mpz_t(), prime_power(p_, db).get_mpz_t());
    }
    if (t >= mod_) mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mod_.get_mpz_t());
  }
  normalize(r);
  return r;
}

FlatValue FlatRing::neg(FlatValue a) const {
  for (auto& c : a.c)
    if (c != 0) c = mod_ - c;
  return a;
}

FlatValue FlatRing::mul(const FlatValue& a, const FlatValue& b) const {
  const long va = valuation_bound(a), vb = valuation_bound(b);
  FlatValue r;
  r.prec = std::min(sat_add(a.prec, vb), sat_add(b.prec, va));
  if (a.is_zero() || b.is_zero()) return r;
  r.sh = a.sh + b.sh;
  r.c = reduce(mul_poly(a.c.data(), e_, b.c.data(), e_));
  normalize(r);
  return r;
}

FlatValue FlatRing::inverse(const FlatValue& a) const {
  if (a.is_zero()) throw PrecisionError("inverse of an element that is zero to precision");
  const long va = valuation_bound(a);
  const long rel = a.prec >= kInfiniteValuation ? e_ * K_ : a.prec - va;
  ResidueField::Elem lead(f_, 0);
  for (int j = 0; j < f_; ++j) lead[j] = static_cast<long>(mpz_fdiv_ui(a.c[a.vy * f_ + j].get_mpz_t(), p_));
  ResidueField::Elem rho = residue_.inv(lead);
  FlatValue z;
  z.c.assign(e_ * f_, 0);
  if (a.vy == 0) {
    for (int j = 0; j < f_; ++j) z.c[j] = rho[j];
    z.sh = -a.sh;
  } else {
    // pi^{-vy} = p^{-1} pi^{e-vy} (pi^e/p)^{-1}
    rho = residue_.mul(rho, ures_inv_);
    for (int j = 0; j < f_; ++j) z.c[(e_ - a.vy) * f_ + j] = rho[j];
    z.sh = -a.sh - 1;
  }
  normalize(z);
  const FlatValue unit = one();
  for (long err = 1; err < rel; err *= 2) {
    FlatValue t = sub(unit, mul(a, z));
    if (t.is_zero() && t.prec >= rel) break;
    z = add(z, mul(z, t));
  }
  z.prec = std::min(z.prec, rel - va);
  normalize(z);
  return z;
}

FlatValue FlatRing::pow(const FlatValue& a, long k) const {
  if (k < 0) return pow(inverse(a), -k);
  FlatValue r = one(), b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return r;
}

FlatValue FlatRing::shift(const FlatValue& a, long k) const {
  if (k == 0) return a;
  return mul(a, k > 0 ? pow(pi_, k) : pow(pinv_, -k));
}

FlatValue FlatRing::substitute(const FlatValue& x, const FlatValue& img) const {
  if (f_ != 1) throw DomainError("substitution needs a totally ramified field");
  if (x.is_zero()) return x;
  FlatValue acc = zero();
  for (long i = e_; i-- > 0;) {
    acc = mul(acc, img);
    if (x.c[i] == 0) continue;
    FlatValue ci;
    ci.c.assign(e_, 0);
    ci.c[0] = x.c[i];
    normalize(ci);
    acc = add(acc, ci);
  }
  if (acc.is_zero()) {
    acc.prec = std::min(sat_add(acc.prec, e_ * x.sh), x.prec);
    return acc;
  }
  acc.sh += x.sh;
  acc.prec = std::min(sat_add(acc.prec, e_ * x.sh), x.prec);
  normalize(acc);
  return acc;
}

}  // namespace anabelkit::detail
