#pragma once

// Independent reference computations used to derive golden values.  They
// use plain rationals and integers only, never the library's p-adic code.

#include <gmpxx.h>

#include <vector>

namespace oracle {

inline mpz_class pow_ui(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

inline long vp(mpz_class n, unsigned long p) {
  if (n == 0) return 1L << 40;
  long k = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    n /= p;
    ++k;
  }
  return k;
}

// sum_{k>=1} (-1)^{k+1} (x-1)^k / k as an exact rational, truncated once
// the terms are divisible by p^{N+2}, then reduced mod p^N.  Needs
// x = 1 mod p (x = 1 mod 4 for p = 2).
inline mpz_class log_series_mod(const mpz_class& x, unsigned long p, long N) {
  const mpz_class y = x - 1;
  const long vy = vp(y, p);
  mpq_class sum = 0;
  mpz_class yk = 1;
  for (long k = 1;; ++k) {
    yk *= y;
    long logk = 0;
    for (long t = k; t >= static_cast<long>(p); t /= static_cast<long>(p)) ++logk;
    if (k * vy - logk > N + 2 && k > 4) break;
    mpq_class term(yk, k);
    term.canonicalize();
    if (k % 2 == 0)
      sum -= term;
    else
      sum += term;
  }
  const mpz_class mod = pow_ui(p, N);
  mpz_class den_inv;
  mpz_class den = sum.get_den();
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = sum.get_num() * den_inv % mod;
  if (r < 0) r += mod;
  return r;
}

// Weierstrass invariants over Q, straight from the defining formulas.
struct RationalInvariants {
  mpq_class b2, b4, b6, b8, c4, c6, disc;
};

inline RationalInvariants invariants(const mpq_class& a1, const mpq_class& a2, const mpq_class& a3,
                                     const mpq_class& a4, const mpq_class& a6) {
  RationalInvariants r;
  r.b2 = a1 * a1 + 4 * a2;
  r.b4 = 2 * a4 + a1 * a3;
  r.b6 = a3 * a3 + 4 * a6;
  r.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  r.c4 = r.b2 * r.b2 - 24 * r.b4;
  r.c6 = -r.b2 * r.b2 * r.b2 + 36 * r.b2 * r.b4 - 216 * r.b6;
  r.disc = -r.b2 * r.b2 * r.b8 - 8 * r.b4 * r.b4 * r.b4 - 27 * r.b6 * r.b6 + 9 * r.b2 * r.b4 * r.b6;
  return r;
}

// v_p(disc(x^p - p)).  disc(x^n - a) = (-1)^.. n^n a^(n-1), so with n = p
// and a = p this is p + (p - 1).
inline long eisenstein_pure_root_disc(unsigned long p) { return static_cast<long>(2 * p - 1); }

}  // namespace oracle
