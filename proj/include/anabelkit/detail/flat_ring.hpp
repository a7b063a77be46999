#pragma once

#include <gmpxx.h>

#include <vector>

#include "anabelkit/detail/tower.hpp"
#include "anabelkit/padic.hpp"
#include "anabelkit/residue_field.hpp"

namespace anabelkit::detail {

/*
 * x = p^sh * sum_{i<e, j<f} c[i*f+j] t^j pi^i, known modulo pi^prec.
 * Coefficients are residues mod p^K.  After normalization some
 * coefficient is prime to p, vy = v(sum ...) lies in [0, e), and an
 * element with no significant digits has empty c (prec is then the
 * valuation bound).
 */
struct FlatValue {
  std::vector<mpz_class> c;
  long sh = 0;
  long prec = kInfiniteValuation;
  long vy = 0;

  bool is_zero() const { return c.empty(); }
};

/*
 * Arithmetic in Z_p[t]/(g)[pi]/(E) with E Eisenstein of degree e over the
 * unramified base.  Products go through one big-integer multiplication
 * (Kronecker substitution) and a Barrett reduction modulo E.
 */
class FlatRing {
 public:
  FlatRing() = default;
  // g: monic base modulus without its leading term (f entries); E: e
  // base elements (e*f integers), monic term omitted.
  FlatRing(unsigned p, long e, int f, long cap, std::vector<mpz_class> g, std::vector<mpz_class> E,
           ResidueField residue);

  unsigned p() const { return p_; }
  long e() const { return e_; }
  int f() const { return f_; }
  long cap() const { return K_; }
  const mpz_class& modulus() const { return mod_; }

  FlatValue zero(long prec = kInfiniteValuation) const;
  FlatValue one() const;
  FlatValue from_scalar(const PadicScalar& s) const;
  FlatValue from_vec(const Vec& v) const;
  Vec to_vec(const FlatValue& x) const;
  FlatValue uniformizer() const;
  FlatValue lift(const ResidueField::Elem& r) const;

  long valuation_bound(const FlatValue& x) const {
    return x.is_zero() ? x.prec : e_ * x.sh + x.vy;
  }
  ResidueField::Elem residue(const FlatValue& x) const;

  FlatValue add(const FlatValue& a, const FlatValue& b) const;
  FlatValue neg(FlatValue a) const;
  FlatValue sub(const FlatValue& a, const FlatValue& b) const { return add(a, neg(b)); }
  FlatValue mul(const FlatValue& a, const FlatValue& b) const;
  FlatValue inverse(const FlatValue& a) const;
  FlatValue pow(const FlatValue& a, long k) const;
  FlatValue shift(const FlatValue& a, long k) const;
  // sum c_i img^i p^sh for f = 1, i.e. the image of x under pi -> img.
  FlatValue substitute(const FlatValue& x, const FlatValue& img) const;

  void normalize(FlatValue& x) const;

 private:
  using Poly = std::vector<mpz_class>;
  Poly mul_poly(const mpz_class* a, long na, const mpz_class* b, long nb) const;
  Poly reduce(Poly prod) const;
  void reduce_base(mpz_class* c, int len) const;  // t-degree < 2f-1 down to < f, mod p^K

  unsigned p_ = 0;
  long e_ = 1;
  int f_ = 1;
  long K_ = 0;
  mpz_class mod_;
  Poly g_;
  Poly E_;      // e*f
  Poly einv_;   // (e-1)*f: inverse of reversed E mod X^{e-1}
  ResidueField::Elem ures_inv_;  // residue of (pi^e / p)^{-1}
  ResidueField residue_;
  FlatValue pi_, pinv_;
};

}  // namespace anabelkit::detail
