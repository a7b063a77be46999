#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace anabelkit {

// Dense polynomial over F_p, coefficients low degree first, values in [0, p).
using FpPoly = std::vector<long>;

void fp_trim(FpPoly& f);
FpPoly fp_mod(const FpPoly& a, const FpPoly& m, long p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_gcd(FpPoly a, FpPoly b, long p);
bool fp_is_irreducible(const FpPoly& f, long p);
long fp_inverse(long a, long p);

/*
 * Finite field F_q = F_p[t]/(g).  Elements are coordinate vectors of
 * length f.  q stays small here so roots are found by enumeration.
 */
class ResidueField {
 public:
  using Elem = std::vector<long>;

  ResidueField() = default;
  ResidueField(long p, FpPoly modulus);

  long characteristic() const { return p_; }
  int degree() const { return f_; }
  long size() const { return q_; }
  const FpPoly& modulus() const { return mod_; }

  Elem zero() const { return Elem(f_, 0); }
  Elem one() const;
  Elem from_int(long a) const;
  Elem element(long index) const;  // index in [0, q)
  long index(const Elem& x) const;
  bool is_zero(const Elem& x) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(Elem a, long k) const;

  // Some x with x^k = a, if one exists.
  bool root(const Elem& a, long k, Elem& out) const;
  // Roots of a polynomial with coefficients in F_q (low degree first).
  std::vector<Elem> roots(const std::vector<Elem>& poly) const;
  bool has_root(const std::vector<Elem>& poly) const { return !roots(poly).empty(); }
  Elem eval(const std::vector<Elem>& poly, const Elem& x) const;

  std::string to_string(const Elem& x) const;

 private:
  long p_ = 0;
  int f_ = 1;
  long q_ = 0;
  FpPoly mod_;
};

}  // namespace anabelkit
