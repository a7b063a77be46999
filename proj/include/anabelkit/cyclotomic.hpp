#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace anabelkit {

// Integer coefficients of the n-th cyclotomic polynomial, low degree first.
std::vector<mpz_class> cyclotomic_polynomial(long n);

// Exact element of Q(zeta_n), stored as a polynomial in zeta_n of degree < phi(n).
class CycloRational {
 public:
  CycloRational() = default;
  CycloRational(long n, const mpq_class& c);
  static CycloRational root_of_unity(long n, long k);  // zeta_n^k

  long order() const { return n_; }
  const std::vector<mpq_class>& coefficients() const { return c_; }
  bool is_rational() const;
  mpq_class rational_value() const;  // throws unless rational

  CycloRational& operator+=(const CycloRational& o);
  CycloRational& operator-=(const CycloRational& o);
  CycloRational& operator*=(const CycloRational& o);
  friend CycloRational operator+(CycloRational a, const CycloRational& b) { return a += b; }
  friend CycloRational operator-(CycloRational a, const CycloRational& b) { return a -= b; }
  friend CycloRational operator*(CycloRational a, const CycloRational& b) { return a *= b; }
  CycloRational operator*(const mpq_class& s) const;
  CycloRational conjugate() const;  // zeta -> zeta^{-1}
  // Same number written over zeta_m; n must divide m.
  CycloRational in_order(long m) const;
  bool operator==(const CycloRational& o) const;

  std::string to_string() const;

 private:
  void reduce();
  long n_ = 1;
  std::vector<mpq_class> c_;
};

}  // namespace anabelkit
