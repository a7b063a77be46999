#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace anabelkit {

// Polynomial with rational coefficients in named variables.
class RationalPoly {
 public:
  using Monomial = std::map<std::string, long>;

  RationalPoly() = default;
  explicit RationalPoly(const mpq_class& c);
  static RationalPoly variable(const std::string& name);

  const std::map<Monomial, mpq_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  mpq_class constant_term() const;
  std::set<std::string> variables() const;
  long degree_in(const std::string& var) const;
  // Coefficients of var^0 .. var^d, each a polynomial in the other variables.
  std::vector<RationalPoly> coefficients_in(const std::string& var) const;

  RationalPoly operator-() const;
  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a += -b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  RationalPoly pow(long k) const;
  bool operator==(const RationalPoly& o) const { return terms_ == o.terms_; }

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const mpq_class& c);
  std::map<Monomial, mpq_class> terms_;
};

// Parses expressions such as "-15*z^5 - 5z^4 + 3/2" or "(z-1)^2".
RationalPoly parse_expression(const std::string& text);

// Univariate polynomial over Q in `var`, coefficients low degree first.
std::vector<mpq_class> univariate_coefficients(const RationalPoly& f, const std::string& var);

}  // namespace anabelkit
