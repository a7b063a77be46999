#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "anabelkit/detail/flat_ring.hpp"
#include "anabelkit/detail/tower.hpp"
#include "anabelkit/expr.hpp"
#include "anabelkit/padic.hpp"
#include "anabelkit/residue_field.hpp"

namespace anabelkit {

// One user-level step of a tower over Q_p.
struct TowerStep {
  enum class Kind { Cyclotomic, Kummer, Custom };

  Kind kind = Kind::Custom;
  long n = 0;          // order p^r of the root of unity, or Kummer degree
  RationalPoly poly;   // radicand, or the defining polynomial of a custom step
  std::string label;   // name of the adjoined generator

  static TowerStep cyclotomic(long order, std::string label = "z");
  static TowerStep kummer(long degree, RationalPoly radicand, std::string label = "r");
  static TowerStep custom(RationalPoly poly, std::string label = "x");

  std::string to_string() const;
};

/*
 * Text form of a tower.  Either the short form "p=3 r=2 rad=3" (cyclotomic
 * p^r named z, then the p^r-th root of rad named r), or one step per line
 * (';' also separates):
 *   p=2
 *   cyclotomic 16 name=z
 *   kummer 2 rad=z^2-1 name=u
 *   custom x^3-3*x-1 name=x
 */
struct FieldSpec {
  unsigned p = 0;
  std::vector<TowerStep> steps;

  static FieldSpec parse(const std::string& text);
  std::string to_string() const;  // line form, round-trips through parse
};

namespace detail {
struct FieldData;
}

class FieldElement;

/*
 * Finite extension K/Q_p given as a tower.  Internally every step is
 * refined into prime-degree relative Eisenstein extensions over an
 * unramified base, so valuations are read off coefficients exactly.
 * Immutable once built; copies share the same data.
 */
class LocalField {
 public:
  LocalField() = default;
  static LocalField build(unsigned p, const std::vector<TowerStep>& steps,
                          long precision = kDefaultPrecision, long budget = 10000);
  static LocalField build(const FieldSpec& spec, long precision = kDefaultPrecision, long budget = 10000) {
    return build(spec.p, spec.steps, precision, budget);
  }

  unsigned prime() const;
  long precision() const;
  long degree() const;
  long ramification_index() const;
  long residue_degree() const;
  const std::vector<TowerStep>& steps() const;
  std::vector<std::string> generator_labels() const;
  const ResidueField& residue_field() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(const mpz_class& n) const;
  FieldElement from_rational(const mpq_class& q) const;
  FieldElement from_scalar(const PadicScalar& c) const;
  FieldElement generator(const std::string& label) const;
  FieldElement evaluate(const RationalPoly& expr) const;
  FieldElement evaluate(const std::string& expr) const;
  FieldElement lift(const ResidueField::Elem& r) const;
  // Uniformizer produced by the construction.
  FieldElement uniformizer() const;

  // Relative differents of the internal prime-degree steps, each in the
  // normalized valuation of its own level.
  std::vector<long> relative_differents() const;
  std::vector<int> internal_degrees() const;

  const detail::FieldData& data() const { return *d_; }
  std::shared_ptr<const detail::FieldData> shared() const { return d_; }
  bool same_field(const LocalField& o) const { return d_ == o.d_; }

 private:
  explicit LocalField(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  friend class FieldElement;
  std::shared_ptr<const detail::FieldData> d_;
};

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::shared_ptr<const detail::FieldData> d, const detail::Vec& c);
  FieldElement(std::shared_ptr<const detail::FieldData> d, detail::FlatValue v);

  LocalField field() const;
  // Coefficients over the unramified base in the basis 1, pi, ..., pi^{e-1}.
  detail::Vec coefficients() const;
  const detail::FlatValue& flat_value() const { return v_; }

  // Normalized valuation (v(uniformizer) = 1); throws if zero to precision.
  long valuation() const;
  long valuation_bound() const;
  bool is_zero() const;
  long absolute_precision() const;
  // Residue class of an integral element.
  ResidueField::Elem residue() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator*(long k) const;
  FieldElement inverse() const;
  FieldElement pow(long k) const;
  // Multiply by uniformizer^k.
  FieldElement shift(long k) const;

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;
  const detail::FlatRing& ring() const;
  std::shared_ptr<const detail::FieldData> d_;
  detail::FlatValue v_;
};

// Norm N_{K/Q_p}, computed level by level as resultants of the defining
// polynomials with a representative.
PadicScalar norm_to_qp(const FieldElement& x);
// v_K(x) recomputed from the norm: v_p(N(x)) / f.
long valuation_via_norm(const FieldElement& x);
long valuation(const FieldElement& x);
ResidueField::Elem residue(const FieldElement& x);

// Uniformizer, preferring a monomial in the generators and their
// differences from residue lifts; falls back to the construction's own.
FieldElement find_uniformizer(const LocalField& K);

long different_valuation(const LocalField& K);
long discriminant_valuation(const LocalField& K);
// Different recomputed from the absolute Eisenstein polynomial of the
// top uniformizer: v_K(E'(pi)).
long different_via_absolute_polynomial(const LocalField& K);
// Coefficients of the absolute Eisenstein polynomial over the unramified
// base (each a base element), low degree first, monic term omitted.
std::vector<detail::Vec> absolute_eisenstein_polynomial(const LocalField& K);

// f evaluated with the given values for its variables.
FieldElement evaluate_at(const LocalField& K, const RationalPoly& f, const std::map<std::string, FieldElement>& values);

// Whether a nonzero x is a p-th power in its field (decided to working
// precision by successive approximation of a root of X^p - x).
bool is_pth_power(const FieldElement& x);

// Iwasawa logarithm on K^* (log p = 0).  x^e / p^{v(x)} is a unit u and
// log x = log(u^{q-1}) / (e (q-1)), the last log by the series.
FieldElement field_log(const FieldElement& x);

// e - 1 + n/f
long different_bound(const LocalField& K);

enum class RadicandClass { P, OnePlusP };
// Closed formula for v_p of the discriminant of Q_p(zeta_{p^r}, a^{1/p^r}).
long viviani_disc(unsigned p, long r, RadicandClass variant);

}  // namespace anabelkit
