#pragma once

#include <array>
#include <optional>
#include <string>

#include "anabelkit/expr.hpp"
#include "anabelkit/local_field.hpp"

namespace anabelkit {

// [a1,a2,a3,a4,a6] as polynomials in the tower generators (usually z).
struct CurveSpec {
  std::array<RationalPoly, 5> a;

  // "[0, 3, 0, 0, 9]" or "[0,-z^5+z^4-11,0,2*z-418,22]".
  static CurveSpec parse(const std::string& text);
  std::string to_string() const;
};

class WeierstrassModel {
 public:
  WeierstrassModel() = default;
  // Throws DomainError when the discriminant vanishes exactly, and
  // PrecisionError when it is zero to precision.
  WeierstrassModel(LocalField K, std::array<FieldElement, 5> a, std::optional<CurveSpec> source = std::nullopt);
  static WeierstrassModel over(const LocalField& K, const CurveSpec& spec);

  const LocalField& field() const { return K_; }
  const std::array<FieldElement, 5>& a() const { return a_; }
  const FieldElement& a1() const { return a_[0]; }
  const FieldElement& a2() const { return a_[1]; }
  const FieldElement& a3() const { return a_[2]; }
  const FieldElement& a4() const { return a_[3]; }
  const FieldElement& a6() const { return a_[4]; }
  const std::optional<CurveSpec>& source() const { return source_; }

  // (x, y) = (u^2 x' + r, u^3 y' + u^2 s x' + t).
  WeierstrassModel change_coordinates(const FieldElement& u, const FieldElement& r, const FieldElement& s,
                                      const FieldElement& t) const;
  // Same with u = pi^k, done with exact shifts.
  WeierstrassModel rescaled(long k) const;

 private:
  struct Unchecked {};
  WeierstrassModel(Unchecked, LocalField K, std::array<FieldElement, 5> a, std::optional<CurveSpec> source);

  LocalField K_;
  std::array<FieldElement, 5> a_;
  std::optional<CurveSpec> source_;
};

struct StandardInvariants {
  FieldElement b2, b4, b6, b8, c4, c6, disc, j;
};
StandardInvariants weierstrass_invariants(const WeierstrassModel& E);

enum class ReductionClass { PotentiallyGood, PotentiallyMultiplicative };
std::string to_string(ReductionClass c);
ReductionClass reduction_class(const FieldElement& j);
ReductionClass reduction_class(const WeierstrassModel& E);

struct Kodaira {
  enum class Type { I0, In, II, III, IV, I0s, Ins, IVs, IIIs, IIs };
  Type type = Type::I0;
  long n = 0;  // for In and In*

  long components() const;
  std::string to_string() const;  // I0, I9, II, IV, I0*, I3*, IV*, ...
  bool operator==(const Kodaira& o) const { return type == o.type && n == o.n; }
};

struct ReductionData {
  long v_min_disc = 0;
  long conductor_exponent = 0;
  Kodaira kodaira;
  long tamagawa = 1;
  long components = 1;
  bool split = false;        // meaningful for In, n > 0
  long rescalings = 0;       // passes through step 11
  long precision_used = 0;   // working precision of the field that produced the answer

  // "[6, 4, IV, 1]"
  std::string bracket() const;
  // f = v(disc_min) - m + 1
  bool ogg_saito_holds() const { return conductor_exponent == v_min_disc - components + 1; }
  bool same_quadruple(const ReductionData& o) const;
};

// Tate's algorithm.  On PrecisionError the model is rebuilt once over the
// same tower at doubled precision (needs a CurveSpec source).
ReductionData tate_algorithm(const WeierstrassModel& E, long budget = 1000);

// v_K(q) = -v_K(j); DomainError unless v_K(j) < 0.
long tate_parameter_valuation(const WeierstrassModel& E);

// log_K(q) / v_K(q) with the Iwasawa branch; q must have positive valuation.
FieldElement l_invariant(const FieldElement& q);

struct AmphoricityReport {
  ReductionData over_k, over_l;
  bool same_disc = false, same_conductor = false, same_kodaira = false, same_tamagawa = false;

  bool all_equal() const { return same_disc && same_conductor && same_kodaira && same_tamagawa; }
};
AmphoricityReport weak_amphoricity_report(const CurveSpec& curve, const LocalField& K, const LocalField& L,
                                          long budget = 1000);

}  // namespace anabelkit
