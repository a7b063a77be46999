#include "anabelkit/elliptic.hpp"

#include <sstream>
#include <stdexcept>

namespace anabelkit {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

CurveSpec CurveSpec::parse(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw DomainError("curve must be written [a1,a2,a3,a4,a6]");
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : t) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() != 5) throw DomainError("curve needs exactly five coefficients, got " + std::to_string(parts.size()));
  CurveSpec c;
  for (size_t i = 0; i < 5; ++i) {
    std::string s = trim(parts[i]);
    if (s.empty()) throw DomainError("empty curve coefficient");
    c.a[i] = parse_expression(s);
  }
  return c;
}

std::string CurveSpec::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < 5; ++i) s += (i ? ", " : "") + a[i].to_string();
  return s + "]";
}

WeierstrassModel::WeierstrassModel(Unchecked, LocalField K, std::array<FieldElement, 5> a,
                                   std::optional<CurveSpec> source)
    : K_(std::move(K)), a_(std::move(a)), source_(std::move(source)) {}

WeierstrassModel::WeierstrassModel(LocalField K, std::array<FieldElement, 5> a, std::optional<CurveSpec> source)
    : WeierstrassModel(Unchecked{}, std::move(K), std::move(a), std::move(source)) {
  for (const auto& x : a_)
    if (!x.field().same_field(K_)) throw DomainError("Weierstrass coefficients live in different fields");
  FieldElement d = weierstrass_invariants(*this).disc;
  if (d.is_zero()) {
    if (d.valuation_bound() >= kInfiniteValuation) throw DomainError("singular curve: discriminant is zero");
    throw PrecisionError("discriminant is zero to precision");
  }
}

WeierstrassModel WeierstrassModel::over(const LocalField& K, const CurveSpec& spec) {
  std::array<FieldElement, 5> a;
  for (size_t i = 0; i < 5; ++i) a[i] = K.evaluate(spec.a[i]);
  return WeierstrassModel(K, a, spec);
}

WeierstrassModel WeierstrassModel::change_coordinates(const FieldElement& u, const FieldElement& r,
                                                      const FieldElement& s, const FieldElement& t) const {
  const auto& [a1, a2, a3, a4, a6] = a_;
  FieldElement ui = u.inverse();
  FieldElement ui2 = ui * ui, ui3 = ui2 * ui, ui4 = ui2 * ui2;
  FieldElement n1 = a1 + s * 2;
  FieldElement n2 = a2 - s * a1 + r * 3 - s * s;
  FieldElement n3 = a3 + r * a1 + t * 2;
  FieldElement n4 = a4 - s * a3 + r * a2 * 2 - (t + r * s) * a1 + r * r * 3 - s * t * 2;
  FieldElement n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
  return WeierstrassModel(Unchecked{}, K_, {n1 * ui, n2 * ui2, n3 * ui3, n4 * ui4, n6 * ui4 * ui2}, source_);
}

WeierstrassModel WeierstrassModel::rescaled(long k) const {
  return WeierstrassModel(Unchecked{}, K_,
                          {a_[0].shift(-k), a_[1].shift(-2 * k), a_[2].shift(-3 * k), a_[3].shift(-4 * k),
                           a_[4].shift(-6 * k)},
                          source_);
}

StandardInvariants weierstrass_invariants(const WeierstrassModel& E) {
  const auto& [a1, a2, a3, a4, a6] = E.a();
  StandardInvariants I;
  I.b2 = a1 * a1 + a2 * 4;
  I.b4 = a4 * 2 + a1 * a3;
  I.b6 = a3 * a3 + a6 * 4;
  I.b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  I.c4 = I.b2 * I.b2 - I.b4 * 24;
  I.c6 = -(I.b2 * I.b2 * I.b2) + I.b2 * I.b4 * 36 - I.b6 * 216;
  I.disc = -(I.b2 * I.b2 * I.b8) - I.b4 * I.b4 * I.b4 * 8 - I.b6 * I.b6 * 27 + I.b2 * I.b4 * I.b6 * 9;
  if (I.disc.is_zero()) {
    if (I.disc.valuation_bound() >= kInfiniteValuation) throw DomainError("singular curve: discriminant is zero");
    throw PrecisionError("discriminant is zero to precision");
  }
  I.j = I.c4 * I.c4 * I.c4 / I.disc;
  return I;
}

std::string to_string(ReductionClass c) {
  return c == ReductionClass::PotentiallyGood ? "POTENTIALLY_GOOD" : "POTENTIALLY_MULTIPLICATIVE";
}

ReductionClass reduction_class(const FieldElement& j) {
  if (j.is_zero()) {
    if (j.valuation_bound() < 0) throw PrecisionError("sign of v(j) undetermined");
    return ReductionClass::PotentiallyGood;
  }
  return j.valuation() >= 0 ? ReductionClass::PotentiallyGood : ReductionClass::PotentiallyMultiplicative;
}

ReductionClass reduction_class(const WeierstrassModel& E) { return reduction_class(weierstrass_invariants(E).j); }

long Kodaira::components() const {
  switch (type) {
    case Type::I0: return 1;
    case Type::In: return n;
    case Type::II: return 1;
    case Type::III: return 2;
    case Type::IV: return 3;
    case Type::I0s: return 5;
    case Type::Ins: return n + 5;
    case Type::IVs: return 7;
    case Type::IIIs: return 8;
    case Type::IIs: return 9;
  }
  return 0;
}

std::string Kodaira::to_string() const {
  switch (type) {
    case Type::I0: return "I0";
    case Type::In: return "I" + std::to_string(n);
    case Type::II: return "II";
    case Type::III: return "III";
    case Type::IV: return "IV";
    case Type::I0s: return "I0*";
    case Type::Ins: return "I" + std::to_string(n) + "*";
    case Type::IVs: return "IV*";
    case Type::IIIs: return "III*";
    case Type::IIs: return "II*";
  }
  return "?";
}

std::string ReductionData::bracket() const {
  std::ostringstream os;
  os << "[" << v_min_disc << ", " << conductor_exponent << ", " << kodaira.to_string() << ", " << tamagawa << "]";
  return os.str();
}

bool ReductionData::same_quadruple(const ReductionData& o) const {
  return v_min_disc == o.v_min_disc && conductor_exponent == o.conductor_exponent && kodaira == o.kodaira &&
         tamagawa == o.tamagawa;
}

namespace {

using Elem = ResidueField::Elem;

// v(x) >= n, refusing to guess when x is zero to a smaller bound.
bool divisible(const FieldElement& x, long n) {
  if (x.is_zero()) {
    if (x.valuation_bound() >= n) return true;
    throw PrecisionError("cannot decide divisibility by pi^" + std::to_string(n));
  }
  return x.valuation() >= n;
}

// Residue of x / pi^n.
Elem res(const FieldElement& x, long n = 0) { return (n == 0 ? x : x.shift(-n)).residue(); }

class Tate {
 public:
  explicit Tate(const LocalField& K) : K_(K), k_(K.residue_field()), p_(K.prime()), pi_(K.uniformizer()) {}

  ReductionData run(WeierstrassModel E, long budget);

 private:
  FieldElement lift(const Elem& x) const { return K_.lift(x); }
  FieldElement zero() const { return K_.zero(); }
  FieldElement one() const { return K_.one(); }
  WeierstrassModel translate(const WeierstrassModel& E, const FieldElement& r, const FieldElement& s,
                             const FieldElement& t) const {
    return E.change_coordinates(one(), r, s, t);
  }
  long count_roots(const std::vector<Elem>& poly) const { return static_cast<long>(k_.roots(poly).size()); }
  // Unique root of a polynomial with a repeated root over a perfect field.
  Elem repeated_root(const std::vector<Elem>& poly) const;
  std::pair<Elem, Elem> singular_point(const WeierstrassModel& E) const;
  void require(bool ok, const char* what) const {
    if (!ok) throw std::logic_error(std::string("Tate's algorithm invariant failed: ") + what);
  }

  LocalField K_;
  const ResidueField& k_;
  unsigned p_;
  FieldElement pi_;
};

Elem Tate::repeated_root(const std::vector<Elem>& poly) const {
  // Formal derivative.
  std::vector<Elem> d;
  for (size_t i = 1; i < poly.size(); ++i) {
    Elem c = k_.zero();
    for (size_t m = 0; m < i; ++m) c = k_.add(c, poly[i]);
    d.push_back(c);
  }
  for (const Elem& x : k_.roots(poly)) {
    if (k_.is_zero(k_.eval(d, x))) return x;
  }
  throw std::logic_error("expected a repeated root in the residue field");
}

std::pair<Elem, Elem> Tate::singular_point(const WeierstrassModel& E) const {
  Elem a1 = res(E.a1()), a2 = res(E.a2()), a3 = res(E.a3()), a4 = res(E.a4()), a6 = res(E.a6());
  const auto& k = k_;
  auto F = [&](const Elem& x, const Elem& y) {
    Elem lhs = k.add(k.mul(y, y), k.add(k.mul(k.mul(a1, x), y), k.mul(a3, y)));
    Elem rhs = k.add(k.mul(k.mul(x, x), x), k.add(k.mul(a2, k.mul(x, x)), k.add(k.mul(a4, x), a6)));
    return k.sub(lhs, rhs);
  };
  auto Fx = [&](const Elem& x, const Elem& y) {
    Elem three = k.from_int(3), two = k.from_int(2);
    return k.sub(k.mul(a1, y), k.add(k.mul(three, k.mul(x, x)), k.add(k.mul(two, k.mul(a2, x)), a4)));
  };
  auto Fy = [&](const Elem& x, const Elem& y) { return k.add(k.mul(k.from_int(2), y), k.add(k.mul(a1, x), a3)); };
  for (long i = 0; i < k.size(); ++i) {
    Elem x = k.element(i);
    std::vector<Elem> ys;
    if (p_ != 2) {
      ys.push_back(k.mul(k.neg(k.add(k.mul(a1, x), a3)), k.inv(k.from_int(2))));
    } else if (!k.is_zero(a1)) {
      ys.push_back(k.mul(k.add(k.mul(x, x), a4), k.inv(a1)));
    } else {
      Elem rhs = k.add(k.mul(k.mul(x, x), x), k.add(k.mul(a2, k.mul(x, x)), k.add(k.mul(a4, x), a6)));
      Elem y;
      if (k.root(rhs, 2, y)) ys.push_back(y);
    }
    for (const Elem& y : ys)
      if (k.is_zero(F(x, y)) && k.is_zero(Fx(x, y)) && k.is_zero(Fy(x, y))) return {x, y};
  }
  throw std::logic_error("reduction is singular but no singular point was found");
}

ReductionData Tate::run(WeierstrassModel E, long budget) {
  const auto& k = k_;
  ReductionData out;
  // Integral model.
  long scale = 0;
  for (int i = 0; i < 5; ++i) {
    const FieldElement& c = E.a()[i];
    if (c.is_zero()) {
      if (c.valuation_bound() < 0) throw PrecisionError("cannot decide integrality of the model");
      continue;
    }
    const long w = i == 4 ? 6 : i + 1;
    const long v = c.valuation();
    if (v < 0) scale = std::max(scale, (-v + w - 1) / w);
  }
  if (scale > 0) E = E.rescaled(-scale);

  auto finish = [&](Kodaira kod, long vD, long c) {
    out.kodaira = kod;
    out.v_min_disc = vD;
    out.components = kod.components();
    out.tamagawa = c;
    out.conductor_exponent = (kod.type == Kodaira::Type::I0) ? 0
                             : (kod.type == Kodaira::Type::In) ? 1
                                                               : vD - out.components + 1;
    return out;
  };
  using T = Kodaira::Type;

  for (long round = 0; round <= budget; ++round) {
    StandardInvariants I = weierstrass_invariants(E);
    const long vD = I.disc.valuation();
    // Step 1
    if (vD == 0) return finish({T::I0, 0}, 0, 1);

    // Step 2: singular point to (0,0).
    auto [x0, y0] = singular_point(E);
    E = translate(E, lift(x0), zero(), lift(y0));
    require(divisible(E.a3(), 1) && divisible(E.a4(), 1) && divisible(E.a6(), 1), "pi | a3, a4, a6");
    I = weierstrass_invariants(E);
    if (!divisible(I.b2, 1)) {
      // Multiplicative: split iff T^2 + a1 T - a2 has a root.
      const bool split = count_roots({k.neg(res(E.a2())), res(E.a1()), k.one()}) > 0;
      out.split = split;
      const long c = split ? vD : (vD % 2 == 0 ? 2 : 1);
      return finish({T::In, vD}, vD, c);
    }
    // Steps 3-5
    if (!divisible(E.a6(), 2)) return finish({T::II, 0}, vD, 1);
    if (!divisible(I.b8, 3)) return finish({T::III, 0}, vD, 2);
    if (!divisible(I.b6, 3)) {
      const long c = count_roots({k.neg(res(E.a6(), 2)), res(E.a3(), 1), k.one()}) > 0 ? 3 : 1;
      return finish({T::IV, 0}, vD, c);
    }

    // Step 6: pi | a1, a2; pi^2 | a3, a4; pi^3 | a6.
    {
      Elem r1 = res(E.a1()), r2 = res(E.a2());
      Elem s0;
      if (p_ != 2) {
        s0 = k.mul(k.neg(r1), k.inv(k.from_int(2)));
      } else {
        require(k.is_zero(r1), "a1 = 0 mod 2");
        require(k.root(r2, 2, s0), "a2 is a square");
      }
      E = translate(E, zero(), lift(s0), zero());
      Elem r3 = res(E.a3(), 1), r6 = res(E.a6(), 2);
      Elem t0;
      if (p_ != 2) {
        t0 = k.mul(k.neg(r3), k.inv(k.from_int(2)));
      } else {
        require(k.is_zero(r3), "a3/pi = 0 mod 2");
        require(k.root(r6, 2, t0), "a6/pi^2 is a square");
      }
      E = translate(E, zero(), zero(), pi_ * lift(t0));
    }
    require(divisible(E.a1(), 1) && divisible(E.a2(), 1) && divisible(E.a3(), 2) && divisible(E.a4(), 2) &&
                divisible(E.a6(), 3),
            "step 6 divisibilities");

    // P(T) = T^3 + b T^2 + c T + d
    Elem b = res(E.a2(), 1), c = res(E.a4(), 2), d = res(E.a6(), 3);
    std::vector<Elem> P = {d, c, b, k.one()};
    auto K = [&](long n) { return k.from_int(n); };
    Elem disc = k.add(k.sub(k.sub(k.mul(k.mul(b, b), k.mul(c, c)), k.mul(K(4), k.mul(k.mul(c, c), c))),
                            k.add(k.mul(K(4), k.mul(k.mul(k.mul(b, b), b), d)), k.mul(K(27), k.mul(d, d)))),
                      k.mul(K(18), k.mul(k.mul(b, c), d)));
    if (!k.is_zero(disc)) return finish({T::I0s, 0}, vD, 1 + count_roots(P));

    Elem X = k.sub(k.mul(b, b), k.mul(K(3), c));
    if (!k.is_zero(X)) {
      // Step 7: one double root, moved to 0.
      Elem alpha = repeated_root(P);
      E = translate(E, pi_ * lift(alpha), zero(), zero());
      long ix = 3, iy = 3;
      long cc = 0;
      for (long guard = 0;; ++guard) {
        if (guard > 4 * (vD + 4)) throw PrecisionError("I_n* subprocedure did not terminate");
        Elem a3t = res(E.a3(), iy - 1), a6t = res(E.a6(), ix + iy - 2);
        std::vector<Elem> qy = {k.neg(a6t), a3t, k.one()};
        if (!k.is_zero(k.add(k.mul(a3t, a3t), k.mul(K(4), a6t)))) {
          cc = count_roots(qy) > 0 ? 4 : 2;
          break;
        }
        Elem beta = repeated_root(qy);
        E = translate(E, zero(), zero(), pi_.pow(iy - 1) * lift(beta));
        ++iy;
        Elem a2t = res(E.a2(), 1), a4t = res(E.a4(), ix), a6u = res(E.a6(), ix + iy - 2);
        std::vector<Elem> qx = {a6u, a4t, a2t};
        if (!k.is_zero(k.sub(k.mul(a4t, a4t), k.mul(K(4), k.mul(a2t, a6u))))) {
          cc = count_roots(qx) > 0 ? 4 : 2;
          break;
        }
        Elem gamma = repeated_root(qx);
        E = translate(E, pi_.pow(ix - 1) * lift(gamma), zero(), zero());
        ++ix;
      }
      return finish({T::Ins, ix + iy - 5}, vD, cc);
    }

    // Step 8: triple root, moved to 0.
    Elem alpha = repeated_root(P);
    E = translate(E, pi_ * lift(alpha), zero(), zero());
    require(divisible(E.a2(), 2) && divisible(E.a4(), 3) && divisible(E.a6(), 4), "triple root translation");
    Elem a3t = res(E.a3(), 2), a6t = res(E.a6(), 4);
    std::vector<Elem> qy = {k.neg(a6t), a3t, k.one()};
    if (!k.is_zero(k.add(k.mul(a3t, a3t), k.mul(K(4), a6t))))
      return finish({T::IVs, 0}, vD, count_roots(qy) > 0 ? 3 : 1);
    // Step 9
    Elem beta = repeated_root(qy);
    E = translate(E, zero(), zero(), pi_.pow(2) * lift(beta));
    require(divisible(E.a3(), 3) && divisible(E.a6(), 5), "step 9 divisibilities");
    if (!divisible(E.a4(), 4)) return finish({T::IIIs, 0}, vD, 2);
    // Step 10
    if (!divisible(E.a6(), 6)) return finish({T::IIs, 0}, vD, 1);
    // Step 11: not minimal.
    E = E.rescaled(1);
    ++out.rescalings;
  }
  throw DomainError("non-integral model after budgeted minimalization");
}

}  // namespace

ReductionData tate_algorithm(const WeierstrassModel& E, long budget) {
  try {
    ReductionData r = Tate(E.field()).run(E, budget);
    r.precision_used = E.field().precision();
    return r;
  } catch (const PrecisionError&) {
    if (!E.source()) throw;
  }
  const LocalField& K = E.field();
  LocalField K2 = LocalField::build(K.prime(), K.steps(), 2 * K.precision());
  WeierstrassModel E2 = WeierstrassModel::over(K2, *E.source());
  ReductionData r = Tate(K2).run(E2, budget);
  r.precision_used = K2.precision();
  return r;
}

long tate_parameter_valuation(const WeierstrassModel& E) {
  FieldElement j = weierstrass_invariants(E).j;
  if (reduction_class(j) != ReductionClass::PotentiallyMultiplicative)
    throw DomainError("Tate parameter needs v(j) < 0");
  return -j.valuation();
}

FieldElement l_invariant(const FieldElement& q) {
  if (q.is_zero()) throw DomainError("Tate parameter is zero");
  const long v = q.valuation();
  if (v <= 0) throw DomainError("Tate parameter must have positive valuation");
  return field_log(q) / q.field().from_integer(v);
}

AmphoricityReport weak_amphoricity_report(const CurveSpec& curve, const LocalField& K, const LocalField& L,
                                          long budget) {
  AmphoricityReport rep;
  rep.over_k = tate_algorithm(WeierstrassModel::over(K, curve), budget);
  rep.over_l = tate_algorithm(WeierstrassModel::over(L, curve), budget);
  rep.same_disc = rep.over_k.v_min_disc == rep.over_l.v_min_disc;
  rep.same_conductor = rep.over_k.conductor_exponent == rep.over_l.conductor_exponent;
  rep.same_kodaira = rep.over_k.kodaira == rep.over_l.kodaira;
  rep.same_tamagawa = rep.over_k.tamagawa == rep.over_l.tamagawa;
  return rep;
}

}  // namespace anabelkit
