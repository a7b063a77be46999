#include "anabelkit/galois.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "anabelkit/detail/field_data.hpp"

namespace anabelkit {

using detail::Vec;
using detail::FlatValue;

namespace {

long mod(long x, long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

long inverse_mod(long a, long m) {
  if (m == 1) return 0;
  for (long x = 1; x < m; ++x)
    if (mod(a * x, m) == 1) return x;
  throw DomainError("not a unit");
}

long gcd_l(long a, long b) { return std::gcd(a, b); }

long multiplicative_order(long a, long m) {
  long x = mod(a, m), k = 1;
  while (x != 1 % m) {
    x = mod(x * a, m);
    ++k;
  }
  return k;
}

long euler_phi_prime_power(long p, long r) {
  long q = 1;
  for (long i = 1; i < r; ++i) q *= p;
  return q * (p - 1);
}

long primitive_root(long m, long phi) {
  for (long g = 1; g < std::max(m, 2L); ++g)
    if (gcd_l(g, m) == 1 && multiplicative_order(g, m) == phi) return g;
  throw DomainError("unit group is not cyclic");
}

}  // namespace

GaloisElement GaloisElement::compose(const GaloisElement& o) const {
  if (modulus != o.modulus) throw DomainError("automorphisms of different fields");
  return {mod(a * o.a, modulus), mod(a * o.b + b, modulus), modulus};
}

GaloisElement GaloisElement::inverse() const {
  long ai = modulus == 1 ? 0 : inverse_mod(a, modulus);
  return {ai, mod(-ai * b, modulus), modulus};
}

std::string GaloisElement::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

KummerShape galois_shape(const LocalField& K) {
  const auto& steps = K.steps();
  const unsigned p = K.prime();
  KummerShape sh;
  sh.p = p;
  const TowerStep* cyc = nullptr;
  const TowerStep* kum = nullptr;
  for (const auto& s : steps) {
    if (s.kind == TowerStep::Kind::Cyclotomic && !cyc)
      cyc = &s;
    else if (s.kind == TowerStep::Kind::Kummer && !kum)
      kum = &s;
    else
      throw DomainError("non-Galois tower: expected Q_p(zeta_{p^r}) or Q_p(zeta_{p^r}, a^{1/p^r})");
  }
  if (!cyc) throw DomainError("non-Galois tower: no cyclotomic step");
  long n = cyc->n, r = 0;
  while (n % p == 0) {
    n /= p;
    ++r;
  }
  sh.r = r;
  sh.modulus = cyc->n;
  sh.zeta_label = cyc->label;
  if (kum) {
    if (kum->n != cyc->n) throw DomainError("non-Galois tower: Kummer degree differs from the root-of-unity order");
    if (!kum->poly.is_constant()) throw DomainError("non-Galois tower: radicand must be rational");
    sh.rho_label = kum->label;
    sh.radicand = kum->poly.constant_term();
  }
  if (K.degree() != euler_phi_prime_power(p, r) * (kum ? sh.modulus : 1))
    throw DomainError("non-Galois tower: degree drop");
  return sh;
}

namespace {

struct Action {
  const detail::FieldData* d = nullptr;
  std::vector<FlatValue> sp;  // images of pi_k, k = 0..top
  std::vector<std::vector<FlatValue>> sp_pows;

  FlatValue apply_nested(int j, const Vec& x) const {
    const auto& R = d->flat().ring;
    if (j == 0) return R.from_scalar(x[0]);
    const auto& T = d->nested;
    const int m = T.level(j).m;
    FlatValue acc = R.zero();
    for (int i = 0; i < m; ++i) {
      Vec b = T.block(j, x, i);
      if (T.is_exact_zero(b)) continue;
      acc = R.add(acc, R.mul(apply_nested(j - 1, b), sp_pows[j][i]));
    }
    return acc;
  }
};

Action make_action(const LocalField& K, const KummerShape& sh, const GaloisElement& s) {
  const auto& d = K.data();
  const auto& fl = d.flat();
  const auto& R = fl.ring;
  Action act;
  act.d = &d;
  const FlatValue& zeta = fl.generators.at(sh.zeta_label);
  FlatValue sz = R.pow(zeta, s.a);
  FlatValue srho;
  if (!sh.rho_label.empty()) srho = R.mul(R.pow(zeta, s.b), fl.generators.at(sh.rho_label));
  const int L = d.top();
  act.sp.resize(L + 1);
  act.sp_pows.resize(L + 1);
  act.sp[0] = R.from_scalar(PadicScalar::from_integer(d.p, d.p, d.work_precision));
  for (int k = 1; k <= L; ++k) {
    const auto& rs = d.ramified[k - 1];
    const FlatValue& base = rs.label == sh.zeta_label ? sz : srho;
    FlatValue sy = R.pow(base, rs.power);
    FlatValue sc = act.apply_nested(k - 1, rs.shift);
    FlatValue t1 = R.pow(R.sub(sy, sc), rs.s);
    act.sp[k] = R.mul(t1, R.pow(act.sp[k - 1], rs.t));
    const int m = d.nested.level(k).m;
    act.sp_pows[k].resize(m);
    act.sp_pows[k][0] = R.one();
    for (int i = 1; i < m; ++i) act.sp_pows[k][i] = R.mul(act.sp_pows[k][i - 1], act.sp[k]);
  }
  return act;
}

FieldElement apply_with(const Action& act, const FieldElement& x) {
  const auto& fl = act.d->flat();
  if (fl.top == 0) return x;
  return FieldElement(x.field().shared(), fl.ring.substitute(x.flat_value(), act.sp.back()));
}

}  // namespace

FieldElement apply_automorphism(const GaloisElement& s, const FieldElement& x) {
  LocalField K = x.field();
  KummerShape sh = galois_shape(K);
  if (K.residue_degree() != 1) throw DomainError("non-Galois tower");
  if (s.modulus != sh.modulus) throw DomainError("automorphism does not belong to this field");
  return apply_with(make_action(K, sh, s), x);
}

std::vector<GaloisElement> galois_group(const LocalField& K) {
  KummerShape sh = galois_shape(K);
  const long m = sh.modulus;
  std::vector<GaloisElement> G;
  for (long a = 1; a <= m; ++a) {
    if (gcd_l(a, m) != 1) continue;
    for (long b = 0; b < (sh.rho_label.empty() ? 1 : m); ++b) G.push_back({mod(a, m), b, m});
  }
  std::sort(G.begin(), G.end());
  // Composition law against actual maps on generators.
  std::vector<GaloisElement> check = G;
  if (G.size() > 12) {
    check.clear();
    if (sh.p == 2 && sh.r > 2) {
      check.push_back({m - 1, 0, m});
      check.push_back({5, 0, m});
    } else {
      check.push_back({primitive_root(m, euler_phi_prime_power(sh.p, sh.r)), 0, m});
    }
    if (!sh.rho_label.empty()) check.push_back({1, 1, m});
  }
  std::vector<FieldElement> gens = {K.generator(sh.zeta_label)};
  if (!sh.rho_label.empty()) gens.push_back(K.generator(sh.rho_label));
  for (const auto& s : check)
    for (const auto& t : check) {
      auto as = make_action(K, sh, s), at = make_action(K, sh, t), ast = make_action(K, sh, s.compose(t));
      for (const auto& g : gens) {
        FieldElement lhs = apply_with(as, apply_with(at, g));
        FieldElement rhs = apply_with(ast, g);
        if (!(lhs - rhs).is_zero()) throw std::logic_error("Galois composition law violated");
      }
    }
  return G;
}

const std::vector<GaloisElement>& RamificationFiltration::G(long i) const {
  if (i < 0) return group;
  if (i >= static_cast<long>(subgroups.size())) return subgroups.back();
  return subgroups[i];
}

std::vector<long> RamificationFiltration::lower_breaks() const {
  std::vector<long> out;
  for (size_t i = 0; i + 1 < subgroups.size(); ++i)
    if (subgroups[i].size() != subgroups[i + 1].size()) out.push_back(static_cast<long>(i));
  return out;
}

std::vector<mpq_class> RamificationFiltration::upper_breaks() const {
  std::vector<mpq_class> out;
  const mpq_class g0 = static_cast<long>(subgroups[0].size());
  for (long b : lower_breaks()) {
    mpq_class phi = 0;
    for (long i = 1; i <= b; ++i) phi += mpq_class(static_cast<long>(G(i).size())) / g0;
    phi.canonicalize();
    out.push_back(phi);
  }
  return out;
}

long RamificationFiltration::hilbert_different() const {
  long d = 0;
  for (const auto& g : subgroups) d += static_cast<long>(g.size()) - 1;
  return d;
}

RamificationFiltration ramification_filtration(const LocalField& K) {
  return ramification_filtration(K, find_uniformizer(K));
}

RamificationFiltration ramification_filtration(const LocalField& K, const FieldElement& pi) {
  KummerShape sh = galois_shape(K);
  if (pi.valuation() != 1) throw DomainError("filtration needs a uniformizer");
  RamificationFiltration filt;
  filt.group = galois_group(K);
  long top = 0;
  for (const auto& s : filt.group) {
    if (s.is_identity()) continue;
    FieldElement diff = apply_with(make_action(K, sh, s), pi) - pi;
    if (diff.is_zero()) throw PrecisionError("sigma(pi) - pi is zero to working precision");
    long i = diff.valuation();
    filt.index[s] = i;
    top = std::max(top, i);
  }
  for (long i = 0; i <= top; ++i) {
    std::vector<GaloisElement> gi;
    for (const auto& s : filt.group)
      if (s.is_identity() || filt.index[s] >= i + 1) gi.push_back(s);
    filt.subgroups.push_back(gi);
  }
  if (filt.subgroups.empty()) filt.subgroups.push_back(filt.group);
  return filt;
}

std::vector<std::vector<GaloisElement>> conjugacy_classes(const std::vector<GaloisElement>& group) {
  std::vector<std::vector<GaloisElement>> out;
  std::set<GaloisElement> seen;
  for (const auto& g : group) {
    if (seen.count(g)) continue;
    std::set<GaloisElement> cls;
    for (const auto& h : group) cls.insert(h.compose(g).compose(h.inverse()));
    for (const auto& c : cls) seen.insert(c);
    out.emplace_back(cls.begin(), cls.end());
  }
  return out;
}

CycloRational Character::value(const GaloisElement& g) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (std::find(classes[i].begin(), classes[i].end(), g) != classes[i].end()) return values[i];
  throw DomainError("element outside the character's group");
}

std::vector<Character> character_table(unsigned p, long r) {
  if (r != 1) throw DomainError("character tables for r > 1 are out of scope");
  if (!is_prime(p)) throw DomainError("p must be prime");
  const long P = p;
  std::vector<GaloisElement> G;
  for (long a = 1; a < P; ++a)
    for (long b = 0; b < P; ++b) G.push_back({a, b, P});
  if (P == 2) G = {{1, 0, 2}, {1, 1, 2}};
  auto classes = conjugacy_classes(G);
  const long n = std::max(P - 1, 1L);
  const long g = P == 2 ? 1 : primitive_root(P, P - 1);
  std::vector<long> ind(P, 0);
  for (long k = 0, x = 1; k < P - 1; ++k, x = x * g % P) ind[x] = k;
  std::vector<Character> out;
  for (long k = 0; k < P - 1; ++k) {
    Character ch;
    ch.name = k == 0 ? "trivial" : "linear_" + std::to_string(k);
    ch.dimension = 1;
    ch.classes = classes;
    for (const auto& cls : classes) ch.values.push_back(CycloRational::root_of_unity(n, k * ind[cls[0].a]));
    out.push_back(ch);
  }
  Character psi;
  psi.name = "induced_" + std::to_string(P - 1);
  psi.dimension = P - 1;
  psi.classes = classes;
  for (const auto& cls : classes) {
    const auto& e = cls[0];
    long v = e.a != 1 ? 0 : (e.b == 0 ? P - 1 : -1);
    psi.values.push_back(CycloRational(n, v));
  }
  out.push_back(psi);
  return out;
}

std::vector<Character> character_table(const LocalField& K) {
  KummerShape sh = galois_shape(K);
  if (!sh.rho_label.empty()) return character_table(sh.p, sh.r);
  const long m = sh.modulus;
  const long phi = euler_phi_prime_power(sh.p, sh.r);
  if (sh.p == 2 && sh.r > 2) throw DomainError("unit group mod 2^r is not cyclic for r > 2");
  const long g = primitive_root(m, phi);
  std::vector<GaloisElement> G;
  std::map<long, long> ind;
  for (long k = 0, x = 1 % m; k < phi; ++k, x = mod(x * g, m)) {
    ind[x] = k;
    G.push_back({x, 0, m});
  }
  std::sort(G.begin(), G.end());
  auto classes = conjugacy_classes(G);
  std::vector<Character> out;
  for (long k = 0; k < phi; ++k) {
    Character ch;
    ch.name = k == 0 ? "trivial" : "linear_" + std::to_string(k);
    ch.classes = classes;
    for (const auto& cls : classes) ch.values.push_back(CycloRational::root_of_unity(phi, k * ind[cls[0].a]));
    out.push_back(ch);
  }
  return out;
}

bool orthogonality_holds(const std::vector<Character>& chars, const std::vector<GaloisElement>& group) {
  const mpq_class order = static_cast<long>(group.size());
  long dims = 0;
  for (size_t i = 0; i < chars.size(); ++i) {
    dims += chars[i].dimension * chars[i].dimension;
    for (size_t j = 0; j < chars.size(); ++j) {
      const long n = chars[i].values[0].order();
      CycloRational s(n, 0);
      for (const auto& g : group) s += chars[i].value(g) * chars[j].value(g).conjugate();
      s = s * (1 / order);
      if (!(s == CycloRational(n, i == j ? 1 : 0))) return false;
    }
  }
  return dims == static_cast<long>(group.size());
}

namespace {

CycloRational sum_over(const Character& chi, const std::vector<GaloisElement>& H) {
  CycloRational s(chi.values[0].order(), 0);
  for (const auto& g : H) s += chi.value(g);
  return s;
}

long integral(const CycloRational& x, const char* what) {
  if (!x.is_rational()) throw DomainError(std::string(what) + " is not rational");
  mpq_class v = x.rational_value();
  if (v.get_den() != 1) throw DomainError(std::string(what) + " is not integral: " + v.get_str());
  return v.get_num().get_si();
}

}  // namespace

long artin_conductor(const Character& chi, const RamificationFiltration& filt) {
  const long n = chi.values[0].order();
  const mpq_class g0 = static_cast<long>(filt.subgroups[0].size());
  CycloRational f(n, 0);
  for (const auto& gi : filt.subgroups) {
    const mpq_class size = static_cast<long>(gi.size());
    CycloRational avg = sum_over(chi, gi) * (1 / size);
    f += (CycloRational(n, chi.dimension) - avg) * (size / g0);
  }
  return integral(f, "Artin conductor");
}

long swan_conductor(const Character& chi, const RamificationFiltration& filt) {
  const long n = chi.values[0].order();
  const auto& g0 = filt.subgroups[0];
  CycloRational fixed = sum_over(chi, g0) * (1 / mpq_class(static_cast<long>(g0.size())));
  long tame = integral(CycloRational(n, chi.dimension) - fixed, "tame part");
  return artin_conductor(chi, filt) - tame;
}

ConductorReport conductor_discriminant_check(const LocalField& K) {
  KummerShape sh = galois_shape(K);
  auto chars = character_table(K);
  auto filt = ramification_filtration(K);
  ConductorReport rep;
  rep.lower_breaks = filt.lower_breaks();
  rep.upper_breaks = filt.upper_breaks();
  for (const auto& chi : chars) {
    ConductorEntry e{chi.name, chi.dimension, artin_conductor(chi, filt), swan_conductor(chi, filt)};
    rep.conductor_sum += e.dimension * e.artin;
    rep.characters.push_back(e);
  }
  rep.discriminant_valuation = discriminant_valuation(K);
  if (!sh.rho_label.empty() && sh.r == 1) {
    const long P = sh.p;
    const long n = P;
    CycloRational f(n, 0);
    long h0 = 0;
    for (const auto& gi : filt.subgroups) {
      std::vector<GaloisElement> hi;
      for (const auto& g : gi)
        if (g.a == 1) hi.push_back(g);
      if (h0 == 0) h0 = static_cast<long>(hi.size());
      CycloRational s(n, 0);
      for (const auto& g : hi) s += CycloRational::root_of_unity(n, g.b);
      const mpq_class size = static_cast<long>(hi.size());
      f += (CycloRational(n, 1) - s * (1 / size)) * (size / mpq_class(h0));
    }
    rep.base_character_conductor = integral(f, "inducing character conductor");
  }
  if (rep.conductor_sum != rep.discriminant_valuation)
    throw std::logic_error("conductor-discriminant identity violated: " + std::to_string(rep.conductor_sum) +
                           " vs " + std::to_string(rep.discriminant_valuation));
  return rep;
}

}  // namespace anabelkit
