#include "anabelkit/anabelomorphy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "anabelkit/detail/tower.hpp"

namespace anabelkit {

namespace {

long mod(long x, long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

long multiplicative_order(long a, long m) {
  long x = mod(a, m), k = 1;
  while (x != 1 % m) {
    x = mod(x * a, m);
    ++k;
  }
  return k;
}

// Generators of (Z/p^r)^*.
std::vector<long> unit_generators(long p, long r, long modulus) {
  if (p == 2) {
    if (r == 1) return {};
    if (r == 2) return {modulus - 1};
    return {modulus - 1, 5};
  }
  const long phi = modulus / p * (p - 1);
  for (long g = 2; g < modulus; ++g)
    if (std::gcd(g, modulus) == 1 && multiplicative_order(g, modulus) == phi) return {g};
  throw std::logic_error("no primitive root");
}

RationalPoly rename_to_z(const RationalPoly& f) {
  auto vars = f.variables();
  if (vars.empty() || (vars.size() == 1 && *vars.begin() == "z")) return f;
  if (vars.size() > 1) throw DomainError("radicand must be a polynomial in a single variable z");
  const std::string v = *vars.begin();
  RationalPoly out;
  for (const auto& [mono, c] : f.terms()) out += RationalPoly(c) * RationalPoly::variable("z").pow(mono.at(v));
  return out;
}

std::string k0_label(unsigned p, long modulus) {
  return "Q_" + std::to_string(p) + "(zeta_" + std::to_string(modulus) + ")";
}

bool rational_perfect_power(const mpq_class& q, unsigned long n) {
  mpz_class root;
  return mpz_root(root.get_mpz_t(), q.get_num().get_mpz_t(), n) != 0 &&
         mpz_root(root.get_mpz_t(), q.get_den().get_mpz_t(), n) != 0;
}

AnabelomorphismVerdict combine(const KummerFieldSpec& a, const KummerCertificate& ca, const KummerFieldSpec& b,
                               const KummerCertificate& cb) {
  AnabelomorphismVerdict v;
  v.degree1 = ca.degree;
  v.degree2 = cb.degree;
  v.k0_1 = ca.k0;
  v.k0_2 = cb.k0;
  if (ca.degree != cb.degree) {
    v.status = AnabStatus::NotAnabelomorphic;
    v.reason = "degrees differ: " + std::to_string(ca.degree) + " vs " + std::to_string(cb.degree);
  } else if (syntactically_isomorphic(a, b)) {
    v.status = AnabStatus::Anabelomorphic;
    v.reason = "isomorphic: radicands agree up to p^r-th powers";
  } else if (ca.k0 != "?" && cb.k0 != "?") {
    v.status = ca.k0 == cb.k0 ? AnabStatus::Anabelomorphic : AnabStatus::NotAnabelomorphic;
    v.reason = ca.k0 == cb.k0 ? "equal degree and equal maximal abelian subfield " + ca.k0
                              : "maximal abelian subfields differ";
  } else {
    v.status = AnabStatus::Undecided;
    v.reason = "maximal abelian subfield not certified (F(a^{1/p}) abelian over Q_p)";
  }
  return v;
}

}  // namespace

KummerFieldSpec KummerFieldSpec::parse(const std::string& text) {
  std::istringstream is(text);
  std::string tok;
  KummerFieldSpec s;
  bool have_p = false, have_rad = false;
  std::string rad;
  bool in_rad = false;
  while (is >> tok) {
    if (tok.rfind("p=", 0) == 0) {
      s.p = static_cast<unsigned>(std::stoul(tok.substr(2)));
      have_p = true;
      in_rad = false;
    } else if (tok.rfind("r=", 0) == 0) {
      s.r = std::stol(tok.substr(2));
      in_rad = false;
    } else if (tok.rfind("rad=", 0) == 0) {
      rad = tok.substr(4);
      have_rad = in_rad = true;
    } else if (in_rad) {
      rad += " " + tok;
    } else {
      throw DomainError("unrecognized token '" + tok + "' in field spec");
    }
  }
  if (!have_p) throw DomainError("field spec needs p=..");
  if (!is_prime(s.p)) throw DomainError("p must be prime");
  if (s.r < 1) throw DomainError("r must be at least 1");
  s.has_radicand = have_rad;
  if (!have_rad) return s;
  s.radicand = rename_to_z(parse_expression(rad));
  if (s.radicand.is_zero()) throw DomainError("radicand is zero");
  return s;
}

std::string KummerFieldSpec::to_string() const {
  std::string out = "p=" + std::to_string(p) + " r=" + std::to_string(r);
  return has_radicand ? out + " rad=" + radicand.to_string() : out;
}

long KummerFieldSpec::modulus() const {
  long m = 1;
  for (long i = 0; i < r; ++i) m *= p;
  return m;
}

long KummerFieldSpec::base_degree() const { return modulus() / p * (p - 1); }

std::vector<TowerStep> KummerFieldSpec::steps() const {
  if (!has_radicand) return {TowerStep::cyclotomic(modulus(), "z")};
  return {TowerStep::cyclotomic(modulus(), "z"), TowerStep::kummer(modulus(), radicand, "r")};
}

std::string to_string(AnabStatus s) {
  switch (s) {
    case AnabStatus::Anabelomorphic: return "ANABELOMORPHIC";
    case AnabStatus::NotAnabelomorphic: return "NOT_ANABELOMORPHIC";
    default: return "UNDECIDED";
  }
}

std::string to_string(Ramification r) { return r == Ramification::Peu ? "PEU" : "TRES"; }

KummerCertificate certify_kummer(const KummerFieldSpec& spec, long precision) {
  const long m = spec.modulus();
  KummerCertificate c;
  if (!spec.has_radicand) {
    // abelian, so its own maximal abelian subfield
    c.degree = spec.base_degree();
    c.k0 = k0_label(spec.p, m);
    return c;
  }
  LocalField F = LocalField::build(spec.p, {TowerStep::cyclotomic(m, "z")}, precision);
  const FieldElement z = F.generator("z");
  const FieldElement a = evaluate_at(F, spec.radicand, {{"z", z}});
  if (a.is_zero()) throw DomainError("radicand is zero to precision");
  if (is_pth_power(a))
    throw DomainError("degree drop: radicand is a p-th power in " + k0_label(spec.p, m));
  c.degree = spec.base_degree() * m;
  // F(a^{1/p}) is abelian over Q_p iff sigma_g(a) = a^{g mod p} mod p-th
  // powers for generators sigma_g of Gal(F/Q_p).
  for (long g : unit_generators(spec.p, spec.r, m)) {
    const FieldElement sa = evaluate_at(F, spec.radicand, {{"z", z.pow(g)}});
    if (!is_pth_power(sa * a.pow(-mod(g, spec.p)))) {
      c.nonabelian = true;
      break;
    }
  }
  c.k0 = c.nonabelian ? k0_label(spec.p, m) : "?";
  return c;
}

bool syntactically_isomorphic(const KummerFieldSpec& a, const KummerFieldSpec& b) {
  if (a.p != b.p || a.r != b.r) return false;
  if (!a.has_radicand || !b.has_radicand) return a.has_radicand == b.has_radicand;
  if (a.radicand == b.radicand) return true;
  if (!a.radicand.is_constant() || !b.radicand.is_constant()) return false;
  mpq_class q = b.radicand.constant_term() / a.radicand.constant_term();
  if (q < 0) {
    if (a.p == 2) return false;
    q = -q;
  }
  return rational_perfect_power(q, static_cast<unsigned long>(a.modulus()));
}

AnabelomorphismVerdict jarden_ritter(const KummerFieldSpec& a, const KummerFieldSpec& b, long precision) {
  if (a.p != b.p) throw DomainError("specs over different primes");
  return combine(a, certify_kummer(a, precision), b, certify_kummer(b, precision));
}

Partition partition_classes(const std::vector<KummerFieldSpec>& specs, long precision) {
  const size_t n = specs.size();
  for (const auto& s : specs)
    if (s.p != specs.front().p) throw DomainError("specs over different primes");
  std::vector<KummerCertificate> certs;
  for (const auto& s : specs) certs.push_back(certify_kummer(s, precision));
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Partition out;
  out.undecided.assign(n, false);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const auto v = combine(specs[i], certs[i], specs[j], certs[j]);
      if (v.status == AnabStatus::Anabelomorphic) {
        parent[find(i)] = find(j);
      } else if (v.status == AnabStatus::Undecided) {
        out.undecided[i] = out.undecided[j] = true;
      }
    }
  std::vector<std::vector<size_t>> groups(n);
  for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (auto& g : groups)
    if (!g.empty()) out.classes.push_back(std::move(g));
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

Ramification peu_tres_classify(const KummerFieldSpec& spec, long precision) {
  if (!spec.has_radicand) throw DomainError("peu/tres needs a Kummer radicand");
  LocalField F = LocalField::build(spec.p, {TowerStep::cyclotomic(spec.modulus(), "z")}, precision);
  const FieldElement a = evaluate_at(F, spec.radicand, {{"z", F.generator("z")}});
  return a.valuation() % static_cast<long>(spec.p) == 0 ? Ramification::Peu : Ramification::Tres;
}

long discriminant_valuation(const std::vector<PadicScalar>& f) {
  if (f.size() < 2) throw DomainError("polynomial must have positive degree");
  const long n = static_cast<long>(f.size()) - 1;
  if (n == 1) return 0;
  const unsigned p = f.back().prime();
  long prec = kDefaultPrecision;
  for (const auto& c : f)
    if (!c.is_exact_zero()) prec = std::max(prec, c.relative_precision());
  std::vector<PadicScalar> df(n);
  for (long i = 1; i <= n; ++i) df[i - 1] = f[i] * PadicScalar::from_integer(p, i, prec);
  const long N = 2 * n - 1;
  detail::Matrix M(N, std::vector<detail::Vec>(N, detail::Vec{PadicScalar::exact_zero(p)}));
  for (long row = 0; row < n - 1; ++row)
    for (long i = 0; i <= n; ++i) M[row][row + n - i] = detail::Vec{f[i]};
  for (long row = 0; row < n; ++row)
    for (long i = 0; i < n; ++i) M[n - 1 + row][row + n - 1 - i] = detail::Vec{df[i]};
  detail::Tower qp(p, prec, detail::Vec{}, ResidueField(p, {0, 1}));
  const PadicScalar det = qp.determinant(0, M)[0];
  if (det.is_zero()) throw PrecisionError("discriminant is zero to precision (not separable)");
  return det.valuation();
}

KrasnerResult krasner_rationalize(const std::vector<PadicScalar>& f, const mpz_class& height_bound) {
  if (f.size() < 2) throw DomainError("polynomial must have positive degree");
  const long n = static_cast<long>(f.size()) - 1;
  const unsigned p = f.back().prime();
  if (!equal_to_precision(f.back(), PadicScalar::from_integer(p, 1))) throw DomainError("polynomial is not monic");
  for (const auto& c : f)
    if (c.valuation_bound() < 0) throw DomainError("coefficients must be integral");
  KrasnerResult res;
  res.disc_valuation = discriminant_valuation(f);
  res.threshold = mpq_class(n * res.disc_valuation, 2);
  res.threshold.canonicalize();

  auto approximate = [&](long digits_cap) {
    std::vector<mpz_class> g(n + 1);
    g[n] = 1;
    long close = kInfiniteValuation;
    for (long i = 0; i < n; ++i) {
      const PadicScalar& c = f[i];
      if (c.is_exact_zero()) continue;
      const long a = std::min(c.absolute_precision(), digits_cap);
      const mpz_class& pa = prime_power(p, a);
      mpz_class v = c.is_zero() ? mpz_class(0) : c.lift_integer();
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pa.get_mpz_t());
      if (2 * v > pa) v -= pa;
      g[i] = v;
      const PadicScalar diff = PadicScalar::from_integer(p, v, c.relative_precision() + a + 1) - c;
      close = std::min(close, diff.is_zero() ? diff.valuation_bound() : diff.valuation());
    }
    return std::make_pair(g, close);
  };
  auto fits = [&](const std::vector<mpz_class>& g) {
    for (const auto& c : g)
      if (abs(c) > height_bound) return false;
    return true;
  };

  auto [g, close] = approximate(kInfiniteValuation);
  if (!(mpq_class(close) > res.threshold))
    throw DomainError("input precision does not reach the Krasner threshold");
  if (!fits(g)) {
    // Fewest digits that still clear the threshold.
    const long digits = static_cast<long>(mpz_class(res.threshold.get_num() / res.threshold.get_den()).get_si()) + 1;
    std::tie(g, close) = approximate(digits);
    if (!fits(g) || !(mpq_class(close) > res.threshold))
      throw DomainError("no rational approximant within the height bound at the Krasner threshold");
  }
  res.coefficients = g;
  res.closeness = close;
  std::vector<PadicScalar> gp;
  for (const auto& c : g) gp.push_back(PadicScalar::from_integer(p, c, kDefaultPrecision + res.disc_valuation + 1));
  res.disc_valuation_output = discriminant_valuation(gp);
  if (res.disc_valuation_output != res.disc_valuation)
    throw std::logic_error("Krasner certificate failed: discriminant valuations differ");
  if (!(mpq_class(res.closeness) > res.threshold)) throw std::logic_error("Krasner certificate below threshold");
  return res;
}

}  // namespace anabelkit
