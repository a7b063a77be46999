#include "anabelkit/local_field.hpp"

#include <cmath>
#include <algorithm>
#include <numeric>
#include <sstream>

#include "anabelkit/detail/field_data.hpp"

namespace anabelkit {

using detail::FieldData;
using detail::FlatRing;
using detail::FlatValue;
using detail::Matrix;
using detail::Tower;
using detail::ValInfo;
using detail::Vec;

TowerStep TowerStep::cyclotomic(long order, std::string label) {
  TowerStep s;
  s.kind = Kind::Cyclotomic;
  s.n = order;
  s.label = std::move(label);
  return s;
}

TowerStep TowerStep::kummer(long degree, RationalPoly radicand, std::string label) {
  TowerStep s;
  s.kind = Kind::Kummer;
  s.n = degree;
  s.poly = std::move(radicand);
  s.label = std::move(label);
  return s;
}

TowerStep TowerStep::custom(RationalPoly poly, std::string label) {
  TowerStep s;
  s.kind = Kind::Custom;
  s.poly = std::move(poly);
  s.label = std::move(label);
  s.n = s.poly.degree_in(s.label);
  return s;
}

std::string TowerStep::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Cyclotomic:
      os << "cyclotomic " << n;
      break;
    case Kind::Kummer:
      os << "kummer " << n << " rad=" << poly.to_string();
      break;
    case Kind::Custom:
      os << "custom " << poly.to_string();
      break;
  }
  os << " name=" << label;
  return os.str();
}

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

long ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return std::labs(a);
  }
  long x1, y1;
  long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Polynomials over a tower level, coefficients low degree first.
using Poly = std::vector<Vec>;

class Builder {
 public:
  Builder(unsigned p, long work, long budget) : p_(p), work_(work), budget_(budget) {
    Vec mod;
    T_ = Tower(p, work, mod, ResidueField(p, {0, 1}));
  }

  void add(const TowerStep& step) {
    if (gens_.count(step.label)) throw DomainError("generator name '" + step.label + "' used twice");
    switch (step.kind) {
      case TowerStep::Kind::Cyclotomic:
        add_cyclotomic(step);
        break;
      case TowerStep::Kind::Kummer:
        add_kummer(step);
        break;
      case TowerStep::Kind::Custom:
        add_custom(step);
        break;
    }
    labels_.push_back(step.label);
  }

  std::shared_ptr<FieldData> finish(long precision, const std::vector<TowerStep>& steps) {
    auto d = std::make_shared<FieldData>();
    d->p = p_;
    d->precision = precision;
    d->work_precision = work_;
    d->steps = steps;
    d->nested = T_;
    d->ramified = ram_;
    d->unramified_base = unramified_;
    d->base_label = base_label_;
    d->labels = labels_;
    d->generators = gens_;
    return d;
  }

 private:
  int top() const { return T_.top(); }

  Vec constant(const mpq_class& q) const {
    if (q == 0) return T_.zero(top());
    return T_.scalar(top(), PadicScalar::from_rational(p_, q, work_));
  }

  Vec evaluate(const RationalPoly& f) const {
    const int L = top();
    Vec acc = T_.zero(L);
    for (const auto& [mono, c] : f.terms()) {
      Vec term = constant(c);
      for (const auto& [var, e] : mono) {
        auto it = gens_.find(var);
        if (it == gens_.end()) throw DomainError("unknown generator '" + var + "'");
        term = T_.mul(L, term, T_.pow(L, it->second, e));
      }
      T_.add_into(acc, term);
    }
    return acc;
  }

  void add_cyclotomic(const TowerStep& step) {
    long n = step.n, r = 0;
    while (n > 1 && n % p_ == 0) {
      n /= p_;
      ++r;
    }
    if (n != 1 || r < 1) throw DomainError("cyclotomic order must be a positive power of p");
    const long q = step.n / p_;
    if (top() == 0) {
      const long m = (p_ - 1) * q;
      Poly g(m, T_.zero(0));
      for (long i = 0; i < m; i += q) g[i] = T_.one(0);
      gens_[step.label] = internal_step(std::move(g), step.label, 1);
      return;
    }
    Poly g(p_ - 1, T_.one(top()));
    Vec y = internal_step(std::move(g), step.label, q);
    for (long j = 2, pw = q / p_; j <= r; ++j, pw /= p_) y = root_step(p_, y, step.label, pw);
    gens_[step.label] = y;
  }

  void add_kummer(const TowerStep& step) {
    if (step.n < 2) throw DomainError("Kummer degree must be at least 2");
    Vec a = evaluate(step.poly);
    if (T_.is_zero(top(), a)) throw DomainError("Kummer radicand is zero");
    long pw = step.n;
    for (long q : prime_factors(step.n)) {
      pw /= q;
      a = root_step(q, a, step.label, pw);
    }
    gens_[step.label] = a;
  }

  void add_custom(const TowerStep& step) {
    std::vector<RationalPoly> cs = step.poly.coefficients_in(step.label);
    const long m = static_cast<long>(cs.size()) - 1;
    if (m < 1) throw DomainError("custom step needs a polynomial of positive degree in " + step.label);
    std::vector<Vec> vals;
    for (const auto& c : cs) vals.push_back(evaluate(c));
    Vec lead_inv = T_.inverse(top(), vals.back());
    Poly g(m);
    for (long i = 0; i < m; ++i) g[i] = T_.mul(top(), vals[i], lead_inv);
    if (m == 1) {
      gens_[step.label] = T_.neg(g[0]);
      return;
    }
    gens_[step.label] = internal_step(std::move(g), step.label, 1);
  }

  // Adjoin a q-th root of a; returns the root in the new top level.
  Vec root_step(long q, const Vec& a, const std::string& label, long power) {
    Poly g(q, T_.zero(top()));
    g[0] = T_.neg(a);
    return internal_step(std::move(g), label, power);
  }

  // Relative algebra F[y]/(g) with g monic of degree m, elements length m.
  Poly amul(int F, const Poly& g, const Poly& a, const Poly& b) const {
    const size_t m = g.size();
    Poly c(2 * m - 1, T_.zero(F));
    for (size_t i = 0; i < m; ++i) {
      if (T_.is_exact_zero(a[i])) continue;
      for (size_t j = 0; j < m; ++j)
        if (!T_.is_exact_zero(b[j])) T_.add_into(c[i + j], T_.mul(F, a[i], b[j]));
    }
    for (size_t l = 2 * m - 2; l >= m; --l) {
      if (!T_.is_exact_zero(c[l]))
        for (size_t j = 0; j < m; ++j)
          if (!T_.is_exact_zero(g[j])) T_.sub_into(c[l - m + j], T_.mul(F, c[l], g[j]));
    }
    c.resize(m);
    return c;
  }

  Poly apow(int F, const Poly& g, Poly a, long k) const {
    Poly acc(g.size(), T_.zero(F));
    acc[0] = T_.one(F);
    while (k > 0) {
      if (k & 1) acc = amul(F, g, acc, a);
      k >>= 1;
      if (k > 0) a = amul(F, g, a, a);
    }
    return acc;
  }

  // G(y) = g(y + c) including the leading 1.
  Poly taylor_shift(int F, const Poly& g, const Vec& c) const {
    const size_t m = g.size();
    Poly full(g);
    full.push_back(T_.one(F));
    Poly G(1, full[m]);
    for (size_t i = m; i-- > 0;) {
      Poly next(G.size() + 1, T_.zero(F));
      for (size_t j = 0; j < G.size(); ++j) {
        T_.add_into(next[j + 1], G[j]);
        if (!T_.is_exact_zero(c)) T_.add_into(next[j], T_.mul(F, G[j], c));
      }
      T_.add_into(next[0], full[i]);
      G = std::move(next);
    }
    return G;
  }

  // Adjoins a root y of the monic g (g_0..g_{m-1}) over the current top and
  // returns y as an element of the new top.
  Vec internal_step(Poly g, const std::string& label, long power) {
    const int F = top();
    const long m = static_cast<long>(g.size());
    if (m == 1) return T_.neg(g[0]);
    const ResidueField& k = T_.residue_field();
    Vec c = T_.zero(F);
    for (long iter = 0;; ++iter) {
      if (iter >= budget_) throw PrecisionError("uniformizer search budget exhausted");
      Poly G = taylor_shift(F, g, c);
      ValInfo v0 = T_.valuation(F, G[0]);
      if (!v0.exact)
        throw DomainError("polynomial for '" + label + "' has a root in the base field (degree drop)");
      const long w = v0.v;
      for (long i = 1; i < m; ++i) {
        ValInfo vi = T_.valuation(F, G[i]);
        long need = w * (m - i);
        if (vi.v >= kInfiniteValuation) continue;
        if (m * vi.v < need) {
          if (vi.exact)
            throw DomainError("polynomial for '" + label + "' is reducible over the base (degree drop)");
          throw PrecisionError("Newton polygon undetermined at working precision");
        }
      }
      if (w < 0) throw DomainError("generator '" + label + "' is not integral over the base");
      if (std::gcd(w, m) == 1) return ramified(F, g, c, w, label, power);
      if (w % m != 0)
        throw DomainError("step for '" + label + "' splits into a ramified composite; use prime-degree steps");
      const long kk = w / m;
      std::vector<ResidueField::Elem> R(m + 1);
      for (long i = 0; i <= m; ++i) {
        Vec scaled = T_.shift_pi(F, G[i], -kk * (m - i));
        ValInfo vs = T_.valuation(F, scaled);
        R[i] = vs.v >= 1 ? k.zero() : T_.residue(F, scaled);
      }
      auto roots = k.roots(R);
      if (roots.size() == 1) {
        // Is R = (Y - r)^m ?
        std::vector<ResidueField::Elem> pw(1, k.one());
        for (long i = 0; i < m; ++i) {
          std::vector<ResidueField::Elem> nx(pw.size() + 1, k.zero());
          for (size_t j = 0; j < pw.size(); ++j) {
            nx[j + 1] = k.add(nx[j + 1], pw[j]);
            nx[j] = k.sub(nx[j], k.mul(pw[j], roots[0]));
          }
          pw = std::move(nx);
        }
        if (pw == R) {
          Vec step = T_.shift_pi(F, T_.lift(F, roots[0]), kk);
          T_.add_into(c, step);
          continue;
        }
      }
      if (roots.empty() && kk == 0 && F == 0 && T_.f() == 1) {
        FpPoly rp(m + 1);
        for (long i = 0; i <= m; ++i) rp[i] = R[i][0];
        if (fp_is_irreducible(rp, p_)) return unramified(G, c, label);
      }
      if (!roots.empty())
        throw DomainError("polynomial for '" + label + "' is reducible over the base (degree drop)");
      throw DomainError("step for '" + label +
                        "' has residue degree > 1 over a ramified base; only one unramified step, first in "
                        "the tower, is supported");
    }
  }

  Vec unramified(const Poly& G, const Vec& c, const std::string& label) {
    const long m = static_cast<long>(G.size()) - 1;
    Vec mod(m);
    FpPoly rp(m + 1);
    for (long i = 0; i < m; ++i) {
      mod[i] = G[i][0];
      rp[i] = static_cast<long>(G[i][0].residue());
    }
    rp[m] = 1;
    Tower nt(p_, work_, mod, ResidueField(p_, rp));
    for (auto& [name, val] : gens_) {
      Vec x = nt.zero(0);
      x[0] = val[0];
      val = x;
    }
    T_ = nt;
    unramified_ = true;
    base_label_ = label;
    Vec y = T_.zero(0);
    y[0] = c[0];
    y[1] = PadicScalar::from_integer(p_, 1, work_);
    return y;
  }

  Vec ramified(int F, const Poly& g, const Vec& c, long w, const std::string& label, long power) {
    const long m = static_cast<long>(g.size());
    long s, t;
    ext_gcd(w, m, s, t);
    s %= m;
    if (s <= 0) s += m;
    t = (1 - s * w) / m;
    Poly ymc(m, T_.zero(F));
    ymc[0] = T_.neg(c);
    ymc[1] = T_.one(F);
    Poly pi = apow(F, g, ymc, s);
    for (auto& x : pi) x = T_.shift_pi(F, x, t);
    // Columns pi^0 .. pi^{m-1}; right-hand sides -pi^m and y.
    std::vector<Poly> powers(m + 1);
    powers[0] = Poly(m, T_.zero(F));
    powers[0][0] = T_.one(F);
    for (long j = 1; j <= m; ++j) powers[j] = amul(F, g, powers[j - 1], pi);
    Matrix P(m, std::vector<Vec>(m));
    for (long i = 0; i < m; ++i)
      for (long j = 0; j < m; ++j) P[i][j] = powers[j][i];
    std::vector<Poly> rhs(2, Poly(m, T_.zero(F)));
    for (long i = 0; i < m; ++i) rhs[0][i] = T_.neg(powers[m][i]);
    rhs[1][1] = T_.one(F);
    auto sol = T_.solve(F, P, rhs);
    Poly h = sol[0];
    ValInfo v0 = T_.valuation(F, h[0]);
    if (!v0.exact || v0.v != 1) throw PrecisionError("relative Eisenstein certificate failed");
    for (long j = 1; j < m; ++j)
      if (T_.valuation(F, h[j]).v < 1) throw PrecisionError("relative Eisenstein certificate failed");
    T_.push_level(h);
    const int L = top();
    for (auto& [name, val] : gens_) val = T_.embed(F, L, val);
    detail::RamifiedStep rs;
    rs.m = static_cast<int>(m);
    rs.label = label;
    rs.power = power;
    rs.shift = c;
    rs.s = s;
    rs.t = t;
    rs.w = w;
    ram_.push_back(rs);
    return T_.assemble(L, sol[1]);
  }

  unsigned p_;
  long work_;
  long budget_;
  Tower T_;
  std::vector<detail::RamifiedStep> ram_;
  bool unramified_ = false;
  std::string base_label_;
  std::vector<std::string> labels_;
  std::map<std::string, Vec> gens_;
};

bool scalar_ok(const PadicScalar& s, long n) {
  if (s.is_exact_zero()) return true;
  if (s.is_zero()) return s.valuation_bound() >= n;
  return s.absolute_precision() >= n || s.relative_precision() >= n;
}

bool data_ok(const FieldData& d) {
  const long n = d.precision;
  auto vec_ok = [&](const Vec& v) {
    return std::all_of(v.begin(), v.end(), [&](const PadicScalar& s) { return scalar_ok(s, n); });
  };
  for (int L = 1; L <= d.nested.top(); ++L)
    for (const auto& h : d.nested.level(L).h)
      if (!vec_ok(h)) return false;
  for (const auto& [name, g] : d.generators)
    if (!vec_ok(g)) return false;
  return true;
}

}  // namespace

LocalField LocalField::build(unsigned p, const std::vector<TowerStep>& steps, long precision, long budget) {
  if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
  if (precision < 4) throw DomainError("precision must be at least 4");
  long guard = 16 + precision / 2;
  for (int attempt = 0;; ++attempt) {
    try {
      Builder b(p, precision + guard, budget);
      for (const auto& s : steps) b.add(s);
      auto d = b.finish(precision, steps);
      if (data_ok(*d)) return LocalField(d);
      if (attempt >= 4) throw PrecisionError("field data below requested precision after rebuilding");
    } catch (const PrecisionError&) {
      if (attempt >= 4) throw;
    }
    guard = 2 * guard + precision;
  }
}

unsigned LocalField::prime() const { return d_->p; }
long LocalField::precision() const { return d_->precision; }
long LocalField::degree() const { return d_->degree(); }
long LocalField::ramification_index() const { return d_->nested.ram(d_->top()); }
long LocalField::residue_degree() const { return d_->nested.f(); }
const std::vector<TowerStep>& LocalField::steps() const { return d_->steps; }
std::vector<std::string> LocalField::generator_labels() const { return d_->labels; }
const ResidueField& LocalField::residue_field() const { return d_->nested.residue_field(); }

FieldElement LocalField::zero() const { return FieldElement(d_, d_->flat().ring.zero()); }

FieldElement LocalField::one() const { return FieldElement(d_, d_->flat().ring.one()); }

FieldElement LocalField::from_scalar(const PadicScalar& c) const {
  return FieldElement(d_, d_->flat().ring.from_scalar(c));
}

FieldElement LocalField::from_integer(const mpz_class& n) const {
  return from_scalar(PadicScalar::from_integer(d_->p, n, d_->work_precision));
}

FieldElement LocalField::from_rational(const mpq_class& q) const {
  return from_scalar(PadicScalar::from_rational(d_->p, q, d_->work_precision));
}

FieldElement LocalField::generator(const std::string& label) const {
  const auto& fl = d_->flat();
  auto it = fl.generators.find(label);
  if (it == fl.generators.end()) throw DomainError("unknown generator '" + label + "'");
  return FieldElement(d_, it->second);
}

FieldElement LocalField::evaluate(const RationalPoly& f) const {
  std::map<std::string, FieldElement> gens;
  for (const auto& var : f.variables()) gens.emplace(var, generator(var));
  return evaluate_at(*this, f, gens);
}

FieldElement LocalField::evaluate(const std::string& expr) const { return evaluate(parse_expression(expr)); }

FieldElement LocalField::lift(const ResidueField::Elem& r) const {
  return FieldElement(d_, d_->flat().ring.lift(r));
}

FieldElement LocalField::uniformizer() const { return FieldElement(d_, d_->flat().ring.uniformizer()); }

std::vector<int> LocalField::internal_degrees() const {
  std::vector<int> out;
  for (const auto& s : d_->ramified) out.push_back(s.m);
  return out;
}

std::vector<long> LocalField::relative_differents() const {
  std::vector<long> out;
  const Tower& T = d_->nested;
  for (int L = 1; L <= T.top(); ++L) {
    const auto& lv = T.level(L);
    std::vector<Vec> blocks(lv.m);
    for (int j = 1; j <= lv.m; ++j) {
      Vec hj = j == lv.m ? T.one(L - 1) : lv.h[j];
      blocks[j - 1] = T.scale(hj, PadicScalar::from_integer(d_->p, j, d_->work_precision));
    }
    out.push_back(T.exact_valuation(L, T.assemble(L, blocks)));
  }
  return out;
}

namespace detail {

namespace {

Vec nested_to_flat(const FieldData& d, const FlatData& fd, const Vec& x) {
  if (fd.top == 0) return x;
  const Tower& nested = d.nested;
  const long e = static_cast<long>(fd.krylov.size());
  const int f = nested.f();
  std::vector<Vec> in(e), out(e, nested.zero(0));
  for (long i = 0; i < e; ++i) in[i] = Vec(x.begin() + i * f, x.begin() + (i + 1) * f);
  for (long i = 0; i < e; ++i)
    for (long j = 0; j < e; ++j)
      if (!nested.is_exact_zero(in[j]) && !nested.is_exact_zero(fd.krylov_inv[i][j]))
        nested.add_into(out[i], nested.mul(0, fd.krylov_inv[i][j], in[j]));
  return fd.tower.assemble(1, out);
}

mpz_class integer_of(const PadicScalar& s) { return s.is_zero() ? mpz_class(0) : s.lift_integer(); }

}  // namespace

const FlatData& FieldData::flat() const {
  std::call_once(flat_once, [this] {
    auto fd = std::make_unique<FlatData>();
    const int L = top();
    const long e = nested.ram(L);
    const int f = nested.f();
    Tower flat(p, work_precision, nested.base_modulus(), nested.residue_field());
    if (e > 1) {
      // Columns: base coordinates of pi^i in the nested basis.
      auto coords = [&](const Vec& x) {
        std::vector<Vec> out(e);
        for (long i = 0; i < e; ++i) out[i] = Vec(x.begin() + i * f, x.begin() + (i + 1) * f);
        return out;
      };
      std::vector<std::vector<Vec>> cols;
      Vec cur = nested.one(L);
      const Vec pi = nested.uniformizer(L);
      for (long i = 0; i <= e; ++i) {
        cols.push_back(coords(cur));
        if (i < e) cur = nested.mul(L, cur, pi);
      }
      Matrix K(e, std::vector<Vec>(e));
      for (long i = 0; i < e; ++i)
        for (long j = 0; j < e; ++j) K[i][j] = cols[j][i];
      std::vector<std::vector<Vec>> rhs(e + 1, std::vector<Vec>(e, nested.zero(0)));
      for (long j = 0; j < e; ++j) rhs[j][j] = nested.one(0);
      rhs[e] = cols[e];
      auto sol = nested.solve(0, K, rhs);
      Matrix Kinv(e, std::vector<Vec>(e));
      for (long i = 0; i < e; ++i)
        for (long j = 0; j < e; ++j) Kinv[i][j] = sol[j][i];
      std::vector<Vec> E(e);
      for (long i = 0; i < e; ++i) E[i] = nested.neg(sol[e][i]);
      flat.push_level(E);
      fd->krylov = std::move(K);
      fd->krylov_inv = std::move(Kinv);
      fd->eisenstein = std::move(E);
    }
    fd->top = flat.top();
    fd->tower = std::move(flat);
    // Integer model for fast arithmetic.
    long cap = work_precision;
    std::vector<mpz_class> g, E;
    for (const auto& c : nested.base_modulus()) {
      if (!c.is_exact_zero()) cap = std::min(cap, c.absolute_precision());
      g.push_back(integer_of(c));
    }
    if (e > 1) {
      for (const auto& Ei : fd->eisenstein)
        for (const auto& c : Ei) {
          if (!c.is_exact_zero()) cap = std::min(cap, c.absolute_precision());
          E.push_back(integer_of(c));
        }
    } else {
      E.assign(f, 0);
      E[0] = -static_cast<long>(p);
    }
    if (cap < 2) throw PrecisionError("flat model has no precision left");
    fd->ring = FlatRing(p, e, f, cap, std::move(g), std::move(E), nested.residue_field());
    for (const auto& [label, v] : generators)
      fd->generators[label] = fd->ring.from_vec(nested_to_flat(*this, *fd, v));
    flat_data = std::move(fd);
  });
  return *flat_data;
}

Vec FieldData::to_flat(const Vec& x) const { return nested_to_flat(*this, flat(), x); }

Vec FieldData::to_nested(const Vec& y) const {
  const FlatData& fd = flat();
  if (fd.top == 0) return y;
  const long e = static_cast<long>(fd.krylov.size());
  const int f = nested.f();
  std::vector<Vec> in(e), out(e, nested.zero(0));
  for (long i = 0; i < e; ++i) in[i] = Vec(y.begin() + i * f, y.begin() + (i + 1) * f);
  for (long i = 0; i < e; ++i)
    for (long j = 0; j < e; ++j)
      if (!nested.is_exact_zero(in[j]) && !nested.is_exact_zero(fd.krylov[i][j]))
        nested.add_into(out[i], nested.mul(0, fd.krylov[i][j], in[j]));
  Vec r;
  for (const auto& b : out) r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace detail

FieldElement::FieldElement(std::shared_ptr<const FieldData> d, const Vec& c) : d_(std::move(d)) {
  v_ = d_->flat().ring.from_vec(c);
}

FieldElement::FieldElement(std::shared_ptr<const FieldData> d, FlatValue v) : d_(std::move(d)), v_(std::move(v)) {}

LocalField FieldElement::field() const { return LocalField(d_); }

Vec FieldElement::coefficients() const { return d_->flat().ring.to_vec(v_); }

void FieldElement::check_same(const FieldElement& o) const {
  if (d_ != o.d_) throw DomainError("elements belong to different fields");
}

const FlatRing& FieldElement::ring() const { return d_->flat().ring; }

long FieldElement::valuation() const {
  if (v_.is_zero()) throw PrecisionError("valuation of an element that is zero to precision");
  return ring().valuation_bound(v_);
}

long FieldElement::valuation_bound() const { return ring().valuation_bound(v_); }

bool FieldElement::is_zero() const { return v_.is_zero(); }

long FieldElement::absolute_precision() const { return v_.prec; }

ResidueField::Elem FieldElement::residue() const { return ring().residue(v_); }

FieldElement FieldElement::operator-() const { return FieldElement(d_, ring().neg(v_)); }

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  v_ = ring().add(v_, o.v_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  v_ = ring().sub(v_, o.v_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  v_ = ring().mul(v_, o.v_);
  return *this;
}

FieldElement FieldElement::operator*(long k) const {
  const auto& R = ring();
  return FieldElement(d_, R.mul(v_, R.from_scalar(PadicScalar::from_integer(d_->p, k, d_->work_precision))));
}

FieldElement FieldElement::inverse() const { return FieldElement(d_, ring().inverse(v_)); }

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  check_same(o);
  v_ = ring().mul(v_, ring().inverse(o.v_));
  return *this;
}

FieldElement FieldElement::pow(long k) const { return FieldElement(d_, ring().pow(v_, k)); }

FieldElement FieldElement::shift(long k) const { return FieldElement(d_, ring().shift(v_, k)); }

std::string FieldElement::to_string() const {
  std::ostringstream os;
  const int f = ring().f();
  const long e = ring().e();
  bool first = true;
  if (!v_.is_zero()) {
    for (long i = 0; i < e; ++i) {
      for (int j = 0; j < f; ++j) {
        const mpz_class& c = v_.c[i * f + j];
        if (c == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.get_str();
        if (v_.sh != 0) os << "*" << d_->p << "^" << v_.sh;
        os << ")";
        if (j > 0) os << "*t^" << j;
        if (i > 0) os << "*pi^" << i;
      }
    }
  }
  if (first) os << "0";
  if (v_.prec < kInfiniteValuation) os << " + O(pi^" << v_.prec << ")";
  return os.str();
}

PadicScalar norm_to_qp(const FieldElement& x) {
  const FieldData& d = x.field().data();
  const Tower& T = d.nested;
  Vec cur = d.to_nested(x.coefficients());
  for (int L = T.top(); L >= 1; --L) {
    const int m = T.level(L).m;
    Matrix M(m, std::vector<Vec>(m));
    Vec col = cur;
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) M[i][j] = T.block(L, col, i);
      if (j + 1 < m) col = T.mul_pi(L, col);
    }
    cur = T.determinant(L - 1, M);
  }
  const int f = T.f();
  if (f == 1) return cur[0];
  Matrix M(f, std::vector<Vec>(f));
  Vec col = cur;
  Vec t = T.zero(0);
  t[1] = PadicScalar::from_integer(d.p, 1, d.work_precision);
  for (int j = 0; j < f; ++j) {
    for (int i = 0; i < f; ++i) M[i][j] = Vec{col[i]};
    if (j + 1 < f) col = T.mul(0, col, t);
  }
  // The determinant over Q_p: use a one-dimensional tower.
  Tower qp(d.p, d.work_precision, Vec{}, ResidueField(d.p, {0, 1}));
  return qp.determinant(0, M)[0];
}

long valuation_via_norm(const FieldElement& x) {
  const PadicScalar n = norm_to_qp(x);
  return n.valuation() / x.field().residue_degree();
}

long valuation(const FieldElement& x) { return x.valuation(); }

ResidueField::Elem residue(const FieldElement& x) { return x.residue(); }

FieldElement find_uniformizer(const LocalField& K) {
  std::vector<FieldElement> cands;
  std::vector<long> vals;
  auto consider = [&](const FieldElement& c) {
    if (c.is_zero()) return;
    long v = c.valuation();
    if (v == 0) return;
    cands.push_back(c);
    vals.push_back(v);
  };
  for (const auto& label : K.generator_labels()) {
    FieldElement g = K.generator(label);
    if (g.is_zero()) continue;
    if (g.valuation() != 0) {
      consider(g);
    } else {
      consider(K.lift(g.residue()) - g);
    }
  }
  consider(K.from_integer(K.prime()));
  // Bezout combination of the candidate valuations.
  if (!vals.empty()) {
    std::vector<long> coef(vals.size(), 0);
    long g = vals[0];
    coef[0] = 1;
    for (size_t i = 1; i < vals.size() && std::labs(g) != 1; ++i) {
      long a, b;
      long ng = ext_gcd(g, vals[i], a, b);
      for (size_t j = 0; j < i; ++j) coef[j] *= a;
      coef[i] = b;
      g = ng;
    }
    if (g == 1 || g == -1) {
      FieldElement u = K.one();
      for (size_t i = 0; i < cands.size(); ++i)
        if (coef[i] != 0) u *= cands[i].pow(coef[i] * g);
      if (u.valuation() == 1) return u;
    }
  }
  return K.uniformizer();
}

long different_valuation(const LocalField& K) {
  const auto rel = K.relative_differents();
  const auto& T = K.data().nested;
  long d = 0;
  for (int L = 1; L <= T.top(); ++L) d = rel[L - 1] + T.level(L).m * d;
  return d;
}

long discriminant_valuation(const LocalField& K) { return K.residue_degree() * different_valuation(K); }

std::vector<Vec> absolute_eisenstein_polynomial(const LocalField& K) { return K.data().flat().eisenstein; }

long different_via_absolute_polynomial(const LocalField& K) {
  const auto& fl = K.data().flat();
  if (fl.top == 0) return 0;
  const auto& T = fl.tower;
  const long e = static_cast<long>(fl.eisenstein.size());
  std::vector<Vec> blocks(e);
  for (long j = 1; j <= e; ++j) {
    Vec ej = j == e ? T.one(0) : fl.eisenstein[j];
    blocks[j - 1] = T.scale(ej, PadicScalar::from_integer(K.prime(), j, K.data().work_precision));
  }
  return T.exact_valuation(1, T.assemble(1, blocks));
}

FieldElement evaluate_at(const LocalField& K, const RationalPoly& f, const std::map<std::string, FieldElement>& values) {
  FieldElement acc = K.zero();
  for (const auto& [mono, c] : f.terms()) {
    FieldElement term = K.from_rational(c);
    for (const auto& [var, e] : mono) {
      auto it = values.find(var);
      if (it == values.end()) throw DomainError("no value for variable '" + var + "'");
      term *= it->second.pow(e);
    }
    acc += term;
  }
  return acc;
}

bool is_pth_power(const FieldElement& x) {
  const LocalField K = x.field();
  const long p = K.prime();
  const long e = K.ramification_index();
  const ResidueField& k = K.residue_field();
  const long root_exp = k.size() / p;  // y -> y^{q/p} inverts Frobenius
  if (x.is_zero()) throw PrecisionError("p-th power test of an element that is zero to precision");
  const long v = x.valuation();
  if (v % p != 0) return false;
  FieldElement b = x.shift(-v);
  b /= K.lift(k.pow(b.residue(), root_exp)).pow(p);
  const FieldElement one = K.one();
  // Principal units 1 + O(pi^w) with w > pe/(p-1) are p-th powers.
  for (;;) {
    const FieldElement t = b - one;
    if (t.is_zero()) return true;
    const long w = t.valuation();
    if (w * (p - 1) > p * e) return true;
    const auto alpha = t.shift(-w).residue();
    FieldElement corr;
    if (w * (p - 1) < p * e) {
      if (w % p != 0) return false;
      corr = K.lift(k.pow(alpha, root_exp)).shift(w / p);
    } else {
      // (1 + y pi^s)^p = 1 + (y^p + c y) pi^w + ..., c = res(p / pi^e)
      const auto c = K.from_integer(p).shift(-e).residue();
      std::vector<ResidueField::Elem> poly(p + 1, k.zero());
      poly[0] = k.neg(alpha);
      poly[1] = c;
      poly[p] = k.one();
      const auto roots = k.roots(poly);
      if (roots.empty()) return false;
      corr = K.lift(roots.front()).shift(w / p);
    }
    b /= (one + corr).pow(p);
  }
}

long different_bound(const LocalField& K) {
  return K.ramification_index() - 1 + K.degree() / K.residue_degree();
}

long viviani_disc(unsigned p, long r, RadicandClass variant) {
  if (!is_prime(p) || p == 2) throw DomainError("closed formula needs an odd prime");
  if (r < 1) throw DomainError("r must be at least 1");
  const mpz_class P = p;
  if (r == 1) {
    mpz_class v = variant == RadicandClass::P ? mpz_class(2 * P * (P - 1) + 1) : mpz_class(P * P - 2);
    return v.get_si();
  }
  mpz_class pr, p2r, p2r1, p2r3, pr1;
  mpz_pow_ui(pr.get_mpz_t(), P.get_mpz_t(), r);
  mpz_pow_ui(pr1.get_mpz_t(), P.get_mpz_t(), r - 1);
  mpz_pow_ui(p2r.get_mpz_t(), P.get_mpz_t(), 2 * r);
  mpz_pow_ui(p2r1.get_mpz_t(), P.get_mpz_t(), 2 * r - 1);
  mpz_pow_ui(p2r3.get_mpz_t(), P.get_mpz_t(), 2 * r - 3);
  mpq_class v;
  if (variant == RadicandClass::P) {
    v = mpq_class(r * p2r1 * (P - 1)) + mpq_class(P * (p2r - 1), P + 1) - mpq_class(P * (p2r3 + 1), P + 1);
  } else {
    v = mpq_class(pr * (r * pr - (r + 1) * pr1)) + mpq_class(2 * (p2r - 1), P + 1);
  }
  v.canonicalize();
  if (v.get_den() != 1) throw DomainError("closed formula is not integral");
  return v.get_num().get_si();
}

}  // namespace anabelkit

namespace anabelkit {

FieldElement field_log(const FieldElement& x) {
  if (x.is_zero()) throw DomainError("logarithm of zero");
  const LocalField K = x.field();
  const unsigned p = K.prime();
  const long e = K.ramification_index();
  const long q = K.residue_field().size();
  const long v = x.valuation();
  FieldElement u = x.pow(e) / K.from_integer(p).pow(v);
  u = u.pow(q - 1);
  // u is a principal unit; push it into the disc where the series converges.
  long k = 0;
  FieldElement y = u - K.one();
  const double need = static_cast<double>(e) / (p - 1);
  while (!y.is_zero() && y.valuation() <= need) {
    u = u.pow(p);
    y = u - K.one();
    ++k;
  }
  mpz_class denom = mpz_class(e) * (q - 1);
  for (long i = 0; i < k; ++i) denom *= p;
  if (y.is_zero()) return y / K.from_integer(denom);

  const long vy = y.valuation();
  const long target = y.absolute_precision();
  FieldElement sum = K.zero();
  FieldElement yn = y;
  for (long n = 1;; ++n) {
    long logn = 0;
    for (long t = n; t >= static_cast<long>(p); t /= p) ++logn;
    // n*vy - e*log_p(n) is increasing once n*vy*ln p > e.
    if (n > 1 && n * vy - e * logn >= target && n * vy * std::log(static_cast<double>(p)) > e) break;
    FieldElement term = yn / K.from_integer(n);
    if (n % 2 == 0)
      sum -= term;
    else
      sum += term;
    yn *= y;
  }
  return sum / K.from_integer(denom);
}

}  // namespace anabelkit
