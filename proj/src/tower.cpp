#include "anabelkit/detail/tower.hpp"

#include <algorithm>

namespace anabelkit::detail {

namespace {

long clamp_inf(long v) { return v >= kInfiniteValuation ? kInfiniteValuation : v; }

long scaled(long m, long v, long j) {
  if (v >= kInfiniteValuation) return kInfiniteValuation;
  return clamp_inf(m * v + j);
}

}  // namespace

Tower::Tower(unsigned p, long precision, Vec base_modulus, ResidueField residue)
    : p_(p), prec_(precision), base_mod_(std::move(base_modulus)), residue_(std::move(residue)) {
  Level base;
  base.m = residue_.degree();
  base.e = 1;
  base.size = static_cast<size_t>(base.m);
  levels_.push_back(base);
}

void Tower::push_level(std::vector<Vec> h) {
  Level lv;
  lv.m = static_cast<int>(h.size());
  lv.e = levels_.back().e * lv.m;
  lv.size = levels_.back().size * lv.m;
  const int parent = top();
  Vec h0inv = inverse(parent, h[0]);
  lv.pinv.resize(lv.m);
  for (int j = 0; j + 1 < lv.m; ++j) lv.pinv[j] = neg(mul(parent, h[j + 1], h0inv));
  lv.pinv[lv.m - 1] = neg(h0inv);
  lv.h = std::move(h);
  levels_.push_back(std::move(lv));
}

Vec Tower::zero(int L) const { return Vec(size(L), PadicScalar::exact_zero(p_)); }

Vec Tower::scalar(int L, const PadicScalar& c) const {
  Vec r = zero(L);
  r[0] = c;
  return r;
}

Vec Tower::one(int L) const { return scalar(L, PadicScalar::from_integer(p_, 1, prec_)); }

Vec Tower::embed(int from, int to, const Vec& x) const {
  if (from == to) return x;
  Vec r = zero(to);
  std::copy(x.begin(), x.end(), r.begin());
  return r;
}

Vec Tower::uniformizer(int L) const {
  if (L == 0) return scalar(0, PadicScalar::from_integer(p_, p_, prec_));
  std::vector<Vec> blocks(level(L).m, zero(L - 1));
  blocks[1] = one(L - 1);
  return assemble(L, blocks);
}

Vec Tower::block(int L, const Vec& a, int j) const {
  const size_t s = size(L - 1);
  return Vec(a.begin() + j * s, a.begin() + (j + 1) * s);
}

Vec Tower::assemble(int L, const std::vector<Vec>& blocks) const {
  Vec r;
  r.reserve(size(L));
  for (const auto& b : blocks) r.insert(r.end(), b.begin(), b.end());
  return r;
}

Vec Tower::add(const Vec& a, const Vec& b) const {
  Vec r = a;
  add_into(r, b);
  return r;
}

Vec Tower::sub(const Vec& a, const Vec& b) const {
  Vec r = a;
  sub_into(r, b);
  return r;
}

Vec Tower::neg(const Vec& a) const {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

void Tower::add_into(Vec& acc, const Vec& x) const {
  for (size_t i = 0; i < acc.size(); ++i)
    if (!x[i].is_exact_zero()) acc[i] += x[i];
}

void Tower::sub_into(Vec& acc, const Vec& x) const {
  for (size_t i = 0; i < acc.size(); ++i)
    if (!x[i].is_exact_zero()) acc[i] -= x[i];
}

bool Tower::is_exact_zero(const Vec& a) const {
  for (const auto& c : a)
    if (!c.is_exact_zero()) return false;
  return true;
}

Vec Tower::scale(const Vec& a, const PadicScalar& c) const {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

Vec Tower::mul_base(const Vec& a, const Vec& b) const {
  const int f = this->f();
  if (f == 1) return Vec{a[0] * b[0]};
  Vec c(2 * f - 1, PadicScalar::exact_zero(p_));
  for (int i = 0; i < f; ++i) {
    if (a[i].is_exact_zero()) continue;
    for (int j = 0; j < f; ++j)
      if (!b[j].is_exact_zero()) c[i + j] += a[i] * b[j];
  }
  for (int l = 2 * f - 2; l >= f; --l) {
    if (c[l].is_exact_zero()) continue;
    for (int j = 0; j < f; ++j)
      if (!base_mod_[j].is_exact_zero()) c[l - f + j] -= c[l] * base_mod_[j];
  }
  c.resize(f);
  return c;
}

Vec Tower::mul(int L, const Vec& a, const Vec& b) const {
  if (L == 0) return mul_base(a, b);
  const Level& lv = level(L);
  const int m = lv.m;
  std::vector<Vec> ab(m), bb(m);
  std::vector<bool> az(m), bz(m);
  for (int j = 0; j < m; ++j) {
    ab[j] = block(L, a, j);
    bb[j] = block(L, b, j);
    az[j] = is_exact_zero(ab[j]);
    bz[j] = is_exact_zero(bb[j]);
  }
  std::vector<Vec> c(2 * m - 1, zero(L - 1));
  for (int i = 0; i < m; ++i) {
    if (az[i]) continue;
    for (int j = 0; j < m; ++j)
      if (!bz[j]) add_into(c[i + j], mul(L - 1, ab[i], bb[j]));
  }
  for (int l = 2 * m - 2; l >= m; --l) {
    if (is_exact_zero(c[l])) continue;
    for (int j = 0; j < m; ++j) sub_into(c[l - m + j], mul(L - 1, c[l], lv.h[j]));
  }
  c.resize(m);
  return assemble(L, c);
}

Vec Tower::mul_pi(int L, const Vec& a) const {
  if (L == 0) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].shifted(1);
    return r;
  }
  const Level& lv = level(L);
  const int m = lv.m;
  std::vector<Vec> c(m, zero(L - 1));
  for (int j = 0; j + 1 < m; ++j) c[j + 1] = block(L, a, j);
  Vec top_block = block(L, a, m - 1);
  if (!is_exact_zero(top_block))
    for (int j = 0; j < m; ++j) sub_into(c[j], mul(L - 1, top_block, lv.h[j]));
  return assemble(L, c);
}

Vec Tower::div_pi(int L, const Vec& a) const {
  if (L == 0) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].shifted(-1);
    return r;
  }
  const Level& lv = level(L);
  const int m = lv.m;
  std::vector<Vec> c(m, zero(L - 1));
  for (int j = 0; j + 1 < m; ++j) c[j] = block(L, a, j + 1);
  Vec b0 = block(L, a, 0);
  if (!is_exact_zero(b0))
    for (int j = 0; j < m; ++j) add_into(c[j], mul(L - 1, b0, lv.pinv[j]));
  return assemble(L, c);
}

Vec Tower::shift_pi(int L, Vec a, long k) const {
  if (k == 0) return a;
  if (L == 0) {
    for (auto& c : a) c = c.shifted(k);
    return a;
  }
  const long m = level(L).m;
  if (std::labs(k) <= 2 * m) {
    for (long i = 0; i < k; ++i) a = mul_pi(L, a);
    for (long i = 0; i < -k; ++i) a = div_pi(L, a);
    return a;
  }
  Vec base = k > 0 ? uniformizer(L) : assemble(L, level(L).pinv);
  long n = std::labs(k);
  Vec acc = one(L);
  while (n > 0) {
    if (n & 1) acc = mul(L, acc, base);
    n >>= 1;
    if (n > 0) base = mul(L, base, base);
  }
  return mul(L, a, acc);
}

ValInfo Tower::valuation(int L, const Vec& a) const {
  long ex = kInfiniteValuation, bd = kInfiniteValuation;
  if (L == 0) {
    for (const auto& c : a) {
      if (c.is_zero())
        bd = std::min(bd, clamp_inf(c.valuation_bound()));
      else
        ex = std::min(ex, c.valuation());
    }
  } else {
    const long m = level(L).m;
    for (int j = 0; j < m; ++j) {
      ValInfo vi = valuation(L - 1, block(L, a, j));
      long s = scaled(m, vi.v, j);
      if (vi.exact)
        ex = std::min(ex, s);
      else
        bd = std::min(bd, s);
    }
  }
  if (ex < bd) return {ex, true};
  return {bd, false};
}

long Tower::exact_valuation(int L, const Vec& a) const {
  ValInfo vi = valuation(L, a);
  if (!vi.exact) throw PrecisionError("valuation of an element that is zero to precision");
  return vi.v;
}

long Tower::absolute_precision(int L, const Vec& a) const {
  long r = kInfiniteValuation;
  if (L == 0) {
    for (const auto& c : a) r = std::min(r, clamp_inf(c.absolute_precision()));
    return r;
  }
  const long m = level(L).m;
  for (int j = 0; j < m; ++j) r = std::min(r, scaled(m, absolute_precision(L - 1, block(L, a, j)), j));
  return r;
}

ResidueField::Elem Tower::residue(int L, const Vec& a) const {
  if (L == 0) {
    ResidueField::Elem r(f());
    for (int i = 0; i < f(); ++i) r[i] = static_cast<long>(a[i].residue());
    return r;
  }
  return residue(L - 1, block(L, a, 0));
}

Vec Tower::lift(int L, const ResidueField::Elem& r) const {
  Vec b(f());
  for (int i = 0; i < f(); ++i)
    b[i] = r[i] == 0 ? PadicScalar::exact_zero(p_) : PadicScalar::from_integer(p_, r[i], prec_);
  return embed(0, L, b);
}

Vec Tower::inverse(int L, const Vec& a) const {
  const long v = exact_valuation(L, a);
  if (L == 0 && f() == 1) return Vec{a[0].inverse()};
  Vec u = shift_pi(L, a, -v);
  Vec z = lift(L, residue_.inv(residue(L, u)));
  const long target = absolute_precision(L, u);
  const Vec one_l = one(L);
  for (int iter = 0; iter < 256; ++iter) {
    Vec err = sub(one_l, mul(L, u, z));
    ValInfo ve = valuation(L, err);
    if (!ve.exact || ve.v >= target) break;
    add_into(z, mul(L, z, err));
  }
  return shift_pi(L, z, -v);
}

Vec Tower::pow(int L, const Vec& a, long k) const {
  if (k < 0) return pow(L, inverse(L, a), -k);
  Vec acc = one(L), base = a;
  while (k > 0) {
    if (k & 1) acc = mul(L, acc, base);
    k >>= 1;
    if (k > 0) base = mul(L, base, base);
  }
  return acc;
}

std::vector<std::vector<Vec>> Tower::solve(int L, Matrix a, std::vector<std::vector<Vec>> rhs) const {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = n;
    long best = kInfiniteValuation;
    for (size_t r = col; r < n; ++r) {
      ValInfo vi = valuation(L, a[r][col]);
      if (vi.exact && vi.v < best) {
        best = vi.v;
        piv = r;
      }
    }
    if (piv == n) throw PrecisionError("matrix is singular to working precision");
    std::swap(a[piv], a[col]);
    for (auto& b : rhs) std::swap(b[piv], b[col]);
    Vec inv = inverse(L, a[col][col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_exact_zero(a[r][col])) continue;
      Vec factor = mul(L, a[r][col], inv);
      for (size_t k = col + 1; k < n; ++k)
        if (!is_exact_zero(a[col][k])) sub_into(a[r][k], mul(L, factor, a[col][k]));
      a[r][col] = zero(L);
      for (auto& b : rhs)
        if (!is_exact_zero(b[col])) sub_into(b[r], mul(L, factor, b[col]));
    }
  }
  for (size_t i = 0; i < n; ++i) {
    Vec inv = inverse(L, a[i][i]);
    for (auto& b : rhs) b[i] = mul(L, b[i], inv);
  }
  return rhs;
}

std::vector<Vec> Tower::charpoly(int L, const Matrix& a) const {
  const size_t n = a.size();
  std::vector<Vec> vect = {one(L), neg(a[0][0])};
  for (size_t r = 1; r < n; ++r) {
    std::vector<Vec> t(r + 2);
    t[0] = one(L);
    t[1] = neg(a[r][r]);
    std::vector<Vec> v(r);
    for (size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (size_t k = 2; k <= r + 1; ++k) {
      Vec s = zero(L);
      for (size_t j = 0; j < r; ++j)
        if (!is_exact_zero(a[r][j]) && !is_exact_zero(v[j])) add_into(s, mul(L, a[r][j], v[j]));
      t[k] = neg(s);
      if (k == r + 1) break;
      std::vector<Vec> nv(r, zero(L));
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
          if (!is_exact_zero(a[i][j]) && !is_exact_zero(v[j])) add_into(nv[i], mul(L, a[i][j], v[j]));
      v = std::move(nv);
    }
    std::vector<Vec> next(r + 2, zero(L));
    for (size_t i = 0; i <= r + 1; ++i)
      for (size_t j = 0; j <= std::min(i, r); ++j)
        if (!is_exact_zero(t[i - j]) && !is_exact_zero(vect[j])) add_into(next[i], mul(L, t[i - j], vect[j]));
    vect = std::move(next);
  }
  return vect;
}

Vec Tower::determinant(int L, const Matrix& a) const {
  std::vector<Vec> cp = charpoly(L, a);
  return a.size() % 2 == 0 ? cp.back() : neg(cp.back());
}

}  // namespace anabelkit::detail
