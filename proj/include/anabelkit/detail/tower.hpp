#pragma once

#include <vector>

#include "anabelkit/padic.hpp"
#include "anabelkit/residue_field.hpp"

namespace anabelkit::detail {

using Vec = std::vector<PadicScalar>;
using Matrix = std::vector<std::vector<Vec>>;

// Valuation that may only be known as a lower bound.
struct ValInfo {
  long v = kInfiniteValuation;
  bool exact = false;
};

/*
 * Tower of relative Eisenstein extensions over an unramified base U.
 * Level 0 is U = Q_p[t]/(g); level k is level k-1 adjoined a root pi_k
 * of h_k(X) = X^m + h_{m-1} X^{m-1} + ... + h_0.  An element of level k
 * is stored as m blocks (coefficients of pi_k^j), each an element of
 * level k-1, flattened into one scalar vector.
 */
struct Level {
  int m = 1;
  long e = 1;
  size_t size = 1;
  std::vector<Vec> h;
  std::vector<Vec> pinv;  // pi^{-1} = sum pinv[j] pi^j
};

class Tower {
 public:
  Tower() = default;
  Tower(unsigned p, long precision, Vec base_modulus, ResidueField residue);

  unsigned p() const { return p_; }
  long precision() const { return prec_; }
  int f() const { return levels_[0].m; }
  int top() const { return static_cast<int>(levels_.size()) - 1; }
  const Level& level(int L) const { return levels_[L]; }
  size_t size(int L) const { return levels_[L].size; }
  long ram(int L) const { return levels_[L].e; }
  const Vec& base_modulus() const { return base_mod_; }
  const ResidueField& residue_field() const { return residue_; }

  // Appends a level for the relative Eisenstein polynomial h over the top.
  void push_level(std::vector<Vec> h);

  Vec zero(int L) const;
  Vec one(int L) const;
  Vec scalar(int L, const PadicScalar& c) const;
  Vec embed(int from, int to, const Vec& x) const;
  Vec uniformizer(int L) const;

  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec neg(const Vec& a) const;
  void add_into(Vec& acc, const Vec& x) const;
  void sub_into(Vec& acc, const Vec& x) const;
  Vec mul(int L, const Vec& a, const Vec& b) const;
  Vec scale(const Vec& a, const PadicScalar& c) const;
  Vec mul_pi(int L, const Vec& a) const;
  Vec div_pi(int L, const Vec& a) const;
  Vec shift_pi(int L, Vec a, long k) const;
  Vec inverse(int L, const Vec& a) const;
  Vec pow(int L, const Vec& a, long k) const;

  ValInfo valuation(int L, const Vec& a) const;
  long exact_valuation(int L, const Vec& a) const;
  long absolute_precision(int L, const Vec& a) const;
  bool is_exact_zero(const Vec& a) const;
  bool is_zero(int L, const Vec& a) const { return !valuation(L, a).exact; }

  ResidueField::Elem residue(int L, const Vec& a) const;
  Vec lift(int L, const ResidueField::Elem& r) const;

  // Block j of a level-L element (an element of level L-1).
  Vec block(int L, const Vec& a, int j) const;
  Vec assemble(int L, const std::vector<Vec>& blocks) const;

  // Linear algebra over level L.
  // Solves a x = b for each right-hand side b (each a column of length n).
  std::vector<std::vector<Vec>> solve(int L, Matrix a, std::vector<std::vector<Vec>> rhs) const;
  std::vector<Vec> charpoly(int L, const Matrix& a) const;  // det(xI - A), highest degree first
  Vec determinant(int L, const Matrix& a) const;

 private:
  Vec mul_base(const Vec& a, const Vec& b) const;

  unsigned p_ = 0;
  long prec_ = kDefaultPrecision;
  Vec base_mod_;
  ResidueField residue_;
  std::vector<Level> levels_;
};

}  // namespace anabelkit::detail
