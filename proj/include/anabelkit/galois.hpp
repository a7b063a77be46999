#pragma once

#include <map>
#include <string>
#include <vector>

#include "anabelkit/cyclotomic.hpp"
#include "anabelkit/local_field.hpp"

namespace anabelkit {

// zeta -> zeta^a, rho -> zeta^b * rho, with a a unit and b a residue mod p^r.
struct GaloisElement {
  long a = 1;
  long b = 0;
  long modulus = 1;  // p^r

  // (this o o)(x) = this(o(x))
  GaloisElement compose(const GaloisElement& o) const;
  GaloisElement inverse() const;
  bool is_identity() const { return a % modulus == 1 % modulus && b % modulus == 0; }
  bool operator==(const GaloisElement& o) const { return a == o.a && b == o.b && modulus == o.modulus; }
  bool operator<(const GaloisElement& o) const { return a != o.a ? a < o.a : b < o.b; }
  std::string to_string() const;
};

// Q_p(zeta_{p^r}) or Q_p(zeta_{p^r}, a^{1/p^r}) with a rational.
struct KummerShape {
  unsigned p = 0;
  long r = 0;
  long modulus = 1;
  std::string zeta_label;
  std::string rho_label;  // empty for a purely cyclotomic field
  mpq_class radicand = 0;
};

// Throws DomainError("non-Galois tower") unless K has one of the shapes above.
KummerShape galois_shape(const LocalField& K);
std::vector<GaloisElement> galois_group(const LocalField& K);
FieldElement apply_automorphism(const GaloisElement& s, const FieldElement& x);

struct RamificationFiltration {
  std::vector<GaloisElement> group;
  std::map<GaloisElement, long> index;  // i_G(sigma) = v(sigma(pi) - pi); identity absent
  // G_i for i = 0, 1, ... up to the first trivial group (inclusive).
  std::vector<std::vector<GaloisElement>> subgroups;

  const std::vector<GaloisElement>& G(long i) const;
  // Lower-numbering jumps: indices i with G_i != G_{i+1}.
  std::vector<long> lower_breaks() const;
  // Upper-numbering jumps phi(i) for each lower jump, as exact rationals.
  std::vector<mpq_class> upper_breaks() const;
  // Hilbert's formula sum_i (|G_i| - 1).
  long hilbert_different() const;
};

RamificationFiltration ramification_filtration(const LocalField& K);
RamificationFiltration ramification_filtration(const LocalField& K, const FieldElement& pi);

struct Character {
  std::string name;
  long dimension = 1;
  std::vector<std::vector<GaloisElement>> classes;
  std::vector<CycloRational> values;  // one per class
  CycloRational value(const GaloisElement& g) const;
};

// Irreducible characters of Z/p x| (Z/p)^* (r = 1).
std::vector<Character> character_table(unsigned p, long r = 1);
// Characters of Gal(K/Q_p) for the supported shapes: the group above, or
// the cyclic group (Z/p^r)^* of a purely cyclotomic field with p odd.
std::vector<Character> character_table(const LocalField& K);
std::vector<std::vector<GaloisElement>> conjugacy_classes(const std::vector<GaloisElement>& group);
// Row and column orthogonality of a table over a group.
bool orthogonality_holds(const std::vector<Character>& chars, const std::vector<GaloisElement>& group);

long artin_conductor(const Character& chi, const RamificationFiltration& filt);
long swan_conductor(const Character& chi, const RamificationFiltration& filt);

struct ConductorEntry {
  std::string name;
  long dimension = 0;
  long artin = 0;
  long swan = 0;
};

struct ConductorReport {
  std::vector<ConductorEntry> characters;
  std::vector<long> lower_breaks;
  std::vector<mpq_class> upper_breaks;
  long conductor_sum = 0;          // sum chi(1) f(chi)
  long discriminant_valuation = 0; // v_p(disc K/Q_p)
  // Conductor of a nontrivial character of Gal(K/Q_p(zeta_p)) = Z/p,
  // i.e. the inducing character of the (p-1)-dimensional one (r = 1 only).
  long base_character_conductor = -1;
};

// Computes all conductors and checks sum chi(1) f(chi) = v_p(disc).
// Throws std::logic_error if the identity fails.
ConductorReport conductor_discriminant_check(const LocalField& K);

}  // namespace anabelkit
