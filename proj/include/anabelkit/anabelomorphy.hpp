#pragma once

#include <string>
#include <vector>

#include "anabelkit/expr.hpp"
#include "anabelkit/local_field.hpp"

namespace anabelkit {

// Q_p(zeta_{p^r}, a^{1/p^r}) with a an integer polynomial (or rational) in
// zeta_{p^r}, written in the variable z.  Without a radicand the spec is
// just Q_p(zeta_{p^r}).
struct KummerFieldSpec {
  unsigned p = 0;
  long r = 1;
  RationalPoly radicand;
  bool has_radicand = true;

  // "p=3 r=2 rad=3"; rad may be a polynomial in z, e.g. "rad=z^2+1".
  // "p=3 r=1" alone is the cyclotomic field.
  static KummerFieldSpec parse(const std::string& text);
  std::string to_string() const;
  long base_degree() const;  // phi(p^r)
  long modulus() const;      // p^r
  // Steps for LocalField::build: cyclotomic(p^r) labelled z, kummer(p^r) labelled r.
  std::vector<TowerStep> steps() const;
};

enum class AnabStatus { Anabelomorphic, NotAnabelomorphic, Undecided };
std::string to_string(AnabStatus s);

struct AnabelomorphismVerdict {
  AnabStatus status = AnabStatus::Undecided;
  long degree1 = 0;
  long degree2 = 0;
  std::string k0_1;  // canonical label of the maximal abelian subfield, or "?"
  std::string k0_2;
  std::string reason;
};

// Certified facts about one spec, computed inside Q_p(zeta_{p^r}) only.
struct KummerCertificate {
  long degree = 0;
  std::string k0;  // "Q_p(zeta_{p^r})" or "?" when F(a^{1/p}) is abelian over Q_p
  bool nonabelian = false;
};

// Throws DomainError (degree drop) when the radicand is a p-th power.
KummerCertificate certify_kummer(const KummerFieldSpec& spec, long precision = kDefaultPrecision);

AnabelomorphismVerdict jarden_ritter(const KummerFieldSpec& a, const KummerFieldSpec& b,
                                     long precision = kDefaultPrecision);

// Same field by inspection: equal radicands, or rational radicands whose
// ratio is +-c^{p^r} (sign only absorbed for odd p).
bool syntactically_isomorphic(const KummerFieldSpec& a, const KummerFieldSpec& b);

struct Partition {
  std::vector<std::vector<size_t>> classes;  // indices into the input, each sorted
  std::vector<bool> undecided;               // spec took part in an undecided pair
};
Partition partition_classes(const std::vector<KummerFieldSpec>& specs, long precision = kDefaultPrecision);

enum class Ramification { Peu, Tres };
std::string to_string(Ramification r);
// PEU iff the radicand's valuation in Q_p(zeta_{p^r}) is divisible by p.
Ramification peu_tres_classify(const KummerFieldSpec& spec, long precision = kDefaultPrecision);

struct KrasnerResult {
  std::vector<mpz_class> coefficients;  // monic, low degree first, leading 1 included
  long disc_valuation = 0;              // v_p(disc) of the input
  long disc_valuation_output = 0;       // recomputed for the output
  mpq_class threshold;                  // deg * v(disc) / 2
  long closeness = 0;                   // min v_p(g_i - f_i)
};

// minpoly: monic, low degree first (leading 1 included), integral coefficients.
// Throws DomainError when no integer approximant within height_bound meets
// the threshold.
KrasnerResult krasner_rationalize(const std::vector<PadicScalar>& minpoly, const mpz_class& height_bound);

// v_p of the discriminant of a monic polynomial, via the Sylvester matrix.
long discriminant_valuation(const std::vector<PadicScalar>& monic_poly);

}  // namespace anabelkit
