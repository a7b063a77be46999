#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "anabelkit/anabelomorphy.hpp"
#include "oracles.hpp"

using namespace anabelkit;

namespace {

KummerFieldSpec spec(const std::string& s) { return KummerFieldSpec::parse(s); }

std::vector<PadicScalar> poly(unsigned p, std::initializer_list<mpq_class> c, long prec = 40) {
  std::vector<PadicScalar> out;
  for (const auto& x : c) out.push_back(x == 0 ? PadicScalar::exact_zero(p) : PadicScalar::from_rational(p, x, prec));
  return out;
}

}  // namespace

TEST_CASE("parse and print") {
  auto s = spec("p=3 r=2 rad=z^2+1");
  CHECK(s.p == 3);
  CHECK(s.r == 2);
  CHECK(s.modulus() == 9);
  CHECK(s.base_degree() == 6);
  CHECK(s.steps().size() == 2);
  CHECK(spec(s.to_string()).to_string() == s.to_string());
  auto c = spec("p=3 r=1");
  CHECK_FALSE(c.has_radicand);
  CHECK(c.steps().size() == 1);
  CHECK_THROWS_AS(spec("r=2 rad=3"), DomainError);
  CHECK_THROWS_AS(spec("p=6 rad=3"), DomainError);
  CHECK_THROWS_AS(spec("p=3 rad=0"), DomainError);
  CHECK_THROWS_AS(spec("p=3 rad=x+y"), DomainError);
  CHECK_THROWS_AS(spec("p=3 bogus"), DomainError);
}

TEST_CASE("Jarden-Ritter verdicts") {
  auto v = jarden_ritter(spec("p=3 r=1 rad=3"), spec("p=3 r=1 rad=4"));
  CHECK(v.status == AnabStatus::Anabelomorphic);
  CHECK(v.degree1 == 6);
  CHECK(v.k0_1 == "Q_3(zeta_3)");
  CHECK(v.k0_1 == v.k0_2);

  auto w = jarden_ritter(spec("p=3 r=2 rad=3"), spec("p=3 r=2 rad=4"));
  CHECK(w.status == AnabStatus::Anabelomorphic);
  CHECK(w.degree1 == 54);
  CHECK(w.degree2 == 54);

  auto n = jarden_ritter(spec("p=3 r=1 rad=3"), spec("p=3 r=1"));
  CHECK(n.status == AnabStatus::NotAnabelomorphic);
  CHECK(n.degree2 == 2);

  // Q_3(zeta_9) is abelian, K1 is not: same degree, different K^0.
  auto m = jarden_ritter(spec("p=3 r=2"), spec("p=3 r=1 rad=3"));
  CHECK(m.degree1 == m.degree2);
  CHECK(m.status == AnabStatus::NotAnabelomorphic);

  CHECK_THROWS_AS(jarden_ritter(spec("p=3 rad=3"), spec("p=5 rad=5")), DomainError);
}

TEST_CASE("undecided when F(a^{1/p}) is abelian over Q_p") {
  // zeta_3 itself: Q_3(zeta_9) is abelian, so K^0 is not certified.
  auto c = certify_kummer(spec("p=3 r=1 rad=z"));
  CHECK_FALSE(c.nonabelian);
  CHECK(c.k0 == "?");
  CHECK(jarden_ritter(spec("p=3 r=1 rad=z"), spec("p=3 r=1 rad=3")).status == AnabStatus::Undecided);
}

TEST_CASE("degree drop") {
  CHECK_THROWS_AS(certify_kummer(spec("p=3 rad=8")), DomainError);
  CHECK_THROWS_AS(certify_kummer(spec("p=3 rad=10")), DomainError);  // 10 = 1 mod 9 is a cube
  CHECK_THROWS_AS(certify_kummer(spec("p=3 r=2 rad=512")), DomainError);
  CHECK_NOTHROW(certify_kummer(spec("p=3 rad=4")));
}

TEST_CASE("reflexive, symmetric, transitive on decided verdicts") {
  std::vector<KummerFieldSpec> s = {spec("p=3 rad=3"),  spec("p=3 rad=4"),   spec("p=3 rad=-7"), spec("p=3 rad=24"),
                                    spec("p=3 rad=2"),  spec("p=3 r=1"),     spec("p=3 r=2"),    spec("p=3 rad=z+3")};
  const size_t n = s.size();
  std::vector<std::vector<AnabStatus>> t(n, std::vector<AnabStatus>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t[i][j] = jarden_ritter(s[i], s[j]).status;
  for (size_t i = 0; i < n; ++i) {
    CHECK(t[i][i] == AnabStatus::Anabelomorphic);
    for (size_t j = 0; j < n; ++j) {
      CHECK(t[i][j] == t[j][i]);
      for (size_t k = 0; k < n; ++k)
        if (t[i][j] == AnabStatus::Anabelomorphic && t[j][k] == AnabStatus::Anabelomorphic)
          CHECK(t[i][k] != AnabStatus::NotAnabelomorphic);
    }
  }
  // 24 = 3 * 2^3: isomorphic to radicand 3 by inspection
  CHECK(syntactically_isomorphic(s[0], s[3]));
  CHECK(syntactically_isomorphic(s[0], spec("p=3 rad=-3")));
  CHECK_FALSE(syntactically_isomorphic(s[0], s[1]));
}

TEST_CASE("partition into classes") {
  auto one = partition_classes({spec("p=3 r=2 rad=3"), spec("p=3 r=2 rad=4"), spec("p=3 r=2 rad=-7")});
  REQUIRE(one.classes.size() == 1);
  CHECK(one.classes[0] == std::vector<size_t>{0, 1, 2});

  auto single = partition_classes({spec("p=3 rad=3")});
  CHECK(single.classes.size() == 1);

  auto mixed = partition_classes({spec("p=3 r=1 rad=3"), spec("p=3 r=2 rad=3"), spec("p=3 r=1 rad=4")});
  REQUIRE(mixed.classes.size() == 2);
  CHECK(mixed.classes[0] == std::vector<size_t>{0, 2});
  CHECK(mixed.classes[1] == std::vector<size_t>{1});

  auto und = partition_classes({spec("p=3 rad=z"), spec("p=3 rad=3")});
  CHECK(und.classes.size() == 2);
  CHECK(und.undecided[0]);
}

TEST_CASE("peu / tres ramifiee") {
  CHECK(peu_tres_classify(spec("p=3 rad=3")) == Ramification::Tres);
  CHECK(peu_tres_classify(spec("p=3 rad=4")) == Ramification::Peu);
  CHECK(peu_tres_classify(spec("p=3 rad=54")) == Ramification::Peu);  // 27 * 2
  CHECK(peu_tres_classify(spec("p=5 rad=5")) == Ramification::Tres);
  CHECK(to_string(Ramification::Peu) == "PEU");
  CHECK_THROWS_AS(peu_tres_classify(spec("p=3")), DomainError);
}

TEST_CASE("peu / tres is not amphoric") {
  auto a = spec("p=3 rad=3"), b = spec("p=3 rad=4");
  REQUIRE(jarden_ritter(a, b).status == AnabStatus::Anabelomorphic);
  CHECK(peu_tres_classify(a) != peu_tres_classify(b));
}

TEST_CASE("polynomial discriminant valuation") {
  CHECK(discriminant_valuation(poly(3, {-3, 0, 0, 1})) == oracle::eisenstein_pure_root_disc(3));
  CHECK(discriminant_valuation(poly(7, {-2, 0, 1})) == 0);
  CHECK(discriminant_valuation(poly(5, {-7, 1})) == 0);
  // x^2 - 3 over Q_3: disc 12
  CHECK(discriminant_valuation(poly(3, {-3, 0, 1})) == 1);
}

TEST_CASE("Krasner rationalization") {
  auto r = krasner_rationalize(poly(7, {-2, 0, 1}), 100);
  CHECK(r.coefficients == std::vector<mpz_class>{-2, 0, 1});
  CHECK(r.closeness > r.threshold);

  // x - u with u = 1/2 in Z_5 to 10 digits: the integer representative mod 5^10
  auto lin = krasner_rationalize({PadicScalar::from_rational(5, mpq_class(-1, 2), 10), PadicScalar::from_integer(5, 1)},
                                 oracle::pow_ui(5, 10));
  mpz_class u = -lin.coefficients[0];
  CHECK(mpz_class((2 * u - 1) % oracle::pow_ui(5, 10)) == 0);

  // x^3 - (3 + 9t) with t a truncated 3-adic unit (t = 1/2 to 20 digits)
  std::vector<PadicScalar> f = {-(PadicScalar::from_integer(3, 3, 30) +
                                  PadicScalar::from_integer(3, 9, 30) * PadicScalar::from_rational(3, mpq_class(1, 2), 20)),
                                PadicScalar::exact_zero(3), PadicScalar::exact_zero(3), PadicScalar::from_integer(3, 1)};
  auto k = krasner_rationalize(f, oracle::pow_ui(3, 30));
  REQUIRE(k.coefficients.size() == 4);
  CHECK(k.coefficients[1] == 0);
  CHECK(k.coefficients[2] == 0);
  CHECK(k.coefficients[3] == 1);
  CHECK(k.disc_valuation == k.disc_valuation_output);
  CHECK(k.closeness > k.threshold);
  // independent check: disc(x^3 - c) = -27 c^2
  CHECK(oracle::vp(-27 * k.coefficients[0] * k.coefficients[0], 3) == k.disc_valuation);

  CHECK_THROWS_AS(krasner_rationalize(f, 5), DomainError);
}
