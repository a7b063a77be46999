#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "anabelkit/padic.hpp"
#include "oracles.hpp"

using namespace anabelkit;

namespace {

PadicScalar random_scalar(std::mt19937_64& rng, unsigned p, long prec, long vmin = -5, long vmax = 5) {
  long v = vmin + static_cast<long>(rng() % static_cast<unsigned long>(vmax - vmin + 1));
  mpz_class u = static_cast<unsigned long>(rng() % 1000000007ul) + 1;
  while (mpz_divisible_ui_p(u.get_mpz_t(), p)) u += 1;
  if (rng() & 1) u = -u;
  return PadicScalar::from_parts(p, v, u, prec);
}

PadicScalar random_unit(std::mt19937_64& rng, unsigned p, long prec) { return random_scalar(rng, p, prec, 0, 0); }

}  // namespace

TEST_CASE("add: exact cancellation gives zero to precision") {
  auto a = PadicScalar::from_integer(3, 1 + 3, 10);
  auto b = PadicScalar::from_integer(3, -1 - 3, 10);
  auto s = a + b;
  CHECK(s.is_zero());
  CHECK(s.valuation_bound() >= 10);
  CHECK_THROWS_AS(s.valuation(), PrecisionError);
}

TEST_CASE("add: no carry across valuations") {
  auto a = PadicScalar::from_parts(3, 0, 1, 5);
  auto b = PadicScalar::from_parts(3, 2, 1, 5);
  auto s = a + b;
  CHECK(s.valuation() == 0);
  CHECK(s.unit() == 10);
}

TEST_CASE("add: renormalization 2 + 1 = 3^1 * 1") {
  auto s = PadicScalar::from_integer(3, 2) + PadicScalar::from_integer(3, 1);
  CHECK(s.valuation() == 1);
  CHECK(s.unit() == 1);
}

TEST_CASE("mul, inverse, identity") {
  auto a = PadicScalar::from_rational(5, mpq_class(7, 25), 20);
  CHECK(equal_to_precision(a * PadicScalar::from_integer(5, 1), a));
  auto i = PadicScalar::from_integer(3, 3).inverse();
  CHECK(i.valuation() == -1);
  CHECK(i.unit() == 1);
  CHECK_THROWS_AS(PadicScalar::zero_to(3, 4).inverse(), PrecisionError);
  CHECK_THROWS_AS(PadicScalar::from_integer(4, 1), DomainError);
  CHECK_THROWS(PadicScalar::from_integer(3, 1) + PadicScalar::from_integer(5, 1));
}

TEST_CASE("ultrametric and valuation laws, randomized") {
  std::mt19937_64 rng(20240611);
  const unsigned primes[] = {2, 3, 5, 7};
  for (int it = 0; it < 1000; ++it) {
    const unsigned p = primes[it % 4];
    auto a = random_scalar(rng, p, 20), b = random_scalar(rng, p, 20);
    const long va = a.valuation(), vb = b.valuation();
    auto s = a + b;
    if (!s.is_zero()) {
      CHECK(s.valuation() >= std::min(va, vb));
      if (va != vb) CHECK(s.valuation() == std::min(va, vb));
    } else {
      CHECK(va == vb);
    }
    CHECK((a * b).valuation() == va + vb);
    CHECK(equal_to_precision(a.inverse().inverse(), a));
    CHECK(equal_to_precision((a / b) * b, a));
  }
}

TEST_CASE("padic_log: branch values") {
  CHECK(padic_log(PadicScalar::from_integer(3, 1, 20)).is_zero());
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (long m : {-3L, 1L, 2L, 5L}) CHECK(padic_log(PadicScalar::from_parts(p, m, 1, 20)).is_zero());
}

TEST_CASE("padic_log(1+3) to 6 digits matches the series oracle") {
  // Frozen from the rational series oracle in oracles.hpp.
  const mpz_class golden = 534;
  CHECK(oracle::log_series_mod(4, 3, 6) == golden);
  PadicScalar l = padic_log(PadicScalar::from_integer(3, 4, 6));
  CHECK(l.absolute_precision() >= 6);
  CHECK(mpz_class(l.lift_integer() % 729) == golden);
}

TEST_CASE("padic_log agrees with the series oracle on principal units") {
  std::mt19937_64 rng(99);
  for (unsigned p : {3u, 5u, 7u}) {
    for (int it = 0; it < 20; ++it) {
      mpz_class x = 1 + p * mpz_class(static_cast<unsigned long>(rng() % 10000));
      const long N = 15;
      mpz_class got = padic_log(PadicScalar::from_integer(p, x, N)).lift_integer();
      mpz_class mod = prime_power(p, N);
      mpz_class g = got % mod;
      if (g < 0) g += mod;
      CHECK(g == oracle::log_series_mod(x, p, N));
    }
  }
}

TEST_CASE("padic_log homomorphism, randomized") {
  std::mt19937_64 rng(7);
  const unsigned primes[] = {2, 3, 5, 7};
  for (int it = 0; it < 1000; ++it) {
    const unsigned p = primes[it % 4];
    auto u = random_scalar(rng, p, 30, -3, 3), w = random_scalar(rng, p, 30, -3, 3);
    CHECK(equal_to_precision(padic_log(u * w), padic_log(u) + padic_log(w)));
  }
}

TEST_CASE("padic_log of powers, randomized k in [-5, 5]") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const unsigned p = it % 2 ? 3 : 5;
    auto u = random_unit(rng, p, 30);
    const long k = static_cast<long>(rng() % 11) - 5;
    auto lhs = padic_log(u.pow(k));
    auto rhs = padic_log(u) * PadicScalar::from_integer(p, k, 30);
    CHECK(equal_to_precision(lhs, rhs));
  }
}
