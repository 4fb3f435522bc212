#include "doctest.h"

#include "modva/binom.hpp"
#include "modva/fp.hpp"
#include "oracles.hpp"

#include <cstdlib>

using namespace modva;

TEST_CASE("modulus validation") {
  CHECK_NOTHROW(checkModulus(3));
  CHECK_NOTHROW(checkModulus(5));
  CHECK_NOTHROW(checkModulus(101));
  CHECK_NOTHROW(checkModulus(2147483647));  // 2^31 - 1
  CHECK_THROWS_AS(checkModulus(1), std::domain_error);
  CHECK_THROWS_AS(checkModulus(2), std::domain_error);
  CHECK_THROWS_AS(checkModulus(9), std::domain_error);
  CHECK_THROWS_AS(checkModulus(91), std::domain_error);  // 7 * 13
  CHECK_THROWS_AS(checkModulus(1LL << 31), std::domain_error);
}

TEST_CASE("Fp basics") {
  Fp a(10, 7), b(-3, 7);
  CHECK(a.v == 3);
  CHECK(b.v == 4);
  CHECK((a + b).v == 0);
  CHECK((a * b).v == 5);
  CHECK((-b).v == 3);
  CHECK((b.inv() * b).v == 1);
  // symmetric residues lie in (-p/2, p/2]
  CHECK(Fp(3, 7).sym() == 3);
  CHECK(Fp(4, 7).sym() == -3);
  CHECK(Fp(6, 7).sym() == -1);
  CHECK(Fp(0, 7).sym() == 0);
  for (uint32_t p : {3u, 5u, 101u})
    for (uint32_t v = 1; v < p; ++v) CHECK(mulMod(invMod(v, p), v, p) == 1);
}

TEST_CASE("binomMod agrees with exact factorial arithmetic") {
  // frozen spot value: binomial(10,5) = 252
  CHECK(binomMod(10, 5, 5) == 2);
  CHECK(binomMod(10, 5, 3) == 0);
  CHECK(binomMod(10, 5, 7) == 0);
  CHECK(binomMod(10, 5, 11) == 10);

  for (uint32_t p : {3u, 5u, 7u, 11u, 97u, 2147483647u})
    for (long long m = 0; m <= 80; ++m)
      for (long long k = 0; k <= m; ++k) {
        CAPTURE(p); CAPTURE(m); CAPTURE(k);
        REQUIRE(binomMod(m, k, p) == oracle::binomFactorialMod(m, k, p));
      }
}

TEST_CASE("binomMod agrees with the Pascal recurrence mod p") {
  for (uint32_t p : {3u, 7u, 13u}) {
    auto rows = oracle::pascalMod(120, p);
    for (int m = 0; m <= 120; ++m)
      for (int k = 0; k <= m; ++k) {
        CAPTURE(p); CAPTURE(m); CAPTURE(k);
        REQUIRE(binomMod(m, k, p) == rows[m][static_cast<size_t>(k)]);
      }
  }
}

TEST_CASE("Pascal identity holds for negative upper index too") {
  for (uint32_t p : {3u, 5u, 11u})
    for (long long m = -50; m <= 50; ++m)
      for (long long k = 1; k <= 60; ++k) {
        CAPTURE(p); CAPTURE(m); CAPTURE(k);
        uint32_t lhs = binomMod(m, k, p);
        uint32_t rhs = addMod(binomMod(m - 1, k - 1, p), binomMod(m - 1, k, p), p);
        REQUIRE(lhs == rhs);
      }
}

TEST_CASE("negative upper index values") {
  // binomial(-n, k) = (-1)^k binomial(n+k-1, k); a few hand values
  CHECK(binomMod(-2, 3, 7) == normMod(-4, 7));   // -binomial(4,3) = -4
  CHECK(binomMod(-1, 4, 5) == 1);                // (-1)^4
  CHECK(binomMod(-1, 3, 5) == 4);                // (-1)^3
  CHECK(binomMod(-3, 2, 11) == 6);               // binomial(4,2) = 6
  for (uint32_t p : {5u, 13u})
    for (long long n = 1; n <= 30; ++n)
      for (long long k = 0; k <= 30; ++k) {
        uint32_t expect = mulMod(signPow(k, p), oracle::binomFactorialMod(n + k - 1, k, p), p);
        REQUIRE(binomMod(-n, k, p) == expect);
      }
}

TEST_CASE("divided-power non-vanishing pattern binomial(k p^t, p^t)") {
  // nonzero mod p exactly when p does not divide k
  for (uint32_t p : {3u, 5u, 7u, 11u})
    for (long long k = 1; k <= 10; ++k)
      for (long long t = 0, pt = 1; t <= 3; ++t, pt *= p) {
        CAPTURE(p); CAPTURE(k); CAPTURE(t);
        bool nonzero = binomMod(k * pt, pt, p) != 0;
        REQUIRE(nonzero == (k % p != 0));
      }
}

TEST_CASE("BinomTable caches and stays consistent") {
  BinomTable tab(13);
  for (int pass = 0; pass < 2; ++pass)
    for (long long m = -20; m <= 40; ++m)
      for (long long k = -2; k <= 25; ++k)
        REQUIRE(tab(m, k) == (k < 0 ? 0u : binomMod(m, k, 13)));
}

TEST_CASE("binomMod on a large prime matches stepwise products") {
  const uint32_t p = 2147483629u;
  std::srand(7);
  for (int trial = 0; trial < 200; ++trial) {
    long long m = std::rand() % 150;
    long long k = std::rand() % 150;
    if (k > m) continue;
    REQUIRE(binomMod(m, k, p) == oracle::binomProductMod(m, k, p));
  }
}
