#include <doctest.h>

#include "magmaforge/arithmetic.hpp"
#include "magmaforge/error.hpp"
#include "oracles.hpp"

using namespace magmaforge;

TEST_CASE("least prime divisor and kappa") {
  CHECK(least_prime_divisor(9) == 3);
  CHECK(least_prime_divisor(35) == 5);
  CHECK(least_prime_divisor(7) == 7);
  CHECK(least_prime_divisor(2) == 2);
  CHECK_THROWS_AS(least_prime_divisor(1), Error);
  CHECK(next_prime_after(1) == 2);
  CHECK(next_prime_after(2) == 3);
  CHECK(next_prime_after(3) == 5);
  CHECK(next_prime_after(5) == 7);
  CHECK(next_prime_after(7) == 11);
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("admissibility examples") {
  CHECK(admissible(3, 2).admissible);
  CHECK_FALSE(admissible(4, 2).admissible);
  CHECK(admissible(4, 2).least_prime_divisor == 2);
  CHECK(admissible(25, 4).admissible);
  CHECK_FALSE(admissible(1, 1).admissible);
  CHECK(admissible(1, 1).least_prime_divisor == 0);
  CHECK_FALSE(admissible(9, 3).admissible);
  CHECK_FALSE(admissible(6, 2).admissible);
}

TEST_CASE("property: three admissibility computations agree") {
  for (int m = 1; m <= 60; ++m) {
    for (int n = 1; n <= 6; ++n) {
      bool by_divisors = m != 1;
      for (int k = 2; k <= n; ++k) by_divisors = by_divisors && m % k != 0;
      bool by_primes = m != 1;
      for (int p = 2; p <= n; ++p) {
        if (is_prime(p) && m % p == 0) by_primes = false;
      }
      const bool got = admissible(m, n).admissible;
      CHECK(got == by_divisors);
      CHECK(got == by_primes);
      if (got) {
        for (int k = 1; k <= n; ++k) CHECK(binomial(m, k) % m == 0);
      }
    }
  }
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
  CHECK(factorial(0) == 1);
  CHECK(binomial(60, 30) == oracle::binomial(60, 30));
}

TEST_CASE("gcd of binomials") {
  CHECK(gcd_of_binomials(7, 2) == 7);
  CHECK(gcd_of_binomials(10, 2) == 5);
  for (int m = 2; m <= 12; ++m) CHECK(gcd_of_binomials(m, 1) == m);
}

TEST_CASE("property: gcd of binomials matches the oracle and its closed form") {
  for (int m = 3; m <= 40; ++m) {
    for (int n = 2; n < m; ++n) CHECK(gcd_of_binomials(m, n) == oracle::gcd_of_binomials(m, n));
  }
}

TEST_CASE("regular partitions") {
  CHECK(count_regular_partitions(3, 6) == 15);
  CHECK(count_regular_partitions(3, 6) == oracle::regular_partitions(3, 6));
  for (int m = 1; m <= 7; ++m) CHECK(count_regular_partitions(m, m) == 1);
  CHECK(count_regular_partitions(1, 9) == 1);
  try {
    count_regular_partitions(4, 6);
    FAIL("expected NotDivisible");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDivisible);
  }
  CHECK(count_kset_partitions(3, 2) == 1);
  CHECK(count_kset_partitions(5, 2) == 945);
  CHECK(count_kset_partitions(5, 2) == oracle::regular_partitions(5, 10));
  CHECK(count_kset_partitions(3, 1) == 1);
  CHECK_THROWS_AS(count_kset_partitions(4, 2), Error);
}

TEST_CASE("property: P(m,s) matches brute force and the ordered product") {
  for (int m = 1; m <= 5; ++m) {
    for (int s = m; s <= 12; s += m) {
      CHECK(count_regular_partitions(m, s) == oracle::regular_partitions(m, s));
      BigCount ordered = 1;
      for (int l = 0; l < m; ++l) ordered *= binomial(s - l * (s / m), s / m);
      CHECK(count_regular_partitions(m, s) * factorial(m) == ordered);
    }
  }
}
