#include "magmaforge/arithmetic.hpp"

#include <numeric>

#include "magmaforge/error.hpp"

namespace magmaforge {

bool is_prime(long long x) {
  if (x < 2) return false;
  for (long long d = 2; d * d <= x; ++d) {
    if (x % d == 0) return false;
  }
  return true;
}

int least_prime_divisor(long long m) {
  if (m < 2) throw Error(Errc::DomainError, "least prime divisor needs m >= 2, got " + std::to_string(m));
  for (long long d = 2; d * d <= m; ++d) {
    if (m % d == 0) return static_cast<int>(d);
  }
  return static_cast<int>(m);
}

int next_prime_after(int n) {
  int p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

AdmissibilityVerdict admissible(int m, int n) {
  if (m < 1 || n < 1) throw Error(Errc::DomainError, "m and n must be positive");
  AdmissibilityVerdict v{m, n, 0, false};
  if (m == 1) return v;
  v.least_prime_divisor = least_prime_divisor(m);
  v.admissible = n < v.least_prime_divisor;
  return v;
}

BigCount binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigCount factorial(int n) {
  BigCount r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount gcd_of_binomials(int m, int n) {
  if (n < 1 || m <= n) throw Error(Errc::DomainError, "d(m, n) needs m > n >= 1");
  BigCount g = 0;
  for (int k = 1; k <= n; ++k) g = boost::multiprecision::gcd(g, binomial(m, k));

  long long l = 1;
  for (int k = 1; k <= n; ++k) {
    if (m % k == 0) l = std::lcm(l, static_cast<long long>(k));
  }
  const BigCount closed = BigCount(m) / l;
  if (closed != g)
    throw Error(Errc::FormulaMismatch, "gcd of binomials " + g.str() + " but closed form gives " +
                                           closed.str() + " for m=" + std::to_string(m) +
                                           ", n=" + std::to_string(n));
  return g;
}

BigCount count_regular_partitions(int m, const BigCount& s) {
  if (m < 1) throw Error(Errc::DomainError, "need at least one block");
  if (s < 0) throw Error(Errc::DomainError, "negative set size");
  if (s % m != 0)
    throw Error(Errc::NotDivisible, std::to_string(m) + " does not divide " + s.str());
  const BigCount block = s / m;
  if (block > 100000) throw Error(Errc::CapExceeded, "block size " + block.str() + " too large");
  const long long b = block.convert_to<long long>();

  // prod_l C(s - l*b, b) = s! / (b!)^m, divided by m! for unordered blocks
  BigCount ordered = 1;
  BigCount remaining = s;
  for (int l = 0; l < m; ++l) {
    BigCount c = 1;
    for (long long i = 1; i <= b; ++i) c = c * (remaining - b + i) / i;
    ordered *= c;
    remaining -= b;
  }
  const BigCount mf = factorial(m);
  if (ordered % mf != 0) throw Error(Errc::FormulaMismatch, "ordered partition count not divisible by m!");
  return ordered / mf;
}

BigCount count_kset_partitions(int m, int k) {
  if (k < 1 || k > m) throw Error(Errc::DomainError, "need 1 <= k <= m");
  return count_regular_partitions(m, binomial(m, k));
}

}  // namespace magmaforge
