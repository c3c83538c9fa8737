#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace magmaforge {

using BigCount = boost::multiprecision::cpp_int;

struct AdmissibilityVerdict {
  int m = 0;
  int n = 0;
  int least_prime_divisor = 0;  // 0 when m = 1
  bool admissible = false;
};

bool is_prime(long long x);
/// Throws DomainError for m < 2.
int least_prime_divisor(long long m);
/// kappa(n): the least prime strictly greater than n.
int next_prime_after(int n);
/// n < lpd(m) and m != 1.
AdmissibilityVerdict admissible(int m, int n);

BigCount binomial(int n, int k);
BigCount factorial(int n);

/// d(m, n) = gcd{C(m, k) : 1 <= k <= n}; cross-checked against
/// m / lcm{k <= n : k | m}, throwing FormulaMismatch if they disagree.
BigCount gcd_of_binomials(int m, int n);

/// P(m, s): partitions of an s-set into m blocks of size s/m. NotDivisible
/// unless m | s.
BigCount count_regular_partitions(int m, const BigCount& s);

/// B(m, k) = P(m, C(m, k)).
BigCount count_kset_partitions(int m, int k);

}  // namespace magmaforge
