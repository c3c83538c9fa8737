#pragma once

#include <functional>
#include <vector>

#include "magmaforge/arithmetic.hpp"
#include "magmaforge/limits.hpp"
#include "magmaforge/magma.hpp"

namespace magmaforge {

/// Every element must win exactly C(m,k)/m of the k-sets.
struct CoefficientSpec {
  int m = 0;
  int k = 0;
  std::uint64_t exponent = 0;
};

/// Throws NotDivisible unless m | C(m, k).
CoefficientSpec coefficient_spec(int m, int k);

struct CountFactor {
  int k = 0;
  BigCount value;
};

/// |PRPS(m,n)| = prod_k m! * B(m,k).
BigCount count_prps(int m, int n);
std::vector<CountFactor> count_prps_factors(int m, int n);

/// |RPS(G,n)| = prod_k k^{C(m,k)/m}.
BigCount count_regular_rps(int m, int n);
std::vector<CountFactor> count_regular_rps_factors(int m, int n);

/// Number of conservative pointings of the k-sets in which every element
/// wins exactly C(m,k)/m times: memoized over (k-set position, quotas).
BigCount count_balanced_pointings(const CoefficientSpec& spec, const Limits& lim = Limits::standard());
/// |RPS(m,n)| as the product of the per-k coefficients.
BigCount count_rps(int m, int n, const Limits& lim = Limits::standard());
std::vector<CountFactor> count_rps_factors(int m, int n, const Limits& lim = Limits::standard());

/// prod_{k=1}^{p-1} k^{C(p,k)/p - 1}.
BigCount count_iso_classes_max_arity_cyclic(int p);

/// Receives each pointing found by a brute-force search; return false to stop.
using PointingVisitor = std::function<bool(const Pointing&)>;

/// Joint backtracking over every k-set winner with per-(k, element) quotas.
/// Returns 0 straight away when m <= n or some quota C(m,k)/m is fractional.
/// With a visitor the search is sequential; otherwise the top-level branches
/// are split over `threads` workers.
std::uint64_t brute_enumerate_prps(int m, int n, const PointingVisitor& visit = {},
                                   int threads = 1, const Limits& lim = Limits::standard());
/// Same, with winners restricted to members of their set.
std::uint64_t brute_enumerate_rps(int m, int n, const PointingVisitor& visit = {},
                                  int threads = 1, const Limits& lim = Limits::standard());

}  // namespace magmaforge
