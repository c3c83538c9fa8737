#pragma once

#include <vector>

#include "magmaforge/construct.hpp"
#include "magmaforge/groups.hpp"
#include "magmaforge/lattice.hpp"
#include "magmaforge/magma.hpp"

namespace magmaforge {

/// Full automorphism group, sorted. CapExceeded above 12 elements for
/// binary magmas and 9 for higher arity.
std::vector<Permutation> automorphisms(const FiniteMagma& a, const Limits& lim = Limits::standard());
bool is_automorphism(const FiniteMagma& a, const Permutation& phi);

/// lambda(obv(U)) = U implies lambda(obv(phi U)) = phi U.
bool is_lambda_automorphism(const ObverseIndex& idx, const SignFunction& lambda, const Permutation& phi);
std::vector<Permutation> lambda_automorphisms(const FiniteGroup& g, int n, const SignFunction& lambda,
                                              const Limits& lim = Limits::standard());
bool is_correlated(const FiniteGroup& g, int n, const SignFunction& lambda);

bool is_congruence(const FiniteMagma& a, const Partition& p);
/// Least congruence containing every pair of each block of `seed`.
Partition congruence_closure(const FiniteMagma& a, const Partition& seed);
Partition principal_congruence(const FiniteMagma& a, Element x, Element y);

struct CongruenceLattice {
  /// Sorted by decreasing block count, then by labels; Delta first.
  std::vector<Partition> congruences;
  /// Ordered by refinement.
  FiniteLattice lattice;
};

CongruenceLattice all_congruences(const FiniteMagma& a, const Limits& lim = Limits::standard());
bool is_simple(const FiniteMagma& a, const Limits& lim = Limits::standard());

/// Number of isomorphism classes among the given magmas, by pairwise search
/// against one representative per class.
std::size_t count_isomorphism_classes(const std::vector<FiniteMagma>& magmas);

/// Subgroups H whose left cosets form a congruence of G_n(lambda).
std::vector<std::vector<Element>> lambda_convex_subgroups(const FiniteGroup& g, int n,
                                                          const SignFunction& lambda,
                                                          const Limits& lim = Limits::standard());

bool is_chain(const std::vector<std::vector<Element>>& subgroups);

struct CosetPosetLattice {
  /// Every coset aH of every listed subgroup, as sorted element lists.
  std::vector<std::vector<Element>> cosets;
  /// Maximal antichains as sorted indices into `cosets`.
  std::vector<std::vector<int>> antichains;
  /// U <= V when each member of U lies inside some member of V.
  FiniteLattice lattice;
};

/// Throws NotAChain unless the subgroups are totally ordered by inclusion.
CosetPosetLattice coset_poset_and_antichain_lattice(const FiniteGroup& g,
                                                    const std::vector<std::vector<Element>>& convex,
                                                    const Limits& lim = Limits::standard());

/// The partition of G into blocks of the antichain.
Partition antichain_partition(const CosetPosetLattice& p, int antichain, int order);

}  // namespace magmaforge
