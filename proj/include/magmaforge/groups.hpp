#pragma once

#include <optional>
#include <span>
#include <vector>

#include "magmaforge/combinatorics.hpp"
#include "magmaforge/limits.hpp"

namespace magmaforge {

/// A finite group given by its full Cayley table.
class FiniteGroup {
 public:
  /// Validates closure, associativity, identity and inverses; throws
  /// InvalidGroup otherwise.
  static FiniteGroup from_table(int order, std::vector<Element> table);

  int order() const noexcept { return m_; }
  Element identity() const noexcept { return e_; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * m_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::span<const Element> table() const noexcept { return table_; }

  Element power(Element a, long long k) const;
  int element_order(Element a) const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup() = default;

  int m_ = 0;
  Element e_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inv_;
};

FiniteGroup cyclic_group(int m);
/// Mixed-radix encoding, first component most significant.
FiniteGroup direct_sum(std::span<const FiniteGroup> parts);
/// Z_m x| Z_k with (a,i)(b,j) = (a + t^i b, i + j); (a,i) is encoded i*m + a.
FiniteGroup semidirect_cyclic(int m, int k, int t);

/// sU.
KSet translate(const FiniteGroup& g, Element s, const KSet& u);
KSet apply_permutation(const Permutation& p, const KSet& u);

struct OrbitFamily {
  int k = 0;
  /// Each orbit sorted in colex order; orbits sorted by representative.
  std::vector<std::vector<KSet>> orbits;
  /// Colex-least member of each orbit.
  std::vector<KSet> representatives;
};

OrbitFamily k_extension_orbits(const FiniteGroup& g, int k);

struct StabilizerWitness {
  Element s = 0;
  KSet set;
};

/// Some s != e and k-set U with sU = U, if any.
std::optional<StabilizerWitness> extension_stabilizer(const FiniteGroup& g, int k);
bool is_extension_free(const FiniteGroup& g, int k);

std::vector<Element> generated_subgroup(const FiniteGroup& g, std::span<const Element> gens);
/// Every subgroup as a sorted element list; sorted by size, then
/// lexicographically. Throws CapExceeded when |G| exceeds the cap.
std::vector<std::vector<Element>> subgroups(const FiniteGroup& g,
                                            const Limits& lim = Limits::standard());

Permutation conjugation(const FiniteGroup& g, Element b);
/// Distinct c_b, in order of first b.
std::vector<Permutation> inner_automorphisms(const FiniteGroup& g);
/// L_a for a = 0..m-1.
std::vector<Permutation> left_translations(const FiniteGroup& g);

bool is_group_automorphism(const FiniteGroup& g, const Permutation& phi);
/// Aut(G) by backtracking over images of a generating set; sorted.
std::vector<Permutation> group_automorphisms(const FiniteGroup& g,
                                             const Limits& lim = Limits::standard());

std::vector<Element> left_coset(const FiniteGroup& g, Element a, std::span<const Element> h);

}  // namespace magmaforge
