#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace magmaforge {

/// Element of a finite universe {0, ..., m-1}.
using Element = int;

/// C(n, k) in 64 bits; throws CapExceeded on overflow.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k);

/// m^n, throwing CapExceeded when it exceeds `cap`.
std::uint64_t checked_power(std::uint64_t m, int n, std::uint64_t cap);

/// A k-set: strictly increasing element indices. Ordered first by size and
/// then colexicographically, which is the order used by every file format.
class KSet {
 public:
  KSet() = default;
  KSet(std::initializer_list<Element> elems);
  explicit KSet(std::vector<Element> sorted_elems);

  /// Sorts and deduplicates; duplicates are rejected.
  static KSet from_unsorted(std::vector<Element> elems);
  static KSet colex_unrank(std::uint64_t rank, int k);

  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Element operator[](std::size_t i) const { return elems_[i]; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }
  Element min() const { return elems_.front(); }
  Element max() const { return elems_.back(); }
  std::span<const Element> elements() const noexcept { return elems_; }

  bool contains(Element x) const;
  /// Combinatorial number system rank: sum of C(a_i, i+1).
  std::uint64_t colex_rank() const;
  std::string to_string() const;

  friend bool operator==(const KSet&, const KSet&) = default;
  friend std::strong_ordering operator<=>(const KSet& a, const KSet& b);

 private:
  std::vector<Element> elems_;
};

/// Visits every k-subset of {0..m-1} in colex order.
void for_each_kset(int m, int k, const std::function<void(const KSet&)>& fn);
std::vector<KSet> all_ksets(int m, int k);

/// Dense index for all k-sets with 1 <= k <= n of an m-set: sets of size k
/// occupy a contiguous block ordered by colex rank.
class KSetIndexer {
 public:
  KSetIndexer(int m, int n);

  int order() const noexcept { return m_; }
  int max_size() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return offsets_.back(); }
  std::uint64_t count(int k) const { return offsets_[k] - offsets_[k - 1]; }
  std::uint64_t index(const KSet& s) const { return offsets_[s.size() - 1] + s.colex_rank(); }
  /// Index of the set of distinct components of `tuple`.
  std::uint64_t index_of_components(std::span<const Element> tuple) const;
  KSet set_at(std::uint64_t idx) const;

 private:
  int m_;
  int n_;
  std::vector<std::uint64_t> offsets_;  // offsets_[k-1] = first index of size k
};

/// Row-major odometer over {0..m-1}^n, last coordinate fastest.
void for_each_tuple(int m, int n, const std::function<void(std::span<const Element>)>& fn);

/// Number of distinct components of a tuple whose entries are < m.
int distinct_count(std::span<const Element> tuple);

/// Permutations of {0..m-1} as image vectors.
using Permutation = std::vector<Element>;

bool is_permutation_of(std::span<const Element> perm, int m);
Permutation identity_permutation(int m);
/// (a ∘ b)(x) = a(b(x)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// One-line cycle notation, fixed points omitted; the identity prints as "()".
std::string cycle_notation(const Permutation& p);

}  // namespace magmaforge
