#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "magmaforge/combinatorics.hpp"
#include "magmaforge/limits.hpp"

namespace magmaforge {

/// A finite n-ary magma (A, f) on {0..m-1}. The table is row-major with the
/// first argument outermost: index(a1..an) = sum a_i * m^(n-i).
class FiniteMagma {
 public:
  /// Validates shape and entries; throws LengthMismatch, EntryOutOfRange or
  /// CapExceeded.
  static FiniteMagma make(int order, int arity, std::vector<Element> table,
                          const Limits& lim = Limits::standard());

  int order() const noexcept { return order_; }
  int arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return table_.size(); }
  std::span<const Element> table() const noexcept { return table_; }

  std::uint64_t index(std::span<const Element> args) const;
  std::vector<Element> tuple_at(std::uint64_t idx) const;
  Element apply(std::span<const Element> args) const { return table_[index(args)]; }
  Element apply(std::initializer_list<Element> args) const {
    return apply(std::span<const Element>(args.begin(), args.size()));
  }
  Element at(std::uint64_t idx) const { return table_[idx]; }

  friend bool operator==(const FiniteMagma&, const FiniteMagma&) = default;

 private:
  FiniteMagma(int order, int arity, std::vector<Element> table)
      : order_(order), arity_(arity), table_(std::move(table)) {}

  int order_ = 0;
  int arity_ = 0;
  std::vector<Element> table_;
};

/// Result of the exhaustive property scan.
struct PropertyReport {
  bool conservative = false;
  bool essentially_polyadic = false;
  bool fair = false;
  bool strongly_fair = false;
  bool nondegenerate = false;
  /// per_k_counts[k-1][a] = |f^-1(a) ∩ A_k|, A_k the tuples with exactly k
  /// distinct components.
  std::vector<std::vector<std::uint64_t>> per_k_counts;

  std::vector<std::uint64_t> preimage_sizes() const;
  bool all() const {
    return conservative && essentially_polyadic && strongly_fair && nondegenerate;
  }
  bool prps() const { return essentially_polyadic && strongly_fair && nondegenerate; }
};

PropertyReport classify(const FiniteMagma& a);

/// A map g from every k-set (1 <= k <= n) of {0..m-1} to an element.
class Pointing {
 public:
  Pointing(int order, int arity);
  Pointing(int order, int arity, std::vector<Element> values);

  int order() const noexcept { return indexer_.order(); }
  int arity() const noexcept { return arity_; }
  const KSetIndexer& indexer() const noexcept { return indexer_; }
  std::span<const Element> values() const noexcept { return values_; }

  Element at(const KSet& s) const { return values_[indexer_.index(s)]; }
  void set(const KSet& s, Element w) { values_[indexer_.index(s)] = w; }
  Element at_index(std::uint64_t idx) const { return values_[idx]; }
  void set_index(std::uint64_t idx, Element w) { values_[idx] = w; }

  /// g(U) ∈ U for every U.
  bool is_conservative() const;

  friend bool operator==(const Pointing& a, const Pointing& b) {
    return a.order() == b.order() && a.arity() == b.arity() && a.values_ == b.values_;
  }

 private:
  int arity_;
  KSetIndexer indexer_;
  std::vector<Element> values_;
};

/// Two tuples with the same component set but different outputs.
struct PolyadicWitness {
  std::vector<Element> first;
  std::vector<Element> second;
};

std::optional<PolyadicWitness> polyadic_witness(const FiniteMagma& a);
/// Throws NotEssentiallyPolyadic carrying the lexicographically first conflict.
Pointing extract_pointing(const FiniteMagma& a);
FiniteMagma from_pointing(const Pointing& p, const Limits& lim = Limits::standard());

/// Componentwise product; the pair (x, y) is encoded as x * |B| + y.
FiniteMagma direct_product(const FiniteMagma& a, const FiniteMagma& b,
                           const Limits& lim = Limits::standard());

struct Subalgebra {
  FiniteMagma magma;
  /// embedding[i] = original element for new element i.
  std::vector<Element> embedding;
};

/// Subalgebra on `subset`; throws NotClosed with the first escaping tuple.
Subalgebra restrict_to(const FiniteMagma& a, std::span<const Element> subset);

/// f_sigma(x) = sigma(f(x)).
FiniteMagma permute_outputs(const FiniteMagma& a, const Permutation& sigma);

/// alpha(x, y) = f(x, y, ..., y).
FiniteMagma derived_binary(const FiniteMagma& a);

/// Backtracking isomorphism search. Returns phi with phi(f_A(x)) = f_B(phi x).
std::optional<Permutation> isomorphic(const FiniteMagma& a, const FiniteMagma& b);

/// Isomorphism-invariant signature of each element: its preimage count in
/// each stratum A_k, followed by whether it is idempotent.
std::vector<std::vector<std::uint64_t>> element_signatures(const FiniteMagma& a);

/// Enumerates every isomorphism a -> b. The callback returns false to stop.
void for_each_isomorphism(const FiniteMagma& a, const FiniteMagma& b,
                          const std::function<bool(const Permutation&)>& visit);

}  // namespace magmaforge
