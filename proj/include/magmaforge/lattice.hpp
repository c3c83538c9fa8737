#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "magmaforge/combinatorics.hpp"
#include "magmaforge/limits.hpp"

namespace magmaforge {

/// A partition of {0..m-1}. Blocks are labelled in order of their least
/// element, so equal partitions have equal label vectors.
class Partition {
 public:
  /// The discrete partition.
  explicit Partition(int m = 0);
  static Partition from_labels(std::vector<int> labels);
  static Partition from_blocks(int m, const std::vector<std::vector<Element>>& blocks);
  static Partition total(int m);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int block_count() const noexcept { return blocks_; }
  int block_of(Element x) const { return labels_[x]; }
  std::span<const int> labels() const noexcept { return labels_; }
  std::vector<std::vector<Element>> blocks() const;
  /// Blocks ordered by least element, singletons included: {0 3 6}{1 4 7}.
  std::string to_string() const;

  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  static Partition join(const Partition& a, const Partition& b);
  static Partition meet(const Partition& a, const Partition& b);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.labels_ <=> b.labels_; }

 private:
  std::vector<int> labels_;
  int blocks_ = 0;
};

/// A finite lattice given by its order relation; joins and meets are derived
/// and the constructor throws NotALattice if some pair lacks one.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  FiniteLattice(int size, const std::function<bool(int, int)>& leq);

  int size() const noexcept { return n_; }
  bool leq(int a, int b) const { return leq_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int bottom() const noexcept { return bottom_; }
  int top() const noexcept { return top_; }

 private:
  int n_ = 0;
  std::vector<char> leq_;
  std::vector<int> join_;
  std::vector<int> meet_;
  int bottom_ = 0;
  int top_ = 0;
};

bool lattice_isomorphic(const FiniteLattice& a, const FiniteLattice& b,
                        const Limits& lim = Limits::standard());
/// x ^ (y v z) = (x ^ y) v (x ^ z) for every triple.
bool is_distributive(const FiniteLattice& l);

}  // namespace magmaforge
