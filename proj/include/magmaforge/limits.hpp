#pragma once

#include <cstdint>

namespace magmaforge {

/// Desk-scale caps. Every search that could blow up checks one of these and
/// throws Errc::CapExceeded instead of running away.
///
/// Setting MAGMA_FORGE_CAP=N in the environment raises `table` and
/// `search_nodes` to N and lifts the element-order caps, leaving the tuple
/// cap as the only bound.
struct Limits {
  std::uint64_t table = 10'000'000;          // m^n cells in an operation table
  std::uint64_t search_nodes = 200'000'000;  // backtracking nodes / streamed objects
  int group_order = 60;                      // subgroup enumeration
  int aut_order_binary = 12;                 // automorphism search, n = 2
  int aut_order_higher = 9;                  // automorphism search, n >= 3
  int congruence_order = 64;                 // congruence lattice search

  static const Limits& standard();
  static Limits from_env();
  static Limits unbounded();
};

}  // namespace magmaforge
