#include "magmaforge/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>

namespace magmaforge {

Limits Limits::from_env() {
  Limits lim;
  const char* raw = std::getenv("MAGMA_FORGE_CAP");
  if (raw == nullptr) return lim;
  std::uint64_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0) return lim;
  lim.table = value;
  lim.search_nodes = value;
  lim.group_order = std::numeric_limits<int>::max();
  lim.aut_order_binary = std::numeric_limits<int>::max();
  lim.aut_order_higher = std::numeric_limits<int>::max();
  lim.congruence_order = std::numeric_limits<int>::max();
  return lim;
}

const Limits& Limits::standard() {
  static const Limits lim = from_env();
  return lim;
}

Limits Limits::unbounded() {
  Limits lim;
  lim.table = std::numeric_limits<std::uint64_t>::max();
  lim.search_nodes = std::numeric_limits<std::uint64_t>::max();
  lim.group_order = std::numeric_limits<int>::max();
  lim.aut_order_binary = std::numeric_limits<int>::max();
  lim.aut_order_higher = std::numeric_limits<int>::max();
  lim.congruence_order = std::numeric_limits<int>::max();
  return lim;
}

}  // namespace magmaforge
