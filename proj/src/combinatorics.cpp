#include "magmaforge/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "magmaforge/error.hpp"

namespace magmaforge {

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw Error(Errc::CapExceeded, "binomial C(" + std::to_string(n) + "," +
                                         std::to_string(k) + ") overflows 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t checked_power(std::uint64_t m, int n, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (int i = 0; i < n; ++i) {
    if (m != 0 && result > cap / m)
      throw Error(Errc::CapExceeded, std::to_string(m) + "^" + std::to_string(n) +
                                         " exceeds cap " + std::to_string(cap));
    result *= m;
  }
  if (result > cap)
    throw Error(Errc::CapExceeded, std::to_string(m) + "^" + std::to_string(n) +
                                       " exceeds cap " + std::to_string(cap));
  return result;
}

KSet::KSet(std::initializer_list<Element> elems) : KSet(std::vector<Element>(elems)) {}

KSet::KSet(std::vector<Element> sorted_elems) : elems_(std::move(sorted_elems)) {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 0 || (i > 0 && elems_[i - 1] >= elems_[i]))
      throw Error(Errc::DomainError, "k-set must be strictly increasing and nonnegative");
  }
}

KSet KSet::from_unsorted(std::vector<Element> elems) {
  std::sort(elems.begin(), elems.end());
  return KSet(std::move(elems));
}

KSet KSet::colex_unrank(std::uint64_t rank, int k) {
  std::vector<Element> out(k);
  for (int i = k; i >= 1; --i) {
    // largest c with C(c, i) <= rank
    std::uint64_t c = static_cast<std::uint64_t>(i - 1);
    while (binomial_u64(c + 1, i) <= rank) ++c;
    out[i - 1] = static_cast<Element>(c);
    rank -= binomial_u64(c, i);
  }
  return KSet(std::move(out));
}

bool KSet::contains(Element x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

std::uint64_t KSet::colex_rank() const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < elems_.size(); ++i) r += binomial_u64(elems_[i], i + 1);
  return r;
}

std::string KSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elems_.size(); ++i) os << (i ? " " : "") << elems_[i];
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const KSet& a, const KSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (auto c = a.elems_[i] <=> b.elems_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void for_each_kset(int m, int k, const std::function<void(const KSet&)>& fn) {
  if (k < 0 || k > m) return;
  std::vector<Element> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    fn(KSet(cur));
    int i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : m)) ++i;
    if (i == k) return;
    ++cur[i];
    for (int j = 0; j < i; ++j) cur[j] = j;
  }
}

std::vector<KSet> all_ksets(int m, int k) {
  std::vector<KSet> out;
  for_each_kset(m, k, [&](const KSet& s) { out.push_back(s); });
  return out;
}

KSetIndexer::KSetIndexer(int m, int n) : m_(m), n_(n), offsets_(n + 1, 0) {
  for (int k = 1; k <= n; ++k) offsets_[k] = offsets_[k - 1] + binomial_u64(m, k);
}

std::uint64_t KSetIndexer::index_of_components(std::span<const Element> tuple) const {
  Element buf[64];
  std::vector<Element> heap;
  Element* data = buf;
  if (tuple.size() > 64) {
    heap.assign(tuple.begin(), tuple.end());
    data = heap.data();
  } else {
    std::copy(tuple.begin(), tuple.end(), buf);
  }
  std::sort(data, data + tuple.size());
  Element* last = std::unique(data, data + tuple.size());
  std::uint64_t rank = 0;
  std::size_t k = static_cast<std::size_t>(last - data);
  for (std::size_t i = 0; i < k; ++i) rank += binomial_u64(data[i], i + 1);
  return offsets_[k - 1] + rank;
}

KSet KSetIndexer::set_at(std::uint64_t idx) const {
  int k = 1;
  while (idx >= offsets_[k]) ++k;
  return KSet::colex_unrank(idx - offsets_[k - 1], k);
}

void for_each_tuple(int m, int n, const std::function<void(std::span<const Element>)>& fn) {
  if (m <= 0) return;
  std::vector<Element> t(n, 0);
  while (true) {
    fn(t);
    int i = n - 1;
    while (i >= 0 && t[i] == m - 1) t[i--] = 0;
    if (i < 0) return;
    ++t[i];
  }
}

int distinct_count(std::span<const Element> tuple) {
  int count = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    bool seen = false;
    for (std::size_t j = 0; j < i && !seen; ++j) seen = tuple[j] == tuple[i];
    if (!seen) ++count;
  }
  return count;
}

bool is_permutation_of(std::span<const Element> perm, int m) {
  if (static_cast<int>(perm.size()) != m) return false;
  std::vector<char> seen(m, 0);
  for (Element x : perm) {
    if (x < 0 || x >= m || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation identity_permutation(int m) {
  Permutation p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[b[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<Element>(x);
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> done(p.size(), 0);
  bool any = false;
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (done[start] || p[start] == static_cast<Element>(start)) continue;
    any = true;
    os << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      os << (first ? "" : " ") << x;
      first = false;
      x = static_cast<std::size_t>(p[x]);
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

}  // namespace magmaforge
