#include "magmaforge/census.hpp"

#include <atomic>
#include <future>
#include <unordered_map>

#include "magmaforge/error.hpp"

namespace magmaforge {

namespace {

void require_admissible(int m, int n) {
  if (!admissible(m, n).admissible)
    throw Error(Errc::NotAdmissible, "(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
                                         ") violates n < lpd(m)");
}

BigCount product(const std::vector<CountFactor>& fs) {
  BigCount r = 1;
  for (const auto& f : fs) r *= f.value;
  return r;
}

}  // namespace

CoefficientSpec coefficient_spec(int m, int k) {
  if (m < 1 || k < 1 || k > m) throw Error(Errc::DomainError, "need 1 <= k <= m");
  const std::uint64_t c = binomial_u64(m, k);
  if (c % m != 0)
    throw Error(Errc::NotDivisible, std::to_string(m) + " does not divide C(" + std::to_string(m) + "," +
                                        std::to_string(k) + ")");
  return {m, k, c / m};
}

std::vector<CountFactor> count_prps_factors(int m, int n) {
  require_admissible(m, n);
  std::vector<CountFactor> out;
  for (int k = 1; k <= n; ++k) out.push_back({k, factorial(m) * count_kset_partitions(m, k)});
  return out;
}

BigCount count_prps(int m, int n) { return product(count_prps_factors(m, n)); }

std::vector<CountFactor> count_regular_rps_factors(int m, int n) {
  require_admissible(m, n);
  std::vector<CountFactor> out;
  for (int k = 1; k <= n; ++k) {
    const auto spec = coefficient_spec(m, k);
    out.push_back({k, boost::multiprecision::pow(BigCount(k), static_cast<unsigned>(spec.exponent))});
  }
  return out;
}

BigCount count_regular_rps(int m, int n) { return product(count_regular_rps_factors(m, n)); }

BigCount count_balanced_pointings(const CoefficientSpec& spec, const Limits& lim) {
  const int m = spec.m;
  const auto sets = all_ksets(m, spec.k);
  const std::size_t total = sets.size();
  const std::uint64_t base = spec.exponent + 1;
  std::vector<std::uint64_t> place(m, 1);
  for (int x = 1; x < m; ++x) {
    if (place[x - 1] > std::numeric_limits<std::uint64_t>::max() / base)
      throw Error(Errc::CapExceeded, "quota vector does not fit in 64 bits");
    place[x] = place[x - 1] * base;
  }
  // remaining[pos][x]: sets at positions >= pos containing x
  std::vector<std::vector<std::uint64_t>> remaining(total + 1, std::vector<std::uint64_t>(m, 0));
  for (std::size_t pos = total; pos-- > 0;) {
    remaining[pos] = remaining[pos + 1];
    for (Element x : sets[pos]) ++remaining[pos][x];
  }

  std::vector<std::unordered_map<std::uint64_t, BigCount>> memo(total);
  std::uint64_t states = 0;
  std::vector<std::uint64_t> quota(m, spec.exponent);

  std::function<BigCount(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t code) -> BigCount {
    if (pos == total) return 1;
    for (int x = 0; x < m; ++x) {
      if (quota[x] > remaining[pos][x]) return 0;
    }
    auto it = memo[pos].find(code);
    if (it != memo[pos].end()) return it->second;
    if (++states > lim.search_nodes) throw Error(Errc::CapExceeded, "coefficient state space exceeds the cap");
    BigCount sum = 0;
    for (Element x : sets[pos]) {
      if (quota[x] == 0) continue;
      --quota[x];
      sum += rec(pos + 1, code - place[x]);
      ++quota[x];
    }
    memo[pos].emplace(code, sum);
    return sum;
  };
  std::uint64_t start = 0;
  for (int x = 0; x < m; ++x) start += place[x] * spec.exponent;
  return rec(0, start);
}

std::vector<CountFactor> count_rps_factors(int m, int n, const Limits& lim) {
  require_admissible(m, n);
  // winners of different sizes are chosen independently, so |RPS(m,n)| is
  // the product of one coefficient per k
  std::vector<CountFactor> out;
  for (int k = 1; k <= n; ++k) out.push_back({k, count_balanced_pointings(coefficient_spec(m, k), lim)});
  return out;
}

BigCount count_rps(int m, int n, const Limits& lim) { return product(count_rps_factors(m, n, lim)); }

BigCount count_iso_classes_max_arity_cyclic(int p) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  BigCount r = 1;
  for (int k = 1; k <= p - 1; ++k) {
    const BigCount e = binomial(p, k) / p - 1;
    r *= boost::multiprecision::pow(BigCount(k), e.convert_to<unsigned>());
  }
  return r;
}

namespace {

class BruteSearch {
 public:
  BruteSearch(int m, int n, bool conservative, const Limits& lim)
      : m_(m), n_(n), conservative_(conservative), lim_(lim), pointing_(m, n) {
    for (int k = 1; k <= n; ++k) {
      quota_.push_back(std::vector<std::uint64_t>(m, binomial_u64(m, k) / m));
      for (const auto& s : all_ksets(m, k)) sets_.push_back(s);
    }
  }

  std::uint64_t run(const PointingVisitor& visit, int threads) {
    visit_ = visit ? &visit : nullptr;
    if (visit_ || threads <= 1 || sets_.empty()) return rec(0);
    // split on the winner of the first set
    std::vector<Element> first = candidates(0);
    std::vector<std::future<std::uint64_t>> jobs;
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      std::uint64_t sum = 0;
      for (std::size_t i; (i = next++) < first.size();) {
        BruteSearch copy(*this);
        copy.shared_nodes_ = &nodes_;
        copy.assign(0, first[i]);
        sum += copy.rec(1);
      }
      return sum;
    };
    for (int t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker));
    std::uint64_t total = 0;
    for (auto& j : jobs) total += j.get();
    return total;
  }

 private:
  std::vector<Element> candidates(std::size_t pos) const {
    std::vector<Element> out;
    if (conservative_) {
      out.assign(sets_[pos].begin(), sets_[pos].end());
    } else {
      for (Element x = 0; x < m_; ++x) out.push_back(x);
    }
    return out;
  }

  void assign(std::size_t pos, Element w) {
    auto& q = quota_[sets_[pos].size() - 1][w];
    if (q == 0) return;
    --q;
    pointing_.set(sets_[pos], w);
  }

  void count_node() {
    const std::uint64_t c = shared_nodes_ ? ++*shared_nodes_ : ++local_nodes_;
    if (c > lim_.search_nodes) throw Error(Errc::CapExceeded, "brute-force search exceeds the node cap");
  }

  std::uint64_t rec(std::size_t pos) {
    count_node();
    if (pos == sets_.size()) {
      if (visit_ && !(*visit_)(pointing_)) stopped_ = true;
      return 1;
    }
    auto& q = quota_[sets_[pos].size() - 1];
    std::uint64_t total = 0;
    for (Element w : candidates(pos)) {
      if (stopped_) break;
      if (q[w] == 0) continue;
      --q[w];
      pointing_.set(sets_[pos], w);
      total += rec(pos + 1);
      ++q[w];
    }
    return total;
  }

  int m_;
  int n_;
  bool conservative_;
  const Limits& lim_;
  Pointing pointing_;
  std::vector<KSet> sets_;
  std::vector<std::vector<std::uint64_t>> quota_;
  const PointingVisitor* visit_ = nullptr;
  bool stopped_ = false;
  std::uint64_t local_nodes_ = 0;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t>* shared_nodes_ = nullptr;

 public:
  BruteSearch(const BruteSearch& o)
      : m_(o.m_), n_(o.n_), conservative_(o.conservative_), lim_(o.lim_), pointing_(o.pointing_),
        sets_(o.sets_), quota_(o.quota_) {}
};

std::uint64_t brute(int m, int n, bool conservative, const PointingVisitor& visit, int threads,
                    const Limits& lim) {
  if (m < 1 || n < 1) throw Error(Errc::DomainError, "m and n must be positive");
  if (m <= n) return 0;
  for (int k = 1; k <= n; ++k) {
    if (binomial_u64(m, k) % m != 0) return 0;
  }
  return BruteSearch(m, n, conservative, lim).run(visit, threads);
}

}  // namespace

std::uint64_t brute_enumerate_prps(int m, int n, const PointingVisitor& visit, int threads,
                                   const Limits& lim) {
  return brute(m, n, false, visit, threads, lim);
}

std::uint64_t brute_enumerate_rps(int m, int n, const PointingVisitor& visit, int threads,
                                  const Limits& lim) {
  return brute(m, n, true, visit, threads, lim);
}

}  // namespace magmaforge
