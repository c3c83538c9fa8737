#include "magmaforge/magma.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "magmaforge/error.hpp"

namespace magmaforge {

namespace {

std::string tuple_string(std::span<const Element> t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

}  // namespace

FiniteMagma FiniteMagma::make(int order, int arity, std::vector<Element> table,
                              const Limits& lim) {
  if (order < 1 || arity < 1)
    throw Error(Errc::DomainError, "order and arity must be positive");
  const std::uint64_t expected = checked_power(order, arity, lim.table);
  if (table.size() != expected)
    throw Error(Errc::LengthMismatch, "table has " + std::to_string(table.size()) +
                                          " entries, expected " + std::to_string(expected));
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] < 0 || table[i] >= order)
      throw Error(Errc::EntryOutOfRange, "entry " + std::to_string(i) + " = " +
                                             std::to_string(table[i]) + " not below order " +
                                             std::to_string(order));
  }
  return FiniteMagma(order, arity, std::move(table));
}

std::uint64_t FiniteMagma::index(std::span<const Element> args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw Error(Errc::ArityMismatch, "expected " + std::to_string(arity_) + " arguments");
  std::uint64_t idx = 0;
  for (Element a : args) idx = idx * static_cast<std::uint64_t>(order_) + static_cast<std::uint64_t>(a);
  return idx;
}

std::vector<Element> FiniteMagma::tuple_at(std::uint64_t idx) const {
  std::vector<Element> t(arity_);
  for (int i = arity_ - 1; i >= 0; --i) {
    t[i] = static_cast<Element>(idx % order_);
    idx /= order_;
  }
  return t;
}

std::vector<std::uint64_t> PropertyReport::preimage_sizes() const {
  std::vector<std::uint64_t> total;
  for (const auto& row : per_k_counts) {
    if (total.empty()) total.assign(row.size(), 0);
    for (std::size_t a = 0; a < row.size(); ++a) total[a] += row[a];
  }
  return total;
}

PropertyReport classify(const FiniteMagma& a) {
  const int m = a.order();
  const int n = a.arity();
  PropertyReport r;
  r.per_k_counts.assign(n, std::vector<std::uint64_t>(m, 0));
  r.conservative = true;
  r.essentially_polyadic = true;

  const KSetIndexer indexer(m, std::min(n, m));
  std::vector<Element> by_set(indexer.count(), -1);
  std::uint64_t idx = 0;
  for_each_tuple(m, n, [&](std::span<const Element> t) {
    const Element out = a.at(idx++);
    const int k = distinct_count(t);
    ++r.per_k_counts[k - 1][out];
    if (r.conservative && std::find(t.begin(), t.end(), out) == t.end()) r.conservative = false;
    if (r.essentially_polyadic) {
      Element& slot = by_set[indexer.index_of_components(t)];
      if (slot < 0)
        slot = out;
      else if (slot != out)
        r.essentially_polyadic = false;
    }
  });

  auto all_equal = [](const std::vector<std::uint64_t>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end();
  };
  r.strongly_fair = std::all_of(r.per_k_counts.begin(), r.per_k_counts.end(), all_equal);
  r.fair = all_equal(r.preimage_sizes());
  r.nondegenerate = m > n;
  return r;
}

Pointing::Pointing(int order, int arity)
    : arity_(arity), indexer_(order, std::min(order, arity)), values_(indexer_.count(), 0) {
  if (order < 1 || arity < 1) throw Error(Errc::DomainError, "order and arity must be positive");
  for (std::uint64_t i = 0; i < indexer_.count(); ++i) values_[i] = indexer_.set_at(i).min();
}

Pointing::Pointing(int order, int arity, std::vector<Element> values)
    : arity_(arity), indexer_(order, std::min(order, arity)), values_(std::move(values)) {
  if (order < 1 || arity < 1) throw Error(Errc::DomainError, "order and arity must be positive");
  if (values_.size() != indexer_.count())
    throw Error(Errc::LengthMismatch, "pointing needs " + std::to_string(indexer_.count()) +
                                          " values, got " + std::to_string(values_.size()));
  for (Element v : values_) {
    if (v < 0 || v >= order) throw Error(Errc::EntryOutOfRange, "pointing value out of range");
  }
}

bool Pointing::is_conservative() const {
  for (std::uint64_t i = 0; i < values_.size(); ++i) {
    if (!indexer_.set_at(i).contains(values_[i])) return false;
  }
  return true;
}

std::optional<PolyadicWitness> polyadic_witness(const FiniteMagma& a) {
  const KSetIndexer indexer(a.order(), std::min(a.order(), a.arity()));
  std::vector<std::int64_t> first_tuple(indexer.count(), -1);
  const auto table = a.table();
  for (std::uint64_t i = 0; i < table.size(); ++i) {
    const auto t = a.tuple_at(i);
    const auto s = indexer.index_of_components(t);
    if (first_tuple[s] < 0) {
      first_tuple[s] = static_cast<std::int64_t>(i);
    } else if (table[first_tuple[s]] != table[i]) {
      return PolyadicWitness{a.tuple_at(static_cast<std::uint64_t>(first_tuple[s])), t};
    }
  }
  return std::nullopt;
}

Pointing extract_pointing(const FiniteMagma& a) {
  if (auto w = polyadic_witness(a)) {
    throw Error(Errc::NotEssentiallyPolyadic,
                "f" + tuple_string(w->first) + " = " + std::to_string(a.apply(w->first)) +
                    " but f" + tuple_string(w->second) + " = " + std::to_string(a.apply(w->second)));
  }
  Pointing p(a.order(), a.arity());
  std::vector<char> seen(p.indexer().count(), 0);
  std::uint64_t idx = 0;
  for_each_tuple(a.order(), a.arity(), [&](std::span<const Element> t) {
    const auto s = p.indexer().index_of_components(t);
    if (!seen[s]) {
      seen[s] = 1;
      p.set_index(s, a.at(idx));
    }
    ++idx;
  });
  return p;
}

FiniteMagma from_pointing(const Pointing& p, const Limits& lim) {
  const int m = p.order();
  const int n = p.arity();
  std::vector<Element> table;
  table.reserve(checked_power(m, n, lim.table));
  for_each_tuple(m, n, [&](std::span<const Element> t) {
    table.push_back(p.at_index(p.indexer().index_of_components(t)));
  });
  return FiniteMagma::make(m, n, std::move(table), lim);
}

FiniteMagma direct_product(const FiniteMagma& a, const FiniteMagma& b, const Limits& lim) {
  if (a.arity() != b.arity()) throw Error(Errc::ArityMismatch, "direct product needs equal arity");
  const int mb = b.order();
  const int m = a.order() * mb;
  const int n = a.arity();
  std::vector<Element> table;
  table.reserve(checked_power(m, n, lim.table));
  std::vector<Element> left(n), right(n);
  for_each_tuple(m, n, [&](std::span<const Element> t) {
    for (int i = 0; i < n; ++i) {
      left[i] = t[i] / mb;
      right[i] = t[i] % mb;
    }
    table.push_back(a.apply(left) * mb + b.apply(right));
  });
  return FiniteMagma::make(m, n, std::move(table), lim);
}

Subalgebra restrict_to(const FiniteMagma& a, std::span<const Element> subset) {
  std::vector<Element> elems(subset.begin(), subset.end());
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty()) throw Error(Errc::DomainError, "subset must be nonempty");
  if (elems.front() < 0 || elems.back() >= a.order())
    throw Error(Errc::EntryOutOfRange, "subset element outside the universe");
  std::vector<Element> position(a.order(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) position[elems[i]] = static_cast<Element>(i);

  const int k = static_cast<int>(elems.size());
  std::vector<Element> table;
  std::vector<Element> args(a.arity());
  for_each_tuple(k, a.arity(), [&](std::span<const Element> t) {
    for (int i = 0; i < a.arity(); ++i) args[i] = elems[t[i]];
    const Element out = a.apply(args);
    if (position[out] < 0)
      throw Error(Errc::NotClosed, "f" + tuple_string(args) + " = " + std::to_string(out) +
                                       " leaves the subset");
    table.push_back(position[out]);
  });
  return {FiniteMagma::make(k, a.arity(), std::move(table)), std::move(elems)};
}

FiniteMagma permute_outputs(const FiniteMagma& a, const Permutation& sigma) {
  if (!is_permutation_of(sigma, a.order()))
    throw Error(Errc::NotPermutation, "sigma is not a bijection on the universe");
  std::vector<Element> table(a.table().begin(), a.table().end());
  for (Element& x : table) x = sigma[x];
  return FiniteMagma::make(a.order(), a.arity(), std::move(table));
}

FiniteMagma derived_binary(const FiniteMagma& a) {
  if (a.arity() < 2) throw Error(Errc::BadArity, "derived binary term needs arity >= 2");
  const int m = a.order();
  std::vector<Element> table;
  table.reserve(static_cast<std::size_t>(m) * m);
  std::vector<Element> args(a.arity());
  for (Element x = 0; x < m; ++x) {
    for (Element y = 0; y < m; ++y) {
      args[0] = x;
      std::fill(args.begin() + 1, args.end(), y);
      table.push_back(a.apply(args));
    }
  }
  return FiniteMagma::make(m, 2, std::move(table));
}

std::vector<std::vector<std::uint64_t>> element_signatures(const FiniteMagma& a) {
  const PropertyReport r = classify(a);
  std::vector<std::vector<std::uint64_t>> sig(a.order());
  std::vector<Element> diag(a.arity());
  for (Element x = 0; x < a.order(); ++x) {
    for (const auto& row : r.per_k_counts) sig[x].push_back(row[x]);
    std::fill(diag.begin(), diag.end(), x);
    sig[x].push_back(a.apply(diag) == x ? 1 : 0);
  }
  return sig;
}

namespace {

// Backtracking with forward propagation: once the images of x1..xn are fixed,
// the image of f(x1..xn) is forced.
class IsoSearch {
 public:
  IsoSearch(const FiniteMagma& a, const FiniteMagma& b)
      : a_(a), b_(b), m_(a.order()), n_(a.arity()),
        sig_a_(element_signatures(a)), sig_b_(element_signatures(b)),
        phi_(m_, -1), inv_(m_, -1) {}

  void run(const std::function<bool(const Permutation&)>& visit) {
    if (a_.order() != b_.order() || a_.arity() != b_.arity()) return;
    auto sa = sig_a_, sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
    visit_ = &visit;
    search();
  }

 private:
  bool search() {
    Element x = 0;
    while (x < m_ && phi_[x] >= 0) ++x;
    if (x == m_) return (*visit_)(phi_);
    for (Element y = 0; y < m_; ++y) {
      if (inv_[y] >= 0 || sig_a_[x] != sig_b_[y]) continue;
      const std::size_t mark = trail_.size();
      const bool ok = propagate(x, y);
      if (ok && !search()) return false;
      undo(mark);
    }
    return true;
  }

  bool propagate(Element x0, Element y0) {
    std::vector<std::pair<Element, Element>> queue{{x0, y0}};
    std::vector<Element> ta(n_), tb(n_);
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      if (phi_[x] >= 0) {
        if (phi_[x] != y) return false;
        continue;
      }
      if (inv_[y] >= 0 || sig_a_[x] != sig_b_[y]) return false;
      phi_[x] = y;
      inv_[y] = x;
      trail_.push_back(x);
      // every tuple over the assigned elements that mentions x
      const int s = static_cast<int>(trail_.size());
      bool failed = false;
      for_each_tuple(s, n_, [&](std::span<const Element> t) {
        if (failed) return;
        bool has_x = false;
        for (int i = 0; i < n_; ++i) {
          ta[i] = trail_[t[i]];
          has_x |= ta[i] == x;
          tb[i] = phi_[ta[i]];
        }
        if (!has_x) return;
        const Element out = a_.apply(ta);
        const Element img = b_.apply(tb);
        if (phi_[out] >= 0) {
          if (phi_[out] != img) failed = true;
        } else if (inv_[img] >= 0) {
          failed = true;
        } else {
          queue.emplace_back(out, img);
        }
      });
      if (failed) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Element x = trail_.back();
      trail_.pop_back();
      inv_[phi_[x]] = -1;
      phi_[x] = -1;
    }
  }

  const FiniteMagma& a_;
  const FiniteMagma& b_;
  int m_;
  int n_;
  std::vector<std::vector<std::uint64_t>> sig_a_;
  std::vector<std::vector<std::uint64_t>> sig_b_;
  Permutation phi_;
  Permutation inv_;
  std::vector<Element> trail_;
  const std::function<bool(const Permutation&)>* visit_ = nullptr;
};

}  // namespace

void for_each_isomorphism(const FiniteMagma& a, const FiniteMagma& b,
                          const std::function<bool(const Permutation&)>& visit) {
  IsoSearch(a, b).run(visit);
}

std::optional<Permutation> isomorphic(const FiniteMagma& a, const FiniteMagma& b) {
  std::optional<Permutation> found;
  for_each_isomorphism(a, b, [&](const Permutation& p) {
    found = p;
    return false;
  });
  return found;
}

}  // namespace magmaforge
