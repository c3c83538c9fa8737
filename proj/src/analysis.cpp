#include "magmaforge/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "magmaforge/error.hpp"

namespace magmaforge {

std::vector<Permutation> automorphisms(const FiniteMagma& a, const Limits& lim) {
  const int cap = a.arity() <= 2 ? lim.aut_order_binary : lim.aut_order_higher;
  if (a.order() > cap)
    throw Error(Errc::CapExceeded, "automorphism search capped at order " + std::to_string(cap));
  std::vector<Permutation> out;
  for_each_isomorphism(a, a, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const FiniteMagma& a, const Permutation& phi) {
  if (!is_permutation_of(phi, a.order())) return false;
  std::vector<Element> img(a.arity());
  std::uint64_t idx = 0;
  bool ok = true;
  for_each_tuple(a.order(), a.arity(), [&](std::span<const Element> t) {
    if (!ok) return;
    for (int i = 0; i < a.arity(); ++i) img[i] = phi[t[i]];
    ok = phi[a.at(idx++)] == a.apply(img);
  });
  return ok;
}

bool is_lambda_automorphism(const ObverseIndex& idx, const SignFunction& lambda, const Permutation& phi) {
  for (const auto& c : idx.classes()) {
    if (!lambda_picks(idx, lambda, apply_permutation(phi, lambda.at(c.key)))) return false;
  }
  return true;
}

std::vector<Permutation> lambda_automorphisms(const FiniteGroup& g, int n, const SignFunction& lambda,
                                              const Limits& lim) {
  if (g.order() > lim.group_order)
    throw Error(Errc::CapExceeded, "group automorphisms capped at order " + std::to_string(lim.group_order));
  validate_sign_function(g, lambda);
  const ObverseIndex idx(g, n);
  std::vector<Permutation> out;
  for (auto& phi : group_automorphisms(g, lim)) {
    if (is_lambda_automorphism(idx, lambda, phi)) out.push_back(std::move(phi));
  }
  return out;
}

bool is_correlated(const FiniteGroup& g, int n, const SignFunction& lambda) {
  const ObverseIndex idx(g, n);
  for (const auto& c : inner_automorphisms(g)) {
    if (!is_lambda_automorphism(idx, lambda, c)) return false;
  }
  return true;
}

bool is_congruence(const FiniteMagma& a, const Partition& p) {
  if (p.size() != a.order()) throw Error(Errc::DomainError, "partition size differs from the magma order");
  // compare each element with the least member of its block, in every slot
  const auto blocks = p.blocks();
  std::vector<Element> lead(a.order());
  for (const auto& b : blocks) {
    for (Element x : b) lead[x] = b.front();
  }
  std::vector<Element> t2(a.arity());
  std::uint64_t idx = 0;
  bool ok = true;
  for_each_tuple(a.order(), a.arity(), [&](std::span<const Element> t) {
    if (!ok) return;
    const Element out = a.at(idx++);
    for (int i = 0; i < a.arity() && ok; ++i) {
      if (lead[t[i]] == t[i]) continue;
      std::copy(t.begin(), t.end(), t2.begin());
      t2[i] = lead[t[i]];
      ok = p.block_of(a.apply(t2)) == p.block_of(out);
    }
  });
  return ok;
}

Partition congruence_closure(const FiniteMagma& a, const Partition& seed) {
  const int m = a.order();
  const int n = a.arity();
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::pair<Element, Element>> work;
  auto unite = [&](Element x, Element y) {
    const int rx = find(x), ry = find(y);
    if (rx == ry) return;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    work.emplace_back(x, y);
  };
  for (const auto& b : seed.blocks()) {
    for (std::size_t i = 1; i < b.size(); ++i) unite(b[0], b[i]);
  }
  // every unary translation of a merged pair must also be merged
  std::vector<Element> tx(n), ty(n);
  while (!work.empty()) {
    const auto [x, y] = work.back();
    work.pop_back();
    for (int pos = 0; pos < n; ++pos) {
      for_each_tuple(m, n - 1, [&](std::span<const Element> ctx) {
        for (int i = 0, j = 0; i < n; ++i) {
          if (i == pos) {
            tx[i] = x;
            ty[i] = y;
          } else {
            tx[i] = ty[i] = ctx[j++];
          }
        }
        unite(a.apply(tx), a.apply(ty));
      });
    }
  }
  std::vector<int> labels(m);
  for (int x = 0; x < m; ++x) labels[x] = find(x);
  return Partition::from_labels(std::move(labels));
}

Partition principal_congruence(const FiniteMagma& a, Element x, Element y) {
  if (x < 0 || y < 0 || x >= a.order() || y >= a.order())
    throw Error(Errc::EntryOutOfRange, "element outside the universe");
  if (x == y) return Partition(a.order());
  return congruence_closure(a, Partition::from_blocks(a.order(), {{x, y}}));
}

CongruenceLattice all_congruences(const FiniteMagma& a, const Limits& lim) {
  const int m = a.order();
  if (m > lim.congruence_order)
    throw Error(Errc::CapExceeded, "congruence search capped at order " + std::to_string(lim.congruence_order));
  std::set<Partition> found{Partition(m), Partition::total(m)};
  for (Element x = 0; x < m; ++x) {
    for (Element y = x + 1; y < m; ++y) found.insert(principal_congruence(a, x, y));
  }
  // the join of two congruences is the transitive closure of their union
  std::vector<Partition> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    const std::vector<Partition> all(found.begin(), found.end());
    for (const auto& p : frontier) {
      for (const auto& q : all) {
        Partition j = Partition::join(p, q);
        if (found.insert(j).second) {
          if (found.size() > lim.search_nodes) throw Error(Errc::CapExceeded, "too many congruences");
          next.push_back(std::move(j));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Partition> cons(found.begin(), found.end());
  std::stable_sort(cons.begin(), cons.end(), [](const Partition& p, const Partition& q) {
    return p.block_count() > q.block_count();
  });
  FiniteLattice lat(static_cast<int>(cons.size()), [&](int i, int j) { return cons[i].refines(cons[j]); });
  return {std::move(cons), std::move(lat)};
}

bool is_simple(const FiniteMagma& a, const Limits& lim) {
  if (a.order() < 2) return false;
  if (a.order() > lim.congruence_order)
    throw Error(Errc::CapExceeded, "congruence search capped at order " + std::to_string(lim.congruence_order));
  for (Element x = 0; x < a.order(); ++x) {
    for (Element y = x + 1; y < a.order(); ++y) {
      if (principal_congruence(a, x, y).block_count() != 1) return false;
    }
  }
  return true;
}

std::size_t count_isomorphism_classes(const std::vector<FiniteMagma>& magmas) {
  std::vector<const FiniteMagma*> reps;
  for (const auto& a : magmas) {
    bool fresh = true;
    for (const auto* r : reps) {
      if (isomorphic(*r, a)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(&a);
  }
  return reps.size();
}

namespace {

Partition coset_partition(const FiniteGroup& g, const std::vector<Element>& h) {
  std::vector<int> labels(g.order(), -1);
  int next = 0;
  for (Element a = 0; a < g.order(); ++a) {
    if (labels[a] >= 0) continue;
    for (Element x : h) labels[g.mul(a, x)] = next;
    ++next;
  }
  return Partition::from_labels(std::move(labels));
}

bool subset_of(const std::vector<Element>& a, const std::vector<Element>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<std::vector<Element>> lambda_convex_subgroups(const FiniteGroup& g, int n,
                                                          const SignFunction& lambda, const Limits& lim) {
  const FiniteMagma a = build_regular(g, n, lambda, lim);
  std::vector<std::vector<Element>> out;
  for (auto& h : subgroups(g, lim)) {
    if (is_congruence(a, coset_partition(g, h))) out.push_back(std::move(h));
  }
  return out;
}

bool is_chain(const std::vector<std::vector<Element>>& subgroups) {
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (std::size_t j = i + 1; j < subgroups.size(); ++j) {
      if (!subset_of(subgroups[i], subgroups[j]) && !subset_of(subgroups[j], subgroups[i])) return false;
    }
  }
  return true;
}

CosetPosetLattice coset_poset_and_antichain_lattice(const FiniteGroup& g,
                                                    const std::vector<std::vector<Element>>& convex,
                                                    const Limits& lim) {
  if (!is_chain(convex)) throw Error(Errc::NotAChain, "the subgroups are not totally ordered");
  CosetPosetLattice out;
  std::set<std::vector<Element>> cosets;
  for (const auto& h : convex) {
    for (Element a = 0; a < g.order(); ++a) cosets.insert(left_coset(g, a, h));
  }
  out.cosets.assign(cosets.begin(), cosets.end());
  const int p = static_cast<int>(out.cosets.size());
  std::vector<char> below(static_cast<std::size_t>(p) * p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) below[i * p + j] = subset_of(out.cosets[i], out.cosets[j]);
  }
  auto comparable = [&](int i, int j) { return below[i * p + j] || below[j * p + i]; };

  std::vector<int> current;
  std::uint64_t nodes = 0;
  std::function<void(int)> rec = [&](int i) {
    if (++nodes > lim.search_nodes) throw Error(Errc::CapExceeded, "antichain enumeration node cap");
    if (i == p) {
      for (int x = 0; x < p; ++x) {
        bool covered = false;
        for (int c : current) covered = covered || comparable(x, c);
        if (!covered) return;
      }
      out.antichains.push_back(current);
      return;
    }
    bool free = true;
    for (int c : current) free = free && !comparable(i, c);
    if (free) {
      current.push_back(i);
      rec(i + 1);
      current.pop_back();
    }
    rec(i + 1);
  };
  rec(0);

  const auto& ac = out.antichains;
  out.lattice = FiniteLattice(static_cast<int>(ac.size()), [&](int u, int v) {
    for (int x : ac[u]) {
      bool inside = false;
      for (int y : ac[v]) inside = inside || below[x * p + y];
      if (!inside) return false;
    }
    return true;
  });
  return out;
}

Partition antichain_partition(const CosetPosetLattice& p, int antichain, int order) {
  std::vector<std::vector<Element>> blocks;
  for (int c : p.antichains.at(antichain)) blocks.push_back(p.cosets[c]);
  return Partition::from_blocks(order, blocks);
}

}  // namespace magmaforge
