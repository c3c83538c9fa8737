#include "magmaforge/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "magmaforge/error.hpp"

namespace magmaforge {

FiniteGroup FiniteGroup::from_table(int order, std::vector<Element> table) {
  if (order < 1) throw Error(Errc::InvalidGroup, "group order must be positive");
  const std::size_t m = static_cast<std::size_t>(order);
  if (table.size() != m * m)
    throw Error(Errc::InvalidGroup, "table has " + std::to_string(table.size()) + " entries, expected " +
                                        std::to_string(m * m));
  for (Element x : table) {
    if (x < 0 || x >= order) throw Error(Errc::InvalidGroup, "entry outside the universe");
  }
  auto mul = [&](Element a, Element b) { return table[a * m + b]; };

  Element e = -1;
  for (Element c = 0; c < order && e < 0; ++c) {
    bool ok = true;
    for (Element x = 0; x < order && ok; ++x) ok = mul(c, x) == x && mul(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw Error(Errc::InvalidGroup, "no identity element");

  std::vector<Element> inv(m, -1);
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      if (mul(a, b) == e && mul(b, a) == e) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) throw Error(Errc::InvalidGroup, "element " + std::to_string(a) + " has no inverse");
  }
  for (Element a = 0; a < order; ++a) {
    for (Element b = 0; b < order; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < order; ++c) {
        if (mul(ab, c) != mul(a, mul(b, c)))
          throw Error(Errc::InvalidGroup, "not associative at (" + std::to_string(a) + "," +
                                              std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  }
  FiniteGroup g;
  g.m_ = order;
  g.e_ = e;
  g.table_ = std::move(table);
  g.inv_ = std::move(inv);
  return g;
}

Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element r = e_;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

int FiniteGroup::element_order(Element a) const {
  int n = 1;
  for (Element x = a; x != e_; x = mul(x, a)) ++n;
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < m_; ++a) {
    for (Element b = a + 1; b < m_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup cyclic_group(int m) {
  if (m < 1) throw Error(Errc::DomainError, "cyclic group order must be positive");
  std::vector<Element> t(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) t[a * m + b] = (a + b) % m;
  }
  return FiniteGroup::from_table(m, std::move(t));
}

FiniteGroup direct_sum(std::span<const FiniteGroup> parts) {
  if (parts.empty()) throw Error(Errc::DomainError, "direct sum of no groups");
  long long total = 1;
  for (const auto& p : parts) {
    total *= p.order();
    if (total > 100000) throw Error(Errc::CapExceeded, "direct sum order too large");
  }
  const int m = static_cast<int>(total);
  const std::size_t r = parts.size();
  std::vector<Element> t(static_cast<std::size_t>(m) * m);
  std::vector<Element> xa(r), xb(r);
  auto decode = [&](Element x, std::vector<Element>& out) {
    for (std::size_t i = r; i-- > 0;) {
      out[i] = x % parts[i].order();
      x /= parts[i].order();
    }
  };
  for (Element a = 0; a < m; ++a) {
    decode(a, xa);
    for (Element b = 0; b < m; ++b) {
      decode(b, xb);
      Element c = 0;
      for (std::size_t i = 0; i < r; ++i) c = c * parts[i].order() + parts[i].mul(xa[i], xb[i]);
      t[static_cast<std::size_t>(a) * m + b] = c;
    }
  }
  return FiniteGroup::from_table(m, std::move(t));
}

FiniteGroup semidirect_cyclic(int m, int k, int t) {
  if (m < 1 || k < 1) throw Error(Errc::DomainError, "orders must be positive");
  const long long tm = ((t % m) + m) % m;
  long long tk = 1;
  for (int i = 0; i < k; ++i) tk = tk * tm % m;
  if (std::gcd(tm, static_cast<long long>(m)) != 1 || tk != 1 % m)
    throw Error(Errc::BadMultiplier, std::to_string(t) + "^" + std::to_string(k) +
                                         " is not 1 mod " + std::to_string(m) + " or not a unit");
  std::vector<long long> tpow(k, 1);
  for (int i = 1; i < k; ++i) tpow[i] = tpow[i - 1] * tm % m;
  const int order = m * k;
  std::vector<Element> table(static_cast<std::size_t>(order) * order);
  for (int i = 0; i < k; ++i) {
    for (int a = 0; a < m; ++a) {
      for (int j = 0; j < k; ++j) {
        for (int b = 0; b < m; ++b) {
          const int c = static_cast<int>((a + tpow[i] * b) % m);
          const int l = (i + j) % k;
          table[static_cast<std::size_t>(i * m + a) * order + (j * m + b)] = l * m + c;
        }
      }
    }
  }
  return FiniteGroup::from_table(order, std::move(table));
}

KSet translate(const FiniteGroup& g, Element s, const KSet& u) {
  std::vector<Element> out;
  out.reserve(u.size());
  for (Element x : u) out.push_back(g.mul(s, x));
  return KSet::from_unsorted(std::move(out));
}

KSet apply_permutation(const Permutation& p, const KSet& u) {
  std::vector<Element> out;
  out.reserve(u.size());
  for (Element x : u) out.push_back(p[x]);
  return KSet::from_unsorted(std::move(out));
}

OrbitFamily k_extension_orbits(const FiniteGroup& g, int k) {
  const int m = g.order();
  if (k < 1 || k > m) throw Error(Errc::DomainError, "need 1 <= k <= |G|");
  OrbitFamily fam;
  fam.k = k;
  std::vector<char> seen(binomial_u64(m, k), 0);
  for_each_kset(m, k, [&](const KSet& u) {
    if (seen[u.colex_rank()]) return;
    std::vector<KSet> orbit;
    for (Element s = 0; s < m; ++s) {
      KSet v = translate(g, s, u);
      auto& flag = seen[v.colex_rank()];
      if (!flag) {
        flag = 1;
        orbit.push_back(std::move(v));
      }
    }
    std::sort(orbit.begin(), orbit.end());
    fam.representatives.push_back(orbit.front());
    fam.orbits.push_back(std::move(orbit));
  });
  return fam;
}

std::optional<StabilizerWitness> extension_stabilizer(const FiniteGroup& g, int k) {
  const int m = g.order();
  if (k < 1 || k > m) throw Error(Errc::DomainError, "need 1 <= k <= |G|");
  // A stabilized set can be translated to one containing e.
  std::optional<StabilizerWitness> found;
  for_each_kset(m, k, [&](const KSet& u) {
    if (found || !u.contains(g.identity())) return;
    for (Element s = 0; s < m; ++s) {
      if (s == g.identity()) continue;
      if (translate(g, s, u) == u) {
        found = StabilizerWitness{s, u};
        return;
      }
    }
  });
  return found;
}

bool is_extension_free(const FiniteGroup& g, int k) { return !extension_stabilizer(g, k).has_value(); }

std::vector<Element> generated_subgroup(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Element> elems{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Element s : gens) {
      const Element x = g.mul(elems[i], s);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<std::vector<Element>> subgroups(const FiniteGroup& g, const Limits& lim) {
  if (g.order() > lim.group_order)
    throw Error(Errc::CapExceeded, "subgroup enumeration capped at order " + std::to_string(lim.group_order));
  std::set<std::vector<Element>> found;
  for (Element a = 0; a < g.order(); ++a) {
    const Element gen[] = {a};
    found.insert(generated_subgroup(g, gen));
  }
  // close under joins
  std::vector<std::vector<Element>> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    const std::vector<std::vector<Element>> all(found.begin(), found.end());
    for (const auto& h : frontier) {
      for (const auto& k : all) {
        std::vector<Element> gens = h;
        gens.insert(gens.end(), k.begin(), k.end());
        auto j = generated_subgroup(g, gens);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<Element>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

Permutation conjugation(const FiniteGroup& g, Element b) {
  Permutation p(g.order());
  const Element bi = g.inv(b);
  for (Element a = 0; a < g.order(); ++a) p[a] = g.mul(g.mul(b, a), bi);
  return p;
}

std::vector<Permutation> inner_automorphisms(const FiniteGroup& g) {
  std::vector<Permutation> out;
  std::set<Permutation> seen;
  for (Element b = 0; b < g.order(); ++b) {
    Permutation p = conjugation(g, b);
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Permutation> left_translations(const FiniteGroup& g) {
  std::vector<Permutation> out;
  for (Element a = 0; a < g.order(); ++a) {
    Permutation p(g.order());
    for (Element x = 0; x < g.order(); ++x) p[x] = g.mul(a, x);
    out.push_back(std::move(p));
  }
  return out;
}

bool is_group_automorphism(const FiniteGroup& g, const Permutation& phi) {
  if (!is_permutation_of(phi, g.order())) return false;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      if (phi[g.mul(a, b)] != g.mul(phi[a], phi[b])) return false;
    }
  }
  return true;
}

std::vector<Permutation> group_automorphisms(const FiniteGroup& g, const Limits& lim) {
  const int m = g.order();
  std::vector<Element> gens;
  std::vector<Element> current{g.identity()};
  for (Element a = 0; a < m && static_cast<int>(current.size()) < m; ++a) {
    if (std::binary_search(current.begin(), current.end(), a)) continue;
    gens.push_back(a);
    current = generated_subgroup(g, gens);
  }

  std::vector<int> orders(m);
  for (Element a = 0; a < m; ++a) orders[a] = g.element_order(a);

  std::vector<Permutation> out;
  std::vector<Element> images(gens.size());
  std::uint64_t nodes = 0;

  // extend gens -> images to a homomorphism by BFS over words
  auto extend = [&]() -> std::optional<Permutation> {
    Permutation phi(m, -1);
    std::vector<char> used(m, 0);
    phi[g.identity()] = g.identity();
    used[g.identity()] = 1;
    std::vector<Element> queue{g.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Element x = queue[i];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Element y = g.mul(x, gens[j]);
        const Element img = g.mul(phi[x], images[j]);
        if (phi[y] < 0) {
          if (used[img]) return std::nullopt;
          phi[y] = img;
          used[img] = 1;
          queue.push_back(y);
        } else if (phi[y] != img) {
          return std::nullopt;
        }
      }
    }
    return phi;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (++nodes > lim.search_nodes) throw Error(Errc::CapExceeded, "automorphism search node cap");
    if (i == gens.size()) {
      if (auto phi = extend(); phi && is_group_automorphism(g, *phi)) out.push_back(std::move(*phi));
      return;
    }
    for (Element y = 0; y < m; ++y) {
      if (orders[y] != orders[gens[i]]) continue;
      images[i] = y;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> left_coset(const FiniteGroup& g, Element a, std::span<const Element> h) {
  std::vector<Element> out;
  out.reserve(h.size());
  for (Element x : h) out.push_back(g.mul(a, x));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace magmaforge
