#include "magmaforge/hypertournaments.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "magmaforge/arithmetic.hpp"
#include "magmaforge/error.hpp"

namespace magmaforge {

PointedHypertournament::PointedHypertournament(int order, int arity) : p_(order, arity) {}

PointedHypertournament::PointedHypertournament(Pointing p) : p_(std::move(p)) {
  for (std::uint64_t i = 0; i < p_.indexer().count(); ++i) {
    const KSet e = p_.indexer().set_at(i);
    if (!e.contains(p_.at_index(i)))
      throw Error(Errc::NotHypertournamentMagma, "g" + e.to_string() + " = " +
                                                     std::to_string(p_.at_index(i)) + " is outside the edge");
  }
}

void PointedHypertournament::set_winner(const KSet& edge, Element w) {
  if (!edge.contains(w))
    throw Error(Errc::DomainError, std::to_string(w) + " is not a vertex of " + edge.to_string());
  p_.set(edge, w);
}

FiniteMagma to_magma(const PointedHypertournament& t, const Limits& lim) {
  return from_pointing(t.pointing(), lim);
}

PointedHypertournament from_magma(const FiniteMagma& a) {
  std::uint64_t idx = 0;
  std::optional<std::vector<Element>> escape;
  for_each_tuple(a.order(), a.arity(), [&](std::span<const Element> t) {
    const Element out = a.at(idx++);
    if (!escape && std::find(t.begin(), t.end(), out) == t.end()) escape.emplace(t.begin(), t.end());
  });
  if (escape) {
    std::string s = "(";
    for (std::size_t i = 0; i < escape->size(); ++i) s += (i ? "," : "") + std::to_string((*escape)[i]);
    throw Error(Errc::NotHypertournamentMagma, "not conservative: f" + s + ") = " +
                                                   std::to_string(a.apply(*escape)));
  }
  try {
    return PointedHypertournament(extract_pointing(a));
  } catch (const Error& e) {
    throw Error(Errc::NotHypertournamentMagma, std::string("not essentially polyadic: ") + e.what());
  }
}

bool is_balanced(const PointedHypertournament& t) {
  const auto& ix = t.pointing().indexer();
  std::uint64_t first = 0;
  for (int k = 1; k <= ix.max_size(); ++k) {
    std::vector<std::uint64_t> wins(t.order(), 0);
    for (std::uint64_t i = first; i < first + ix.count(k); ++i) ++wins[t.pointing().at_index(i)];
    if (std::adjacent_find(wins.begin(), wins.end(), std::not_equal_to<>()) != wins.end()) return false;
    first += ix.count(k);
  }
  return true;
}

bool dominates(const PointedHypertournament& t, Element u, const KSet& v) {
  if (v.empty() || static_cast<int>(v.size()) > t.arity() - 1)
    throw Error(Errc::BadArity, "|V| must be between 1 and n - 1");
  if (v.contains(u)) throw Error(Errc::DomainError, std::to_string(u) + " belongs to " + v.to_string());
  if (u < 0 || u >= t.order() || v.max() >= t.order())
    throw Error(Errc::EntryOutOfRange, "vertex outside the hypertournament");
  std::vector<Element> w(v.begin(), v.end());
  w.push_back(u);
  return t.winner(KSet::from_unsorted(std::move(w))) == u;
}

std::string EmbeddingWitness::check(const PointedHypertournament& src,
                                    const PointedHypertournament& tgt) const {
  if (src.arity() != tgt.arity()) return "arity differs";
  if (static_cast<int>(vertex_map.size()) != src.order()) return "vertex map has the wrong length";
  std::vector<char> used(tgt.order(), 0);
  for (Element x : vertex_map) {
    if (x < 0 || x >= tgt.order()) return "image " + std::to_string(x) + " outside the target";
    if (used[x]) return "vertex map is not injective";
    used[x] = 1;
  }
  const auto& ix = src.pointing().indexer();
  for (std::uint64_t i = 0; i < ix.count(); ++i) {
    const KSet e = ix.set_at(i);
    std::vector<Element> img;
    for (Element x : e) img.push_back(vertex_map[x]);
    const Element want = vertex_map[src.winner(e)];
    const KSet ie = KSet::from_unsorted(std::move(img));
    if (tgt.winner(ie) != want)
      return "edge " + e.to_string() + " wins at " + std::to_string(src.winner(e)) + " but its image " +
             ie.to_string() + " wins at " + std::to_string(tgt.winner(ie));
  }
  return {};
}

DoubledTournament double_tournament(const PointedHypertournament& t) {
  if (t.arity() != 2) throw Error(Errc::ArityNot2, "doubling needs a binary tournament");
  const int r = t.order();
  PointedHypertournament out(2 * r + 1, 2);
  auto beats = [&](Element u, Element v) { return t.winner(KSet::from_unsorted({u, v})) == u; };
  auto edge = [&](Element x, Element y, Element w) { out.set_winner(KSet::from_unsorted({x, y}), w); };
  const Element eta = 2 * r;
  for (Element u = 0; u < r; ++u) {
    for (Element v = u + 1; v < r; ++v) {
      const bool uv = beats(u, v);
      // same copy follows T, crossing edges reverse it
      edge(u, v, uv ? u : v);
      edge(r + u, r + v, uv ? r + u : r + v);
      edge(u, r + v, uv ? r + v : u);
      edge(r + u, v, uv ? v : r + u);
    }
    edge(u, r + u, u);
    edge(r + u, eta, r + u);
    edge(eta, u, eta);
  }
  EmbeddingWitness w;
  w.source_order = r;
  w.target_order = 2 * r + 1;
  w.vertex_map.resize(r);
  std::iota(w.vertex_map.begin(), w.vertex_map.end(), 0);
  return {std::move(out), std::move(w)};
}

RegularEmbedding embed_regular(const PointedHypertournament& t, std::vector<int> alphas,
                               const Limits& lim) {
  const int m = t.order();
  const int n = t.arity();
  if (alphas.empty()) alphas.assign(m, next_prime_after(n));
  if (static_cast<int>(alphas.size()) != m)
    throw Error(Errc::BadModulus, "need one modulus per vertex");
  for (int a : alphas) {
    if (a < 2 || !admissible(a, n).admissible)
      throw Error(Errc::BadModulus, "modulus " + std::to_string(a) + " is not admissible for arity " +
                                        std::to_string(n));
  }
  std::vector<FiniteGroup> parts;
  for (int a : alphas) parts.push_back(cyclic_group(a));
  FiniteGroup g = direct_sum(parts);
  checked_power(g.order(), n, lim.table);

  std::vector<Element> gen(m);
  long long place = 1;
  for (int u = m - 1; u >= 0; --u) {
    gen[u] = static_cast<Element>(place);
    place *= alphas[u];
  }

  const ObverseIndex idx(g, n);
  SignFunction lambda(g.order(), n);
  const auto& ix = t.pointing().indexer();
  for (std::uint64_t i = 0; i < ix.count(); ++i) {
    const KSet e = ix.set_at(i);
    if (e.size() < 2) continue;
    const Element w = t.winner(e);
    const Element wi = g.inv(gen[w]);
    std::vector<Element> v;
    for (Element x : e) {
      if (x != w) v.push_back(g.mul(wi, gen[x]));
    }
    const KSet u = KSet::from_unsorted(std::move(v));
    const KSet& key = idx.key_of(u);
    if (lambda.has(key) && lambda.at(key) != u)
      throw Error(Errc::ConflictingConstraints, "edges force two members of the class of " + key.to_string());
    lambda.set(key, u);
  }
  for (const auto& c : idx.classes()) {
    if (!lambda.has(c.key)) lambda.set(c.key, c.key);
  }
  FiniteMagma magma = build_regular(g, n, lambda, lim);
  PointedHypertournament target = from_magma(magma);
  EmbeddingWitness witness{m, g.order(), gen};
  return {std::move(g), std::move(lambda), std::move(magma), std::move(target), std::move(witness)};
}

std::optional<EmbeddingWitness> find_embedding(const PointedHypertournament& src,
                                               const PointedHypertournament& tgt, std::uint64_t seed,
                                               const Limits& lim) {
  if (src.arity() != tgt.arity()) throw Error(Errc::ArityMismatch, "arity differs");
  const int m = src.order();
  const int mt = tgt.order();
  std::vector<Element> order(mt);
  std::iota(order.begin(), order.end(), 0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<Element> map(m, -1);
  std::vector<char> used(mt, 0);
  std::uint64_t nodes = 0;
  const int n = src.arity();

  // every edge whose largest vertex is u is checked once u is placed
  auto consistent = [&](Element u) {
    bool ok = true;
    for (int k = 1; k <= std::min(n, u + 1) && ok; ++k) {
      for_each_kset(u, k - 1, [&](const KSet& rest) {
        if (!ok) return;
        std::vector<Element> e(rest.begin(), rest.end());
        e.push_back(u);
        const KSet edge(e);
        std::vector<Element> img;
        for (Element x : edge) img.push_back(map[x]);
        ok = tgt.winner(KSet::from_unsorted(std::move(img))) == map[src.winner(edge)];
      });
    }
    return ok;
  };

  std::function<bool(Element)> rec = [&](Element u) {
    if (u == m) return true;
    for (Element y : order) {
      if (used[y]) continue;
      if (++nodes > lim.search_nodes) throw Error(Errc::CapExceeded, "embedding search node cap");
      map[u] = y;
      used[y] = 1;
      if (consistent(u) && rec(u + 1)) return true;
      used[y] = 0;
    }
    map[u] = -1;
    return false;
  };
  if (m > mt || !rec(0)) return std::nullopt;
  return EmbeddingWitness{m, mt, map};
}

}  // namespace magmaforge
