#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "magmaforge/construct.hpp"
#include "magmaforge/groups.hpp"
#include "magmaforge/magma.hpp"

namespace magmaforge {

/// n-complete hypergraph on m vertices with a pointing g(W) in W.
class PointedHypertournament {
 public:
  /// Every edge initially points at its least vertex.
  PointedHypertournament(int order, int arity);
  /// Throws NotHypertournamentMagma if some g(W) is not in W.
  explicit PointedHypertournament(Pointing p);

  int order() const noexcept { return p_.order(); }
  int arity() const noexcept { return p_.arity(); }
  const Pointing& pointing() const noexcept { return p_; }
  Element winner(const KSet& edge) const { return p_.at(edge); }
  /// Throws DomainError unless w is in the edge.
  void set_winner(const KSet& edge, Element w);

  friend bool operator==(const PointedHypertournament&, const PointedHypertournament&) = default;

 private:
  Pointing p_;
};

FiniteMagma to_magma(const PointedHypertournament& t, const Limits& lim = Limits::standard());
/// Requires a conservative, essentially polyadic magma.
PointedHypertournament from_magma(const FiniteMagma& a);

bool is_balanced(const PointedHypertournament& t);
/// u -> V, i.e. g({u} u V) = u. BadArity unless 1 <= |V| <= n-1.
bool dominates(const PointedHypertournament& t, Element u, const KSet& v);

struct EmbeddingWitness {
  int source_order = 0;
  int target_order = 0;
  std::vector<Element> vertex_map;

  /// Empty string if the map is injective and preserves every winner;
  /// otherwise a description of the first failure.
  std::string check(const PointedHypertournament& src, const PointedHypertournament& tgt) const;
  bool validate(const PointedHypertournament& src, const PointedHypertournament& tgt) const {
    return check(src, tgt).empty();
  }
};

struct DoubledTournament {
  PointedHypertournament tournament;
  EmbeddingWitness witness;
};

/// Two copies u_1 = u, u_2 = r + u and a new vertex eta = 2r. ArityNot2.
DoubledTournament double_tournament(const PointedHypertournament& t);

struct RegularEmbedding {
  FiniteGroup group;
  SignFunction lambda;
  FiniteMagma magma;
  PointedHypertournament target;
  EmbeddingWitness witness;
};

/// G = Z_{alpha_0} + ... + Z_{alpha_{m-1}} with vertex u sent to the
/// generator of its summand. Empty alphas means kappa(n) everywhere.
RegularEmbedding embed_regular(const PointedHypertournament& t, std::vector<int> alphas = {},
                               const Limits& lim = Limits::standard());

/// Injective winner-preserving map src -> tgt by backtracking. The seed only
/// permutes the candidate order.
std::optional<EmbeddingWitness> find_embedding(const PointedHypertournament& src,
                                               const PointedHypertournament& tgt,
                                               std::uint64_t seed = 0,
                                               const Limits& lim = Limits::standard());

}  // namespace magmaforge
