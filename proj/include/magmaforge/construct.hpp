#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "magmaforge/groups.hpp"
#include "magmaforge/magma.hpp"

namespace magmaforge {

/// obv(U) = {U} together with every {a_i^-1} u {a_i^-1 a_j : j != i}, sorted.
/// Throws ContainsIdentity if e in U and TooLarge unless |U|+1 < lpd(|G|).
std::vector<KSet> obverse_class(const FiniteGroup& g, const KSet& u);

struct ObverseClass {
  int k = 0;
  KSet key;  // colex-least member
  std::vector<KSet> members;
};

/// All classes of k-subsets of G \ {e}, 1 <= k <= n-1, sorted by (k, key).
/// Throws NotAdmissible.
std::vector<ObverseClass> enumerate_obverse_classes(const FiniteGroup& g, int n);

/// Member -> class key lookup over all classes for (G, n).
class ObverseIndex {
 public:
  ObverseIndex(const FiniteGroup& g, int n);
  const std::vector<ObverseClass>& classes() const noexcept { return classes_; }
  /// Key of the class containing u; throws DomainError if u is not a member.
  const KSet& key_of(const KSet& u) const;
  std::size_t class_of(const KSet& u) const;

 private:
  std::vector<ObverseClass> classes_;
  std::map<KSet, std::size_t> member_;
};

/// An n-sign function: one chosen member per obverse class, keyed by the
/// class key. Iteration order is (k, key).
class SignFunction {
 public:
  SignFunction() = default;
  SignFunction(int order, int arity) : m_(order), n_(arity) {}

  int order() const noexcept { return m_; }
  int arity() const noexcept { return n_; }
  const std::map<KSet, KSet>& choices() const noexcept { return choice_; }
  void set(const KSet& key, const KSet& member) { choice_[key] = member; }
  /// Throws InvalidSignFunction if the class is missing.
  const KSet& at(const KSet& key) const;
  bool has(const KSet& key) const { return choice_.count(key) != 0; }

  friend bool operator==(const SignFunction&, const SignFunction&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::map<KSet, KSet> choice_;
};

/// Throws InvalidSignFunction unless lambda has exactly one member of every
/// class and nothing else.
void validate_sign_function(const FiniteGroup& g, const SignFunction& lambda);
/// lambda(obv(U)) == U, i.e. e dominates U in G_n(lambda).
bool lambda_picks(const ObverseIndex& idx, const SignFunction& lambda, const KSet& u);

/// beta_k and gamma_k for k = 1..n, indexed [k-1][orbit].
struct Chirality {
  int order = 0;
  int arity = 0;
  std::vector<std::vector<KSet>> beta;
  std::vector<std::vector<Element>> gamma;
};

/// Orbit representatives that are the colex-least member of each orbit.
std::vector<std::vector<KSet>> canonical_beta(const FiniteGroup& g, int n);

/// Throws InvalidChirality unless every beta_k(psi) lies in a distinct orbit
/// psi and gamma_k(psi) in beta_k(psi).
void validate_chirality(const FiniteGroup& g, const Chirality& c);

Chirality sign_to_chirality(const FiniteGroup& g, int n, const SignFunction& lambda,
                            const std::vector<std::vector<KSet>>& beta);
SignFunction chirality_to_sign(const FiniteGroup& g, int n, const Chirality& c);

/// g(sB) = s gamma for each orbit representative B.
Pointing action_pointing(const FiniteGroup& g, int n, const Chirality& c);
FiniteMagma build_action_magma(const FiniteGroup& g, int n, const Chirality& c,
                               const Limits& lim = Limits::standard());
/// G_n(lambda).
FiniteMagma build_regular(const FiniteGroup& g, int n, const SignFunction& lambda,
                          const Limits& lim = Limits::standard());

SignFunction canonical_lambda(const FiniteGroup& g, int n);

/// Prod_k k^{C(m,k)/m}.
std::uint64_t count_sign_functions(const FiniteGroup& g, int n);
/// Odometer over member choices, first class most significant. The callback
/// returns false to stop. Throws CapExceeded above lim.search_nodes.
void enumerate_sign_functions(const FiniteGroup& g, int n,
                              const std::function<bool(const SignFunction&)>& visit,
                              const Limits& lim = Limits::standard());
std::vector<SignFunction> all_sign_functions(const FiniteGroup& g, int n,
                                             const Limits& lim = Limits::standard());

/// Constant on Inn(G)-orbits of classes. `seed` may fix members of some
/// classes; other orbits take the key of their first class.
SignFunction correlated_lambda(const FiniteGroup& g, int n,
                               const SignFunction* seed = nullptr);

struct PrimitiveRootLambda {
  SignFunction lambda;
  int primitive_root = 0;
  /// x -> multiplier * x is a lambda-automorphism.
  int multiplier = 0;
};

int least_primitive_root(int p);
PrimitiveRootLambda primitive_root_lambda(int p, int n);

/// Sign function on Z_{p^k} making G_n(lambda) simple.
SignFunction simple_lambda(int p, int k, int n);

}  // namespace magmaforge
