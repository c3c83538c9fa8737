#include "magmaforge/construct.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "magmaforge/arithmetic.hpp"
#include "magmaforge/error.hpp"

namespace magmaforge {

namespace {

void require_admissible(const FiniteGroup& g, int n) {
  if (n < 1 || !admissible(g.order(), n).admissible)
    throw Error(Errc::NotAdmissible, "(m, n) = (" + std::to_string(g.order()) + ", " +
                                         std::to_string(n) + ") violates n < lpd(m)");
}

KSet with_identity(const FiniteGroup& g, const KSet& v) {
  std::vector<Element> w(v.begin(), v.end());
  w.push_back(g.identity());
  return KSet::from_unsorted(std::move(w));
}

}  // namespace

std::vector<KSet> obverse_class(const FiniteGroup& g, const KSet& u) {
  if (u.empty()) throw Error(Errc::DomainError, "obverse class of the empty set");
  if (u.contains(g.identity()))
    throw Error(Errc::ContainsIdentity, u.to_string() + " contains the identity");
  const int k = static_cast<int>(u.size());
  if (g.order() < 2 || !admissible(g.order(), k + 1).admissible)
    throw Error(Errc::TooLarge, "|U| + 1 = " + std::to_string(k + 1) + " is not below lpd(" +
                                    std::to_string(g.order()) + ")");
  std::vector<KSet> out{u};
  for (int i = 0; i < k; ++i) {
    const Element ai = g.inv(u[i]);
    std::vector<Element> v{ai};
    for (int j = 0; j < k; ++j) {
      if (j != i) v.push_back(g.mul(ai, u[j]));
    }
    out.push_back(KSet::from_unsorted(std::move(v)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<ObverseClass> enumerate_obverse_classes(const FiniteGroup& g, int n) {
  require_admissible(g, n);
  std::vector<ObverseClass> out;
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<char> seen(binomial_u64(g.order(), k), 0);
    for_each_kset(g.order(), k, [&](const KSet& u) {
      if (u.contains(g.identity()) || seen[u.colex_rank()]) return;
      ObverseClass c;
      c.k = k;
      c.members = obverse_class(g, u);
      for (const auto& v : c.members) seen[v.colex_rank()] = 1;
      c.key = c.members.front();
      out.push_back(std::move(c));
    });
  }
  return out;
}

ObverseIndex::ObverseIndex(const FiniteGroup& g, int n) : classes_(enumerate_obverse_classes(g, n)) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (const auto& v : classes_[i].members) member_.emplace(v, i);
  }
}

std::size_t ObverseIndex::class_of(const KSet& u) const {
  auto it = member_.find(u);
  if (it == member_.end()) throw Error(Errc::DomainError, u.to_string() + " is in no obverse class");
  return it->second;
}

const KSet& ObverseIndex::key_of(const KSet& u) const { return classes_[class_of(u)].key; }

const KSet& SignFunction::at(const KSet& key) const {
  auto it = choice_.find(key);
  if (it == choice_.end())
    throw Error(Errc::InvalidSignFunction, "no choice for class " + key.to_string());
  return it->second;
}

void validate_sign_function(const FiniteGroup& g, const SignFunction& lambda) {
  if (lambda.order() != g.order())
    throw Error(Errc::InvalidSignFunction, "sign function is for order " +
                                               std::to_string(lambda.order()));
  const ObverseIndex idx(g, lambda.arity());
  if (lambda.choices().size() != idx.classes().size())
    throw Error(Errc::InvalidSignFunction, "expected " + std::to_string(idx.classes().size()) +
                                               " classes, got " +
                                               std::to_string(lambda.choices().size()));
  for (const auto& c : idx.classes()) {
    const KSet& chosen = lambda.at(c.key);
    if (!std::binary_search(c.members.begin(), c.members.end(), chosen))
      throw Error(Errc::InvalidSignFunction, chosen.to_string() + " is not in the class of " +
                                                 c.key.to_string());
  }
}

bool lambda_picks(const ObverseIndex& idx, const SignFunction& lambda, const KSet& u) {
  return lambda.at(idx.key_of(u)) == u;
}

std::vector<std::vector<KSet>> canonical_beta(const FiniteGroup& g, int n) {
  std::vector<std::vector<KSet>> beta;
  for (int k = 1; k <= n; ++k) beta.push_back(k_extension_orbits(g, k).representatives);
  return beta;
}

void validate_chirality(const FiniteGroup& g, const Chirality& c) {
  const int m = g.order();
  if (c.order != m || static_cast<int>(c.beta.size()) != c.arity ||
      static_cast<int>(c.gamma.size()) != c.arity)
    throw Error(Errc::InvalidChirality, "chirality shape does not match (G, n)");
  for (int k = 1; k <= c.arity; ++k) {
    const auto& beta = c.beta[k - 1];
    const auto& gamma = c.gamma[k - 1];
    const std::uint64_t orbits = binomial_u64(m, k) / m;
    if (beta.size() != orbits || gamma.size() != orbits)
      throw Error(Errc::InvalidChirality, "wrong number of orbits for k = " + std::to_string(k));
    std::set<KSet> covered;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (static_cast<int>(beta[i].size()) != k || beta[i].max() >= m)
        throw Error(Errc::InvalidChirality, "bad representative " + beta[i].to_string());
      if (covered.count(beta[i]))
        throw Error(Errc::InvalidChirality, "two representatives of one orbit: " + beta[i].to_string());
      for (Element s = 0; s < m; ++s) covered.insert(translate(g, s, beta[i]));
      if (!beta[i].contains(gamma[i]))
        throw Error(Errc::InvalidChirality, std::to_string(gamma[i]) + " is not in " + beta[i].to_string());
    }
  }
}

Chirality sign_to_chirality(const FiniteGroup& g, int n, const SignFunction& lambda,
                            const std::vector<std::vector<KSet>>& beta) {
  require_admissible(g, n);
  validate_sign_function(g, lambda);
  if (lambda.arity() != n) throw Error(Errc::InvalidSignFunction, "sign function arity mismatch");
  const ObverseIndex idx(g, n);

  Chirality c;
  c.order = g.order();
  c.arity = n;
  c.beta = beta;
  c.gamma.resize(n);
  for (int k = 1; k <= n; ++k) {
    for (const KSet& b : beta.at(k - 1)) {
      if (k == 1) {
        c.gamma[0].push_back(b[0]);
        continue;
      }
      // gamma = a_i exactly when lambda picks {a_i^-1 a_j : j != i}
      int hits = 0;
      Element chosen = -1;
      for (std::size_t i = 0; i < b.size(); ++i) {
        const Element ai = g.inv(b[i]);
        std::vector<Element> v;
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (j != i) v.push_back(g.mul(ai, b[j]));
        }
        if (lambda_picks(idx, lambda, KSet::from_unsorted(std::move(v)))) {
          ++hits;
          chosen = b[i];
        }
      }
      if (hits != 1)
        throw Error(Errc::InvalidSignFunction, "representative " + b.to_string() + " gets " +
                                                   std::to_string(hits) + " winners");
      c.gamma[k - 1].push_back(chosen);
    }
  }
  validate_chirality(g, c);
  return c;
}

Pointing action_pointing(const FiniteGroup& g, int n, const Chirality& c) {
  require_admissible(g, n);
  validate_chirality(g, c);
  if (c.arity != n) throw Error(Errc::InvalidChirality, "chirality arity mismatch");
  Pointing p(g.order(), n);
  for (int k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < c.beta[k - 1].size(); ++i) {
      const KSet& b = c.beta[k - 1][i];
      const Element w = c.gamma[k - 1][i];
      for (Element s = 0; s < g.order(); ++s) p.set(translate(g, s, b), g.mul(s, w));
    }
  }
  return p;
}

SignFunction chirality_to_sign(const FiniteGroup& g, int n, const Chirality& c) {
  const Pointing p = action_pointing(g, n, c);
  const ObverseIndex idx(g, n);
  SignFunction lambda(g.order(), n);
  for (const auto& cls : idx.classes()) {
    int hits = 0;
    for (const auto& v : cls.members) {
      if (p.at(with_identity(g, v)) == g.identity()) {
        lambda.set(cls.key, v);
        ++hits;
      }
    }
    if (hits != 1)
      throw Error(Errc::InvalidChirality, "class of " + cls.key.to_string() + " has " +
                                              std::to_string(hits) + " members dominated by e");
  }
  return lambda;
}

FiniteMagma build_action_magma(const FiniteGroup& g, int n, const Chirality& c, const Limits& lim) {
  return from_pointing(action_pointing(g, n, c), lim);
}

FiniteMagma build_regular(const FiniteGroup& g, int n, const SignFunction& lambda, const Limits& lim) {
  require_admissible(g, n);
  checked_power(g.order(), n, lim.table);
  return build_action_magma(g, n, sign_to_chirality(g, n, lambda, canonical_beta(g, n)), lim);
}

SignFunction canonical_lambda(const FiniteGroup& g, int n) {
  SignFunction lambda(g.order(), n);
  for (const auto& c : enumerate_obverse_classes(g, n)) lambda.set(c.key, c.key);
  return lambda;
}

std::uint64_t count_sign_functions(const FiniteGroup& g, int n) {
  require_admissible(g, n);
  unsigned __int128 total = 1;
  for (int k = 2; k <= n; ++k) {
    const std::uint64_t classes = binomial_u64(g.order(), k) / g.order();
    for (std::uint64_t i = 0; i < classes; ++i) {
      total *= static_cast<unsigned>(k);
      if (total > std::numeric_limits<std::uint64_t>::max())
        throw Error(Errc::CapExceeded, "sign function count overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(total);
}

void enumerate_sign_functions(const FiniteGroup& g, int n,
                              const std::function<bool(const SignFunction&)>& visit,
                              const Limits& lim) {
  const std::uint64_t total = count_sign_functions(g, n);
  if (total > lim.search_nodes)
    throw Error(Errc::CapExceeded, std::to_string(total) + " sign functions exceed the cap");
  const auto classes = enumerate_obverse_classes(g, n);
  std::vector<std::size_t> digit(classes.size(), 0);
  while (true) {
    SignFunction lambda(g.order(), n);
    for (std::size_t i = 0; i < classes.size(); ++i)
      lambda.set(classes[i].key, classes[i].members[digit[i]]);
    if (!visit(lambda)) return;
    std::size_t i = classes.size();
    while (i > 0) {
      --i;
      if (++digit[i] < classes[i].members.size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
    if (classes.empty()) return;
  }
}

std::vector<SignFunction> all_sign_functions(const FiniteGroup& g, int n, const Limits& lim) {
  std::vector<SignFunction> out;
  enumerate_sign_functions(g, n, [&](const SignFunction& l) {
    out.push_back(l);
    return true;
  }, lim);
  return out;
}

SignFunction correlated_lambda(const FiniteGroup& g, int n, const SignFunction* seed) {
  const ObverseIndex idx(g, n);
  const auto& classes = idx.classes();
  const auto inn = inner_automorphisms(g);
  SignFunction lambda(g.order(), n);

  if (seed) {
    for (const auto& [key, member] : seed->choices()) {
      if (idx.key_of(member) != key)
        throw Error(Errc::InvalidSignFunction, "seed member " + member.to_string() +
                                                   " is not in the class of " + key.to_string());
    }
  }

  for (const auto& rep : classes) {
    if (lambda.has(rep.key)) continue;
    KSet chosen = rep.key;
    if (seed) {
      for (const auto& phi : inn) {
        const KSet& target = idx.key_of(apply_permutation(phi, rep.key));
        if (seed->has(target)) {
          chosen = apply_permutation(inverse(phi), seed->at(target));
          break;
        }
      }
    }
    for (const auto& phi : inn) {
      const KSet image = apply_permutation(phi, chosen);
      const KSet& target = idx.key_of(image);
      if (lambda.has(target)) {
        if (lambda.at(target) != image)
          throw Error(Errc::ConflictingConstraints, "conjugation sends class " + rep.key.to_string() +
                                                        " onto itself with a different member");
      } else {
        lambda.set(target, image);
      }
    }
  }
  if (seed) {
    for (const auto& [key, member] : seed->choices()) {
      if (lambda.at(key) != member)
        throw Error(Errc::ConflictingConstraints, "seed choices " + member.to_string() +
                                                      " and " + lambda.at(key).to_string() +
                                                      " are not Inn-related");
    }
  }
  return lambda;
}

int least_primitive_root(int p) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  std::vector<int> qs;
  int rest = p - 1;
  for (int q = 2; q <= rest; ++q) {
    if (rest % q == 0) {
      qs.push_back(q);
      while (rest % q == 0) rest /= q;
    }
  }
  auto powmod = [p](long long b, long long e) {
    long long r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (int r = 2; r < p; ++r) {
    bool ok = true;
    for (int q : qs) ok = ok && powmod(r, (p - 1) / q) != 1;
    if (ok) return r;
  }
  throw Error(Errc::DomainError, "no primitive root");
}

PrimitiveRootLambda primitive_root_lambda(int p, int n) {
  if (p < 3 || !is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not an odd prime");
  if (n < 2) throw Error(Errc::BadArity, "needs arity n >= 2");
  if (n > p - 2) throw Error(Errc::ArityTooLarge, "n = " + std::to_string(n) + " exceeds p - 2");
  PrimitiveRootLambda out;
  out.primitive_root = least_primitive_root(p);

  // x -> t x permutes the classes freely only when its order q exceeds n
  int q = 0;
  for (int d = 2; d <= p - 1; ++d) {
    if ((p - 1) % d == 0 && is_prime(d) && d > n) q = d;
  }
  if (q == 0)
    throw Error(Errc::NoInvariantSignFunction,
                "no prime q > n divides p - 1, so no multiplier acts freely on the classes");
  long long t = 1;
  for (int i = 0; i < (p - 1) / q; ++i) t = t * out.primitive_root % p;
  out.multiplier = static_cast<int>(t);

  const FiniteGroup g = cyclic_group(p);
  const ObverseIndex idx(g, n);
  SignFunction lambda(p, n);
  for (const auto& rep : idx.classes()) {
    if (lambda.has(rep.key)) continue;
    long long mult = 1;
    for (int j = 0; j < q; ++j) {
      Permutation phi(p);
      for (int x = 0; x < p; ++x) phi[x] = static_cast<Element>(mult * x % p);
      const KSet image = apply_permutation(phi, rep.key);
      const KSet& target = idx.key_of(image);
      if (lambda.has(target) && lambda.at(target) != image)
        throw Error(Errc::NoInvariantSignFunction, "multiplier fixes class " + target.to_string());
      lambda.set(target, image);
      mult = mult * t % p;
    }
  }
  out.lambda = std::move(lambda);
  return out;
}

SignFunction simple_lambda(int p, int k, int n) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(Errc::DomainError, "exponent must be positive");
  if (n < 2) throw Error(Errc::BadArity, "needs arity n >= 2");
  long long order = 1;
  for (int i = 0; i < k; ++i) order *= p;
  if (order > 100000) throw Error(Errc::CapExceeded, "p^k too large");
  const int m = static_cast<int>(order);
  const FiniteGroup g = cyclic_group(m);
  if (!admissible(m, n).admissible) throw Error(Errc::NotAdmissible, "needs n < p");
  const ObverseIndex idx(g, n);
  SignFunction lambda = canonical_lambda(g, n);

  // H_i = p^(k-i) Z; a + H_i is a coset other than H_i inside H_{i+1}
  std::vector<long long> pw(k + 1, 1);
  for (int i = 1; i <= k; ++i) pw[i] = pw[i - 1] * p;
  std::set<KSet> fixed;
  auto force = [&](const KSet& u) {
    const KSet& key = idx.key_of(u);
    if (fixed.count(key) && lambda.at(key) != u)
      throw Error(Errc::ConflictingConstraints, "simple recipe sets class " + key.to_string() + " twice");
    fixed.insert(key);
    lambda.set(key, u);
  };
  for (int i = 1; i <= k - 1; ++i) {
    const Element a = static_cast<Element>(pw[k - i - 1]);
    const Element b = static_cast<Element>((pw[k - i - 1] + pw[k - i]) % m);
    force(KSet{a});
    force(KSet{static_cast<Element>((m - b) % m)});
  }
  return lambda;
}

}  // namespace magmaforge
