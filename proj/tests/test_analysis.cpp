#include <doctest.h>

#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "magmaforge/analysis.hpp"
#include "magmaforge/error.hpp"
#include "magmaforge/io.hpp"
#include "oracles.hpp"

using namespace magmaforge;
using namespace fixtures;

namespace {

std::vector<Element> table_of(const FiniteMagma& a) { return {a.table().begin(), a.table().end()}; }

SignFunction z9_convex() { return read_sign(read_file(data("z9_convex.sgn")), cyclic_group(9)); }

bool is_left_coset_of_subgroup(const FiniteGroup& g, const std::vector<Element>& block) {
  const Element b = block.front();
  std::set<Element> h;
  for (Element x : block) h.insert(g.mul(g.inv(b), x));
  if (!h.count(g.identity())) return false;
  for (Element x : h)
    for (Element y : h)
      if (!h.count(g.mul(x, y))) return false;
  return true;
}

std::set<std::vector<int>> canonical(const std::vector<Partition>& ps) {
  std::set<std::vector<int>> out;
  for (const auto& p : ps) out.emplace(p.labels().begin(), p.labels().end());
  return out;
}

std::set<std::vector<int>> canonical_labels(const std::vector<oracle::Labels>& ls) {
  std::set<std::vector<int>> out;
  for (const auto& l : ls) {
    const auto p = Partition::from_labels(l);
    out.emplace(p.labels().begin(), p.labels().end());
  }
  return out;
}

FiniteGroup g21() { return semidirect_cyclic(7, 3, 2); }

SignFunction correlated21() {
  const auto seed = read_sign(read_file(data("order21_seed.sgn")), g21(), true);
  return correlated_lambda(g21(), 2, &seed);
}

}  // namespace

TEST_CASE("automorphism groups") {
  const auto a72 = automorphisms(rps72_magma());
  CHECK(a72.size() == 3);
  CHECK(a72.size() == oracle::automorphisms(7, 2, rps72).size());
  const auto z3 = cyclic_group(3);
  for (const auto& l : all_sign_functions(z3, 2)) {
    const auto auts = automorphisms(build_regular(z3, 2, l));
    CHECK(auts.size() == 3);
    const auto lt = left_translations(z3);
    CHECK(std::set<Permutation>(auts.begin(), auts.end()) == std::set<Permutation>(lt.begin(), lt.end()));
  }
  CHECK(automorphisms(FiniteMagma::make(1, 2, {0})).size() == 1);
  CHECK(automorphisms(rpssl_magma()).size() == oracle::automorphisms(5, 2, rpssl).size());
  CHECK(automorphisms(bsigma_magma()).size() == oracle::automorphisms(3, 2, bsigma).size());
  CHECK(automorphisms(rps53_magma()).size() == oracle::automorphisms(5, 3, rps53).size());
  CHECK(automorphisms(french_magma()).size() == oracle::automorphisms(4, 2, french).size());
  try {
    automorphisms(build_regular(cyclic_group(13), 2, canonical_lambda(cyclic_group(13), 2)));
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
}

TEST_CASE("property: automorphisms form a group") {
  for (const auto& a : {rps72_magma(), rpssl_magma(), rps53_magma(),
                        build_regular(cyclic_group(9), 2, z9_convex())}) {
    const auto auts = automorphisms(a);
    const std::set<Permutation> s(auts.begin(), auts.end());
    CHECK(s.count(identity_permutation(a.order())));
    for (const auto& p : auts) {
      CHECK(s.count(inverse(p)));
      for (const auto& q : auts) CHECK(s.count(compose(p, q)));
    }
  }
}

TEST_CASE("is_automorphism") {
  CHECK(is_automorphism(rps_magma(), identity_permutation(3)));
  CHECK_FALSE(is_automorphism(rps_magma(), Permutation{1, 0, 2}));
  CHECK_FALSE(is_automorphism(rps_magma(), Permutation{0, 2, 1}));
  CHECK_FALSE(is_automorphism(rps_magma(), Permutation{2, 1, 0}));
  CHECK_FALSE(is_automorphism(rps_magma(), Permutation{0, 0, 1}));
}

TEST_CASE("property: left translations are automorphisms of every regular magma") {
  for (const auto& [g, n] : std::vector<std::pair<FiniteGroup, int>>{
           {cyclic_group(5), 2}, {cyclic_group(5), 3}, {cyclic_group(7), 3}, {cyclic_group(9), 2}, {g21(), 2}}) {
    const auto lts = left_translations(g);
    int i = 0;
    enumerate_sign_functions(g, n, [&](const SignFunction& l) {
      const auto a = build_regular(g, n, l);
      for (const auto& t : lts) CHECK(is_automorphism(a, t));
      return ++i < 20;
    });
  }
}

TEST_CASE("maximal arity: exactly the translations") {
  for (int p : {3, 5}) {
    const auto g = cyclic_group(p);
    for (const auto& l : all_sign_functions(g, p - 1)) {
      const auto a = build_regular(g, p - 1, l);
      CHECK(automorphisms(a).size() == static_cast<std::size_t>(p));
      CHECK(oracle::automorphisms(p, p - 1, table_of(a)).size() == static_cast<std::size_t>(p));
    }
  }
}

TEST_CASE("composite order: some lambda on Z9 has more than 9 automorphisms") {
  const auto g = cyclic_group(9);
  std::size_t best = 0;
  for (const auto& l : all_sign_functions(g, 2)) best = std::max(best, automorphisms(build_regular(g, 2, l)).size());
  CHECK(best > 9);
}

TEST_CASE("lambda automorphisms") {
  const auto z7 = cyclic_group(7);
  const auto pr = primitive_root_lambda(7, 2);
  const auto la = lambda_automorphisms(z7, 2, pr.lambda);
  Permutation times2(7);
  for (int x = 0; x < 7; ++x) times2[x] = 2 * x % 7;
  CHECK(std::find(la.begin(), la.end(), times2) != la.end());
  const auto built = build_regular(z7, 2, pr.lambda);
  for (const auto& phi : la) CHECK(is_automorphism(built, phi));
  CHECK(automorphisms(built).size() == 21);

  Permutation times3(7);
  for (int x = 0; x < 7; ++x) times3[x] = 3 * x % 7;
  for (const auto& l : all_sign_functions(z7, 2)) CHECK_FALSE(is_automorphism(build_regular(z7, 2, l), times3));

  const auto z3 = cyclic_group(3);
  for (const auto& l : all_sign_functions(z3, 2)) {
    const auto only = lambda_automorphisms(z3, 2, l);
    CHECK(only == std::vector<Permutation>{identity_permutation(3)});
  }

  const auto l21 = correlated21();
  const auto la21 = lambda_automorphisms(g21(), 2, l21);
  for (const auto& c : inner_automorphisms(g21()))
    CHECK(std::find(la21.begin(), la21.end(), c) != la21.end());
}

TEST_CASE("correlation") {
  for (const auto& l : all_sign_functions(cyclic_group(5), 3)) CHECK(is_correlated(cyclic_group(5), 3, l));
  CHECK(is_correlated(g21(), 2, correlated21()));

  // the literal table with x+3 chosen in its class
  SignFunction literal = correlated21();
  literal.set(KSet{3}, KSet{3});
  CHECK_NOTHROW(validate_sign_function(g21(), literal));
  CHECK_FALSE(is_correlated(g21(), 2, literal));

  const auto canon = canonical_lambda(g21(), 2);
  const ObverseIndex idx(g21(), 2);
  bool direct = true;
  for (const auto& c : inner_automorphisms(g21())) direct = direct && is_lambda_automorphism(idx, canon, c);
  CHECK(is_correlated(g21(), 2, canon) == direct);
}

TEST_CASE("semidirect embedding: 441 distinct automorphisms") {
  const auto g = g21();
  const auto a = build_regular(g, 2, correlated21());
  const auto inn = inner_automorphisms(g);
  const auto lts = left_translations(g);
  REQUIRE(inn.size() == 21);
  std::set<Permutation> all;
  for (const auto& l : lts) {
    CHECK(is_automorphism(a, l));
    for (const auto& c : inn) all.insert(compose(l, c));
  }
  for (const auto& c : inn) CHECK(is_automorphism(a, c));
  CHECK(all.size() == 441);
  for (const auto& p : all) CHECK(is_automorphism(a, p));
}

TEST_CASE("principal congruences") {
  const auto rps = rps_magma();
  CHECK(principal_congruence(rps, 0, 1).block_count() == 1);
  CHECK(principal_congruence(rps, 2, 2) == Partition(3));
  const auto a = build_regular(cyclic_group(9), 2, z9_convex());
  const auto c = principal_congruence(a, 0, 3);
  CHECK(c.to_string() == "{0 3 6}{1}{2}{4}{5}{7}{8}");
  CHECK(is_congruence(a, c));
  CHECK_FALSE(is_congruence(a, Partition::from_blocks(9, {{0, 3}})));
  CHECK_THROWS_AS(principal_congruence(rps, 0, 3), Error);
}

TEST_CASE("congruence lattices") {
  const auto z9 = cyclic_group(9);
  const auto simple = build_regular(z9, 2, simple_lambda(3, 2, 2));
  CHECK(all_congruences(simple).congruences.size() == 2);
  CHECK(is_simple(simple));
  CHECK(all_congruences(FiniteMagma::make(1, 2, {0})).congruences.size() == 1);

  const auto convex = build_regular(z9, 2, z9_convex());
  const auto con = all_congruences(convex);
  CHECK(con.congruences.size() == 9);
  CHECK(con.congruences.front() == Partition(9));
  CHECK(con.congruences.back() == Partition::total(9));
  CHECK(is_distributive(con.lattice));
  CHECK_FALSE(is_simple(convex));
  CHECK(is_simple(rps_magma()));
  CHECK(is_simple(rpssl_magma()));

  CHECK(canonical(con.congruences) == canonical_labels(oracle::congruences(9, 2, table_of(convex))));
  CHECK(canonical(all_congruences(simple).congruences) ==
        canonical_labels(oracle::congruences(9, 2, table_of(simple))));
  for (const auto& a : {french_magma(), bsigma_magma(), rps72_magma(), rps53_magma()}) {
    CHECK(canonical(all_congruences(a).congruences) ==
          canonical_labels(oracle::congruences(a.order(), a.arity(), table_of(a))));
  }
}

TEST_CASE("lambda-convex subgroups") {
  const auto z9 = cyclic_group(9);
  CHECK(lambda_convex_subgroups(z9, 2, simple_lambda(3, 2, 2)).size() == 2);
  const auto chain = lambda_convex_subgroups(z9, 2, z9_convex());
  REQUIRE(chain.size() == 3);
  CHECK(chain[1] == std::vector<Element>{0, 3, 6});
  CHECK(is_chain(chain));
  for (int p : {5, 7}) {
    for (const auto& l : all_sign_functions(cyclic_group(p), 2))
      CHECK(lambda_convex_subgroups(cyclic_group(p), 2, l).size() == 2);
  }
}

TEST_CASE("coset poset and antichain lattice") {
  const auto z9 = cyclic_group(9);
  const auto chain = lambda_convex_subgroups(z9, 2, z9_convex());
  const auto cp = coset_poset_and_antichain_lattice(z9, chain);
  CHECK(cp.cosets.size() == 13);
  CHECK(cp.lattice.size() == 9);
  CHECK(is_distributive(cp.lattice));
  const auto con = all_congruences(build_regular(z9, 2, z9_convex()));
  CHECK(lattice_isomorphic(cp.lattice, con.lattice));
  std::set<Partition> from_antichains;
  for (std::size_t i = 0; i < cp.antichains.size(); ++i)
    from_antichains.insert(antichain_partition(cp, static_cast<int>(i), 9));
  CHECK(from_antichains == std::set<Partition>(con.congruences.begin(), con.congruences.end()));

  const std::vector<std::vector<Element>> trivial = {{0}, {0, 1, 2, 3, 4, 5, 6, 7, 8}};
  const auto two = coset_poset_and_antichain_lattice(z9, trivial);
  CHECK(two.lattice.size() == 2);
  CHECK(lattice_isomorphic(two.lattice, FiniteLattice(2, [](int a, int b) { return a <= b; })));

  const auto z15 = cyclic_group(15);
  std::vector<Element> all15(15);
  std::iota(all15.begin(), all15.end(), 0);
  const auto c15 = coset_poset_and_antichain_lattice(z15, {{0}, {0, 5, 10}, all15});
  CHECK(c15.lattice.size() == 33);
  CHECK(is_distributive(c15.lattice));

  try {
    coset_poset_and_antichain_lattice(z15, {{0}, {0, 5, 10}, {0, 3, 6, 9, 12}, all15});
    FAIL("expected NotAChain");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotAChain);
  }
}

TEST_CASE("property: congruence blocks are cosets, convex subgroups form a characteristic chain, Con = L(P)") {
  struct Case {
    FiniteGroup g;
    int n;
    int limit;
  };
  for (const auto& c : std::vector<Case>{{cyclic_group(3), 2, 10},
                                         {cyclic_group(5), 3, 10},
                                         {cyclic_group(9), 2, 100},
                                         {cyclic_group(15), 2, 200},
                                         {cyclic_group(7), 2, 10},
                                         {g21(), 2, 12}}) {
    int seen = 0;
    enumerate_sign_functions(c.g, c.n, [&](const SignFunction& l) {
      const auto a = build_regular(c.g, c.n, l);
      const auto con = all_congruences(a);
      for (const auto& p : con.congruences)
        for (const auto& b : p.blocks()) CHECK(is_left_coset_of_subgroup(c.g, b));
      const auto convex = lambda_convex_subgroups(c.g, c.n, l);
      CHECK(is_chain(convex));
      CHECK(convex.front().size() == 1);
      CHECK(convex.back().size() == static_cast<std::size_t>(c.g.order()));
      if (c.g.order() <= 15) {
        for (const auto& phi : lambda_automorphisms(c.g, c.n, l)) {
          for (const auto& h : convex) {
            std::vector<Element> img;
            for (Element x : h) img.push_back(phi[x]);
            std::sort(img.begin(), img.end());
            CHECK(img == h);
          }
        }
        const auto cp = coset_poset_and_antichain_lattice(c.g, convex);
        CHECK(cp.lattice.size() == con.lattice.size());
        CHECK(lattice_isomorphic(cp.lattice, con.lattice));
        CHECK(is_distributive(con.lattice));
        CHECK(is_distributive(cp.lattice));
      }
      return ++seen < c.limit;
    });
  }
}

TEST_CASE("lattice basics") {
  const auto p = Partition::from_blocks(6, {{0, 3}, {1, 4}});
  const auto q = Partition::from_blocks(6, {{3, 1}});
  CHECK(Partition::join(p, q).to_string() == "{0 1 3 4}{2}{5}");
  CHECK(Partition::meet(p, q) == Partition(6));
  CHECK(p.refines(Partition::join(p, q)));
  CHECK_FALSE(Partition::join(p, q).refines(p));

  // N5 is not distributive, M3 is not distributive, the 2x2 grid is
  const FiniteLattice n5(5, [](int a, int b) {
    static const bool le[5][5] = {{1, 1, 1, 1, 1}, {0, 1, 1, 0, 1}, {0, 0, 1, 0, 1}, {0, 0, 0, 1, 1}, {0, 0, 0, 0, 1}};
    return le[a][b];
  });
  CHECK_FALSE(is_distributive(n5));
  const FiniteLattice m3(5, [](int a, int b) { return a == b || a == 0 || b == 4; });
  CHECK_FALSE(is_distributive(m3));
  const FiniteLattice grid(4, [](int a, int b) { return (a & b) == a; });
  CHECK(is_distributive(grid));
  CHECK_FALSE(lattice_isomorphic(grid, n5));
  CHECK_FALSE(lattice_isomorphic(n5, m3));
  try {
    FiniteLattice(3, [](int a, int b) { return a == b || a == 0; });
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotALattice);
  }
}
