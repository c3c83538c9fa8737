#include <doctest.h>

#include <set>

#include "magmaforge/arithmetic.hpp"
#include "magmaforge/error.hpp"
#include "magmaforge/groups.hpp"
#include "magmaforge/magma.hpp"
#include "oracles.hpp"

using namespace magmaforge;

namespace {

std::vector<FiniteGroup> sample_groups() {
  std::vector<FiniteGroup> gs;
  for (int m = 1; m <= 21; ++m) gs.push_back(cyclic_group(m));
  const FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3), z4 = cyclic_group(4);
  gs.push_back(direct_sum(std::vector<FiniteGroup>{z2, z2}));
  gs.push_back(direct_sum(std::vector<FiniteGroup>{z3, z3}));
  gs.push_back(direct_sum(std::vector<FiniteGroup>{z2, z4}));
  gs.push_back(direct_sum(std::vector<FiniteGroup>{z2, z2, z2}));
  gs.push_back(semidirect_cyclic(3, 2, 2));  // S3
  gs.push_back(semidirect_cyclic(5, 2, 4));  // D5
  gs.push_back(semidirect_cyclic(7, 3, 2));
  return gs;
}

}  // namespace

TEST_CASE("cyclic groups") {
  const auto z5 = cyclic_group(5);
  CHECK(z5.mul(2, 4) == 1);
  CHECK(z5.identity() == 0);
  CHECK(z5.inv(2) == 3);
  CHECK(cyclic_group(1).order() == 1);
  CHECK(z5.is_abelian());
  CHECK(z5.element_order(2) == 5);
  CHECK(z5.power(2, 3) == 1);
}

TEST_CASE("from_table rejects non-groups") {
  try {
    FiniteGroup::from_table(2, {0, 1, 1, 1});
    FAIL("expected InvalidGroup");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InvalidGroup);
  }
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1}), Error);
}

TEST_CASE("direct sums") {
  const auto z3 = cyclic_group(3), z5 = cyclic_group(5);
  const auto s = direct_sum(std::vector<FiniteGroup>{z3, z3});
  CHECK(s.order() == 9);
  CHECK(s.mul(1 * 3 + 2, 2 * 3 + 2) == 0 * 3 + 1);
  const auto z15 = direct_sum(std::vector<FiniteGroup>{z3, z5});
  // CRT: x -> (x mod 3, x mod 5) is an isomorphism from Z15
  const auto c15 = cyclic_group(15);
  for (int x = 0; x < 15; ++x) {
    for (int y = 0; y < 15; ++y) {
      auto enc = [](int v) { return (v % 3) * 5 + v % 5; };
      CHECK(z15.mul(enc(x), enc(y)) == enc(c15.mul(x, y)));
    }
  }
  CHECK(direct_sum(std::vector<FiniteGroup>{z5}) == z5);
}

TEST_CASE("semidirect products") {
  const auto g = semidirect_cyclic(7, 3, 2);
  CHECK(g.order() == 21);
  CHECK_FALSE(g.is_abelian());
  const auto o = oracle::affine21();
  for (int a = 0; a < 21; ++a) {
    for (int b = 0; b < 21; ++b) CHECK(g.mul(a, b) == o.op(a, b));
  }
  CHECK(semidirect_cyclic(5, 1, 1) == cyclic_group(5));
  try {
    semidirect_cyclic(5, 2, 3);
    FAIL("expected BadMultiplier");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadMultiplier);
  }
}

TEST_CASE("k-extension orbits") {
  const auto z5 = cyclic_group(5);
  const auto o2 = k_extension_orbits(z5, 2);
  REQUIRE(o2.orbits.size() == 2);
  CHECK(o2.representatives[0] == KSet{0, 1});
  CHECK(o2.representatives[1] == KSet{0, 2});
  const std::set<KSet> first(o2.orbits[0].begin(), o2.orbits[0].end());
  CHECK(first == std::set<KSet>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  const std::set<KSet> second(o2.orbits[1].begin(), o2.orbits[1].end());
  CHECK(second == std::set<KSet>{{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}});

  const auto o3 = k_extension_orbits(z5, 3);
  REQUIRE(o3.orbits.size() == 2);
  CHECK(o3.representatives[0] == KSet{0, 1, 2});
  CHECK(o3.representatives[1] == KSet{0, 1, 3});

  const auto z3 = k_extension_orbits(cyclic_group(3), 2);
  REQUIRE(z3.orbits.size() == 1);
  CHECK(z3.orbits[0].size() == 3);
}

TEST_CASE("extension freeness") {
  CHECK_FALSE(is_extension_free(cyclic_group(4), 2));
  const auto w = extension_stabilizer(cyclic_group(4), 2);
  REQUIRE(w);
  CHECK(translate(cyclic_group(4), w->s, w->set) == w->set);
  CHECK(w->s != 0);
  CHECK(is_extension_free(cyclic_group(5), 2));
  for (const auto& g : sample_groups()) CHECK(is_extension_free(g, 1));
}

TEST_CASE("property: all k-extensions up to n free iff admissible") {
  for (const auto& g : sample_groups()) {
    const int m = g.order();
    if (m == 1) continue;
    for (int n = 1; n <= std::min(5, m); ++n) {
      bool free = true;
      for (int k = 1; k <= n; ++k) free = free && is_extension_free(g, k);
      CHECK_MESSAGE(free == admissible(m, n).admissible, "m=" << m << " n=" << n);
    }
  }
}

TEST_CASE("property: orbits partition the k-sets, sizes divide m") {
  for (const auto& g : sample_groups()) {
    const int m = g.order();
    for (int k = 1; k <= std::min(m, 4); ++k) {
      const auto fam = k_extension_orbits(g, k);
      std::set<KSet> seen;
      std::size_t total = 0;
      for (std::size_t i = 0; i < fam.orbits.size(); ++i) {
        const auto& orb = fam.orbits[i];
        CHECK(m % orb.size() == 0);
        CHECK(*std::min_element(orb.begin(), orb.end()) == fam.representatives[i]);
        total += orb.size();
        seen.insert(orb.begin(), orb.end());
        if (is_extension_free(g, k)) CHECK(orb.size() == static_cast<std::size_t>(m));
      }
      CHECK(total == binomial_u64(m, k));
      CHECK(seen.size() == total);
    }
  }
}

TEST_CASE("odd order: the lpd-extension is not free") {
  for (int m = 3; m <= 21; m += 2) {
    const int p = least_prime_divisor(m);
    if (p > m) continue;
    CHECK_FALSE(is_extension_free(cyclic_group(m), p));
    CHECK(extension_stabilizer(cyclic_group(m), p).has_value());
  }
}

TEST_CASE("subgroups") {
  const auto z9 = subgroups(cyclic_group(9));
  REQUIRE(z9.size() == 3);
  CHECK(z9[0] == std::vector<Element>{0});
  CHECK(z9[1] == std::vector<Element>{0, 3, 6});
  CHECK(z9[2].size() == 9);
  CHECK(subgroups(cyclic_group(15)).size() == 4);
  std::set<std::size_t> orders;
  for (const auto& h : subgroups(semidirect_cyclic(7, 3, 2))) orders.insert(h.size());
  CHECK(orders == std::set<std::size_t>{1, 3, 7, 21});
  CHECK(subgroups(semidirect_cyclic(3, 2, 2)).size() == 6);
  Limits tiny;
  tiny.group_order = 8;
  CHECK_THROWS_AS(subgroups(cyclic_group(9), tiny), Error);
}

TEST_CASE("inner automorphisms and translations") {
  CHECK(inner_automorphisms(cyclic_group(7)).size() == 1);
  CHECK(inner_automorphisms(semidirect_cyclic(7, 3, 2)).size() == 21);
  CHECK(inner_automorphisms(semidirect_cyclic(3, 2, 2)).size() == 6);
  CHECK(conjugation(semidirect_cyclic(7, 3, 2), 0) == identity_permutation(21));
  const auto g = semidirect_cyclic(7, 3, 2);
  for (const auto& c : inner_automorphisms(g)) CHECK(is_group_automorphism(g, c));

  const auto z3 = left_translations(cyclic_group(3));
  REQUIRE(z3.size() == 3);
  CHECK(z3[0] == identity_permutation(3));
  CHECK(z3[1] == Permutation{1, 2, 0});
  const auto ls = left_translations(g);
  std::set<Permutation> distinct(ls.begin(), ls.end());
  CHECK(distinct.size() == 21);
  for (int a = 0; a < 21; ++a) {
    for (int b = 0; b < 21; ++b) CHECK(compose(ls[a], ls[b]) == ls[g.mul(a, b)]);
  }
}

TEST_CASE("group automorphisms") {
  CHECK(group_automorphisms(cyclic_group(7)).size() == 6);
  CHECK(group_automorphisms(cyclic_group(9)).size() == 6);
  CHECK(group_automorphisms(direct_sum(std::vector<FiniteGroup>{cyclic_group(2), cyclic_group(2)})).size() == 6);
  CHECK(group_automorphisms(semidirect_cyclic(7, 3, 2)).size() == 42);
  for (const auto& phi : group_automorphisms(cyclic_group(8))) CHECK(is_group_automorphism(cyclic_group(8), phi));
}

TEST_CASE("left cosets") {
  const auto g = cyclic_group(9);
  const std::vector<Element> h = {0, 3, 6};
  CHECK(left_coset(g, 1, h) == std::vector<Element>{1, 4, 7});
  CHECK(left_coset(g, 5, h) == std::vector<Element>{2, 5, 8});
}
