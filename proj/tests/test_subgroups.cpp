#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "evg/catalog.hpp"
#include "evg/errors.hpp"
#include "evg/subgroups.hpp"

using namespace evg;

TEST_CASE("S3 has exactly 6 subgroups") {
  FiniteGroup G = symmetric(3);
  auto subs = all_subgroups(G);
  REQUIRE(subs.size() == 6);
  std::multiset<int> orders;
  for (const auto& H : subs) orders.insert(H.order());
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 6});
}

TEST_CASE("trivial group has exactly one subgroup") {
  FiniteGroup G = cyclic(1);
  CHECK(all_subgroups(G).size() == 1);
}

TEST_CASE("A5 has 59 subgroups") {
  FiniteGroup G = alternating(5);
  auto subs = all_subgroups(G);
  CHECK(subs.size() == 59);
  // Lagrange
  for (const auto& H : subs) CHECK(G.order() % H.order() == 0);
  // every element lies in the cyclic subgroup it generates, which is listed
  for (int g = 0; g < G.order(); ++g) {
    Subgroup c = cyclic_subgroup(G, g);
    CHECK(std::find(subs.begin(), subs.end(), c) != subs.end());
  }
}

TEST_CASE("enumeration cap is honored") {
  CHECK_THROWS_AS(all_subgroups(symmetric(5), 100), CapExceeded);
}

TEST_CASE("Sylow subgroups") {
  SUBCASE("C6 has a unique Sylow 2") {
    auto G = cyclic(6);
    CHECK(sylow_subgroups(G, 2).size() == 1);
  }
  SUBCASE("S3 has three Sylow 2s") {
    auto G = symmetric(3);
    auto syl = sylow_subgroups(G, 2);
    REQUIRE(syl.size() == 3);
    for (const auto& S : syl) CHECK(S.order() == 2);
  }
  SUBCASE("A5 has six Sylow 5s, all conjugate") {
    auto G = alternating(5);
    auto subs = all_subgroups(G);
    auto syl = sylow_subgroups(G, 5, &subs);
    REQUIRE(syl.size() == 6);
    for (const auto& S : syl) {
      CHECK(S.order() == 5);
      CHECK(are_conjugate(G, syl.front(), S).has_value());
    }
  }
  SUBCASE("non-prime p rejected") {
    auto G = cyclic(6);
    CHECK_THROWS_AS(sylow_subgroups(G, 6), InvalidArgument);
  }
}

TEST_CASE("Sylow counts: 1 mod p, dividing the coprime part") {
  for (const char* name : {"S4", "A5", "D6", "paper_G_3"}) {
    FiniteGroup G = catalog_group(name);
    auto subs = all_subgroups(G);
    for (int p : G.prime_divisors()) {
      int np = static_cast<int>(sylow_subgroups(G, p, &subs).size());
      CHECK(np % p == 1);
      int coprime = G.order();
      while (coprime % p == 0) coprime /= p;
      CHECK(coprime % np == 0);
    }
  }
}

TEST_CASE("normalizer") {
  auto G = alternating(5);
  auto subs = all_subgroups(G);
  CHECK(normalizer(G, full_subgroup(G)).order() == 60);
  auto syl5 = sylow_subgroups(G, 5, &subs);
  CHECK(normalizer(G, syl5.front()).order() == 10);
  auto S3g = symmetric(3);
  auto syl2 = sylow_subgroups(S3g, 2);
  CHECK(normalizer(S3g, syl2.front()).members == syl2.front().members);
}

TEST_CASE("normality") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  CHECK(is_normal(G, trivial_subgroup(G)));
  for (const auto& H : subs) {
    if (H.order() == 3) CHECK(is_normal(G, H));
    if (H.order() == 2) CHECK(!is_normal(G, H));
  }
}

TEST_CASE("subgroup conjugacy is an equivalence with witnesses") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  std::vector<Subgroup> order2;
  for (const auto& H : subs)
    if (H.order() == 2) order2.push_back(H);
  REQUIRE(order2.size() == 3);
  auto w = are_conjugate(G, order2[0], order2[1]);
  REQUIRE(w.has_value());
  CHECK(G.element_order(*w) == 3);
  CHECK(conjugate_subgroup(G, order2[0], *w).members == order2[1].members);
  // reflexive via identity, symmetric via inverse, transitive via product
  CHECK(are_conjugate(G, order2[0], order2[0]).has_value());
  auto w2 = are_conjugate(G, order2[1], order2[2]);
  REQUIRE(w2.has_value());
  CHECK(conjugate_subgroup(G, order2[0], G.mul(*w2, *w)).members ==
        order2[2].members);
  // order mismatch short-circuits
  std::vector<Subgroup> order3;
  for (const auto& H : subs)
    if (H.order() == 3) order3.push_back(H);
  CHECK(!are_conjugate(G, order2[0], order3[0]).has_value());
}

TEST_CASE("quotient by trivial subgroup is an isomorphic copy") {
  auto G = symmetric(3);
  auto Q = quotient(G, trivial_subgroup(G));
  CHECK(Q.group.order() == 6);
  std::multiset<int> a, b;
  for (int i = 0; i < 6; ++i) {
    a.insert(G.element_order(i));
    b.insert(Q.group.element_order(i));
  }
  CHECK(a == b);
}

TEST_CASE("quotient of S3 by its 3-subgroup") {
  auto G = symmetric(3);
  for (const auto& H : all_subgroups(G))
    if (H.order() == 3) {
      auto Q = quotient(G, H);
      CHECK(Q.group.order() == 2);
    }
}

TEST_CASE("quotient projection is a homomorphism") {
  auto G = catalog_group("D6");
  for (const auto& N : normal_subgroups(G)) {
    auto Q = quotient(G, N);
    CHECK(Q.group.order() * N.order() == G.order());
    for (int a = 0; a < G.order(); ++a)
      for (int b = 0; b < G.order(); ++b)
        CHECK(Q.projection[G.mul(a, b)] ==
              Q.group.mul(Q.projection[a], Q.projection[b]));
  }
}

TEST_CASE("quotient rejects non-normal subgroups") {
  auto G = symmetric(3);
  for (const auto& H : all_subgroups(G))
    if (H.order() == 2) CHECK_THROWS_AS(quotient(G, H), InvalidArgument);
}

TEST_CASE("quotient of Heis(F_3) by its center") {
  auto G = heisenberg(3);
  Subgroup center = centralizer_of_subgroup(G, full_subgroup(G));
  REQUIRE(center.order() == 3);
  auto Q = quotient(G, center);
  CHECK(Q.group.order() == 9);
  for (int a = 0; a < 9; ++a) {
    CHECK(Q.group.element_order(a) <= 3);  // exponent 3
    for (int b = 0; b < 9; ++b) CHECK(Q.group.mul(a, b) == Q.group.mul(b, a));
  }
}

TEST_CASE("frattini subgroup") {
  SUBCASE("elementary abelian: trivial") {
    auto V = elementary_abelian(3, 2);
    CHECK(frattini_subgroup(V).order() == 1);
  }
  SUBCASE("C9: the order-3 subgroup") {
    auto C = cyclic(9);
    CHECK(frattini_subgroup(C).order() == 3);
  }
  SUBCASE("Heis(F_3): its center") {
    auto H = heisenberg(3);
    Subgroup phi = frattini_subgroup(H);
    Subgroup center = centralizer_of_subgroup(H, full_subgroup(H));
    CHECK(phi.members == center.members);
  }
}

TEST_CASE("complements") {
  SUBCASE("N = G leaves only the trivial complement") {
    auto G = symmetric(3);
    auto comps = complements(G, full_subgroup(G));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].order() == 1);
  }
  SUBCASE("S3: three complements of the 3-subgroup") {
    auto G = symmetric(3);
    for (const auto& H : all_subgroups(G))
      if (H.order() == 3) CHECK(complements(G, H).size() == 3);
  }
  SUBCASE("C4: no complement of the order-2 subgroup") {
    auto G = cyclic(4);
    for (const auto& H : all_subgroups(G))
      if (H.order() == 2) CHECK(complements(G, H).empty());
  }
  SUBCASE("Schur-Zassenhaus: coprime normal subgroups always split") {
    for (const char* name : {"S3", "D6", "Dic3", "F20", "paper_G_3"}) {
      auto G = catalog_group(name);
      auto subs = all_subgroups(G);
      for (const auto& N : normal_subgroups(G, &subs)) {
        int index = G.order() / N.order();
        if (std::gcd(N.order(), index) == 1)
          CHECK(!complements(G, N, &subs).empty());
      }
    }
  }
}

TEST_CASE("generated subgroup") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  CHECK(generated_subgroup(G, {}).order() == 1);
  for (const auto& H : subs)
    CHECK(generated_subgroup(G, {H}).members == H.members);
  Subgroup two, three;
  for (const auto& H : subs) {
    if (H.order() == 2) two = H;
    if (H.order() == 3) three = H;
  }
  CHECK(generated_subgroup(G, {two, three}).order() == 6);
}

TEST_CASE("commutator subgroups") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  CHECK(commutator_subgroup_pair(G, full_subgroup(G), trivial_subgroup(G)).order() == 1);
  CHECK(commutator_subgroup_pair(G, full_subgroup(G), full_subgroup(G)).order() == 3);

  auto P = direct_product(cyclic(2), cyclic(3));
  auto psubs = all_subgroups(P);
  Subgroup a, b;
  for (const auto& H : psubs) {
    if (H.order() == 2) a = H;
    if (H.order() == 3) b = H;
  }
  CHECK(commutator_subgroup_pair(P, a, b).order() == 1);
}

TEST_CASE("subgroup_as_group round trip") {
  auto G = alternating(5);
  auto subs = all_subgroups(G);
  for (const auto& H : subs) {
    if (H.order() != 12) continue;
    auto S = subgroup_as_group(G, H);
    CHECK(S.group.order() == 12);
    for (int a = 0; a < S.group.order(); ++a)
      for (int b = 0; b < S.group.order(); ++b)
        CHECK(S.to_parent[S.group.mul(a, b)] ==
              G.mul(S.to_parent[a], S.to_parent[b]));
    break;
  }
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(cyclic(12)));
  CHECK(is_nilpotent(quaternion8()));
  CHECK(is_nilpotent(heisenberg(3)));
  CHECK(!is_nilpotent(symmetric(3)));
  CHECK(!is_nilpotent(catalog_group("D6")));
}
