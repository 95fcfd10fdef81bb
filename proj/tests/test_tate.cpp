#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "evg/catalog.hpp"
#include "evg/errors.hpp"
#include "evg/evolving.hpp"
#include "evg/tate.hpp"

using namespace evg;

TEST_CASE("coset G-sets") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  for (const auto& K : subs) {
    GSet X = coset_gset(G, K);
    CHECK(X.num_points == G.order() / K.order());
    REQUIRE(X.orbits.size() == 1);  // transitive
    CHECK(X.stabilizer_order[0] == K.order());
  }
}

TEST_CASE("make_gset rejects a non-action") {
  auto G = cyclic(2);
  // the non-identity element acts by a non-involution on 3 points
  std::vector<std::vector<int>> act = {{0, 1, 2}, {1, 2, 0}};
  CHECK_THROWS_AS(make_gset(G, std::move(act)), InvalidArgument);
}

TEST_CASE("disjoint union concatenates orbits") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  GSet a = coset_gset(G, subs[0]);       // regular, 6 points
  GSet b = coset_gset(G, full_subgroup(G));  // 1 point
  GSet u = disjoint_union(G, {a, b});
  CHECK(u.num_points == 7);
  REQUIRE(u.orbits.size() == 2);
  CHECK(tate_h0_shape(u) == std::vector<int>{1, 6});
}

TEST_CASE("h0 shape lists stabilizer orders") {
  auto G = alternating(5);
  auto subs = all_subgroups(G);
  Subgroup K5, K12;
  for (const auto& H : subs) {
    if (H.order() == 5) K5 = H;
    if (H.order() == 12) K12 = H;
  }
  GSet X = disjoint_union(G, {coset_gset(G, K5), coset_gset(G, K12)});
  CHECK(tate_h0_shape(X) == std::vector<int>{5, 12});
}

TEST_CASE("restriction of the zero class always vanishes") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  GSet X = coset_gset(G, subs[1]);
  for (const auto& H : subs)
    CHECK(restriction_vanishes(G, H, X, zero_class(X)));
}

TEST_CASE("restriction to the trivial subgroup always vanishes") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  for (const auto& K : subs) {
    GSet X = coset_gset(G, K);
    for (long long r = 0; r < K.order(); ++r)
      CHECK(restriction_vanishes(G, trivial_subgroup(G), X, TateClass{{r}}));
  }
}

TEST_CASE("vanishing index set on C4 / C2") {
  auto G = cyclic(4);
  auto subs = all_subgroups(G);
  Subgroup K;
  for (const auto& H : subs)
    if (H.order() == 2) K = H;
  GSet X = coset_gset(G, K);
  // residues mod 2; class 1 vanishes only where the action is free
  auto idx = vanishing_index_set(G, X, TateClass{{1}}, &subs);
  CHECK(idx == std::set<int>{4});
  auto all = vanishing_index_set(G, X, TateClass{{0}}, &subs);
  CHECK(all == std::set<int>{1, 2, 4});
}

TEST_CASE("min_equals_gcd") {
  auto r = min_equals_gcd({60, 20, 12});
  CHECK(r.min == 12);
  CHECK(r.gcd == 4);
  CHECK(!r.equal);
  auto s = min_equals_gcd({6, 12, 18});
  CHECK(s.min == 6);
  CHECK(s.gcd == 6);
  CHECK(s.equal);
}

TEST_CASE("lemma_cocycle for S3 at p = 2, trivial I") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  auto inst = lemma_cocycle(G, 2, trivial_subgroup(G), &subs);
  CHECK(inst.prime == 2);
  CHECK(inst.alpha == 0);
  // I trivial, alpha = 0: only the G/S part, residue 2^0 = 1 mod 2
  CHECK(inst.l_reps.empty());
  REQUIRE(inst.gset.orbits.size() == 1);
  CHECK(inst.gset.stabilizer_order[0] == 2);
  CHECK(inst.cls.residues == std::vector<long long>{1});
}

TEST_CASE("lemma_cocycle for A5 at p = 2, trivial I") {
  auto G = alternating(5);
  auto subs = all_subgroups(G);
  auto inst = lemma_cocycle(G, 2, trivial_subgroup(G), &subs);
  auto idx = vanishing_index_set(G, inst.gset, inst.cls, &subs);
  CHECK(idx == std::set<int>{60, 20, 12});
  auto r = min_equals_gcd(idx);
  CHECK(r.min == 12);
  CHECK(r.gcd == 4);
  CHECK(!r.equal);
}

TEST_CASE("lemma_cocycle l_reps: order-2 classes of D4") {
  auto G = dihedral(4);
  auto subs = all_subgroups(G);
  // the center is one class of order-2 subgroups; two more classes exist
  for (const auto& cls : subgroup_conjugacy_classes(G, subs)) {
    const Subgroup& I = subs[cls.front()];
    if (I.order() != 2) continue;
    auto inst = lemma_cocycle(G, 2, I, &subs);
    CHECK(inst.alpha == 1);
    CHECK(inst.l_reps.size() == 2);  // the two other order-2 classes
    // G/S orbit residue 2 mod 8, G/L orbits residue 1 mod 2
    CHECK(inst.cls.residues.front() == 2);
    for (size_t i = 1; i < inst.cls.residues.size(); ++i)
      CHECK(inst.cls.residues[i] == 1);
  }
}

TEST_CASE("vanishing characterization agrees with the subgroup machinery") {
  for (const char* name : {"S3", "D4", "A4", "Q8", "C12", "D6"}) {
    auto G = catalog_group(name);
    auto subs = all_subgroups(G);
    for (const auto& cls : subgroup_conjugacy_classes(G, subs)) {
      const Subgroup& I = subs[cls.front()];
      for (int p : G.prime_divisors()) {
        bool is_p_power = true;
        for (int n = I.order(); n > 1; n /= p)
          if (n % p != 0) { is_p_power = false; break; }
        if (!is_p_power) continue;
        CHECK(vanishing_characterization_check(G, p, I, &subs));
      }
    }
  }
}

TEST_CASE("evolving_via_tate matches is_evolving") {
  for (const char* name :
       {"C1", "C6", "S3", "S4", "A4", "A5", "D4", "D6", "Q8", "Heis3",
        "paper_G_3", "paper_W_3", "F20", "Dic3"}) {
    auto G = catalog_group(name);
    auto subs = all_subgroups(G);
    std::vector<TateRecord> records;
    bool via_tate = evolving_via_tate(G, &subs, &records);
    CHECK(via_tate == is_evolving(G, &subs).evolving);
    if (G.order() > 1) CHECK(!records.empty());
    for (const auto& r : records) CHECK(r.equal == (r.min == r.gcd));
  }
}

TEST_CASE("oracle: regular G-set has trivial H^0") {
  for (const char* name : {"C4", "S3", "Q8"}) {
    auto G = catalog_group(name);
    GSet X = coset_gset(G, trivial_subgroup(G));
    CHECK(tate_h0_oracle(G, X).empty());
  }
}

TEST_CASE("oracle: S3 on 3 points gives Z/2") {
  auto G = symmetric(3);
  Subgroup pt;  // point stabilizer = an order-2 subgroup
  for (const auto& H : all_subgroups(G))
    if (H.order() == 2) { pt = H; break; }
  GSet X = coset_gset(G, pt);
  CHECK(tate_h0_oracle(G, X) == std::vector<long long>{2});
}

TEST_CASE("oracle matches shape across coset spaces") {
  for (const char* name : {"C12", "S3", "D4", "A4", "Q8", "D6"}) {
    auto G = catalog_group(name);
    auto subs = all_subgroups(G);
    for (const auto& K : subs) {
      GSet X = coset_gset(G, K);
      auto expected = abelian_elementary_divisors({K.order()});
      CHECK(tate_h0_oracle(G, X) == expected);
    }
  }
}

TEST_CASE("oracle enforces caps") {
  auto G = alternating(5);
  GSet X = coset_gset(G, full_subgroup(G));
  CHECK_THROWS_AS(tate_h0_oracle(G, X, 30), CapExceeded);
  GSet big = coset_gset(G, trivial_subgroup(G));
  CHECK_THROWS_AS(tate_h0_oracle(G, big), CapExceeded);
}

TEST_CASE("restriction oracle agrees with the residue rule") {
  for (const char* name : {"S3", "D4", "C12", "A4"}) {
    auto G = catalog_group(name);
    auto subs = all_subgroups(G);
    for (const auto& K : subs) {
      if (G.order() / K.order() > 12) continue;
      GSet X = coset_gset(G, K);
      for (long long r = 0; r < std::min(K.order(), 6); ++r) {
        TateClass c{{r}};
        for (const auto& H : subs)
          CHECK(restriction_vanishes(G, H, X, c) ==
                restriction_vanishes_oracle(G, H, X, c));
      }
    }
  }
}

TEST_CASE("elementary divisors canonicalization") {
  CHECK(abelian_elementary_divisors({6}) == std::vector<long long>{2, 3});
  CHECK(abelian_elementary_divisors({4, 6}) == std::vector<long long>{2, 3, 4});
  CHECK(abelian_elementary_divisors({1, 1}).empty());
  CHECK(abelian_elementary_divisors({12, 18}) ==
        std::vector<long long>{2, 3, 4, 9});
}

TEST_CASE("smith invariant factors") {
  CHECK(smith_invariant_factors({{2, 0}, {0, 3}}) ==
        std::vector<long long>{1, 6});
  CHECK(smith_invariant_factors({{1, 0}, {0, 1}}) ==
        std::vector<long long>{1, 1});
  CHECK(smith_invariant_factors({{0, 0}, {0, 0}}).empty());
  CHECK(smith_invariant_factors({{4, 2}, {2, 4}}) ==
        std::vector<long long>{2, 6});
  // divisibility chain holds on random-ish inputs
  auto f = smith_invariant_factors({{6, 4, 2}, {4, 6, 8}, {2, 8, 6}});
  for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
}
