#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "evg/catalog.hpp"
#include "evg/errors.hpp"
#include "evg/intense.hpp"

using namespace evg;

TEST_CASE("automorphism validation") {
  auto G = symmetric(3);
  CHECK_NOTHROW(identity_automorphism(G));
  // inversion is not an automorphism of a nonabelian group
  std::vector<int> inv_map(6);
  for (int g = 0; g < 6; ++g) inv_map[g] = G.inv(g);
  CHECK_THROWS_AS(GroupAutomorphism(G, inv_map), InvalidArgument);
  // but it is one for an abelian group
  auto C = cyclic(5);
  std::vector<int> cm(5);
  for (int g = 0; g < 5; ++g) cm[g] = C.inv(g);
  CHECK_NOTHROW(GroupAutomorphism(C, cm));
}

TEST_CASE("conjugation automorphisms compose like the group") {
  auto G = quaternion8();
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      auto lhs = compose(conjugation_automorphism(G, x), conjugation_automorphism(G, y));
      auto rhs = conjugation_automorphism(G, G.mul(x, y));
      CHECK(lhs == rhs);
    }
  auto a = conjugation_automorphism(G, 3);
  CHECK(compose(a, inverse(a)) == identity_automorphism(G));
}

TEST_CASE("inner automorphisms are intense") {
  for (const char* name : {"S3", "Q8", "Heis3", "D4"}) {
    auto G = catalog_group(name);
    auto subs = all_subgroups(G);
    for (int x = 0; x < G.order(); ++x)
      CHECK(is_intense(conjugation_automorphism(G, x), &subs));
  }
}

TEST_CASE("image subgroup") {
  auto G = symmetric(3);
  auto subs = all_subgroups(G);
  auto a = conjugation_automorphism(G, G.order() - 1);
  for (const auto& H : subs) {
    auto img = image_subgroup(a, H);
    CHECK(img.order() == H.order());
    CHECK(are_conjugate(G, H, img).has_value());
  }
}

TEST_CASE("a swap automorphism of (F_3)^2 is not intense") {
  auto V = elementary_abelian(3, 2);
  auto m = elementary_abelian_matrix_map(V, 3, 2, {0, 1, 1, 0});
  CHECK(!is_intense(GroupAutomorphism(V, m)));
  // scalars are
  auto d = elementary_abelian_matrix_map(V, 3, 2, {2, 0, 0, 2});
  CHECK(is_intense(GroupAutomorphism(V, d)));
}

TEST_CASE("Int((F_p)^k) has order p-1") {
  struct Case { int p, k; };
  for (auto [p, k] : {Case{2, 1}, Case{2, 2}, Case{3, 1}, Case{3, 2}, Case{5, 1}}) {
    auto res = int_group_of_elementary_abelian(p, k);
    CHECK(static_cast<int>(res.intense.size()) == p - 1);
    // closed under composition and inverse: scalars
    for (const auto& a : res.intense)
      for (const auto& b : res.intense) {
        auto c = compose(a, b);
        bool found = false;
        for (const auto& x : res.intense) found |= (x == c);
        CHECK(found);
      }
  }
}

TEST_CASE("frattini context of heisenberg(3)") {
  auto H = heisenberg(3);
  auto ctx = frattini_context(H);
  CHECK(ctx.prime == 3);
  CHECK(ctx.phi.order() == 3);
  CHECK(ctx.quotient.group.order() == 9);
}

TEST_CASE("lambda of the heisenberg scalar action") {
  auto H = heisenberg(3);
  auto ctx = frattini_context(H);
  for (int lam = 1; lam <= 2; ++lam) {
    GroupAutomorphism a(H, heisenberg_scalar_action(H, 3, lam));
    CHECK(lambda_value(ctx, a) == lam);
  }
  CHECK(lambda_value(ctx, identity_automorphism(H)) == 1);
}

TEST_CASE("lambda is multiplicative") {
  auto H = heisenberg(5);
  auto subs = all_subgroups(H);
  auto ctx = frattini_context(H, &subs);
  GroupAutomorphism a(H, heisenberg_scalar_action(H, 5, 2));
  GroupAutomorphism b(H, heisenberg_scalar_action(H, 5, 3));
  CHECK(lambda_value(ctx, a) == 2);
  CHECK(lambda_value(ctx, b) == 3);
  CHECK(lambda_value(ctx, compose(a, b)) == (2 * 3) % 5);
}

TEST_CASE("non-scalar induced maps are reported") {
  auto V = elementary_abelian(3, 2);
  auto ctx = frattini_context(V);
  GroupAutomorphism swp(V, elementary_abelian_matrix_map(V, 3, 2, {0, 1, 1, 0}));
  CHECK_THROWS_AS(lambda_value(ctx, swp), NotScalar);
  try {
    lambda_value(ctx, swp);
  } catch (const NotScalar& ex) {
    CHECK(ex.vector_a != ex.vector_b);
  }
}

TEST_CASE("lambda rejects trivial frattini quotient") {
  auto C = cyclic(1);
  CHECK_THROWS_AS(frattini_context(C), InvalidArgument);
}

TEST_CASE("stable conjugate") {
  auto H = heisenberg(3);
  auto subs = all_subgroups(H);
  std::vector<GroupAutomorphism> auts = {
      GroupAutomorphism(H, heisenberg_scalar_action(H, 3, 2))};
  // every subgroup has a conjugate stabilized by the torus action
  for (const auto& S : subs) {
    auto x = stable_conjugate(H, auts, S);
    REQUIRE(x.has_value());
    Subgroup moved = conjugate_subgroup(H, S, *x);
    for (const auto& a : auts)
      CHECK(image_subgroup(a, moved).members == moved.members);
  }
  // a swap of (F_3)^2 stabilizes no conjugate of an off-axis line... actually
  // it fixes the diagonal lines; pick a line it moves
  auto V = elementary_abelian(3, 2);
  std::vector<GroupAutomorphism> sw = {
      GroupAutomorphism(V, elementary_abelian_matrix_map(V, 3, 2, {0, 1, 1, 0}))};
  bool some_unstable = false;
  for (const auto& L : all_subgroups(V))
    if (L.order() == 3 && !stable_conjugate(V, sw, L)) some_unstable = true;
  CHECK(some_unstable);
}
