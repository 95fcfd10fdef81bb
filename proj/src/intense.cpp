#include "evg/intense.hpp"

#include <algorithm>
#include <numeric>

#include "evg/catalog.hpp"
#include "evg/errors.hpp"

namespace evg {

GroupAutomorphism::GroupAutomorphism(const FiniteGroup& group, std::vector<int> map)
    : group_(&group), map_(std::move(map)) {
  const int n = group.order();
  if (static_cast<int>(map_.size()) != n)
    throw InvalidArgument("automorphism map has wrong size");
  std::vector<char> hit(n, 0);
  for (int x : map_) {
    if (x < 0 || x >= n || hit[x])
      throw InvalidArgument("automorphism map is not a bijection");
    hit[x] = 1;
  }
  if (map_[group.identity()] != group.identity())
    throw InvalidArgument("automorphism must fix the identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map_[group.mul(a, b)] != group.mul(map_[a], map_[b]))
        throw InvalidArgument("map is not a homomorphism");
}

bool GroupAutomorphism::is_identity_map() const {
  for (int i = 0; i < static_cast<int>(map_.size()); ++i)
    if (map_[i] != i) return false;
  return true;
}

GroupAutomorphism identity_automorphism(const FiniteGroup& G) {
  std::vector<int> map(G.order());
  std::iota(map.begin(), map.end(), 0);
  return GroupAutomorphism(G, std::move(map));
}

GroupAutomorphism conjugation_automorphism(const FiniteGroup& G, int x) {
  std::vector<int> map(G.order());
  for (int g = 0; g < G.order(); ++g) map[g] = G.conjugate(g, x);
  return GroupAutomorphism(G, std::move(map));
}

GroupAutomorphism compose(const GroupAutomorphism& a, const GroupAutomorphism& b) {
  std::vector<int> map(a.group().order());
  for (int g = 0; g < a.group().order(); ++g) map[g] = a(b(g));
  return GroupAutomorphism(a.group(), std::move(map));
}

GroupAutomorphism inverse(const GroupAutomorphism& a) {
  std::vector<int> map(a.group().order());
  for (int g = 0; g < a.group().order(); ++g) map[a(g)] = g;
  return GroupAutomorphism(a.group(), std::move(map));
}

Subgroup image_subgroup(const GroupAutomorphism& aut, const Subgroup& H) {
  std::vector<int> members;
  members.reserve(H.members.size());
  for (int h : H.members) members.push_back(aut(h));
  std::sort(members.begin(), members.end());
  return Subgroup{&aut.group(), std::move(members)};
}

bool is_intense(const GroupAutomorphism& aut, const std::vector<Subgroup>* subs) {
  const FiniteGroup& G = aut.group();
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  for (const Subgroup& H : *subs)
    if (!are_conjugate(G, image_subgroup(aut, H), H)) return false;
  return true;
}

IntenseSetResult int_group_of_elementary_abelian(int p, int k) {
  if (!is_prime(p) || k < 1) throw InvalidArgument("need p prime, k >= 1");
  long long cells = 1;
  for (int i = 0; i < k * k; ++i) {
    cells *= p;
    if (cells > 2'000'000)
      throw CapExceeded("automorphism search infeasible for p^(k^2) this large");
  }
  long long sz = 1;
  for (int i = 0; i < k; ++i) sz *= p;
  if (sz > 81) throw CapExceeded("group order exceeds intense-search cap 81");

  IntenseSetResult out;
  out.group = std::make_unique<FiniteGroup>(elementary_abelian(p, k));
  const FiniteGroup& V = *out.group;
  std::vector<Subgroup> subs = all_subgroups(V);

  // every k x k matrix over F_p; singular ones fail the bijection check
  std::vector<int> matrix(k * k, 0);
  for (long long code = 0; code < cells; ++code) {
    long long c = code;
    for (int i = 0; i < k * k; ++i) {
      matrix[i] = static_cast<int>(c % p);
      c /= p;
    }
    ElementMap map;
    try {
      map = elementary_abelian_matrix_map(V, p, k, matrix);
    } catch (const Error&) {
      continue;
    }
    std::vector<char> hit(V.order(), 0);
    bool bijective = true;
    for (int x : map) {
      if (hit[x]) {
        bijective = false;
        break;
      }
      hit[x] = 1;
    }
    if (!bijective) continue;
    GroupAutomorphism aut(V, std::move(map));
    if (is_intense(aut, &subs)) out.intense.push_back(std::move(aut));
  }
  return out;
}

FrattiniContext frattini_context(const FiniteGroup& P,
                                 const std::vector<Subgroup>* subs) {
  auto primes = P.prime_divisors();
  if (primes.size() != 1)
    throw InvalidArgument("frattini_context expects a nontrivial p-group");
  Subgroup phi = frattini_subgroup(P, subs);
  QuotientGroup q = quotient(P, phi);
  return FrattiniContext{&P, primes[0], std::move(phi), std::move(q)};
}

GroupAutomorphism induced_on_frattini_quotient(const FrattiniContext& ctx,
                                               const GroupAutomorphism& aut) {
  // Frattini is characteristic, so aut permutes the cosets.
  const FiniteGroup& Q = ctx.quotient.group;
  std::vector<int> map(Q.order(), -1);
  for (int g = 0; g < ctx.group->order(); ++g) {
    int from = ctx.quotient.projection[g];
    int to = ctx.quotient.projection[aut(g)];
    if (map[from] >= 0 && map[from] != to)
      throw InvalidArgument("automorphism does not preserve Frattini cosets");
    map[from] = to;
  }
  return GroupAutomorphism(Q, std::move(map));
}

int lambda_value(const FrattiniContext& ctx, const GroupAutomorphism& aut) {
  const FiniteGroup& Q = ctx.quotient.group;
  if (Q.order() == 1)
    throw InvalidArgument("lambda_value: Frattini quotient is trivial");
  const int p = ctx.prime;
  GroupAutomorphism beta = induced_on_frattini_quotient(ctx, aut);
  int mu = -1;
  for (int v = 1; v < Q.order(); ++v) {
    int target = beta(v);
    int found = -1;
    int x = v;
    for (int e = 1; e < p; ++e) {
      if (x == target) {
        found = e;
        break;
      }
      x = Q.mul(x, v);
    }
    if (found < 0)
      throw NotScalar("induced map sends a vector off its own line", v, target);
    if (mu < 0)
      mu = found;
    else if (found != mu)
      throw NotScalar("induced map is not a single scalar", v, target);
  }
  return mu;
}

std::optional<int> stable_conjugate(const FiniteGroup& P,
                                    const std::vector<GroupAutomorphism>& auts,
                                    const Subgroup& H) {
  for (int x = 0; x < P.order(); ++x) {
    Subgroup C = conjugate_subgroup(P, H, x);
    bool stable = true;
    for (const GroupAutomorphism& a : auts)
      if (!(image_subgroup(a, C).members == C.members)) {
        stable = false;
        break;
      }
    if (stable) return x;
  }
  return std::nullopt;
}

}  // namespace evg
