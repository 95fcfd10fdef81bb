#include "evg/subgroups.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "evg/errors.hpp"

namespace evg {

bool Subgroup::contains(int g) const {
  return std::binary_search(members.begin(), members.end(), g);
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return std::includes(members.begin(), members.end(), other.members.begin(),
                       other.members.end());
}

bool Subgroup::operator<(const Subgroup& o) const {
  if (order() != o.order()) return order() < o.order();
  return members < o.members;
}

Subgroup trivial_subgroup(const FiniteGroup& G) {
  return Subgroup{&G, {G.identity()}};
}

Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<int> all(G.order());
  for (int i = 0; i < G.order(); ++i) all[i] = i;
  return Subgroup{&G, std::move(all)};
}

Subgroup cyclic_subgroup(const FiniteGroup& G, int g) {
  std::vector<int> members{G.identity()};
  for (int x = g; x != G.identity(); x = G.mul(x, g)) members.push_back(x);
  std::sort(members.begin(), members.end());
  return Subgroup{&G, std::move(members)};
}

Subgroup close_indices(const FiniteGroup& G, std::vector<int> seed) {
  std::vector<char> in(G.order(), 0);
  std::vector<int> work;
  auto push = [&](int g) {
    if (!in[g]) {
      in[g] = 1;
      work.push_back(g);
    }
  };
  push(G.identity());
  for (int g : seed) push(g);
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < work.size(); ++j) push(G.mul(work[i], work[j]));
  }
  std::sort(work.begin(), work.end());
  return Subgroup{&G, std::move(work)};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G, int cap) {
  if (G.order() > cap)
    throw CapExceeded("subgroup enumeration cap " + std::to_string(cap) +
                      " exceeded by group of order " + std::to_string(G.order()));

  std::set<std::vector<int>> known;
  std::vector<Subgroup> subs;
  auto add = [&](Subgroup s) {
    if (known.insert(s.members).second) {
      subs.push_back(std::move(s));
      return true;
    }
    return false;
  };

  add(trivial_subgroup(G));
  std::vector<Subgroup> cyclics;
  for (int g = 1; g < G.order(); ++g) {
    Subgroup c = cyclic_subgroup(G, g);
    if (add(c)) cyclics.push_back(subs.back());
  }

  // Join every known subgroup with every cyclic until fixpoint. Any subgroup
  // is reached: it is generated by its cyclic subgroups one join at a time.
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t count = subs.size();
    for (size_t i = 0; i < count; ++i) {
      for (const Subgroup& c : cyclics) {
        if (subs[i].contains_subgroup(c)) continue;
        std::vector<int> seed = subs[i].members;
        seed.insert(seed.end(), c.members.begin(), c.members.end());
        if (add(close_indices(G, std::move(seed)))) grew = true;
      }
    }
  }
  std::sort(subs.begin(), subs.end());
  return subs;
}

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& G, int p,
                                      const std::vector<Subgroup>* subs) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
  int target = 1;
  for (int k = 0; k < ord_p(G.order(), p); ++k) target *= p;
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  std::vector<Subgroup> out;
  for (const Subgroup& H : *subs)
    if (H.order() == target) out.push_back(H);
  return out;
}

Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int x) {
  std::vector<int> members;
  members.reserve(H.members.size());
  for (int h : H.members) members.push_back(G.conjugate(h, x));
  std::sort(members.begin(), members.end());
  return Subgroup{&G, std::move(members)};
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> members;
  for (int x = 0; x < G.order(); ++x)
    if (conjugate_subgroup(G, H, x).members == H.members) members.push_back(x);
  return Subgroup{&G, std::move(members)};
}

Subgroup centralizer_of_subgroup(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> members;
  for (int x = 0; x < G.order(); ++x) {
    bool central = true;
    for (int h : H.members)
      if (G.mul(x, h) != G.mul(h, x)) {
        central = false;
        break;
      }
    if (central) members.push_back(x);
  }
  return Subgroup{&G, std::move(members)};
}

bool is_normal(const FiniteGroup& G, const Subgroup& H) {
  return normalizer(G, H).order() == G.order();
}

std::optional<int> are_conjugate(const FiniteGroup& G, const Subgroup& H,
                                 const Subgroup& K) {
  if (H.order() != K.order()) return std::nullopt;
  for (int x = 0; x < G.order(); ++x)
    if (conjugate_subgroup(G, H, x).members == K.members) return x;
  return std::nullopt;
}

QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N) {
  if (!is_normal(G, N)) throw InvalidArgument("quotient: subgroup is not normal");
  const int n = G.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : N.members) coset_of[G.mul(g, h)] = id;
  }
  const int q = static_cast<int>(reps.size());
  // left translation on cosets gives the regular (faithful) picture of G/N
  std::vector<Permutation> perms;
  perms.reserve(q);
  std::vector<std::vector<int>> raw(q, std::vector<int>(q));
  for (int a = 0; a < q; ++a)
    for (int c = 0; c < q; ++c) raw[a][c] = coset_of[G.mul(reps[a], reps[c])];
  for (auto& imgs : raw) perms.emplace_back(std::move(imgs));
  FiniteGroup Q = FiniteGroup::from_elements(perms);

  QuotientGroup out{std::move(Q), N, std::vector<int>(n, -1), std::vector<int>(q, -1)};
  for (int g = 0; g < n; ++g) {
    std::vector<int> imgs(q);
    for (int d = 0; d < q; ++d) imgs[d] = coset_of[G.mul(g, reps[d])];
    int idx = out.group.index_of(Permutation(std::move(imgs)));
    out.projection[g] = idx;
    if (out.coset_rep[idx] < 0 || g < out.coset_rep[idx]) out.coset_rep[idx] = g;
  }
  return out;
}

Subgroup frattini_subgroup(const FiniteGroup& P, const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(P);
    subs = &local;
  }
  // maximal = proper, contained in no other proper subgroup
  std::vector<const Subgroup*> proper;
  for (const Subgroup& H : *subs)
    if (H.order() < P.order()) proper.push_back(&H);
  Subgroup phi = full_subgroup(P);
  for (const Subgroup* H : proper) {
    bool maximal = true;
    for (const Subgroup* K : proper)
      if (K != H && K->order() > H->order() && K->contains_subgroup(*H)) {
        maximal = false;
        break;
      }
    if (maximal) phi = intersect(phi, *H);
  }
  return phi;
}

std::vector<Subgroup> complements(const FiniteGroup& G, const Subgroup& N,
                                  const std::vector<Subgroup>* subs) {
  if (!is_normal(G, N)) throw InvalidArgument("complements: subgroup is not normal");
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  std::vector<Subgroup> out;
  for (const Subgroup& T : *subs)
    if (T.order() * N.order() == G.order() && intersect(T, N).order() == 1)
      out.push_back(T);
  return out;
}

Subgroup generated_subgroup(const FiniteGroup& G,
                            const std::vector<Subgroup>& parts) {
  std::vector<int> seed;
  for (const Subgroup& H : parts)
    seed.insert(seed.end(), H.members.begin(), H.members.end());
  return close_indices(G, std::move(seed));
}

Subgroup commutator_subgroup_pair(const FiniteGroup& G, const Subgroup& H,
                                  const Subgroup& K) {
  std::vector<int> seed;
  for (int h : H.members)
    for (int k : K.members) seed.push_back(G.commutator(h, k));
  return close_indices(G, std::move(seed));
}

Subgroup intersect(const Subgroup& A, const Subgroup& B) {
  std::vector<int> members;
  std::set_intersection(A.members.begin(), A.members.end(), B.members.begin(),
                        B.members.end(), std::back_inserter(members));
  return Subgroup{A.parent, std::move(members)};
}

SubgroupAsGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H) {
  std::vector<Permutation> elems;
  elems.reserve(H.members.size());
  for (int g : H.members) elems.push_back(G.element(g));
  SubgroupAsGroup out{FiniteGroup::from_elements(std::move(elems)), {}, {}};
  out.to_parent.assign(out.group.order(), -1);
  out.from_parent.assign(G.order(), -1);
  for (int i = 0; i < out.group.order(); ++i) {
    int g = G.index_of(out.group.element(i));
    out.to_parent[i] = g;
    out.from_parent[g] = i;
  }
  return out;
}

std::vector<std::vector<int>> subgroup_conjugacy_classes(
    const FiniteGroup& G, const std::vector<Subgroup>& subs) {
  std::map<std::vector<int>, int> index_of;
  for (size_t i = 0; i < subs.size(); ++i)
    index_of[subs[i].members] = static_cast<int>(i);
  std::vector<char> seen(subs.size(), 0);
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cls;
    for (int x = 0; x < G.order(); ++x) {
      auto it = index_of.find(conjugate_subgroup(G, subs[i], x).members);
      if (it != index_of.end() && !seen[it->second]) {
        seen[it->second] = 1;
        cls.push_back(it->second);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G,
                                       const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  std::vector<Subgroup> out;
  for (const Subgroup& H : *subs)
    if (is_normal(G, H)) out.push_back(H);
  return out;
}

bool is_nilpotent(const FiniteGroup& G, const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  for (int p : G.prime_divisors())
    if (sylow_subgroups(G, p, subs).size() != 1) return false;
  return true;
}

}  // namespace evg
