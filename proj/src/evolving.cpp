#include "evg/evolving.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "evg/catalog.hpp"
#include "evg/errors.hpp"

namespace evg {

const Subgroup& SylowFamily::sylow(int p) const {
  for (size_t i = 0; i < primes.size(); ++i)
    if (primes[i] == p) return members[i];
  throw InvalidArgument("prime " + std::to_string(p) + " not in family");
}

namespace {

bool is_p_power(int n, int p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_p_group_order(int n, int p) { return is_p_power(n, p); }

}  // namespace

std::vector<Subgroup> p_evolutions(const FiniteGroup& G, const Subgroup& I, int p,
                                   const std::vector<Subgroup>* subs) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  if (!is_p_group_order(I.order(), p))
    throw InvalidArgument("I is not a p-subgroup");
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  std::vector<Subgroup> out;
  for (const Subgroup& J : *subs) {
    if (!is_p_power(G.order() / J.order(), p)) continue;
    if (!J.contains_subgroup(I)) continue;
    if ((J.order() / I.order()) % p == 0) continue;
    out.push_back(J);
  }
  return out;
}

EvolvingVerdict is_evolving(const FiniteGroup& G, const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  // one representative per conjugacy class suffices: evolutions conjugate
  // along with I
  auto classes = subgroup_conjugacy_classes(G, *subs);
  for (int p : G.prime_divisors()) {
    for (const auto& cls : classes) {
      const Subgroup& I = (*subs)[cls.front()];
      if (!is_p_group_order(I.order(), p)) continue;
      if (p_evolutions(G, I, p, subs).empty())
        return EvolvingVerdict{false, std::make_pair(p, I)};
    }
  }
  return EvolvingVerdict{true, std::nullopt};
}

std::vector<SylowFamily> sylow_families(const FiniteGroup& G,
                                        const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  std::vector<int> primes = G.prime_divisors();
  std::vector<std::vector<Subgroup>> sylows;
  for (int p : primes) sylows.push_back(sylow_subgroups(G, p, subs));

  // choose largest prime first; every smaller prime's choice must normalize
  // all larger choices already made
  std::vector<SylowFamily> out;
  std::vector<Subgroup> chosen(primes.size(), Subgroup{});
  std::vector<Subgroup> normalizers(primes.size(), Subgroup{});
  auto search = [&](auto&& self, int level) -> void {
    if (level < 0) {
      SylowFamily f{&G, primes, chosen};
      out.push_back(std::move(f));
      return;
    }
    for (const Subgroup& S : sylows[level]) {
      bool ok = true;
      for (size_t j = level + 1; j < primes.size(); ++j)
        if (!normalizers[j].contains_subgroup(S)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen[level] = S;
      normalizers[level] = normalizer(G, S);
      self(self, level - 1);
    }
  };
  search(search, static_cast<int>(primes.size()) - 1);
  std::sort(out.begin(), out.end(), [](const SylowFamily& a, const SylowFamily& b) {
    for (size_t i = 0; i < a.members.size(); ++i)
      if (a.members[i].members != b.members[i].members)
        return a.members[i].members < b.members[i].members;
    return false;
  });
  return out;
}

std::optional<SylowFamily> sylow_family(const FiniteGroup& G,
                                        const std::vector<Subgroup>* subs) {
  auto families = sylow_families(G, subs);
  if (families.empty()) return std::nullopt;
  return families.front();
}

std::pair<Subgroup, Subgroup> tower_subgroups(const SylowFamily& family, int p) {
  const FiniteGroup& G = *family.group;
  bool found = std::find(family.primes.begin(), family.primes.end(), p) !=
               family.primes.end();
  if (!found) throw InvalidArgument("p not a prime divisor of |G|");
  std::vector<Subgroup> below, above;
  long long below_order = 1, above_order = 1;
  for (size_t i = 0; i < family.primes.size(); ++i) {
    if (family.primes[i] < p) {
      below.push_back(family.members[i]);
      below_order *= family.members[i].order();
    } else if (family.primes[i] > p) {
      above.push_back(family.members[i]);
      above_order *= family.members[i].order();
    }
  }
  Subgroup T = generated_subgroup(G, below);
  Subgroup L = generated_subgroup(G, above);
  if (T.order() != below_order || L.order() != above_order)
    throw Error("tower subgroup order mismatch (Sylow family invariant violated)");
  return {std::move(T), std::move(L)};
}

int sylow_families_conjugate(const FiniteGroup& G, const SylowFamily& F1,
                             const SylowFamily& F2) {
  for (int x = 0; x < G.order(); ++x) {
    bool all = true;
    for (size_t i = 0; i < F1.members.size(); ++i)
      if (conjugate_subgroup(G, F1.members[i], x).members != F2.members[i].members) {
        all = false;
        break;
      }
    if (all) return x;
  }
  throw Error("Sylow families are not simultaneously conjugate (bug signal)");
}

namespace {

struct FamilyIntenseCheck {
  bool ok;
  std::optional<PrimeIntenseWitness> witness;
};

FamilyIntenseCheck family_is_intense(const FiniteGroup& G, const SylowFamily& F) {
  for (size_t i = 0; i < F.primes.size(); ++i) {
    int p = F.primes[i];
    auto [T, L] = tower_subgroups(F, p);
    if (T.order() == 1) continue;
    SubgroupAsGroup S = subgroup_as_group(G, F.members[i]);
    std::vector<Subgroup> ssubs = all_subgroups(S.group);
    for (int t : T.members) {
      if (t == G.identity()) continue;
      // T_p normalizes S_p, so conjugation restricts to an automorphism
      std::vector<int> map(S.group.order());
      for (int a = 0; a < S.group.order(); ++a) {
        int img = S.from_parent[G.conjugate(S.to_parent[a], t)];
        if (img < 0) throw Error("T_p does not normalize S_p (family invariant violated)");
        map[a] = img;
      }
      GroupAutomorphism aut(S.group, std::move(map));
      for (const Subgroup& H : ssubs) {
        if (!are_conjugate(S.group, image_subgroup(aut, H), H)) {
          std::vector<int> parent_members;
          for (int a : H.members) parent_members.push_back(S.to_parent[a]);
          std::sort(parent_members.begin(), parent_members.end());
          return {false, PrimeIntenseWitness{p, t, Subgroup{&G, parent_members}}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

PrimeIntenseVerdict is_prime_intense(const FiniteGroup& G,
                                     const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  auto families = sylow_families(G, subs);
  PrimeIntenseVerdict verdict{false, std::nullopt, std::nullopt};
  for (const SylowFamily& F : families) {
    auto check = family_is_intense(G, F);
    if (check.ok) return PrimeIntenseVerdict{true, F, std::nullopt};
    verdict.witness = check.witness;
    verdict.family = F;
  }
  return verdict;
}

namespace {

bool supersolvable_search(const FiniteGroup& G, const std::vector<Subgroup>& normals,
                          const Subgroup& current,
                          std::map<std::vector<int>, bool>& memo) {
  if (current.order() == G.order()) return true;
  auto it = memo.find(current.members);
  if (it != memo.end()) return it->second;
  bool ok = false;
  for (const Subgroup& M : normals) {
    if (M.order() % current.order() != 0) continue;
    if (!is_prime(M.order() / current.order())) continue;
    if (!M.contains_subgroup(current)) continue;
    if (supersolvable_search(G, normals, M, memo)) {
      ok = true;
      break;
    }
  }
  memo[current.members] = ok;
  return ok;
}

}  // namespace

bool is_supersolvable(const FiniteGroup& G, const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  std::vector<Subgroup> normals = normal_subgroups(G, subs);
  std::map<std::vector<int>, bool> memo;
  return supersolvable_search(G, normals, trivial_subgroup(G), memo);
}

AssociatedGraph associated_graph(const FiniteGroup& G, const SylowFamily& family,
                                 const std::vector<Subgroup>* subs) {
  (void)subs;
  AssociatedGraph graph;
  graph.vertices = family.primes;
  for (size_t i = 0; i < family.primes.size(); ++i) {
    int p = family.primes[i];
    SubgroupAsGroup S = subgroup_as_group(G, family.members[i]);
    FrattiniContext ctx = frattini_context(S.group);
    for (size_t j = 0; j < i; ++j) {
      int q = family.primes[j];
      bool edge = false;
      for (int t : family.members[j].members) {
        if (t == G.identity()) continue;
        std::vector<int> map(S.group.order());
        for (int a = 0; a < S.group.order(); ++a) {
          int img = S.from_parent[G.conjugate(S.to_parent[a], t)];
          if (img < 0) throw Error("S_q does not normalize S_p");
          map[a] = img;
        }
        // lambda_value throws NotScalar on non-intense actions, which
        // contradicts the evolving precondition; let it propagate
        if (lambda_value(ctx, GroupAutomorphism(S.group, std::move(map))) != 1) {
          edge = true;
          break;
        }
      }
      if (edge) graph.edges.emplace_back(q, p);
    }
  }
  for (int v : graph.vertices) {
    bool src = false, tgt = false;
    for (auto& [q, p] : graph.edges) {
      src |= (q == v);
      tgt |= (p == v);
    }
    if (src) graph.pi_s.push_back(v);
    if (tgt) graph.pi_t.push_back(v);
    if (!src && !tgt) graph.pi_0.push_back(v);
  }
  return graph;
}

StructureDecomposition decompose(const FiniteGroup& G,
                                 const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  auto family = sylow_family(G, subs);
  if (!family)
    throw InvalidArgument("decompose: no Sylow family (group is not evolving)");
  AssociatedGraph graph = associated_graph(G, *family, subs);

  auto collect = [&](const std::vector<int>& part) {
    std::vector<Subgroup> parts;
    for (int p : part) parts.push_back(family->sylow(p));
    return generated_subgroup(G, parts);
  };
  StructureDecomposition d{collect(graph.pi_t), collect(graph.pi_s),
                           collect(graph.pi_0), graph, false};

  // internal-product evidence
  long long orders = static_cast<long long>(d.target.order()) * d.source.order() *
                     d.isolated.order();
  bool ok = orders == G.order();
  ok = ok && intersect(d.target, d.source).order() == 1;
  ok = ok && intersect(d.target, d.isolated).order() == 1;
  ok = ok && intersect(d.source, d.isolated).order() == 1;
  Subgroup rest = generated_subgroup(G, {d.target, d.source});
  ok = ok && commutator_subgroup_pair(G, d.isolated, rest).order() == 1;
  // source normalizes target
  Subgroup nt = normalizer(G, d.target);
  ok = ok && nt.contains_subgroup(d.source);
  // within pi_s and within pi_t the Sylows centralize each other
  for (const auto& part : {graph.pi_s, graph.pi_t})
    for (size_t a = 0; a < part.size(); ++a)
      for (size_t b = a + 1; b < part.size(); ++b)
        ok = ok && commutator_subgroup_pair(G, family->sylow(part[a]),
                                            family->sylow(part[b])).order() == 1;
  d.verified = ok;
  if (!ok) throw Error("decompose: structure verification failed (bug signal)");
  return d;
}

bool theorem_c_forward(const FiniteGroup& N, const FiniteGroup& T,
                       const std::vector<std::vector<int>>& action) {
  if (std::gcd(static_cast<long long>(N.order()), static_cast<long long>(T.order())) != 1)
    throw InvalidArgument("theorem_c_forward: |N| and |T| are not coprime");
  if (!is_nilpotent(N)) throw InvalidArgument("theorem_c_forward: N is not nilpotent");
  if (!is_nilpotent(T)) throw InvalidArgument("theorem_c_forward: T is not nilpotent");
  std::vector<Subgroup> nsubs = all_subgroups(N);
  for (int t = 0; t < T.order(); ++t) {
    GroupAutomorphism aut(N, action[t]);
    if (!is_intense(aut, &nsubs))
      throw InvalidArgument("theorem_c_forward: action of element " +
                            std::to_string(t) + " is not intense on N");
  }
  FiniteGroup G = semidirect(N, T, action);
  return is_evolving(G).evolving;
}

}  // namespace evg
