#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "evg/intense.hpp"
#include "evg/subgroups.hpp"

namespace evg {

// One Sylow subgroup per prime divisor, smaller primes normalizing larger.
struct SylowFamily {
  const FiniteGroup* group;
  std::vector<int> primes;        // sorted ascending
  std::vector<Subgroup> members;  // aligned with primes

  const Subgroup& sylow(int p) const;
};

// All J >= I with |G:J| a p-power and p not dividing |J:I|.
std::vector<Subgroup> p_evolutions(const FiniteGroup& G, const Subgroup& I, int p,
                                   const std::vector<Subgroup>* subs = nullptr);

struct EvolvingVerdict {
  bool evolving;
  // on failure: the prime and a p-subgroup with no p-evolution
  std::optional<std::pair<int, Subgroup>> witness;
};
EvolvingVerdict is_evolving(const FiniteGroup& G,
                            const std::vector<Subgroup>* subs = nullptr);

// All Sylow families, canonically sorted (lexicographically minimal first).
std::vector<SylowFamily> sylow_families(const FiniteGroup& G,
                                        const std::vector<Subgroup>* subs = nullptr);

std::optional<SylowFamily> sylow_family(const FiniteGroup& G,
                                        const std::vector<Subgroup>* subs = nullptr);

// T_p = <S_q : q < p> and L_p = <S_q : q > p>.
std::pair<Subgroup, Subgroup> tower_subgroups(const SylowFamily& family, int p);

// A single x with x S_p x^-1 = R_p for all p; throws Error if none exists
// (the conjugacy lemma guarantees one, so absence is a bug signal).
int sylow_families_conjugate(const FiniteGroup& G, const SylowFamily& F1,
                             const SylowFamily& F2);

struct PrimeIntenseWitness {
  int prime;
  int element;       // t in T_p whose conjugation fails intensity
  Subgroup subgroup; // H <= S_p moved to a non-conjugate (parent indices)
};
struct PrimeIntenseVerdict {
  bool prime_intense;
  std::optional<SylowFamily> family;          // the witnessing family
  std::optional<PrimeIntenseWitness> witness; // on failure w.r.t. the last family tried
};
PrimeIntenseVerdict is_prime_intense(const FiniteGroup& G,
                                     const std::vector<Subgroup>* subs = nullptr);

// Normal series with prime-order steps, every term normal in G (backtracking).
bool is_supersolvable(const FiniteGroup& G,
                      const std::vector<Subgroup>* subs = nullptr);

struct AssociatedGraph {
  std::vector<int> vertices;                 // primes, ascending
  std::vector<std::pair<int, int>> edges;    // (q,p), q < p, lambda_p(S_q) != 1
  std::vector<int> pi_s, pi_t, pi_0;
};
AssociatedGraph associated_graph(const FiniteGroup& G, const SylowFamily& family,
                                 const std::vector<Subgroup>* subs = nullptr);

struct StructureDecomposition {
  Subgroup target;    // product of S_p, p in pi_t
  Subgroup source;    // product over pi_s
  Subgroup isolated;  // product over pi_0
  AssociatedGraph graph;
  bool verified;      // internal-product evidence checked
};
StructureDecomposition decompose(const FiniteGroup& G,
                                 const std::vector<Subgroup>* subs = nullptr);

// Builds N x| T from the given action and checks the result is evolving.
// Preconditions (coprime orders, both nilpotent, action intense) are
// validated and reported by name.
bool theorem_c_forward(const FiniteGroup& N, const FiniteGroup& T,
                       const std::vector<std::vector<int>>& action);

}  // namespace evg
