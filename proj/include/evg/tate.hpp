#pragma once

#include <set>
#include <vector>

#include "evg/subgroups.hpp"

namespace evg {

// Finite G-set with orbit data. Everything downstream reads Tate classes
// through the residue picture, so orbits and stabilizer orders are the
// whole interface.
struct GSet {
  const FiniteGroup* group = nullptr;
  int num_points = 0;
  std::vector<std::vector<int>> act;      // [element][point]
  std::vector<std::vector<int>> orbits;   // partition of the points
  std::vector<int> orbit_of;              // point -> orbit id
  std::vector<int> representative;        // per orbit (minimal point)
  std::vector<int> stabilizer_order;      // per orbit
};

// Validates the action axioms and computes orbit data.
GSet make_gset(const FiniteGroup& G, std::vector<std::vector<int>> act);

// Left-coset space G/K with left translation; a single orbit with
// stabilizer order |K|.
GSet coset_gset(const FiniteGroup& G, const Subgroup& K);

GSet disjoint_union(const FiniteGroup& G, const std::vector<GSet>& parts);

// Element of H^0(G, Z^X) in the residue picture: one residue per orbit,
// reduced mod that orbit's stabilizer order.
struct TateClass {
  std::vector<long long> residues;
};

TateClass zero_class(const GSet& X);

// The per-orbit moduli |G_x|; H^0(G, Z^X) is their direct sum.
std::vector<int> tate_h0_shape(const GSet& X);

// True iff every H-point-stabilizer order in each orbit divides the
// orbit's residue.
bool restriction_vanishes(const FiniteGroup& G, const Subgroup& H, const GSet& X,
                          const TateClass& c);

// {|G:H| : restriction of c to H vanishes}.
std::set<int> vanishing_index_set(const FiniteGroup& G, const GSet& X,
                                  const TateClass& c,
                                  const std::vector<Subgroup>* subs = nullptr);

struct MinGcdResult {
  long long min;
  long long gcd;
  bool equal;
};
MinGcdResult min_equals_gcd(const std::set<int>& indices);

// The coset-space instance attached to a p-subgroup I: G/S for a Sylow
// p-subgroup S plus G/L for one representative L per conjugacy class of
// order-|I| subgroups not conjugate to I.
struct CocycleInstance {
  int prime = 0;
  int alpha = 0;
  GSet gset;
  TateClass cls;
  std::vector<Subgroup> l_reps;
};
CocycleInstance lemma_cocycle(const FiniteGroup& G, int p, const Subgroup& I,
                              const std::vector<Subgroup>* subs = nullptr);

// Checks, for every subgroup H, that restriction vanishing on the cocycle
// instance matches the group-theoretic characterization computed
// independently from the subgroup machinery.
bool vanishing_characterization_check(const FiniteGroup& G, int p,
                                      const Subgroup& I,
                                      const std::vector<Subgroup>* subs = nullptr);

struct TateRecord {
  int p;
  int alpha;
  std::vector<int> class_rep;  // members of the tested I
  std::vector<int> index_set;
  long long min;
  long long gcd;
  bool equal;
};

// True iff min == gcd for the vanishing index set of every (p, I-class)
// cocycle instance.
bool evolving_via_tate(const FiniteGroup& G,
                       const std::vector<Subgroup>* subs = nullptr,
                       std::vector<TateRecord>* records = nullptr);

inline constexpr int kDefaultOracleGroupCap = 60;
inline constexpr int kDefaultOraclePointCap = 30;

// First-principles H^0: fixed functions modulo the norm-map image, reduced
// by integer Smith normal form. Returns the prime-power elementary divisors.
std::vector<long long> tate_h0_oracle(const FiniteGroup& G, const GSet& X,
                                      int group_cap = kDefaultOracleGroupCap,
                                      int point_cap = kDefaultOraclePointCap);

// Cocycle-level restriction oracle: lifts c to an integer function on X and
// decides membership in the H-norm lattice. Independent route for the
// restriction diagram.
bool restriction_vanishes_oracle(const FiniteGroup& G, const Subgroup& H,
                                 const GSet& X, const TateClass& c);

// Canonical multiset of prime-power elementary divisors of ⊕ Z/m Z.
std::vector<long long> abelian_elementary_divisors(std::vector<long long> moduli);

// Invariant factors (diagonal of the Smith normal form) of an integer
// matrix given by rows.
std::vector<long long> smith_invariant_factors(std::vector<std::vector<long long>> rows);

}  // namespace evg
