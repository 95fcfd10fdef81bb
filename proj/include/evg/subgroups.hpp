#pragma once

#include <optional>
#include <vector>

#include "evg/group.hpp"

namespace evg {

// Element-index subset of a parent group, closed under mult and inverse.
// Members are kept sorted, which doubles as the canonical form.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
  bool contains_subgroup(const Subgroup& other) const;
  bool operator==(const Subgroup& o) const { return members == o.members; }
  bool operator<(const Subgroup& o) const;  // by (order, members)
};

Subgroup trivial_subgroup(const FiniteGroup& G);
Subgroup full_subgroup(const FiniteGroup& G);
Subgroup cyclic_subgroup(const FiniteGroup& G, int g);

// Closure of a seed set of element indices inside G (uses the mult table).
Subgroup close_indices(const FiniteGroup& G, std::vector<int> seed);

// Complete subgroup list, sorted by (order, members). Seeds with cyclic
// subgroups and joins pairs until fixpoint. Throws CapExceeded above cap.
std::vector<Subgroup> all_subgroups(const FiniteGroup& G,
                                    int cap = kDefaultSubgroupCap);

std::vector<Subgroup> sylow_subgroups(
    const FiniteGroup& G, int p,
    const std::vector<Subgroup>* subs = nullptr);

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);
Subgroup centralizer_of_subgroup(const FiniteGroup& G, const Subgroup& H);
bool is_normal(const FiniteGroup& G, const Subgroup& H);
Subgroup conjugate_subgroup(const FiniteGroup& G, const Subgroup& H, int x);

// An x with xHx^-1 = K, or nullopt (exhaustive).
std::optional<int> are_conjugate(const FiniteGroup& G, const Subgroup& H,
                                 const Subgroup& K);

// G/N realized as a permutation group on the coset set (left translation).
// projection maps element index -> quotient element index and is a
// surjective homomorphism.
struct QuotientGroup {
  FiniteGroup group;
  Subgroup kernel;
  std::vector<int> projection;   // |G| entries
  std::vector<int> coset_rep;    // quotient element index -> a representative
};
QuotientGroup quotient(const FiniteGroup& G, const Subgroup& N);

// Intersection of the maximal subgroups of P.
Subgroup frattini_subgroup(const FiniteGroup& P,
                           const std::vector<Subgroup>* subs = nullptr);

// All T with T ∩ N trivial and |T||N| = |G|.
std::vector<Subgroup> complements(const FiniteGroup& G, const Subgroup& N,
                                  const std::vector<Subgroup>* subs = nullptr);

Subgroup generated_subgroup(const FiniteGroup& G,
                            const std::vector<Subgroup>& parts);

Subgroup commutator_subgroup_pair(const FiniteGroup& G, const Subgroup& H,
                                  const Subgroup& K);

Subgroup intersect(const Subgroup& A, const Subgroup& B);

// H re-indexed as a standalone FiniteGroup. to_parent maps new element
// indices back to parent indices; from_parent is -1 off the subgroup.
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};
SubgroupAsGroup subgroup_as_group(const FiniteGroup& G, const Subgroup& H);

// Partition of `subs` (by index) into G-conjugacy classes; each class is
// sorted and led by its minimal member.
std::vector<std::vector<int>> subgroup_conjugacy_classes(
    const FiniteGroup& G, const std::vector<Subgroup>& subs);

std::vector<Subgroup> normal_subgroups(const FiniteGroup& G,
                                       const std::vector<Subgroup>* subs = nullptr);

// Every Sylow subgroup normal.
bool is_nilpotent(const FiniteGroup& G, const std::vector<Subgroup>* subs = nullptr);

}  // namespace evg
