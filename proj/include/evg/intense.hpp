#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "evg/errors.hpp"
#include "evg/subgroups.hpp"

namespace evg {

// Automorphism stored as a full element map, validated exhaustively.
class GroupAutomorphism {
 public:
  GroupAutomorphism(const FiniteGroup& group, std::vector<int> map);

  const FiniteGroup& group() const { return *group_; }
  int operator()(int g) const { return map_[g]; }
  const std::vector<int>& map() const { return map_; }
  bool is_identity_map() const;

  bool operator==(const GroupAutomorphism& o) const { return map_ == o.map_; }

 private:
  const FiniteGroup* group_;
  std::vector<int> map_;
};

GroupAutomorphism identity_automorphism(const FiniteGroup& G);
GroupAutomorphism conjugation_automorphism(const FiniteGroup& G, int x);
GroupAutomorphism compose(const GroupAutomorphism& a, const GroupAutomorphism& b);
GroupAutomorphism inverse(const GroupAutomorphism& a);

Subgroup image_subgroup(const GroupAutomorphism& aut, const Subgroup& H);

// True iff every subgroup maps to a conjugate of itself.
bool is_intense(const GroupAutomorphism& aut,
                const std::vector<Subgroup>* subs = nullptr);

// Int((F_p)^k) computed by filtering the full automorphism group (GL_k(F_p),
// enumerated by brute force). The group is owned by the result so the
// automorphisms stay valid.
struct IntenseSetResult {
  std::unique_ptr<FiniteGroup> group;
  std::vector<GroupAutomorphism> intense;
};
IntenseSetResult int_group_of_elementary_abelian(int p, int k);

// Frattini quotient of a p-group with everything needed to read scalars off
// induced automorphisms.
struct FrattiniContext {
  const FiniteGroup* group;
  int prime;
  Subgroup phi;
  QuotientGroup quotient;
};
FrattiniContext frattini_context(const FiniteGroup& P,
                                 const std::vector<Subgroup>* subs = nullptr);

GroupAutomorphism induced_on_frattini_quotient(const FrattiniContext& ctx,
                                               const GroupAutomorphism& aut);

// Carries the offending pair when the induced map is not a scalar.
struct NotScalar : Error {
  int vector_a, vector_b;
  NotScalar(const std::string& what, int a, int b)
      : Error(what), vector_a(a), vector_b(b) {}
};

// The unique mu in 1..p-1 with induced map v -> mu*v on P/Phi(P).
// Throws NotScalar when aut is not intense, InvalidArgument when the
// quotient is trivial.
int lambda_value(const FrattiniContext& ctx, const GroupAutomorphism& aut);

// An x such that xHx^-1 is fixed setwise by every automorphism in auts,
// found by exhaustive search over P.
std::optional<int> stable_conjugate(const FiniteGroup& P,
                                    const std::vector<GroupAutomorphism>& auts,
                                    const Subgroup& H);

}  // namespace evg
