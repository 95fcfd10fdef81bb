#pragma once

#include <optional>
#include <string>
#include <vector>

#include "evg/group.hpp"
#include "evg/subgroups.hpp"

namespace evg {

FiniteGroup cyclic(int n);
FiniteGroup dihedral(int n);  // order 2n on n points, n >= 3
FiniteGroup symmetric(int n);
FiniteGroup alternating(int n);
FiniteGroup elementary_abelian(int p, int k);  // order p^k on k*p points
FiniteGroup quaternion8();

// Upper unitriangular 3x3 matrices over F_p in their regular permutation
// representation on p^3 points; p an odd prime.
FiniteGroup heisenberg(int p);

// The automorphism (u,v,w) -> (lambda*u, lambda^2*v, lambda*w) of
// heisenberg(p), as an element map.
std::vector<int> heisenberg_scalar_action(const FiniteGroup& H, int p, int lambda);

using ElementMap = std::vector<int>;

// N x| T on the point set N x T with (n1,t1)(n2,t2) = (n1*phi_t1(n2), t1 t2).
// action[t] must be an automorphism of N and t -> action[t] a homomorphism;
// both are validated exhaustively.
FiniteGroup semidirect(const FiniteGroup& N, const FiniteGroup& T,
                       const std::vector<ElementMap>& action,
                       int order_cap = kDefaultClosureCap);

std::vector<ElementMap> trivial_action(const FiniteGroup& T, const FiniteGroup& N);

// T must be cyclic; extends gen_image (the action of one generator of T)
// to the whole action homomorphism.
std::vector<ElementMap> cyclic_action(const FiniteGroup& T, const FiniteGroup& N,
                                      const ElementMap& gen_image);

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

// Power map x -> x^a as an element map of a cyclic group.
ElementMap cyclic_power_map(const FiniteGroup& C, int a);

// Matrix action of an invertible k x k matrix over F_p on elementary_abelian(p,k).
ElementMap elementary_abelian_matrix_map(const FiniteGroup& V, int p, int k,
                                         const std::vector<int>& matrix);

// The matrix group {(lambda,u,v,w)} of triangular matrices
// [[lambda,u,v],[0,1,w],[0,0,lambda^-1]] over F_p, realized on its own
// coordinate tuples. Order p^3(p-1); p an odd prime.
FiniteGroup paper_example_G(int p);

// The subgroup of paper_example_G(p) of matrices with w = 0; order p^2(p-1).
Subgroup paper_example_W_subgroup(const FiniteGroup& G, int p);

// Same subgroup re-indexed as a standalone group.
FiniteGroup paper_example_W(int p);

struct CatalogEntry {
  std::string name;
  std::string constructor;
  std::vector<int> params;
  std::optional<bool> expected_evolving;
  std::optional<bool> expected_supersolvable;
};

const std::vector<CatalogEntry>& catalog_manifest();
FiniteGroup build_catalog_entry(const CatalogEntry& entry);
FiniteGroup catalog_group(const std::string& name);  // throws InvalidArgument
const CatalogEntry* find_catalog_entry(const std::string& name);

}  // namespace evg
