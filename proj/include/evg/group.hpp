#pragma once

#include <vector>

#include "evg/perm.hpp"

namespace evg {

inline constexpr int kDefaultClosureCap = 2000;
inline constexpr int kDefaultSubgroupCap = 400;

// Finite permutation group stored as the full element list with O(1)
// composition through a multiplication table. Elements are canonically
// ordered: identity at index 0, the rest lexicographic by image sequence.
// Immutable after construction.
class FiniteGroup {
 public:
  // Smallest group containing the generators; throws CapExceeded when the
  // closure grows past order_cap.
  static FiniteGroup closure(const std::vector<Permutation>& generators,
                             int order_cap = kDefaultClosureCap);

  // The elements must already form a group; only canonicalizes and tables.
  static FiniteGroup from_elements(std::vector<Permutation> elements);

  int order() const { return static_cast<int>(elements_.size()); }
  int degree() const { return elements_[0].degree(); }
  const Permutation& element(int i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  int identity() const { return 0; }
  int mul(int a, int b) const { return mult_[a * order() + b]; }
  int inv(int a) const { return inv_[a]; }

  // -1 when the permutation is not an element.
  int index_of(const Permutation& p) const;

  int power(int g, long long k) const;
  int conjugate(int g, int x) const { return mul(mul(x, g), inv(x)); }  // xgx^-1
  int element_order(int g) const;
  int commutator(int h, int k) const { return mul(mul(h, k), mul(inv(h), inv(k))); }

  std::vector<int> prime_divisors() const;

 private:
  FiniteGroup() = default;
  void build_tables();

  std::vector<Permutation> elements_;
  std::vector<int> mult_;
  std::vector<int> inv_;
};

// Multiplicity of p in n.
int ord_p(int n, int p);
bool is_prime(int n);

}  // namespace evg
