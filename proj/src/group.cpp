#include "evg/group.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "evg/errors.hpp"

namespace evg {

FiniteGroup FiniteGroup::closure(const std::vector<Permutation>& generators,
                                 int order_cap) {
  if (generators.empty()) throw InvalidArgument("closure: no generators");
  const int degree = generators[0].degree();
  for (const auto& g : generators)
    if (g.degree() != degree) throw InvalidArgument("closure: degree mismatch");

  std::map<std::vector<int>, int> seen;
  std::vector<Permutation> elems;
  std::queue<int> frontier;
  auto push = [&](const Permutation& p) {
    auto [it, fresh] = seen.emplace(p.images(), static_cast<int>(elems.size()));
    if (fresh) {
      if (static_cast<int>(elems.size()) >= order_cap)
        throw CapExceeded("closure exceeds order cap " + std::to_string(order_cap));
      elems.push_back(p);
      frontier.push(it->second);
    }
  };
  push(Permutation::identity(degree));
  for (const auto& g : generators) push(g);
  while (!frontier.empty()) {
    int i = frontier.front();
    frontier.pop();
    Permutation a = elems[i];
    for (const auto& g : generators) {
      push(compose(a, g));
      push(compose(g, a));
    }
  }
  return from_elements(std::move(elems));
}

FiniteGroup FiniteGroup::from_elements(std::vector<Permutation> elements) {
  if (elements.empty()) throw InvalidArgument("from_elements: empty");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const int degree = elements[0].degree();
  auto id = Permutation::identity(degree);
  auto it = std::lower_bound(elements.begin(), elements.end(), id);
  if (it == elements.end() || !(*it == id))
    throw InvalidArgument("from_elements: identity missing");
  // identity first, rest stays lexicographic
  std::rotate(elements.begin(), it, it + 1);
  FiniteGroup G;
  G.elements_ = std::move(elements);
  G.build_tables();
  return G;
}

void FiniteGroup::build_tables() {
  const int n = order();
  mult_.assign(static_cast<size_t>(n) * n, -1);
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Permutation ab = compose(elements_[a], elements_[b]);
      int c = index_of(ab);
      if (c < 0) throw InvalidArgument("element set is not closed under composition");
      mult_[static_cast<size_t>(a) * n + b] = c;
      if (c == 0) inv_[a] = b;
    }
    if (inv_[a] < 0) throw InvalidArgument("element has no inverse in the set");
  }
}

int FiniteGroup::index_of(const Permutation& p) const {
  if (p == elements_[0]) return 0;
  auto it = std::lower_bound(elements_.begin() + 1, elements_.end(), p);
  if (it != elements_.end() && *it == p)
    return static_cast<int>(it - elements_.begin());
  return -1;
}

int FiniteGroup::power(int g, long long k) const {
  k %= element_order(g);
  if (k < 0) k += element_order(g);
  int acc = identity();
  int base = g;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  int x = g;
  while (x != identity()) {
    x = mul(x, g);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::prime_divisors() const {
  std::vector<int> primes;
  int n = order();
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

int ord_p(int n, int p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace evg
