#include "evg/tate.hpp"

#include <algorithm>
#include <numeric>

#include "evg/errors.hpp"

namespace evg {

GSet make_gset(const FiniteGroup& G, std::vector<std::vector<int>> act) {
  GSet X;
  X.group = &G;
  X.act = std::move(act);
  if (static_cast<int>(X.act.size()) != G.order())
    throw InvalidArgument("gset: need one permutation of points per element");
  X.num_points = static_cast<int>(X.act[0].size());
  for (int x = 0; x < X.num_points; ++x)
    if (X.act[G.identity()][x] != x)
      throw InvalidArgument("gset: identity must act trivially");
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h) {
      int gh = G.mul(g, h);
      for (int x = 0; x < X.num_points; ++x)
        if (X.act[gh][x] != X.act[g][X.act[h][x]])
          throw InvalidArgument("gset: action axiom violated");
    }

  X.orbit_of.assign(X.num_points, -1);
  for (int x = 0; x < X.num_points; ++x) {
    if (X.orbit_of[x] >= 0) continue;
    int id = static_cast<int>(X.orbits.size());
    std::vector<int> orbit;
    std::vector<int> stack{x};
    X.orbit_of[x] = id;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      orbit.push_back(y);
      for (int g = 0; g < G.order(); ++g) {
        int z = X.act[g][y];
        if (X.orbit_of[z] < 0) {
          X.orbit_of[z] = id;
          stack.push_back(z);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    int rep = orbit.front();
    int stab = 0;
    for (int g = 0; g < G.order(); ++g)
      if (X.act[g][rep] == rep) ++stab;
    if (static_cast<long long>(stab) * orbit.size() != G.order())
      throw Error("orbit-stabilizer mismatch (bug signal)");
    X.representative.push_back(rep);
    X.stabilizer_order.push_back(stab);
    X.orbits.push_back(std::move(orbit));
  }
  return X;
}

GSet coset_gset(const FiniteGroup& G, const Subgroup& K) {
  const int n = G.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int g = 0; g < n; ++g) {
    if (coset_of[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int k : K.members) coset_of[G.mul(g, k)] = id;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> act(n, std::vector<int>(m));
  for (int g = 0; g < n; ++g)
    for (int c = 0; c < m; ++c) act[g][c] = coset_of[G.mul(g, reps[c])];
  return make_gset(G, std::move(act));
}

GSet disjoint_union(const FiniteGroup& G, const std::vector<GSet>& parts) {
  int total = 0;
  for (const GSet& part : parts) total += part.num_points;
  std::vector<std::vector<int>> act(G.order(), std::vector<int>(total));
  int offset = 0;
  for (const GSet& part : parts) {
    for (int g = 0; g < G.order(); ++g)
      for (int x = 0; x < part.num_points; ++x)
        act[g][offset + x] = offset + part.act[g][x];
    offset += part.num_points;
  }
  return make_gset(G, std::move(act));
}

TateClass zero_class(const GSet& X) {
  return TateClass{std::vector<long long>(X.orbits.size(), 0)};
}

std::vector<int> tate_h0_shape(const GSet& X) { return X.stabilizer_order; }

bool restriction_vanishes(const FiniteGroup& G, const Subgroup& H, const GSet& X,
                          const TateClass& c) {
  (void)G;
  for (size_t i = 0; i < X.orbits.size(); ++i) {
    long long m = c.residues[i];
    for (int y : X.orbits[i]) {
      int stab = 0;
      for (int h : H.members)
        if (X.act[h][y] == y) ++stab;
      if (m % stab != 0) return false;
    }
  }
  return true;
}

std::set<int> vanishing_index_set(const FiniteGroup& G, const GSet& X,
                                  const TateClass& c,
                                  const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  std::set<int> out;
  for (const Subgroup& H : *subs)
    if (restriction_vanishes(G, H, X, c)) out.insert(G.order() / H.order());
  return out;
}

MinGcdResult min_equals_gcd(const std::set<int>& indices) {
  if (indices.empty()) throw InvalidArgument("min_equals_gcd: empty set");
  long long mn = *indices.begin();
  long long g = 0;
  for (int i : indices) g = std::gcd(g, static_cast<long long>(i));
  return MinGcdResult{mn, g, mn == g};
}

CocycleInstance lemma_cocycle(const FiniteGroup& G, int p, const Subgroup& I,
                              const std::vector<Subgroup>* subs) {
  if (!is_prime(p)) throw InvalidArgument("p must be prime");
  int alpha = 0, size = I.order();
  while (size % p == 0) {
    size /= p;
    ++alpha;
  }
  if (size != 1) throw InvalidArgument("I is not a p-subgroup");

  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  // canonical Sylow: minimal member set (subs is sorted)
  std::vector<Subgroup> sylows = sylow_subgroups(G, p, subs);
  const Subgroup& S = sylows.front();

  // one representative per conjugacy class of order-|I| subgroups not
  // conjugate to I
  std::vector<Subgroup> same_order;
  for (const Subgroup& L : *subs)
    if (L.order() == I.order()) same_order.push_back(L);
  std::vector<Subgroup> l_reps;
  for (const auto& cls : subgroup_conjugacy_classes(G, same_order)) {
    const Subgroup& rep = same_order[cls.front()];
    if (!are_conjugate(G, rep, I)) l_reps.push_back(rep);
  }

  std::vector<GSet> parts;
  parts.push_back(coset_gset(G, S));
  for (const Subgroup& L : l_reps) parts.push_back(coset_gset(G, L));
  CocycleInstance inst;
  inst.prime = p;
  inst.alpha = alpha;
  inst.gset = disjoint_union(G, parts);
  inst.l_reps = std::move(l_reps);

  long long p_alpha = 1;
  for (int i = 0; i < alpha; ++i) p_alpha *= p;
  std::vector<long long> residues;
  residues.push_back(p_alpha % S.order());
  for (const Subgroup& L : inst.l_reps)
    residues.push_back((p_alpha / p) % L.order());
  if (residues.size() != inst.gset.orbits.size())
    throw Error("cocycle instance orbit mismatch (bug signal)");
  inst.cls = TateClass{std::move(residues)};
  return inst;
}

bool vanishing_characterization_check(const FiniteGroup& G, int p,
                                      const Subgroup& I,
                                      const std::vector<Subgroup>* subs) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  CocycleInstance inst = lemma_cocycle(G, p, I, subs);
  for (const Subgroup& H : *subs) {
    bool lhs = restriction_vanishes(G, H, inst.gset, inst.cls);
    int beta = ord_p(H.order(), p);
    bool rhs;
    if (beta < inst.alpha) {
      rhs = true;
    } else if (beta > inst.alpha) {
      rhs = false;
    } else {
      rhs = true;
      int target = 1;
      for (int i = 0; i < beta; ++i) target *= p;
      for (const Subgroup& K : *subs) {
        if (K.order() != target || !H.contains_subgroup(K)) continue;
        if (!are_conjugate(G, K, I)) {
          rhs = false;
          break;
        }
      }
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool evolving_via_tate(const FiniteGroup& G, const std::vector<Subgroup>* subs,
                       std::vector<TateRecord>* records) {
  std::vector<Subgroup> local;
  if (!subs) {
    local = all_subgroups(G);
    subs = &local;
  }
  auto classes = subgroup_conjugacy_classes(G, *subs);
  bool all_equal = true;
  for (int p : G.prime_divisors()) {
    for (const auto& cls : classes) {
      const Subgroup& I = (*subs)[cls.front()];
      int rest = I.order();
      while (rest % p == 0) rest /= p;
      if (rest != 1) continue;
      CocycleInstance inst = lemma_cocycle(G, p, I, subs);
      std::set<int> indices = vanishing_index_set(G, inst.gset, inst.cls, subs);
      MinGcdResult mg = min_equals_gcd(indices);
      if (records) {
        TateRecord rec;
        rec.p = p;
        rec.alpha = inst.alpha;
        rec.class_rep = I.members;
        rec.index_set.assign(indices.begin(), indices.end());
        rec.min = mg.min;
        rec.gcd = mg.gcd;
        rec.equal = mg.equal;
        records->push_back(std::move(rec));
      }
      if (!mg.equal) {
        all_equal = false;
        if (!records) return false;
      }
    }
  }
  return all_equal;
}

namespace {

// Smith normal form by repeated pivoting; entries stay tiny at oracle scale.
void snf_reduce(std::vector<std::vector<long long>>& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the remaining block
    int pr = -1, pc = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 && (best == 0 || std::abs(a[i][j]) < best)) {
          best = std::abs(a[i][j]);
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    bool clean = true;
    for (int i = t + 1; i < rows; ++i)
      if (a[i][t] % a[t][t] != 0) clean = false;
    for (int j = t + 1; j < cols; ++j)
      if (a[t][j] % a[t][t] != 0) clean = false;
    if (!clean) {
      // one Euclid step and retry the pivot search
      for (int i = t + 1; i < rows; ++i) {
        long long q = a[i][t] / a[t][t];
        for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      }
      for (int j = t + 1; j < cols; ++j) {
        long long q = a[t][j] / a[t][t];
        for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      }
      continue;
    }
    for (int i = t + 1; i < rows; ++i) {
      long long q = a[i][t] / a[t][t];
      for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
    }
    for (int j = t + 1; j < cols; ++j) {
      long long q = a[t][j] / a[t][t];
      for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
    }
    // divisibility of later entries by the pivot
    bool divides_all = true;
    for (int i = t + 1; i < rows && divides_all; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          // fold the offending row into row t and restart this step
          for (int jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    ++t;
  }
}

}  // namespace

std::vector<long long> smith_invariant_factors(
    std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return {};
  snf_reduce(rows);
  std::vector<long long> factors;
  const size_t n = std::min(rows.size(), rows[0].size());
  for (size_t i = 0; i < n; ++i)
    if (rows[i][i] != 0) factors.push_back(std::abs(rows[i][i]));
  return factors;
}

std::vector<long long> abelian_elementary_divisors(std::vector<long long> moduli) {
  std::vector<long long> out;
  for (long long m : moduli) {
    for (long long p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      long long q = 1;
      while (m % p == 0) {
        q *= p;
        m /= p;
      }
      out.push_back(q);
    }
    if (m > 1) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> tate_h0_oracle(const FiniteGroup& G, const GSet& X,
                                      int group_cap, int point_cap) {
  if (G.order() > group_cap || X.num_points > point_cap)
    throw CapExceeded("oracle scale exceeded (|G| <= " + std::to_string(group_cap) +
                      ", |X| <= " + std::to_string(point_cap) + ")");
  const int norbits = static_cast<int>(X.orbits.size());
  // norm image: row per point x, N(delta_x) written in the orbit-indicator
  // basis of the fixed module
  std::vector<std::vector<long long>> rows(X.num_points,
                                           std::vector<long long>(norbits, 0));
  for (int x = 0; x < X.num_points; ++x)
    for (int j = 0; j < norbits; ++j) {
      int rep = X.representative[j];
      long long count = 0;
      for (int g = 0; g < G.order(); ++g)
        if (X.act[g][x] == rep) ++count;
      rows[x][j] = count;
    }
  return abelian_elementary_divisors(smith_invariant_factors(std::move(rows)));
}

namespace {

// Row-echelon basis of the integer row lattice (Hermite-style).
std::vector<std::vector<long long>> lattice_basis(
    std::vector<std::vector<long long>> rows) {
  if (rows.empty()) return {};
  const int cols = static_cast<int>(rows[0].size());
  std::vector<std::vector<long long>> basis;
  int pivot_col = 0;
  size_t done = 0;
  while (pivot_col < cols && done < rows.size()) {
    // Euclid on the column below `done`
    while (true) {
      int best = -1;
      for (size_t i = done; i < rows.size(); ++i)
        if (rows[i][pivot_col] != 0 &&
            (best < 0 || std::abs(rows[i][pivot_col]) <
                             std::abs(rows[best][pivot_col])))
          best = static_cast<int>(i);
      if (best < 0) break;
      std::swap(rows[done], rows[best]);
      bool finished = true;
      for (size_t i = done + 1; i < rows.size(); ++i) {
        if (rows[i][pivot_col] == 0) continue;
        long long q = rows[i][pivot_col] / rows[done][pivot_col];
        for (int j = 0; j < cols; ++j) rows[i][j] -= q * rows[done][j];
        if (rows[i][pivot_col] != 0) finished = false;
      }
      if (finished) break;
    }
    if (rows[done][pivot_col] != 0) ++done;
    ++pivot_col;
  }
  rows.resize(done);
  return rows;
}

}  // namespace

bool restriction_vanishes_oracle(const FiniteGroup& G, const Subgroup& H,
                                 const GSet& X, const TateClass& c) {
  // H-orbit decomposition of X
  std::vector<int> h_orbit_of(X.num_points, -1);
  std::vector<int> h_reps;
  for (int x = 0; x < X.num_points; ++x) {
    if (h_orbit_of[x] >= 0) continue;
    int id = static_cast<int>(h_reps.size());
    h_reps.push_back(x);
    std::vector<int> stack{x};
    h_orbit_of[x] = id;
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int h : H.members) {
        int z = X.act[h][y];
        if (h_orbit_of[z] < 0) {
          h_orbit_of[z] = id;
          stack.push_back(z);
        }
      }
    }
  }
  const int hn = static_cast<int>(h_reps.size());
  // lift c to the integer function constant on G-orbits, in H-orbit coords
  std::vector<long long> f(hn);
  for (int j = 0; j < hn; ++j) f[j] = c.residues[X.orbit_of[h_reps[j]]];
  // H-norm image rows
  std::vector<std::vector<long long>> rows(X.num_points,
                                           std::vector<long long>(hn, 0));
  for (int x = 0; x < X.num_points; ++x)
    for (int j = 0; j < hn; ++j) {
      long long count = 0;
      for (int h : H.members)
        if (X.act[h][x] == h_reps[j]) ++count;
      rows[x][j] = count;
    }
  auto basis = lattice_basis(std::move(rows));
  // reduce f against the echelon basis
  for (const auto& row : basis) {
    int lead = 0;
    while (lead < hn && row[lead] == 0) ++lead;
    if (lead == hn) continue;
    if (f[lead] % row[lead] != 0) continue;
    long long q = f[lead] / row[lead];
    for (int j = lead; j < hn; ++j) f[j] -= q * row[j];
  }
  return std::all_of(f.begin(), f.end(), [](long long v) { return v == 0; });
}

}  // namespace evg
