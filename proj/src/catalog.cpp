#include "evg/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "evg/errors.hpp"

namespace evg {

namespace {

int mod_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw InvalidArgument("no inverse of " + std::to_string(a) + " mod " +
                        std::to_string(p));
}

void require_odd_prime(int p) {
  if (!is_prime(p) || p == 2)
    throw InvalidArgument(std::to_string(p) + " is not an odd prime");
}

}  // namespace

FiniteGroup cyclic(int n) {
  if (n < 1) throw InvalidArgument("cyclic: n must be >= 1");
  if (n == 1) return FiniteGroup::closure({Permutation::identity(1)});
  std::vector<int> imgs(n);
  for (int i = 0; i < n; ++i) imgs[i] = (i + 1) % n;
  return FiniteGroup::closure({Permutation(std::move(imgs))});
}

FiniteGroup dihedral(int n) {
  if (n < 3) throw InvalidArgument("dihedral: n must be >= 3");
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return FiniteGroup::closure({Permutation(std::move(rot)), Permutation(std::move(refl))});
}

FiniteGroup symmetric(int n) {
  if (n < 1) throw InvalidArgument("symmetric: n must be >= 1");
  if (n == 1) return FiniteGroup::closure({Permutation::identity(1)});
  std::vector<int> cyc(n), swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  swap01[0] = 1;
  swap01[1] = 0;
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return FiniteGroup::closure({Permutation(std::move(cyc)), Permutation(std::move(swap01))});
}

FiniteGroup alternating(int n) {
  if (n < 1) throw InvalidArgument("alternating: n must be >= 1");
  if (n < 3) return FiniteGroup::closure({Permutation::identity(n)});
  std::vector<Permutation> gens;
  for (int i = 2; i < n; ++i) {
    std::vector<int> imgs(n);
    std::iota(imgs.begin(), imgs.end(), 0);
    imgs[0] = 1;
    imgs[1] = i;
    imgs[i] = 0;
    gens.emplace_back(std::move(imgs));
  }
  return FiniteGroup::closure(gens);
}

FiniteGroup elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw InvalidArgument("elementary_abelian: p must be prime");
  if (k < 1) throw InvalidArgument("elementary_abelian: k must be >= 1");
  std::vector<Permutation> gens;
  for (int b = 0; b < k; ++b) {
    std::vector<int> imgs(k * p);
    std::iota(imgs.begin(), imgs.end(), 0);
    for (int j = 0; j < p; ++j) imgs[b * p + j] = b * p + (j + 1) % p;
    gens.emplace_back(std::move(imgs));
  }
  return FiniteGroup::closure(gens);
}

FiniteGroup quaternion8() {
  // elements (sign, axis) with axis in {e,i,j,k}; regular representation
  auto enc = [](int sign, int axis) { return sign * 4 + axis; };
  // i*j=k cyclically, x*x=-e for x in {i,j,k}
  auto mul = [&](int a, int b) {
    int sa = a / 4, xa = a % 4, sb = b / 4, xb = b % 4;
    int sign = sa ^ sb, axis;
    if (xa == 0) {
      axis = xb;
    } else if (xb == 0) {
      axis = xa;
    } else if (xa == xb) {
      axis = 0;
      sign ^= 1;
    } else {
      axis = 6 - xa - xb;  // the remaining axis among {1,2,3}
      bool forward = (xb == xa % 3 + 1);
      if (!forward) sign ^= 1;
    }
    return enc(sign, axis);
  };
  std::vector<Permutation> elems;
  for (int g = 0; g < 8; ++g) {
    std::vector<int> imgs(8);
    for (int x = 0; x < 8; ++x) imgs[x] = mul(g, x);
    elems.emplace_back(std::move(imgs));
  }
  return FiniteGroup::from_elements(std::move(elems));
}

namespace {

// (u,v,w)*(u',v',w') = (u+u', v+v'+u*w', w+w'); v is the center coordinate
int heis_point(int p, int u, int v, int w) { return (u * p + v) * p + w; }

Permutation heis_translation(int p, int u, int v, int w) {
  std::vector<int> imgs(p * p * p);
  for (int u2 = 0; u2 < p; ++u2)
    for (int v2 = 0; v2 < p; ++v2)
      for (int w2 = 0; w2 < p; ++w2)
        imgs[heis_point(p, u2, v2, w2)] =
            heis_point(p, (u + u2) % p, (v + v2 + u * w2) % p, (w + w2) % p);
  return Permutation(std::move(imgs));
}

}  // namespace

FiniteGroup heisenberg(int p) {
  require_odd_prime(p);
  std::vector<Permutation> elems;
  elems.reserve(p * p * p);
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v)
      for (int w = 0; w < p; ++w) elems.push_back(heis_translation(p, u, v, w));
  return FiniteGroup::from_elements(std::move(elems));
}

std::vector<int> heisenberg_scalar_action(const FiniteGroup& H, int p, int lambda) {
  lambda %= p;
  if (lambda < 0) lambda += p;
  if (lambda == 0) throw InvalidArgument("lambda must be a unit mod p");
  std::vector<int> map(H.order(), -1);
  const int id_point = heis_point(p, 0, 0, 0);
  for (int g = 0; g < H.order(); ++g) {
    int t = H.element(g)(id_point);  // regular rep: image of identity is g's tuple
    int w = t % p, v = t / p % p, u = t / (p * p);
    int idx = H.index_of(heis_translation(p, u * lambda % p,
                                          v * lambda % p * lambda % p,
                                          w * lambda % p));
    if (idx < 0) throw InvalidArgument("scalar action left the group");
    map[g] = idx;
  }
  return map;
}

FiniteGroup semidirect(const FiniteGroup& N, const FiniteGroup& T,
                       const std::vector<ElementMap>& action, int order_cap) {
  const int n = N.order(), m = T.order();
  if (static_cast<long long>(n) * m > order_cap)
    throw CapExceeded("semidirect order " + std::to_string(n * m) +
                      " exceeds cap " + std::to_string(order_cap));
  if (static_cast<int>(action.size()) != m)
    throw InvalidArgument("semidirect: action must assign a map to each element of T");
  for (int t = 0; t < m; ++t) {
    const ElementMap& f = action[t];
    if (static_cast<int>(f.size()) != n)
      throw InvalidArgument("semidirect: action map has wrong size");
    std::vector<char> hit(n, 0);
    for (int x : f) {
      if (x < 0 || x >= n || hit[x])
        throw InvalidArgument("semidirect: action map is not a bijection");
      hit[x] = 1;
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (f[N.mul(a, b)] != N.mul(f[a], f[b]))
          throw InvalidArgument("semidirect: action of t=" + std::to_string(t) +
                                " is not an automorphism of N");
  }
  for (int t1 = 0; t1 < m; ++t1)
    for (int t2 = 0; t2 < m; ++t2) {
      int t12 = T.mul(t1, t2);
      for (int a = 0; a < n; ++a)
        if (action[t12][a] != action[t1][action[t2][a]])
          throw InvalidArgument("semidirect: action is not a homomorphism into Aut(N)");
    }

  auto point = [m](int a, int b) { return a * m + b; };
  std::vector<Permutation> elems;
  elems.reserve(static_cast<size_t>(n) * m);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) {
      std::vector<int> imgs(static_cast<size_t>(n) * m);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < m; ++y)
          imgs[point(x, y)] = point(N.mul(a, action[b][x]), T.mul(b, y));
      elems.emplace_back(std::move(imgs));
    }
  return FiniteGroup::from_elements(std::move(elems));
}

std::vector<ElementMap> trivial_action(const FiniteGroup& T, const FiniteGroup& N) {
  ElementMap id(N.order());
  std::iota(id.begin(), id.end(), 0);
  return std::vector<ElementMap>(T.order(), id);
}

std::vector<ElementMap> cyclic_action(const FiniteGroup& T, const FiniteGroup& N,
                                      const ElementMap& gen_image) {
  int gen = -1;
  for (int t = 0; t < T.order(); ++t)
    if (T.element_order(t) == T.order()) {
      gen = t;
      break;
    }
  if (gen < 0) throw InvalidArgument("cyclic_action: T is not cyclic");
  std::vector<ElementMap> action(T.order());
  ElementMap id(N.order());
  std::iota(id.begin(), id.end(), 0);
  ElementMap power = id;
  int t = T.identity();
  for (int e = 0; e < T.order(); ++e) {
    action[t] = power;
    t = T.mul(t, gen);
    ElementMap next(N.order());
    for (int a = 0; a < N.order(); ++a) next[a] = gen_image[power[a]];
    power = std::move(next);
  }
  return action;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  return semidirect(A, B, trivial_action(B, A));
}

ElementMap cyclic_power_map(const FiniteGroup& C, int a) {
  ElementMap map(C.order());
  for (int g = 0; g < C.order(); ++g) map[g] = C.power(g, a);
  return map;
}

ElementMap elementary_abelian_matrix_map(const FiniteGroup& V, int p, int k,
                                         const std::vector<int>& matrix) {
  if (static_cast<int>(matrix.size()) != k * k)
    throw InvalidArgument("matrix must be k x k");
  auto vector_of = [&](int g) {
    std::vector<int> vec(k);
    for (int b = 0; b < k; ++b) vec[b] = V.element(g)(b * p) - b * p;
    return vec;
  };
  auto element_of = [&](const std::vector<int>& vec) {
    std::vector<int> imgs(k * p);
    for (int b = 0; b < k; ++b)
      for (int j = 0; j < p; ++j) imgs[b * p + j] = b * p + (j + vec[b]) % p;
    int idx = V.index_of(Permutation(std::move(imgs)));
    if (idx < 0) throw InvalidArgument("matrix image left the group");
    return idx;
  };
  ElementMap map(V.order());
  for (int g = 0; g < V.order(); ++g) {
    std::vector<int> vec = vector_of(g), out(k, 0);
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) out[r] += matrix[r * k + c] * vec[c];
      out[r] %= p;
      if (out[r] < 0) out[r] += p;
    }
    map[g] = element_of(out);
  }
  std::vector<char> hit(V.order(), 0);
  for (int img : map) {
    if (hit[img]) throw InvalidArgument("matrix is singular mod p");
    hit[img] = 1;
  }
  return map;
}

namespace {

struct PaperTuple {
  int u, v, w, lam;  // lam in 1..p-1
};

int paper_point(int p, const PaperTuple& t) {
  return ((t.u * p + t.v) * p + t.w) * (p - 1) + (t.lam - 1);
}

PaperTuple paper_decode(int p, int point) {
  PaperTuple t;
  t.lam = point % (p - 1) + 1;
  point /= (p - 1);
  t.w = point % p;
  point /= p;
  t.v = point % p;
  t.u = point / p;
  return t;
}

PaperTuple paper_mul(int p, const PaperTuple& a, const PaperTuple& b) {
  int bli = mod_inverse(b.lam, p);
  PaperTuple r;
  r.lam = a.lam * b.lam % p;
  r.u = (a.lam * b.u + a.u) % p;
  r.v = (a.lam * b.v + a.u * b.w + a.v * bli) % p;
  r.w = (b.w + a.w * bli) % p;
  return r;
}

Permutation paper_translation(int p, const PaperTuple& g) {
  const int n = p * p * p * (p - 1);
  std::vector<int> imgs(n);
  for (int x = 0; x < n; ++x) imgs[x] = paper_point(p, paper_mul(p, g, paper_decode(p, x)));
  return Permutation(std::move(imgs));
}

}  // namespace

FiniteGroup paper_example_G(int p) {
  require_odd_prime(p);
  std::vector<Permutation> elems;
  elems.reserve(p * p * p * (p - 1));
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < p; ++v)
      for (int w = 0; w < p; ++w)
        for (int lam = 1; lam < p; ++lam)
          elems.push_back(paper_translation(p, PaperTuple{u, v, w, lam}));
  return FiniteGroup::from_elements(std::move(elems));
}

Subgroup paper_example_W_subgroup(const FiniteGroup& G, int p) {
  const int id_point = paper_point(p, PaperTuple{0, 0, 0, 1});
  std::vector<int> members;
  for (int g = 0; g < G.order(); ++g)
    if (paper_decode(p, G.element(g)(id_point)).w == 0) members.push_back(g);
  std::sort(members.begin(), members.end());
  return Subgroup{&G, std::move(members)};
}

FiniteGroup paper_example_W(int p) {
  FiniteGroup G = paper_example_G(p);
  Subgroup W = paper_example_W_subgroup(G, p);
  std::vector<Permutation> elems;
  for (int g : W.members) elems.push_back(G.element(g));
  return FiniteGroup::from_elements(std::move(elems));
}

namespace {

FiniteGroup build_cyclic_twist(int n, int m, int a) {
  FiniteGroup N = cyclic(n), T = cyclic(m);
  return semidirect(N, T, cyclic_action(T, N, cyclic_power_map(N, a)));
}

FiniteGroup build_ea_twist(int p, int k, int m, std::vector<int> matrix) {
  FiniteGroup V = elementary_abelian(p, k), T = cyclic(m);
  return semidirect(V, T, cyclic_action(T, V, elementary_abelian_matrix_map(V, p, k, matrix)));
}

FiniteGroup build_heis_twist(int p, int lambda, int m) {
  FiniteGroup H = heisenberg(p), T = cyclic(m);
  return semidirect(H, T, cyclic_action(T, H, heisenberg_scalar_action(H, p, lambda)));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_manifest() {
  static const std::vector<CatalogEntry> entries = {
      {"C1", "cyclic", {1}, true, true},
      {"C2", "cyclic", {2}, true, true},
      {"C3", "cyclic", {3}, true, true},
      {"C4", "cyclic", {4}, true, true},
      {"C6", "cyclic", {6}, true, true},
      {"C8", "cyclic", {8}, true, true},
      {"C9", "cyclic", {9}, true, true},
      {"C12", "cyclic", {12}, true, true},
      {"C30", "cyclic", {30}, true, true},
      {"V4", "elementary_abelian", {2, 2}, true, true},
      {"E8", "elementary_abelian", {2, 3}, true, true},
      {"E9", "elementary_abelian", {3, 2}, true, true},
      {"Q8", "quaternion8", {}, true, true},
      {"D3", "dihedral", {3}, true, true},
      {"D4", "dihedral", {4}, true, true},
      {"D5", "dihedral", {5}, true, true},
      {"D6", "dihedral", {6}, true, true},
      {"S3", "symmetric", {3}, true, true},
      {"S4", "symmetric", {4}, false, false},
      {"S5", "symmetric", {5}, false, false},
      {"A4", "alternating", {4}, false, false},
      {"A5", "alternating", {5}, false, false},
      {"Heis3", "heisenberg", {3}, true, true},
      {"paper_G_3", "paper_G", {3}, true, true},
      {"paper_W_3", "paper_W", {3}, false, std::nullopt},
      // C3 x| C4, generator acting by inversion (dicyclic of order 12)
      {"Dic3", "cyclic_twist", {3, 4, 2}, true, true},
      // C5 x| C4, faithful action by a primitive root (Frobenius of order 20)
      {"F20", "cyclic_twist", {5, 4, 2}, true, true},
      // C7 x| C3, order 21
      {"F21", "cyclic_twist", {7, 3, 2}, true, true},
      // (C3)^2 x| C2 by -1 (scalar, intense)
      {"E9_inv", "ea_twist", {3, 2, 2, 2, 0, 0, 2}, true, true},
      // (C3)^2 x| C4 by a rotation of order 4 (not intense)
      {"E9_rot4", "ea_twist", {3, 2, 4, 0, 2, 1, 0}, std::nullopt, std::nullopt},
      // Heis(F_3) x| C2 with the lambda = -1 diagonal action
      {"Heis3_C2", "heis_twist", {3, 2, 2}, true, true},
      {"C2xA4", "c2_x_a4", {}, false, false},
      {"S3xC5", "s3_x_c5", {}, true, true},
  };
  return entries;
}

FiniteGroup build_catalog_entry(const CatalogEntry& e) {
  const auto& c = e.constructor;
  const auto& p = e.params;
  if (c == "cyclic") return cyclic(p[0]);
  if (c == "dihedral") return dihedral(p[0]);
  if (c == "symmetric") return symmetric(p[0]);
  if (c == "alternating") return alternating(p[0]);
  if (c == "elementary_abelian") return elementary_abelian(p[0], p[1]);
  if (c == "quaternion8") return quaternion8();
  if (c == "heisenberg") return heisenberg(p[0]);
  if (c == "paper_G") return paper_example_G(p[0]);
  if (c == "paper_W") return paper_example_W(p[0]);
  if (c == "cyclic_twist") return build_cyclic_twist(p[0], p[1], p[2]);
  if (c == "ea_twist")
    return build_ea_twist(p[0], p[1], p[2], {p.begin() + 3, p.end()});
  if (c == "heis_twist") return build_heis_twist(p[0], p[1], p[2]);
  if (c == "c2_x_a4") return direct_product(cyclic(2), alternating(4));
  if (c == "s3_x_c5") return direct_product(symmetric(3), cyclic(5));
  throw InvalidArgument("unknown catalog constructor: " + c);
}

const CatalogEntry* find_catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog_manifest())
    if (e.name == name) return &e;
  return nullptr;
}

FiniteGroup catalog_group(const std::string& name) {
  const CatalogEntry* e = find_catalog_entry(name);
  if (!e) throw InvalidArgument("unknown catalog entry: " + name);
  return build_catalog_entry(*e);
}

}  // namespace evg
