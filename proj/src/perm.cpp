#include "evg/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "evg/errors.hpp"

namespace evg {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(n, 0);
  for (int x : images_) {
    if (x < 0 || x >= n || seen[x])
      throw InvalidArgument("image sequence is not a bijection on {0.." +
                            std::to_string(n - 1) + "}");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> imgs(degree);
  std::iota(imgs.begin(), imgs.end(), 0);
  Permutation p;
  p.images_ = std::move(imgs);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw InvalidArgument("degree mismatch: " + std::to_string(a.degree()) +
                          " vs " + std::to_string(b.degree()));
  std::vector<int> imgs(a.degree());
  for (int i = 0; i < a.degree(); ++i) imgs[i] = a(b(i));
  Permutation p(std::move(imgs));
  return p;
}

std::string cycle_string(const Permutation& p) {
  std::ostringstream out;
  std::vector<char> done(p.degree(), 0);
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (done[i] || p(i) == i) continue;
    any = true;
    out << '(' << i;
    done[i] = 1;
    for (int j = p(i); j != i; j = p(j)) {
      out << ' ' << j;
      done[j] = 1;
    }
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

namespace {

// Parses one line of cycle notation into a cycle list; updates max point seen.
std::vector<std::vector<int>> parse_cycles(const std::string& line, int lineno,
                                           int degree_cap, int& max_point) {
  std::vector<std::vector<int>> cycles;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
  };
  skip_ws();
  while (i < line.size()) {
    if (line[i] != '(') throw ParseError(lineno, "expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < line.size() && line[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(line[i])))
        throw ParseError(lineno, "expected point number or ')'");
      int v = 0;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
        v = v * 10 + (line[i] - '0');
        if (v > degree_cap) throw ParseError(lineno, "point exceeds degree cap " +
                                                         std::to_string(degree_cap));
        ++i;
      }
      if (v >= degree_cap)
        throw ParseError(lineno, "point " + std::to_string(v) +
                                     " exceeds degree cap " + std::to_string(degree_cap));
      if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
        throw ParseError(lineno, "repeated point " + std::to_string(v) + " in cycle");
      cycle.push_back(v);
      max_point = std::max(max_point, v);
      skip_ws();
      if (i < line.size() && line[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= line.size()) throw ParseError(lineno, "unterminated cycle");
    ++i;  // ')'
    skip_ws();
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace

std::vector<Permutation> parse_group_spec(const std::string& text, int degree_cap) {
  std::vector<std::pair<int, std::vector<std::vector<int>>>> parsed;
  int max_point = -1;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = std::all_of(line.begin(), line.end(), [](unsigned char c) {
      return std::isspace(c);
    });
    if (blank) continue;
    parsed.emplace_back(lineno, parse_cycles(line, lineno, degree_cap, max_point));
  }
  const int degree = std::max(max_point + 1, 1);
  std::vector<Permutation> perms;
  perms.reserve(parsed.size());
  for (auto& [ln, cycles] : parsed) {
    std::vector<int> imgs(degree);
    std::iota(imgs.begin(), imgs.end(), 0);
    std::vector<char> used(degree, 0);
    for (const auto& cyc : cycles)
      for (size_t k = 0; k < cyc.size(); ++k) {
        if (used[cyc[k]])
          throw ParseError(ln, "cycles are not disjoint at point " +
                                   std::to_string(cyc[k]));
        used[cyc[k]] = 1;
        imgs[cyc[k]] = cyc[(k + 1) % cyc.size()];
      }
    perms.emplace_back(std::move(imgs));
  }
  return perms;
}

}  // namespace evg
