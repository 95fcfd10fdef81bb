#pragma once

#include <compare>
#include <string>
#include <vector>

namespace evg {

// Bijection on {0..n-1}; images[i] is where point i goes.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijectivity

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  // Lexicographic on image sequences; the canonical element order.
  auto operator<=>(const Permutation& o) const { return images_ <=> o.images_; }

 private:
  std::vector<int> images_;
};

// (a*b)(x) = a(b(x))
Permutation compose(const Permutation& a, const Permutation& b);

// Disjoint-cycle rendering over 0-based points, e.g. "(0 1 2)(3 4)".
// The identity renders as "()".
std::string cycle_string(const Permutation& p);

inline constexpr int kDefaultDegreeCap = 64;

// One permutation per line in disjoint-cycle notation; '#' comments and blank
// lines are skipped. All permutations are padded to the common degree
// (max point + 1). Throws ParseError with a line number on malformed input.
std::vector<Permutation> parse_group_spec(const std::string& text,
                                          int degree_cap = kDefaultDegreeCap);

}  // namespace evg
