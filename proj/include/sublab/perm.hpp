#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sublab {

/// A bijection on the points 0..degree-1, stored as an image array.
/// Composition is left-to-right project-wide: (a then b)(x) = b(a(x)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
  /// "()" denotes the identity. Throws FormatError on malformed input.
  static Permutation from_cycles(const std::string& text, int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Multiplicative order (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Disjoint-cycle notation, 1-based points; identity prints "()".
  std::string cycles() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// Left-to-right composition: result(x) = b(a(x)).
Permutation compose(const Permutation& a, const Permutation& b);

/// g^-1 * p * g (in left-to-right convention: x -> g(p(g^-1(x)))).
Permutation conjugate_perm(const Permutation& p, const Permutation& g);

}  // namespace sublab
