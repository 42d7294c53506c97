#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sublab/perm.hpp"

namespace sublab {

inline constexpr std::uint64_t ELEMENT_ENUM_CAP = 5000;
inline constexpr std::uint64_t QUOTIENT_DEGREE_CAP = 1000;

/// Finite permutation group with a deterministic base / strong generating
/// set. Immutable after construction; cheap to copy (shared internals).
class PermGroup {
 public:
  /// Schreier-Sims construction. All generators must have the given degree.
  PermGroup(int degree, std::vector<Permutation> gens);

  static PermGroup trivial(int degree);

  int degree() const;
  const std::vector<Permutation>& generators() const;
  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  bool contains(const Permutation& p) const;

  /// All elements in lexicographic order on image arrays.
  /// Throws CapacityError when order() > ELEMENT_ENUM_CAP.
  const std::vector<Permutation>& elements() const;

  /// lcm of element orders. Same cap as elements().
  std::uint64_t exponent() const;

  const std::vector<int>& base() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

/// Conjugate H^g = <g^-1 h g : h in gens(H)>; g must lie in `inside`.
PermGroup conjugate(const PermGroup& H, const Permutation& g,
                    const PermGroup& inside);

/// Group homomorphism realized as the right-coset action of the source on
/// the cosets of a normal subgroup. apply() maps any source element to its
/// induced permutation of cosets.
class Homomorphism {
 public:
  const PermGroup& source() const { return source_; }
  const PermGroup& target() const { return target_; }
  const PermGroup& kernel() const { return kernel_; }

  Permutation apply(const Permutation& g) const;

  /// Some source element mapping to the given target element.
  Permutation preimage(const Permutation& q) const;

  /// Images of the source generators, in order.
  std::vector<Permutation> generator_images() const;

 private:
  friend std::pair<PermGroup, Homomorphism> quotient(const PermGroup&,
                                                     const PermGroup&);
  Homomorphism(PermGroup source, PermGroup target, PermGroup kernel,
               std::vector<Permutation> coset_reps);

  PermGroup source_;
  PermGroup target_;
  PermGroup kernel_;
  std::vector<Permutation> coset_reps_;  // coset_reps_[i] represents coset i
};

/// Permutation representation of G on the right cosets of a normal N.
/// Throws NormalityError if N is not normal in G, CapacityError when the
/// index exceeds QUOTIENT_DEGREE_CAP.
std::pair<PermGroup, Homomorphism> quotient(const PermGroup& G,
                                            const PermGroup& N);

bool is_normal_in(const PermGroup& N, const PermGroup& G);

}  // namespace sublab
