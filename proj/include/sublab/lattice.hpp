#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sublab/group.hpp"

namespace sublab {

inline constexpr std::uint64_t LATTICE_ORDER_CAP = 500;

/// Dense multiplication structure over a group's sorted element list.
class GroupTable {
 public:
  explicit GroupTable(const PermGroup& G);

  int size() const { return static_cast<int>(elems_->size()); }
  std::uint16_t mul(int a, int b) const { return mul_[a * size() + b]; }
  std::uint16_t inv(int a) const { return inv_[a]; }
  std::uint16_t conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  std::uint16_t comm(int a, int b) const {
    return mul(mul(mul(inv(a), inv(b)), a), b);
  }
  int identity_index() const { return id_; }
  const std::vector<Permutation>& elements() const { return *elems_; }
  const PermGroup& group() const { return group_; }

  /// Index into elements(); -1 if the permutation is not in the group.
  int index_of(const Permutation& p) const;

  /// Multiplicative order of element a.
  std::uint64_t element_order(int a) const;

 private:
  PermGroup group_;
  std::shared_ptr<const std::vector<Permutation>> elems_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  int id_ = 0;
};

/// Canonical identity of a subgroup: sorted element indices into the
/// parent's fixed element enumeration.
using ElemKey = std::vector<std::uint16_t>;

struct SubgroupNode {
  ElemKey elements;
  std::vector<std::uint16_t> gens;  // small generating set, element indices
  std::uint64_t order = 0;
  bool normal = false;  // normal in the full group
};

/// The full subgroup lattice of a desk-scale group: deduplicated nodes,
/// containment, and the structural subgroups built on top of it.
/// Construction throws CapacityError above LATTICE_ORDER_CAP.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const PermGroup& G);

  const PermGroup& group() const { return table_.group(); }
  const GroupTable& table() const { return table_; }

  int size() const { return static_cast<int>(nodes_.size()); }
  const SubgroupNode& node(int i) const { return nodes_[i]; }
  int trivial_node() const { return 0; }
  int full_node() const { return size() - 1; }

  int node_of(const ElemKey& key) const;  // -1 when absent
  int node_of_group(const PermGroup& H) const;  // throws MembershipError
  int node_of_elements(std::vector<std::uint16_t> elems) const;

  bool contains(int sup, int sub) const;
  std::uint64_t index(int sup, int sub) const;
  bool is_normal_in(int sub, int sup) const;

  int intersect(int a, int b) const;
  int join(int a, int b) const;
  int conjugate_node(int h, int g_elem) const;

  int normalizer(int h) const;
  int core(int m) const;
  int sylow(std::uint64_t p) const;  // trivial node when p does not divide |G|
  std::vector<int> maximal_subgroups() const;
  std::vector<int> minimal_normal_subgroups() const;
  int frattini() const;
  int fitting() const;
  int o_p(std::uint64_t p) const;
  std::vector<int> normal_nodes() const;

  /// Deterministic chief series (smallest element key at each step),
  /// trivial to full, as node indices.
  const std::vector<int>& chief_series() const;

  /// All chief series of the group (used by the small-order oracle suite).
  std::vector<std::vector<int>> all_chief_series() const;

  int chief_centralizer(int h, int k) const;
  bool automizer_abelian_exp_dividing(int h, int k, std::uint64_t m) const;

  PermGroup subgroup_group(int i) const;
  ElemKey closure(std::vector<std::uint16_t> seed) const;

  /// DOT export of the containment digraph (covering edges).
  std::string dot() const;

 private:
  struct Bitset;
  void enumerate();
  int node_of_bits(const std::vector<std::uint64_t>& bits) const;

  GroupTable table_;
  std::vector<SubgroupNode> nodes_;
  std::vector<std::vector<std::uint64_t>> bits_;  // per-node element bitset
  std::vector<std::vector<char>> contains_;       // contains_[sup][sub]
  mutable std::vector<std::vector<char>> normal_cache_;  // 0 unknown 1 no 2 yes
  mutable std::vector<int> chief_series_;
};

/// Shared, cached lattice handle. Groups with identical element sets (same
/// degree) share one lattice.
std::shared_ptr<const SubgroupLattice> lattice_of(const PermGroup& G);

/// Shared, cached multiplication table (cheaper than the full lattice).
std::shared_ptr<const GroupTable> table_of(const PermGroup& G);

/// Canonical cache key: degree, order and the full sorted element list.
std::string group_key(const PermGroup& G);

/// A Sylow p-subgroup computed directly by normalizer growth in the element
/// table, without enumerating the subgroup lattice.
PermGroup sylow_subgroup_direct(const PermGroup& G, std::uint64_t p);

/// Largest normal p-subgroup, computed as the core of a Sylow p-subgroup.
PermGroup o_p_direct(const PermGroup& G, std::uint64_t p);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace sublab
