#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sublab/group.hpp"

namespace sublab {

/// Deterministic constructor for a named group.
struct GroupRecipe {
  enum class Builder {
    Cyclic,           // n
    Dihedral,         // n (order 2n, n >= 3)
    Symmetric,        // n
    Alternating,      // n
    Quaternion8,
    DirectProduct,    // left, right
    SemidirectCyclic, // p, d with d | p-1; affine maps x -> a x + b on Z_p
    HolomorphCyclic,  // p; = SemidirectCyclic(p, p-1)
    FromFile,         // path
  };

  Builder builder;
  std::uint64_t n = 0;  // n, or p for the semidirect builders
  std::uint64_t d = 0;
  std::string path;
  std::shared_ptr<GroupRecipe> left, right;

  static GroupRecipe cyclic(std::uint64_t n) {
    return {Builder::Cyclic, n};
  }
  static GroupRecipe dihedral(std::uint64_t n) {
    return {Builder::Dihedral, n};
  }
  static GroupRecipe symmetric(std::uint64_t n) {
    return {Builder::Symmetric, n};
  }
  static GroupRecipe alternating(std::uint64_t n) {
    return {Builder::Alternating, n};
  }
  static GroupRecipe quaternion8() { return {Builder::Quaternion8}; }
  static GroupRecipe direct_product(GroupRecipe a, GroupRecipe b) {
    GroupRecipe r{Builder::DirectProduct};
    r.left = std::make_shared<GroupRecipe>(std::move(a));
    r.right = std::make_shared<GroupRecipe>(std::move(b));
    return r;
  }
  static GroupRecipe semidirect_cyclic(std::uint64_t p, std::uint64_t d) {
    return {Builder::SemidirectCyclic, p, d};
  }
  static GroupRecipe holomorph_cyclic(std::uint64_t p) {
    return {Builder::HolomorphCyclic, p};
  }
  static GroupRecipe from_file(std::string path) {
    GroupRecipe r{Builder::FromFile};
    r.path = std::move(path);
    return r;
  }
};

PermGroup build(const GroupRecipe& recipe);

/// Line-oriented group file: `degree <n>` then `gen <cycles>` lines with
/// 1-based points; `#` starts a comment; `gen ()` is the identity.
PermGroup parse_group_file(const std::string& text);
std::string serialize_group_file(const PermGroup& G);
PermGroup load_group_file(const std::string& path);

struct CorpusEntry {
  std::string name;
  PermGroup group;
  std::string provenance;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
};

/// One entry per subgroup of G with order >= min_order.
Corpus harvest(const PermGroup& G, std::uint64_t min_order,
               const std::string& name_prefix);

/// The deterministic verification corpus.
const Corpus& standard_corpus();

/// Named groups for `--group builtin:<name>`.
PermGroup builtin_group(const std::string& name);
std::vector<std::string> builtin_names();

}  // namespace sublab
