#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sublab/classes.hpp"
#include "sublab/lattice.hpp"

namespace sublab {

enum class PolicyKind { Subnormal, PSub, KPSub, KPT, FSub, KFSub };

/// Edge rule of a subnormality chain search.
struct StepPolicy {
  PolicyKind kind;
  int t = 0;                // for KPT
  FormationSpec formation;  // for FSub / KFSub

  static StepPolicy subnormal() { return {PolicyKind::Subnormal}; }
  static StepPolicy p_sub() { return {PolicyKind::PSub}; }
  static StepPolicy k_p_sub() { return {PolicyKind::KPSub}; }
  static StepPolicy k_p_t(int t) { return {PolicyKind::KPT, t}; }
  static StepPolicy f_sub(FormationSpec F) {
    return {PolicyKind::FSub, 0, F};
  }
  static StepPolicy k_f_sub(FormationSpec F) {
    return {PolicyKind::KFSub, 0, F};
  }

  std::string key() const;
};

struct ChainStep {
  enum class Tag { Normal, Prime, Residual };
  Tag tag;
  std::uint64_t prime = 0;
};

/// Ascending subgroup chain from H to G with per-edge certification.
struct ChainWitness {
  std::vector<int> nodes;  // lattice node indices, H first, G last
  std::vector<ChainStep> steps;

  size_t length() const { return steps.size(); }

  /// One subgroup per line: `order=<n> gens=<cycles>` with the edge tag
  /// suffix `[normal]`, `[p=<prime>]` or `[residual]`.
  std::string render(const SubgroupLattice& L) const;
};

/// Edge predicate. X = Y is always allowed; throws ArgumentError when X is
/// not contained in Y.
bool step_allowed(const SubgroupLattice& L, int x, int y,
                  const StepPolicy& policy);

/// Independent edge-by-edge replay of a witness chain.
bool validate_witness(const SubgroupLattice& L, int h, const ChainWitness& w,
                      const StepPolicy& policy);

struct SubnormalVerdict {
  bool subnormal = false;
  std::optional<ChainWitness> witness;
};

/// Reachability of the full group from node h via allowed edges; shortest
/// witness, deterministic tie-break by node order.
SubnormalVerdict is_subnormal_variant(const SubgroupLattice& L, int h,
                                      const StepPolicy& policy,
                                      bool want_witness = true);
SubnormalVerdict is_subnormal_variant(const PermGroup& G, const PermGroup& H,
                                      const StepPolicy& policy,
                                      bool want_witness = true);

/// Verdict only, cached per (lattice, policy).
bool subnormal_verdict(const SubgroupLattice& L, int h,
                       const StepPolicy& policy);

/// Exhaustive chain search over all ascending subgroup sequences, with a
/// separately coded step validator. Order <= 48 only. Reusable across the
/// subgroups of one group.
class BruteForceOracle {
 public:
  explicit BruteForceOracle(const PermGroup& G);
  bool check(const PermGroup& H, const StepPolicy& policy) const;
  int subgroup_count() const { return static_cast<int>(subgroups_.size()); }
  const PermGroup& subgroup(int i) const { return subgroups_[i]; }

 private:
  bool edge_valid(int x, int y, const StepPolicy& policy) const;
  PermGroup G_;
  std::vector<PermGroup> subgroups_;  // deduplicated, ascending by order
  std::vector<std::vector<std::uint64_t>> elem_bits_;
  mutable std::vector<std::pair<std::string, std::vector<char>>> reach_cache_;
};

bool brute_force_oracle(const PermGroup& G, const PermGroup& H,
                        const StepPolicy& policy);

/// Every Sylow subgroup K-P_t-subnormal (one Sylow per prime).
bool in_class_Ht(const PermGroup& G, int t);

/// Every Sylow subgroup F-subnormal.
bool in_wF(const PermGroup& G, const FormationSpec& F);

/// Supersoluble members of H_t.
bool in_ut0(const PermGroup& G, int t);

}  // namespace sublab
