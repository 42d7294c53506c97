#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "sublab/group.hpp"
#include "sublab/lattice.hpp"

namespace sublab {

/// Identifier + parameters of a built-in group class. All built-ins are
/// hereditary formations.
struct FormationSpec {
  enum class Kind {
    Nilpotent,
    Soluble,
    Supersoluble,
    PGroups,        // p
    AbelianExpDiv,  // m
    NpA,            // p: N_p A(p-1), i.e. G/O_p(G) abelian of exponent | p-1
    UK,             // k: supersoluble, exponent free of (k+1)th prime powers
    SylNpA,         // p: soluble with every Sylow subgroup in N_p A(p-1)
    HT,             // t: every Sylow subgroup K-P_t-subnormal
    UT0,            // t: supersoluble members of HT
  };

  Kind kind;
  std::uint64_t p = 0;
  std::uint64_t m = 0;
  int k = 0;
  int t = 0;

  static FormationSpec nilpotent() { return {Kind::Nilpotent}; }
  static FormationSpec soluble() { return {Kind::Soluble}; }
  static FormationSpec supersoluble() { return {Kind::Supersoluble}; }
  static FormationSpec p_groups(std::uint64_t p) {
    return {Kind::PGroups, p};
  }
  static FormationSpec abelian_exp_div(std::uint64_t m) {
    return {Kind::AbelianExpDiv, 0, m};
  }
  static FormationSpec np_a(std::uint64_t p) { return {Kind::NpA, p}; }
  static FormationSpec u_k(int k) { return {Kind::UK, 0, 0, k}; }
  static FormationSpec syl_np_a(std::uint64_t p) { return {Kind::SylNpA, p}; }
  static FormationSpec h_t(int t) { return {Kind::HT, 0, 0, 0, t}; }
  static FormationSpec u_t0(int t) { return {Kind::UT0, 0, 0, 0, t}; }

  std::string key() const;  // stable cache / display identifier
  friend bool operator==(const FormationSpec&, const FormationSpec&) = default;
};

/// True iff no prime q has q^(t+1) dividing p-1.
bool pt_admissible(std::uint64_t p, int t);

bool is_soluble(const PermGroup& G);
bool is_nilpotent(const PermGroup& G);
bool is_abelian(const PermGroup& G);
bool is_supersoluble(const PermGroup& G);
bool is_ore_dispersive(const PermGroup& G);
bool in_abelian_exp_div(const PermGroup& G, std::uint64_t m);
bool in_np_a(const PermGroup& G, std::uint64_t p);
bool in_u_k(const PermGroup& G, int k);

bool in_formation(const PermGroup& G, const FormationSpec& F);

/// Local function: prime -> formation, with a stable identity for caching.
struct LocalFunction {
  std::function<FormationSpec(std::uint64_t p)> at;
  std::string key;
};

/// F(p) of the local definition of the Sylow K-P_t-subnormal class: the
/// soluble groups whose Sylow subgroups all lie in N_p A(p-1) when (p,t) is
/// admissible, and the p-groups otherwise.
FormationSpec theorem32_F(std::uint64_t p, int t);
LocalFunction theorem32_local(int t);

/// X(p) = N_p A(p-1) when (p,t) is admissible, N_p otherwise.
FormationSpec theorem33_X(std::uint64_t p, int t);
LocalFunction theorem33_local(int t);

/// Membership in LF(f): every chief factor H/K and prime p | |H/K| has
/// G/C_G(H/K) in f(p).
bool lf_member(const PermGroup& G, const LocalFunction& f);

/// F-residual: the least normal subgroup with quotient in F.
PermGroup residual(const PermGroup& G, const FormationSpec& F);

}  // namespace sublab
