#include "sublab/classes.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "sublab/errors.hpp"
#include "sublab/subnormal.hpp"

namespace sublab {

std::string FormationSpec::key() const {
  switch (kind) {
    case Kind::Nilpotent: return "N";
    case Kind::Soluble: return "S";
    case Kind::Supersoluble: return "U";
    case Kind::PGroups: return "N_" + std::to_string(p);
    case Kind::AbelianExpDiv: return "A(" + std::to_string(m) + ")";
    case Kind::NpA:
      return "N_" + std::to_string(p) + "A(" + std::to_string(p - 1) + ")";
    case Kind::UK: return "U_" + std::to_string(k);
    case Kind::SylNpA: return "SylNpA(" + std::to_string(p) + ")";
    case Kind::HT: return "H_" + std::to_string(t);
    case Kind::UT0: return "U0_" + std::to_string(t);
  }
  return "?";
}

bool pt_admissible(std::uint64_t p, int t) {
  if (!is_prime(p)) throw ArgumentError("pt_admissible: p must be prime");
  if (t < 1) throw ArgumentError("pt_admissible: t must be positive");
  std::uint64_t n = p - 1;
  for (std::uint64_t q : prime_divisors(n)) {
    std::uint64_t qpow = 1;
    bool overflow = false;
    for (int i = 0; i <= t; ++i) {
      if (qpow > n / q) {
        overflow = true;
        break;
      }
      qpow *= q;
    }
    if (!overflow && n % qpow == 0) return false;
  }
  return true;
}

bool is_abelian(const PermGroup& G) {
  const auto& gens = G.generators();
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!(compose(gens[i], gens[j]) == compose(gens[j], gens[i])))
        return false;
  return true;
}

bool is_nilpotent(const PermGroup& G) {
  // Nilpotent iff for each prime p the p-elements form the unique Sylow
  // p-subgroup, i.e. their count is the full p-part of |G|.
  std::uint64_t n = G.order();
  for (std::uint64_t p : prime_divisors(n)) {
    std::uint64_t ppart = 1;
    std::uint64_t rest = n;
    while (rest % p == 0) {
      rest /= p;
      ppart *= p;
    }
    std::uint64_t count = 0;
    for (const Permutation& g : G.elements()) {
      std::uint64_t ord = g.order();
      while (ord % p == 0) ord /= p;
      if (ord == 1) ++count;
    }
    if (count != ppart) return false;
  }
  return true;
}

namespace {

// Derived subgroup as an element set within a table.
std::vector<char> derived_set(const GroupTable& tab,
                              const std::vector<char>& in) {
  std::vector<char> have(tab.size(), 0);
  std::vector<int> members{tab.identity_index()};
  have[tab.identity_index()] = 1;
  for (int a = 0; a < tab.size(); ++a) {
    if (!in[a]) continue;
    for (int b = 0; b < tab.size(); ++b) {
      if (!in[b]) continue;
      int c = tab.comm(a, b);
      if (!have[c]) {
        have[c] = 1;
        members.push_back(c);
      }
    }
  }
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < members.size(); ++j) {
      int c = tab.mul(members[i], members[j]);
      if (!have[c]) {
        have[c] = 1;
        members.push_back(c);
      }
    }
  return have;
}

}  // namespace

bool is_soluble(const PermGroup& G) {
  auto tab = table_of(G);
  std::vector<char> cur(tab->size(), 1);
  size_t sz = tab->size();
  while (sz > 1) {
    std::vector<char> next = derived_set(*tab, cur);
    size_t nsz = static_cast<size_t>(std::count(next.begin(), next.end(), 1));
    if (nsz == sz) return false;
    cur = std::move(next);
    sz = nsz;
  }
  return true;
}

bool is_supersoluble(const PermGroup& G) {
  if (G.order() == 1) return true;
  if (!is_soluble(G)) return false;
  auto lat = lattice_of(G);
  const auto& series = lat->chief_series();
  for (size_t i = 1; i < series.size(); ++i) {
    std::uint64_t f =
        lat->node(series[i]).order / lat->node(series[i - 1]).order;
    if (!is_prime(f)) return false;
  }
  return true;
}

bool is_ore_dispersive(const PermGroup& G) {
  if (G.order() == 1) return true;
  std::vector<std::uint64_t> primes = prime_divisors(G.order());
  std::uint64_t p = *std::max_element(primes.begin(), primes.end());
  PermGroup S = sylow_subgroup_direct(G, p);
  if (!is_normal_in(S, G)) return false;
  if (S.order() == G.order()) return true;
  return is_ore_dispersive(quotient(G, S).first);
}

bool in_abelian_exp_div(const PermGroup& G, std::uint64_t m) {
  return is_abelian(G) && m % G.exponent() == 0;
}

bool in_np_a(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("in_np_a: p must be prime");
  PermGroup O = o_p_direct(G, p);
  PermGroup Q = quotient(G, O).first;
  return in_abelian_exp_div(Q, p - 1);
}

bool in_u_k(const PermGroup& G, int k) {
  if (k < 1) throw ArgumentError("in_u_k: k must be positive");
  if (!is_supersoluble(G)) return false;
  std::uint64_t e = G.exponent();
  for (std::uint64_t q : prime_divisors(e)) {
    std::uint64_t qpow = 1;
    bool over = false;
    for (int i = 0; i <= k; ++i) {
      if (qpow > e / q) {
        over = true;
        break;
      }
      qpow *= q;
    }
    if (!over && e % qpow == 0) return false;
  }
  return true;
}

bool in_formation(const PermGroup& G, const FormationSpec& F) {
  switch (F.kind) {
    case FormationSpec::Kind::Nilpotent:
      return is_nilpotent(G);
    case FormationSpec::Kind::Soluble:
      return is_soluble(G);
    case FormationSpec::Kind::Supersoluble:
      return is_supersoluble(G);
    case FormationSpec::Kind::PGroups: {
      std::uint64_t n = G.order();
      while (n % F.p == 0) n /= F.p;
      return n == 1;
    }
    case FormationSpec::Kind::AbelianExpDiv:
      return in_abelian_exp_div(G, F.m);
    case FormationSpec::Kind::NpA:
      return in_np_a(G, F.p);
    case FormationSpec::Kind::UK:
      return in_u_k(G, F.k);
    case FormationSpec::Kind::SylNpA: {
      if (!is_soluble(G)) return false;
      for (std::uint64_t q : prime_divisors(G.order()))
        if (!in_np_a(sylow_subgroup_direct(G, q), F.p)) return false;
      return true;
    }
    case FormationSpec::Kind::HT:
      return in_class_Ht(G, F.t);
    case FormationSpec::Kind::UT0:
      return in_ut0(G, F.t);
  }
  return false;
}

FormationSpec theorem32_F(std::uint64_t p, int t) {
  return pt_admissible(p, t) ? FormationSpec::syl_np_a(p)
                             : FormationSpec::p_groups(p);
}

LocalFunction theorem32_local(int t) {
  return {[t](std::uint64_t p) { return theorem32_F(p, t); },
          "F_t" + std::to_string(t)};
}

FormationSpec theorem33_X(std::uint64_t p, int t) {
  return pt_admissible(p, t) ? FormationSpec::np_a(p)
                             : FormationSpec::p_groups(p);
}

LocalFunction theorem33_local(int t) {
  return {[t](std::uint64_t p) { return theorem33_X(p, t); },
          "X_t" + std::to_string(t)};
}

bool lf_member(const PermGroup& G, const LocalFunction& f) {
  if (G.order() == 1) return true;
  auto lat = lattice_of(G);
  const auto& series = lat->chief_series();
  for (size_t i = 1; i < series.size(); ++i) {
    int h = series[i], k = series[i - 1];
    std::uint64_t forder = lat->node(h).order / lat->node(k).order;
    int c = lat->chief_centralizer(h, k);
    PermGroup Q = quotient(G, lat->subgroup_group(c)).first;
    for (std::uint64_t p : prime_divisors(forder))
      if (!in_formation(Q, f.at(p))) return false;
  }
  return true;
}

namespace {
std::mutex residual_mutex;
std::map<std::string, int>& residual_cache() {
  static std::map<std::string, int> c;  // group key + formation key -> node
  return c;
}
}  // namespace

PermGroup residual(const PermGroup& G, const FormationSpec& F) {
  auto lat = lattice_of(G);
  std::string key = F.key() + "|" + group_key(G);
  {
    std::lock_guard<std::mutex> lock(residual_mutex);
    auto it = residual_cache().find(key);
    if (it != residual_cache().end()) return lat->subgroup_group(it->second);
  }
  // Intersection of all normal subgroups with quotient in F. The full group
  // always qualifies (the trivial group lies in every built-in class), so
  // the scan is never empty; when nothing smaller qualifies the residual is
  // G itself.
  int acc = lat->full_node();
  for (int n : lat->normal_nodes()) {
    if (n == lat->full_node()) continue;
    PermGroup Q = quotient(G, lat->subgroup_group(n)).first;
    if (in_formation(Q, F)) acc = lat->intersect(acc, n);
  }
  std::lock_guard<std::mutex> lock(residual_mutex);
  residual_cache().emplace(std::move(key), acc);
  return lat->subgroup_group(acc);
}

}  // namespace sublab
