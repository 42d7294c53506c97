#include "sublab/subnormal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "sublab/errors.hpp"

namespace sublab {

std::string StepPolicy::key() const {
  switch (kind) {
    case PolicyKind::Subnormal: return "subnormal";
    case PolicyKind::PSub: return "psub";
    case PolicyKind::KPSub: return "kpsub";
    case PolicyKind::KPT: return "kpt(" + std::to_string(t) + ")";
    case PolicyKind::FSub: return "fsub[" + formation.key() + "]";
    case PolicyKind::KFSub: return "kfsub[" + formation.key() + "]";
  }
  return "?";
}

namespace {

std::mutex state_mutex;

// Side state per lattice; lattices obtained through lattice_of() are
// retained for the process lifetime, so keying by address is stable.
struct LatticeState {
  std::map<std::string, std::vector<int>> residual_nodes;  // formation -> per node
  std::map<std::string, std::vector<char>> reach;          // policy -> per node
};

LatticeState& state_of(const SubgroupLattice& L) {
  static std::map<const SubgroupLattice*, LatticeState> states;
  return states[&L];
}

// Residual of node y, standalone, mapped back into the lattice; -1 = unset.
int residual_node(const SubgroupLattice& L, int y, const FormationSpec& F) {
  std::vector<int>* slot;
  {
    std::lock_guard<std::mutex> lock(state_mutex);
    slot = &state_of(L).residual_nodes[F.key()];
    if (slot->empty()) slot->assign(L.size(), -1);
    if ((*slot)[y] >= 0) return (*slot)[y];
  }
  PermGroup Y = L.subgroup_group(y);
  int res = L.node_of_group(residual(Y, F));
  std::lock_guard<std::mutex> lock(state_mutex);
  (*slot)[y] = res;
  return res;
}

bool prime_step_ok(const SubgroupLattice& L, int x, int y,
                   const StepPolicy& policy) {
  std::uint64_t idx = L.index(y, x);
  if (!is_prime(idx)) return false;
  if (policy.kind == PolicyKind::KPT)
    return pt_admissible(idx, policy.t);
  return true;
}

}  // namespace

bool step_allowed(const SubgroupLattice& L, int x, int y,
                  const StepPolicy& policy) {
  if (x == y) return true;
  if (!L.contains(y, x))
    throw ArgumentError("step_allowed: X is not a subgroup of Y");
  switch (policy.kind) {
    case PolicyKind::Subnormal:
      return L.is_normal_in(x, y);
    case PolicyKind::PSub:
      return prime_step_ok(L, x, y, policy);
    case PolicyKind::KPSub:
    case PolicyKind::KPT:
      return L.is_normal_in(x, y) || prime_step_ok(L, x, y, policy);
    case PolicyKind::FSub:
      return L.contains(x, residual_node(L, y, policy.formation));
    case PolicyKind::KFSub:
      return L.is_normal_in(x, y) ||
             L.contains(x, residual_node(L, y, policy.formation));
  }
  return false;
}

bool subnormal_verdict(const SubgroupLattice& L, int h,
                       const StepPolicy& policy) {
  std::string pkey = policy.key();
  {
    std::lock_guard<std::mutex> lock(state_mutex);
    auto& reach = state_of(L).reach;
    auto it = reach.find(pkey);
    if (it != reach.end()) return it->second[h] != 0;
  }
  // Strict edges only go to nodes of strictly larger order, i.e. larger
  // node index, so one descending sweep is a topological pass.
  std::vector<char> reach(L.size(), 0);
  reach[L.full_node()] = 1;
  for (int x = L.size() - 2; x >= 0; --x)
    for (int y = x + 1; y < L.size(); ++y)
      if (reach[y] && L.contains(y, x) && step_allowed(L, x, y, policy)) {
        reach[x] = 1;
        break;
      }
  bool verdict = reach[h] != 0;
  std::lock_guard<std::mutex> lock(state_mutex);
  state_of(L).reach.emplace(std::move(pkey), std::move(reach));
  return verdict;
}

namespace {

ChainStep classify_step(const SubgroupLattice& L, int x, int y,
                        const StepPolicy& policy) {
  bool may_normal = policy.kind == PolicyKind::Subnormal ||
                    policy.kind == PolicyKind::KPSub ||
                    policy.kind == PolicyKind::KPT ||
                    policy.kind == PolicyKind::KFSub;
  if (may_normal && L.is_normal_in(x, y)) return {ChainStep::Tag::Normal};
  if (policy.kind == PolicyKind::PSub || policy.kind == PolicyKind::KPSub ||
      policy.kind == PolicyKind::KPT)
    return {ChainStep::Tag::Prime, L.index(y, x)};
  return {ChainStep::Tag::Residual};
}

}  // namespace

SubnormalVerdict is_subnormal_variant(const SubgroupLattice& L, int h,
                                      const StepPolicy& policy,
                                      bool want_witness) {
  if (!subnormal_verdict(L, h, policy)) return {false, std::nullopt};
  if (!want_witness) return {true, std::nullopt};
  if (h == L.full_node()) return {true, ChainWitness{{h}, {}}};
  // Shortest witness; neighbors scanned in node order for a deterministic
  // tie-break.
  std::vector<int> parent(L.size(), -1);
  std::deque<int> queue{h};
  parent[h] = h;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == L.full_node()) break;
    for (int y = x + 1; y < L.size(); ++y) {
      if (parent[y] >= 0 || !L.contains(y, x)) continue;
      if (step_allowed(L, x, y, policy)) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  ChainWitness w;
  for (int cur = L.full_node(); cur != h; cur = parent[cur])
    w.nodes.push_back(cur);
  w.nodes.push_back(h);
  std::reverse(w.nodes.begin(), w.nodes.end());
  for (size_t i = 1; i < w.nodes.size(); ++i)
    w.steps.push_back(classify_step(L, w.nodes[i - 1], w.nodes[i], policy));
  return {true, std::move(w)};
}

SubnormalVerdict is_subnormal_variant(const PermGroup& G, const PermGroup& H,
                                      const StepPolicy& policy,
                                      bool want_witness) {
  auto lat = lattice_of(G);
  return is_subnormal_variant(*lat, lat->node_of_group(H), policy,
                              want_witness);
}

std::string ChainWitness::render(const SubgroupLattice& L) const {
  std::string out;
  for (size_t i = 0; i < nodes.size(); ++i) {
    const SubgroupNode& n = L.node(nodes[i]);
    out += "order=" + std::to_string(n.order) + " gens=";
    if (n.gens.empty()) {
      out += "()";
    } else {
      for (size_t g = 0; g < n.gens.size(); ++g) {
        if (g) out += ", ";
        out += L.table().elements()[n.gens[g]].cycles();
      }
    }
    if (i > 0) {
      const ChainStep& s = steps[i - 1];
      switch (s.tag) {
        case ChainStep::Tag::Normal: out += " [normal]"; break;
        case ChainStep::Tag::Prime:
          out += " [p=" + std::to_string(s.prime) + "]";
          break;
        case ChainStep::Tag::Residual: out += " [residual]"; break;
      }
    }
    out += "\n";
  }
  return out;
}

bool validate_witness(const SubgroupLattice& L, int h, const ChainWitness& w,
                      const StepPolicy& policy) {
  if (w.nodes.empty() || w.nodes.front() != h ||
      w.nodes.back() != L.full_node())
    return false;
  if (w.steps.size() + 1 != w.nodes.size()) return false;
  const GroupTable& tab = L.table();
  for (size_t i = 1; i < w.nodes.size(); ++i) {
    const SubgroupNode& X = L.node(w.nodes[i - 1]);
    const SubgroupNode& Y = L.node(w.nodes[i]);
    // Strict ascent, checked from raw element lists.
    if (X.order >= Y.order) return false;
    for (std::uint16_t x : X.elements)
      if (!std::binary_search(Y.elements.begin(), Y.elements.end(), x))
        return false;
    const ChainStep& s = w.steps[i - 1];
    switch (s.tag) {
      case ChainStep::Tag::Normal: {
        if (policy.kind == PolicyKind::PSub ||
            policy.kind == PolicyKind::FSub)
          return false;
        for (std::uint16_t y : Y.elements)
          for (std::uint16_t x : X.elements)
            if (!std::binary_search(X.elements.begin(), X.elements.end(),
                                    tab.conj(x, y)))
              return false;
        break;
      }
      case ChainStep::Tag::Prime: {
        if (policy.kind == PolicyKind::Subnormal ||
            policy.kind == PolicyKind::FSub ||
            policy.kind == PolicyKind::KFSub)
          return false;
        std::uint64_t idx = Y.order / X.order;
        if (Y.order % X.order != 0 || idx != s.prime || !is_prime(idx))
          return false;
        if (policy.kind == PolicyKind::KPT && !pt_admissible(idx, policy.t))
          return false;
        break;
      }
      case ChainStep::Tag::Residual: {
        if (policy.kind != PolicyKind::FSub &&
            policy.kind != PolicyKind::KFSub)
          return false;
        PermGroup R = residual(L.subgroup_group(w.nodes[i]), policy.formation);
        for (const Permutation& r : R.elements()) {
          int ri = tab.index_of(r);
          if (ri < 0 || !std::binary_search(X.elements.begin(),
                                            X.elements.end(),
                                            static_cast<std::uint16_t>(ri)))
            return false;
        }
        break;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Brute-force oracle: independent subgroup enumeration and chain search.

namespace {
constexpr std::uint64_t ORACLE_ORDER_CAP = 48;
}

BruteForceOracle::BruteForceOracle(const PermGroup& G) : G_(G) {
  if (G.order() > ORACLE_ORDER_CAP)
    throw CapacityError("brute-force oracle supports order <= 48 only");
  const auto& elems = G.elements();
  int n = static_cast<int>(elems.size());
  auto mul = [&](int a, int b) {
    Permutation p = compose(elems[a], elems[b]);
    return static_cast<int>(
        std::lower_bound(elems.begin(), elems.end(), p) - elems.begin());
  };
  auto close = [&](std::vector<int> seed) {
    std::vector<char> in(n, 0);
    std::vector<int> mem;
    int id = static_cast<int>(
        std::lower_bound(elems.begin(), elems.end(),
                         Permutation::identity(G.degree())) -
        elems.begin());
    mem.push_back(id);
    in[id] = 1;
    for (int s : seed)
      if (!in[s]) {
        in[s] = 1;
        mem.push_back(s);
      }
    for (size_t i = 0; i < mem.size(); ++i)
      for (size_t j = 0; j < mem.size(); ++j) {
        int a = mul(mem[i], mem[j]);
        if (!in[a]) {
          in[a] = 1;
          mem.push_back(a);
        }
      }
    std::sort(mem.begin(), mem.end());
    return mem;
  };
  // Closures of all <=2-element subsets, then pairwise joins to a fixpoint.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> subs;
  auto add = [&](std::vector<int> s) {
    if (seen.insert(s).second) subs.push_back(std::move(s));
  };
  add(close({}));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) add(close({i, j}));
  for (size_t a = 0; a < subs.size(); ++a)
    for (size_t b = 0; b < a; ++b) {
      std::vector<int> seed = subs[a];
      seed.insert(seed.end(), subs[b].begin(), subs[b].end());
      add(close(std::move(seed)));
    }
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (const auto& s : subs) {
    std::vector<Permutation> gens;
    for (int x : s) gens.push_back(elems[x]);
    subgroups_.push_back(PermGroup(G.degree(), std::move(gens)));
    std::vector<std::uint64_t> bits((n + 63) / 64, 0);
    for (int x : s) bits[x >> 6] |= std::uint64_t(1) << (x & 63);
    elem_bits_.push_back(std::move(bits));
  }
}

bool BruteForceOracle::edge_valid(int x, int y, const StepPolicy& policy) const {
  const auto& elems = G_.elements();
  const auto& bx = elem_bits_[x];
  const auto& by = elem_bits_[y];
  for (size_t w = 0; w < bx.size(); ++w)
    if (bx[w] & ~by[w]) return false;  // not X <= Y
  auto in_x = [&](const Permutation& p) {
    auto it = std::lower_bound(elems.begin(), elems.end(), p);
    if (it == elems.end() || !(*it == p)) return false;
    int i = static_cast<int>(it - elems.begin());
    return ((bx[i >> 6] >> (i & 63)) & 1) != 0;
  };
  auto normal_ok = [&] {
    for (const Permutation& g : subgroups_[y].elements())
      for (const Permutation& h : subgroups_[x].elements())
        if (!in_x(conjugate_perm(h, g))) return false;
    return true;
  };
  auto prime_ok = [&] {
    std::uint64_t ox = subgroups_[x].order(), oy = subgroups_[y].order();
    if (oy % ox) return false;
    std::uint64_t idx = oy / ox;
    if (!is_prime(idx)) return false;
    if (policy.kind == PolicyKind::KPT) return pt_admissible(idx, policy.t);
    return true;
  };
  auto residual_ok = [&] {
    // Least normal subgroup of Y with quotient in the formation, found by
    // scanning this oracle's own subgroup list.
    const PermGroup& Y = subgroups_[y];
    std::uint64_t best = Y.order() + 1;
    int best_i = -1;
    for (int i = 0; i < subgroup_count(); ++i) {
      const PermGroup& N = subgroups_[i];
      if (N.order() >= best || Y.order() % N.order()) continue;
      bool inside = true;
      for (size_t w = 0; w < elem_bits_[i].size(); ++w)
        if (elem_bits_[i][w] & ~by[w]) inside = false;
      if (!inside || !is_normal_in(N, Y)) continue;
      if (in_formation(quotient(Y, N).first, policy.formation)) {
        best = N.order();
        best_i = i;
      }
    }
    if (best_i < 0) best_i = y;
    for (size_t w = 0; w < bx.size(); ++w)
      if (elem_bits_[best_i][w] & ~bx[w]) return false;
    return true;
  };
  switch (policy.kind) {
    case PolicyKind::Subnormal: return normal_ok();
    case PolicyKind::PSub: return prime_ok();
    case PolicyKind::KPSub:
    case PolicyKind::KPT: return normal_ok() || prime_ok();
    case PolicyKind::FSub: return residual_ok();
    case PolicyKind::KFSub: return normal_ok() || residual_ok();
  }
  return false;
}

bool BruteForceOracle::check(const PermGroup& H, const StepPolicy& policy) const {
  int hi = -1;
  std::vector<std::uint64_t> hb(elem_bits_[0].size(), 0);
  const auto& elems = G_.elements();
  for (const Permutation& h : H.elements()) {
    auto it = std::lower_bound(elems.begin(), elems.end(), h);
    if (it == elems.end() || !(*it == h))
      throw MembershipError("oracle: H is not a subgroup of G");
    int i = static_cast<int>(it - elems.begin());
    hb[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  for (int i = 0; i < subgroup_count(); ++i)
    if (elem_bits_[i] == hb) hi = i;
  if (hi < 0) throw MembershipError("oracle: H not found among subgroups");

  std::string pkey = policy.key();
  for (const auto& [k, v] : reach_cache_)
    if (k == pkey) return v[hi] != 0;
  int full = subgroup_count() - 1;
  std::vector<char> reach(subgroup_count(), 0);
  reach[full] = 1;
  for (int x = subgroup_count() - 2; x >= 0; --x)
    for (int y = x + 1; y < subgroup_count(); ++y)
      if (reach[y] && subgroups_[x].order() < subgroups_[y].order() &&
          edge_valid(x, y, policy)) {
        reach[x] = 1;
        break;
      }
  bool verdict = reach[hi] != 0;
  reach_cache_.emplace_back(std::move(pkey), std::move(reach));
  return verdict;
}

bool brute_force_oracle(const PermGroup& G, const PermGroup& H,
                        const StepPolicy& policy) {
  return BruteForceOracle(G).check(H, policy);
}

// ---------------------------------------------------------------------------

bool in_class_Ht(const PermGroup& G, int t) {
  if (G.order() == 1) return true;
  auto lat = lattice_of(G);
  for (std::uint64_t p : prime_divisors(G.order()))
    if (!subnormal_verdict(*lat, lat->sylow(p), StepPolicy::k_p_t(t)))
      return false;
  return true;
}

bool in_wF(const PermGroup& G, const FormationSpec& F) {
  if (G.order() == 1) return true;
  auto lat = lattice_of(G);
  for (std::uint64_t p : prime_divisors(G.order()))
    if (!subnormal_verdict(*lat, lat->sylow(p), StepPolicy::f_sub(F)))
      return false;
  return true;
}

bool in_ut0(const PermGroup& G, int t) {
  return is_supersoluble(G) && in_class_Ht(G, t);
}

}  // namespace sublab
