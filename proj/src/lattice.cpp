#include "sublab/lattice.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "sublab/errors.hpp"

namespace sublab {

namespace {

constexpr std::uint64_t TABLE_ORDER_CAP = 2000;

std::vector<std::uint64_t> make_bits(int n) {
  return std::vector<std::uint64_t>((n + 63) / 64, 0);
}
void bit_set(std::vector<std::uint64_t>& b, int i) {
  b[i >> 6] |= std::uint64_t(1) << (i & 63);
}
bool bit_get(const std::vector<std::uint64_t>& b, int i) {
  return (b[i >> 6] >> (i & 63)) & 1;
}
bool bits_subset(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
  for (size_t w = 0; w < a.size(); ++w)
    if (a[w] & ~b[w]) return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

GroupTable::GroupTable(const PermGroup& G) : group_(G) {
  if (G.order() > TABLE_ORDER_CAP)
    throw CapacityError("group order " + std::to_string(G.order()) +
                        " too large for a multiplication table");
  elems_ = std::make_shared<const std::vector<Permutation>>(G.elements());
  int n = size();
  mul_.assign(static_cast<size_t>(n) * n, 0);
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Permutation p = compose((*elems_)[a], (*elems_)[b]);
      int idx = index_of(p);
      mul_[static_cast<size_t>(a) * n + b] = static_cast<std::uint16_t>(idx);
      if (p.is_identity()) inv_[a] = static_cast<std::uint16_t>(b);
    }
    if ((*elems_)[a].is_identity()) id_ = a;
  }
}

int GroupTable::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elems_->begin(), elems_->end(), p);
  if (it == elems_->end() || !(*it == p)) return -1;
  return static_cast<int>(it - elems_->begin());
}

std::uint64_t GroupTable::element_order(int a) const {
  return (*elems_)[a].order();
}

// ---------------------------------------------------------------------------

SubgroupLattice::SubgroupLattice(const PermGroup& G) : table_(G) {
  if (G.order() > LATTICE_ORDER_CAP)
    throw CapacityError("group order " + std::to_string(G.order()) +
                        " exceeds LATTICE_ORDER_CAP");
  enumerate();
}

ElemKey SubgroupLattice::closure(std::vector<std::uint16_t> seed) const {
  int n = table_.size();
  auto in = make_bits(n);
  std::vector<std::uint16_t> members;
  members.push_back(static_cast<std::uint16_t>(table_.identity_index()));
  bit_set(in, table_.identity_index());
  for (std::uint16_t s : seed) {
    if (!bit_get(in, s)) {
      bit_set(in, s);
      members.push_back(s);
    }
  }
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = 0; j < members.size(); ++j) {
      std::uint16_t a = table_.mul(members[i], members[j]);
      if (!bit_get(in, a)) {
        bit_set(in, a);
        members.push_back(a);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

void SubgroupLattice::enumerate() {
  int n = table_.size();
  std::map<ElemKey, std::vector<std::uint16_t>> found;  // key -> gens
  std::vector<ElemKey> order_added;

  ElemKey triv{static_cast<std::uint16_t>(table_.identity_index())};
  found.emplace(triv, std::vector<std::uint16_t>{});
  order_added.push_back(triv);

  // All cyclic subgroups seed the closure process.
  std::vector<std::pair<ElemKey, std::uint16_t>> cyclics;
  for (int x = 0; x < n; ++x) {
    if (x == table_.identity_index()) continue;
    ElemKey key = closure({static_cast<std::uint16_t>(x)});
    if (!found.count(key)) {
      found.emplace(key, std::vector<std::uint16_t>{
                             static_cast<std::uint16_t>(x)});
      order_added.push_back(key);
      cyclics.emplace_back(key, static_cast<std::uint16_t>(x));
    }
  }
  // Join every known subgroup with every cyclic generator to a fixpoint.
  for (size_t i = 0; i < order_added.size(); ++i) {
    const ElemKey cur = order_added[i];
    const std::vector<std::uint16_t> cur_gens = found.at(cur);
    for (const auto& [ckey, x] : cyclics) {
      if (std::binary_search(cur.begin(), cur.end(), x)) continue;
      std::vector<std::uint16_t> seed = cur_gens;
      seed.push_back(x);
      ElemKey joined = closure(seed);
      if (!found.count(joined)) {
        found.emplace(joined, seed);
        order_added.push_back(joined);
      }
    }
  }

  nodes_.reserve(found.size());
  for (auto& [key, gens] : found) {
    SubgroupNode node;
    node.elements = key;
    node.gens = gens;
    node.order = key.size();
    nodes_.push_back(std::move(node));
  }
  std::sort(nodes_.begin(), nodes_.end(),
            [](const SubgroupNode& a, const SubgroupNode& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.elements < b.elements;
            });

  bits_.resize(nodes_.size());
  for (size_t i = 0; i < nodes_.size(); ++i) {
    bits_[i] = make_bits(n);
    for (std::uint16_t x : nodes_[i].elements) bit_set(bits_[i], x);
  }
  contains_.assign(nodes_.size(), std::vector<char>(nodes_.size(), 0));
  for (size_t sup = 0; sup < nodes_.size(); ++sup)
    for (size_t sub = 0; sub < nodes_.size(); ++sub)
      if (nodes_[sub].order <= nodes_[sup].order &&
          nodes_[sup].order % nodes_[sub].order == 0)
        contains_[sup][sub] = bits_subset(bits_[sub], bits_[sup]);
  normal_cache_.assign(nodes_.size(), std::vector<char>(nodes_.size(), 0));
  for (size_t i = 0; i < nodes_.size(); ++i)
    nodes_[i].normal = is_normal_in(static_cast<int>(i), full_node());
}

int SubgroupLattice::node_of(const ElemKey& key) const {
  auto cmp = [](const SubgroupNode& a, const ElemKey& k) {
    if (a.order != k.size()) return a.order < k.size();
    return a.elements < k;
  };
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), key, cmp);
  if (it == nodes_.end() || it->elements != key) return -1;
  return static_cast<int>(it - nodes_.begin());
}

int SubgroupLattice::node_of_elements(std::vector<std::uint16_t> elems) const {
  std::sort(elems.begin(), elems.end());
  return node_of(elems);
}

int SubgroupLattice::node_of_group(const PermGroup& H) const {
  if (H.degree() != group().degree())
    throw MembershipError("subgroup degree does not match the parent group");
  ElemKey key;
  key.reserve(H.order());
  for (const Permutation& h : H.elements()) {
    int idx = table_.index_of(h);
    if (idx < 0)
      throw MembershipError("subgroup element lies outside the parent group");
    key.push_back(static_cast<std::uint16_t>(idx));
  }
  std::sort(key.begin(), key.end());
  int node = node_of(key);
  if (node < 0) throw MembershipError("subgroup not found in the lattice");
  return node;
}

bool SubgroupLattice::contains(int sup, int sub) const {
  return contains_[sup][sub] != 0;
}

std::uint64_t SubgroupLattice::index(int sup, int sub) const {
  if (!contains(sup, sub))
    throw ArgumentError("index: subgroups are not comparable");
  return nodes_[sup].order / nodes_[sub].order;
}

bool SubgroupLattice::is_normal_in(int sub, int sup) const {
  if (!contains(sup, sub))
    throw ArgumentError("is_normal_in: not a subgroup pair");
  char& c = normal_cache_[sup][sub];
  if (c) return c == 2;
  bool normal = true;
  for (std::uint16_t g : nodes_[sup].gens) {
    for (std::uint16_t x : nodes_[sub].elements) {
      if (!bit_get(bits_[sub], table_.conj(x, g))) {
        normal = false;
        break;
      }
    }
    if (!normal) break;
  }
  c = normal ? 2 : 1;
  return normal;
}

int SubgroupLattice::intersect(int a, int b) const {
  std::vector<std::uint16_t> out;
  for (std::uint16_t x : nodes_[a].elements)
    if (bit_get(bits_[b], x)) out.push_back(x);
  return node_of(out);
}

int SubgroupLattice::join(int a, int b) const {
  std::vector<std::uint16_t> seed = nodes_[a].gens;
  seed.insert(seed.end(), nodes_[b].gens.begin(), nodes_[b].gens.end());
  return node_of(closure(seed));
}

int SubgroupLattice::conjugate_node(int h, int g_elem) const {
  std::vector<std::uint16_t> out;
  out.reserve(nodes_[h].elements.size());
  for (std::uint16_t x : nodes_[h].elements)
    out.push_back(table_.conj(x, static_cast<std::uint16_t>(g_elem)));
  return node_of_elements(std::move(out));
}

int SubgroupLattice::normalizer(int h) const {
  std::vector<std::uint16_t> out;
  for (int g = 0; g < table_.size(); ++g) {
    bool ok = true;
    for (std::uint16_t x : nodes_[h].elements) {
      if (!bit_get(bits_[h], table_.conj(x, g))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<std::uint16_t>(g));
  }
  return node_of(out);
}

int SubgroupLattice::core(int m) const {
  std::vector<std::uint16_t> out;
  for (std::uint16_t x : nodes_[m].elements) {
    bool keep = true;
    for (int g = 0; g < table_.size(); ++g) {
      if (!bit_get(bits_[m], table_.conj(x, g))) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(x);
  }
  return node_of(out);
}

int SubgroupLattice::sylow(std::uint64_t p) const {
  if (!is_prime(p)) throw ArgumentError("sylow: p must be prime");
  std::uint64_t target = 1;
  std::uint64_t n = group().order();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  if (target == 1) return trivial_node();
  for (int i = 0; i < size(); ++i)
    if (nodes_[i].order == target) return i;
  throw ArgumentError("sylow: no subgroup of full p-power order");  // unreachable
}

std::vector<int> SubgroupLattice::maximal_subgroups() const {
  std::vector<int> out;
  for (int m = 0; m < size(); ++m) {
    if (m == full_node()) continue;
    bool covered = true;
    for (int j = 0; j < size(); ++j) {
      if (j == m || j == full_node()) continue;
      if (contains(j, m)) {
        covered = false;
        break;
      }
    }
    if (covered) out.push_back(m);
  }
  return out;
}

std::vector<int> SubgroupLattice::minimal_normal_subgroups() const {
  if (group().order() == 1)
    throw ArgumentError("minimal_normal_subgroups: group is trivial");
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (i == trivial_node() || !nodes_[i].normal) continue;
    bool minimal = true;
    for (int j = 0; j < size(); ++j) {
      if (j == trivial_node() || j == i || !nodes_[j].normal) continue;
      if (contains(i, j)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

int SubgroupLattice::frattini() const {
  std::vector<int> maxes = maximal_subgroups();
  if (maxes.empty()) return full_node();  // trivial group
  auto acc = bits_[maxes[0]];
  for (size_t i = 1; i < maxes.size(); ++i)
    for (size_t w = 0; w < acc.size(); ++w) acc[w] &= bits_[maxes[i]][w];
  std::vector<std::uint16_t> out;
  for (int x = 0; x < table_.size(); ++x)
    if (bit_get(acc, x)) out.push_back(static_cast<std::uint16_t>(x));
  return node_of(out);
}

int SubgroupLattice::o_p(std::uint64_t p) const {
  if (!is_prime(p)) throw ArgumentError("o_p: p must be prime");
  return core(sylow(p));
}

int SubgroupLattice::fitting() const {
  int acc = trivial_node();
  for (std::uint64_t p : prime_divisors(group().order()))
    acc = join(acc, o_p(p));
  return acc;
}

std::vector<int> SubgroupLattice::normal_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (nodes_[i].normal) out.push_back(i);
  return out;
}

const std::vector<int>& SubgroupLattice::chief_series() const {
  if (!chief_series_.empty()) return chief_series_;
  std::vector<int> series{trivial_node()};
  while (series.back() != full_node()) {
    int cur = series.back();
    int best = -1;
    for (int cand : normal_nodes()) {
      if (cand == cur || !contains(cand, cur)) continue;
      bool covering = true;
      for (int mid : normal_nodes()) {
        if (mid == cur || mid == cand) continue;
        if (contains(cand, mid) && contains(mid, cur)) {
          covering = false;
          break;
        }
      }
      if (covering) {
        best = cand;  // nodes are sorted, first hit is the smallest key
        break;
      }
    }
    series.push_back(best);
  }
  chief_series_ = std::move(series);
  return chief_series_;
}

std::vector<std::vector<int>> SubgroupLattice::all_chief_series() const {
  std::vector<std::vector<int>> out;
  std::vector<int> normals = normal_nodes();
  std::vector<int> cur{trivial_node()};
  auto rec = [&](auto&& self, int top) -> void {
    if (top == full_node()) {
      out.push_back(cur);
      return;
    }
    for (int cand : normals) {
      if (cand == top || !contains(cand, top)) continue;
      bool covering = true;
      for (int mid : normals) {
        if (mid == top || mid == cand) continue;
        if (contains(cand, mid) && contains(mid, top)) {
          covering = false;
          break;
        }
      }
      if (covering) {
        cur.push_back(cand);
        self(self, cand);
        cur.pop_back();
      }
    }
  };
  rec(rec, trivial_node());
  return out;
}

int SubgroupLattice::chief_centralizer(int h, int k) const {
  if (!nodes_[h].normal || !nodes_[k].normal)
    throw ArgumentError("chief_centralizer: factor terms must be normal");
  if (h == k || !contains(h, k))
    throw ArgumentError("chief_centralizer: need K < H");
  std::vector<std::uint16_t> out;
  for (int g = 0; g < table_.size(); ++g) {
    bool ok = true;
    for (std::uint16_t x : nodes_[h].elements) {
      if (!bit_get(bits_[k], table_.comm(g, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(static_cast<std::uint16_t>(g));
  }
  return node_of(out);
}

bool SubgroupLattice::automizer_abelian_exp_dividing(int h, int k,
                                                     std::uint64_t m) const {
  int c = chief_centralizer(h, k);
  // G/C abelian <=> [G,G] <= C.
  for (int a = 0; a < table_.size(); ++a)
    for (int b = 0; b < table_.size(); ++b)
      if (!bit_get(bits_[c], table_.comm(a, b))) return false;
  // exponent of G/C divides m <=> g^m in C for all g.
  for (int g = 0; g < table_.size(); ++g) {
    int acc = table_.identity_index();
    std::uint64_t e = m % table_.element_order(g);
    int base = g;
    while (e) {
      if (e & 1) acc = table_.mul(acc, base);
      base = table_.mul(base, base);
      e >>= 1;
    }
    if (!bit_get(bits_[c], acc)) return false;
  }
  return true;
}

PermGroup SubgroupLattice::subgroup_group(int i) const {
  std::vector<Permutation> gens;
  for (std::uint16_t g : nodes_[i].gens) gens.push_back(table_.elements()[g]);
  return PermGroup(group().degree(), std::move(gens));
}

std::string SubgroupLattice::dot() const {
  std::ostringstream out;
  out << "digraph lattice {\n";
  for (int i = 0; i < size(); ++i)
    out << "  n" << i << " [label=\"order=" << nodes_[i].order
        << " normal=" << (nodes_[i].normal ? 1 : 0) << "\"];\n";
  for (int sub = 0; sub < size(); ++sub) {
    for (int sup = 0; sup < size(); ++sup) {
      if (sup == sub || !contains(sup, sub)) continue;
      bool covering = true;
      for (int mid = 0; mid < size(); ++mid) {
        if (mid == sub || mid == sup) continue;
        if (contains(sup, mid) && contains(mid, sub)) {
          covering = false;
          break;
        }
      }
      if (covering) out << "  n" << sub << " -> n" << sup << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------

std::string group_key(const PermGroup& G) {
  std::string key;
  key += std::to_string(G.degree());
  key += ':';
  key += std::to_string(G.order());
  key += ':';
  for (const Permutation& p : G.elements())
    for (int x : p.images()) {
      key += static_cast<char>(x & 0xff);
      key += static_cast<char>((x >> 8) & 0xff);
    }
  return key;
}

namespace {
std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<const SubgroupLattice>>& lattice_cache() {
  static std::map<std::string, std::shared_ptr<const SubgroupLattice>> c;
  return c;
}
std::map<std::string, std::shared_ptr<const GroupTable>>& table_cache() {
  static std::map<std::string, std::shared_ptr<const GroupTable>> c;
  return c;
}
}  // namespace

std::shared_ptr<const SubgroupLattice> lattice_of(const PermGroup& G) {
  std::string key = group_key(G);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = lattice_cache().find(key);
    if (it != lattice_cache().end()) return it->second;
  }
  auto lat = std::make_shared<const SubgroupLattice>(G);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = lattice_cache().emplace(std::move(key), lat);
  return it->second;
}

std::shared_ptr<const GroupTable> table_of(const PermGroup& G) {
  std::string key = group_key(G);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = table_cache().find(key);
    if (it != table_cache().end()) return it->second;
  }
  auto tab = std::make_shared<const GroupTable>(G);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = table_cache().emplace(std::move(key), tab);
  return it->second;
}

namespace {

// Greedy generating subset of a closed element set.
std::vector<int> reduce_generators(const GroupTable& tab,
                                   const std::vector<int>& elems) {
  std::vector<char> have(tab.size(), 0);
  std::vector<int> members{tab.identity_index()};
  have[tab.identity_index()] = 1;
  std::vector<int> gens;
  auto close_with = [&](int x) {
    if (have[x]) return;
    gens.push_back(x);
    members.push_back(x);
    have[x] = 1;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        int a = tab.mul(members[i], members[j]);
        if (!have[a]) {
          have[a] = 1;
          members.push_back(a);
        }
      }
  };
  for (int x : elems) close_with(x);
  return gens;
}

}  // namespace

PermGroup sylow_subgroup_direct(const PermGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw ArgumentError("sylow: p must be prime");
  auto tab = table_of(G);
  std::uint64_t target = 1, n = G.order();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  if (target == 1) return PermGroup::trivial(G.degree());

  std::vector<char> in(tab->size(), 0);
  std::vector<int> members{tab->identity_index()};
  in[tab->identity_index()] = 1;
  std::vector<int> gens;
  while (members.size() < target) {
    // Pick the smallest p-element of the normalizer outside the current
    // subgroup; the extension stays a p-group.
    int pick = -1;
    for (int g = 0; g < tab->size() && pick < 0; ++g) {
      if (in[g]) continue;
      std::uint64_t ord = tab->element_order(g);
      bool ppow = true;
      while (ord > 1) {
        if (ord % p) {
          ppow = false;
          break;
        }
        ord /= p;
      }
      if (!ppow) continue;
      bool normalizes = true;
      for (int x : members) {
        if (!in[tab->conj(x, g)]) {
          normalizes = false;
          break;
        }
      }
      if (normalizes) pick = g;
    }
    if (pick < 0)
      throw ArgumentError("sylow growth stalled");  // unreachable by Sylow
    gens.push_back(pick);
    members.push_back(pick);
    in[pick] = 1;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = 0; j < members.size(); ++j) {
        int a = tab->mul(members[i], members[j]);
        if (!in[a]) {
          in[a] = 1;
          members.push_back(a);
        }
      }
  }
  std::vector<Permutation> perm_gens;
  for (int g : gens) perm_gens.push_back(tab->elements()[g]);
  return PermGroup(G.degree(), std::move(perm_gens));
}

PermGroup o_p_direct(const PermGroup& G, std::uint64_t p) {
  auto tab = table_of(G);
  PermGroup S = sylow_subgroup_direct(G, p);
  std::vector<char> in(tab->size(), 0);
  for (const Permutation& s : S.elements()) in[tab->index_of(s)] = 1;
  std::vector<int> core_elems;
  for (int x = 0; x < tab->size(); ++x) {
    if (!in[x]) continue;
    bool keep = true;
    for (int g = 0; g < tab->size(); ++g) {
      if (!in[tab->conj(x, g)]) {
        keep = false;
        break;
      }
    }
    if (keep) core_elems.push_back(x);
  }
  std::vector<Permutation> gens;
  for (int g : reduce_generators(*tab, core_elems))
    gens.push_back(tab->elements()[g]);
  return PermGroup(G.degree(), std::move(gens));
}

}  // namespace sublab
