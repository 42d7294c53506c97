#include "sublab/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "sublab/classes.hpp"
#include "sublab/errors.hpp"
#include "sublab/lattice.hpp"
#include "sublab/subnormal.hpp"

namespace sublab {

namespace {

// Size caps for the quantifier-heavy property checks. Entries above a cap
// produce skip outcomes carrying the cap in the detail field.
constexpr std::uint64_t kPairCap = 120;   // pairwise / quotient quantification
constexpr std::uint64_t kDeepCap = 48;    // nested-lattice quantification
constexpr int kFactorizationTimeoutMs = 5000;

const std::vector<std::pair<SuiteId, const char*>>& suite_table() {
  static const std::vector<std::pair<SuiteId, const char*>> table = {
      {SuiteId::Lemma_1_1, "LEMMA_1_1"},
      {SuiteId::Lemma_1_2, "LEMMA_1_2"},
      {SuiteId::Lemma_1_3_Fwd, "LEMMA_1_3_FWD"},
      {SuiteId::Lemma_1_4, "LEMMA_1_4"},
      {SuiteId::Lemma_1_5, "LEMMA_1_5"},
      {SuiteId::Lemma_2_1, "LEMMA_2_1"},
      {SuiteId::Lemma_2_2, "LEMMA_2_2"},
      {SuiteId::Lemma_2_3, "LEMMA_2_3"},
      {SuiteId::Lemma_2_4, "LEMMA_2_4"},
      {SuiteId::ExamplesPaper, "EXAMPLES_PAPER"},
      {SuiteId::Theorem_3_1, "THEOREM_3_1"},
      {SuiteId::Theorem_3_2, "THEOREM_3_2"},
      {SuiteId::Theorem_3_3, "THEOREM_3_3"},
      {SuiteId::Theorem_3_4, "THEOREM_3_4"},
      {SuiteId::OracleEquiv, "ORACLE_EQUIV"},
      {SuiteId::Lemma_3_1, "LEMMA_3_1"},
      {SuiteId::Lemma_3_2, "LEMMA_3_2"},
  };
  return table;
}

std::string cap_reason(std::uint64_t order, std::uint64_t cap) {
  return "cap:order=" + std::to_string(order) + ">" + std::to_string(cap);
}

// Collects case results with a stable ordering (insertion order).
struct Sink {
  std::vector<CaseResult>& out;

  void add(const std::string& group, int t, const std::string& check, bool ok,
           const std::string& detail = "") {
    out.push_back({group, t, check, ok ? Outcome::Pass : Outcome::Fail,
                   ok ? std::string() : detail});
  }
  void skip(const std::string& group, int t, const std::string& check,
            const std::string& reason) {
    out.push_back({group, t, check, Outcome::Skip, reason});
  }
};

StepPolicy kpt(int t) { return StepPolicy::k_p_t(t); }

bool every_sylow_sub(const PermGroup& G, const StepPolicy& policy) {
  auto L = lattice_of(G);
  for (std::uint64_t p : prime_divisors(G.order())) {
    if (!subnormal_verdict(*L, L->sylow(p), policy)) return false;
  }
  return true;
}

// External direct product on the disjoint union of the two point sets.
PermGroup direct_product_group(const PermGroup& A, const PermGroup& B) {
  int da = A.degree(), db = B.degree();
  std::vector<Permutation> gens;
  for (const auto& g : A.generators()) {
    std::vector<int> im(da + db);
    for (int i = 0; i < da; ++i) im[i] = g(i);
    for (int i = 0; i < db; ++i) im[da + i] = da + i;
    gens.emplace_back(im);
  }
  for (const auto& g : B.generators()) {
    std::vector<int> im(da + db);
    for (int i = 0; i < da; ++i) im[i] = i;
    for (int i = 0; i < db; ++i) im[da + i] = da + g(i);
    gens.emplace_back(im);
  }
  if (gens.empty()) gens.push_back(Permutation::identity(da + db));
  return PermGroup(da + db, gens);
}

// Node of the image of lattice node h under the quotient map.
int image_node(const SubgroupLattice& LG, int h, const Homomorphism& hom,
               const SubgroupLattice& LQ) {
  PermGroup H = LG.subgroup_group(h);
  std::vector<Permutation> imgs;
  for (const auto& g : H.generators()) imgs.push_back(hom.apply(g));
  if (imgs.empty()) {
    imgs.push_back(Permutation::identity(hom.target().degree()));
  }
  return LQ.node_of_group(PermGroup(hom.target().degree(), imgs));
}

std::vector<int> proper_nontrivial_normals(const SubgroupLattice& L) {
  std::vector<int> out;
  for (int n : L.normal_nodes()) {
    if (n != L.trivial_node() && n != L.full_node()) out.push_back(n);
  }
  return out;
}

// ---- individual suites ------------------------------------------------

void run_lemma_1_1(const Corpus& corpus, const std::vector<int>&, Sink& sink) {
  std::map<std::string, bool> memo;
  for (const auto& e : corpus.entries) {
    auto key = group_key(e.group);
    auto it = memo.find(key);
    bool ok;
    if (it != memo.end()) {
      ok = it->second;
    } else {
      ok = true;
      auto L = lattice_of(e.group);
      const auto& series = L->chief_series();
      for (size_t i = 0; i + 1 < series.size(); ++i) {
        int k = series[i], h = series[i + 1];
        std::uint64_t sz = L->index(h, k);
        auto ps = prime_divisors(sz);
        if (ps.size() != 1) continue;  // not a chief p-factor
        std::uint64_t p = ps[0];
        bool small = (sz == p);
        bool aut = L->automizer_abelian_exp_dividing(h, k, p - 1);
        if (small != aut) ok = false;
      }
      memo[key] = ok;
    }
    sink.add(e.name, 0, "chief_factor_automizer", ok);
  }
}

void run_lemma_1_2(const Corpus& corpus, const std::vector<int>&, Sink& sink) {
  std::map<std::string, char> memo;  // group key -> class membership
  auto in_wbar_u = [&](const PermGroup& G) {
    auto key = group_key(G);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second != 0;
    bool v = every_sylow_sub(G, StepPolicy::k_p_sub());
    memo[key] = v ? 1 : 0;
    return v;
  };
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    bool member = in_wbar_u(G);
    sink.add(e.name, 0, "ore_dispersive",
             !member || is_ore_dispersive(G));
    if (G.order() > kPairCap) {
      sink.skip(e.name, 0, "hereditary", cap_reason(G.order(), kPairCap));
      sink.skip(e.name, 0, "quotient_closed", cap_reason(G.order(), kPairCap));
    } else {
      auto L = lattice_of(G);
      bool hered = true, quot = true;
      if (member) {
        for (int i = 0; i < L->size(); ++i) {
          if (!in_wbar_u(L->subgroup_group(i))) hered = false;
        }
        for (int n : proper_nontrivial_normals(*L)) {
          auto [Q, hom] = quotient(G, L->subgroup_group(n));
          (void)hom;
          if (!in_wbar_u(Q)) quot = false;
        }
      }
      sink.add(e.name, 0, "hereditary", hered);
      sink.add(e.name, 0, "quotient_closed", quot);
    }
    // Saturation in the implication direction: G/Phi(G) in class => G too.
    if (G.order() <= kPairCap) {
      auto L = lattice_of(G);
      int phi = L->frattini();
      bool sat = true;
      if (phi != L->trivial_node()) {
        auto [Q, hom] = quotient(G, L->subgroup_group(phi));
        (void)hom;
        if (in_wbar_u(Q) && !member) sat = false;
      }
      sink.add(e.name, 0, "saturated", sat);
    }
  }
}

void run_lemma_1_3(const Corpus& corpus, const std::vector<int>&, Sink& sink) {
  std::map<std::string, int> memo;  // 1 found, 0 not found, 2 timeout
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    if (!is_supersoluble(G)) continue;
    auto key = group_key(G);
    int res;
    auto it = memo.find(key);
    if (it != memo.end()) {
      res = it->second;
    } else {
      auto t0 = std::chrono::steady_clock::now();
      auto late = [&] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count() > kFactorizationTimeoutMs;
      };
      auto L = lattice_of(G);
      std::vector<int> candidates;  // nilpotent P-subnormal nodes
      StepPolicy psub = StepPolicy::p_sub();
      for (int i = 0; i < L->size(); ++i) {
        if (!subnormal_verdict(*L, i, psub)) continue;
        if (is_nilpotent(L->subgroup_group(i))) candidates.push_back(i);
      }
      res = 0;
      for (size_t a = 0; a < candidates.size() && res == 0; ++a) {
        if (late()) { res = 2; break; }
        for (size_t b = a; b < candidates.size(); ++b) {
          int ia = candidates[a], ib = candidates[b];
          std::uint64_t na = L->node(ia).order, nb = L->node(ib).order;
          std::uint64_t ni = L->node(L->intersect(ia, ib)).order;
          // |AB| = |A||B|/|A∩B| for subgroups, so the size identity alone
          // certifies AB = G as a set.
          if (na * nb == G.order() * ni) { res = 1; break; }
        }
      }
      memo[key] = res;
    }
    if (res == 2) {
      sink.skip(e.name, 0, "nilpotent_factorization", "timeout:5s");
    } else {
      sink.add(e.name, 0, "nilpotent_factorization", res == 1);
    }
  }
}

void run_lemma_1_4(const Corpus& corpus, const std::vector<int>& t_values,
                   Sink& sink) {
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    for (int t : t_values) {
      FormationSpec F = FormationSpec::u_k(t);
      StepPolicy pol = StepPolicy::f_sub(F);
      auto L = lattice_of(G);

      // (4) residual below H implies F-subnormality of H.
      int r = L->node_of_group(residual(G, F));
      bool ok4 = true;
      for (int h = 0; h < L->size(); ++h) {
        if (L->contains(h, r) && !subnormal_verdict(*L, h, pol)) ok4 = false;
      }
      sink.add(e.name, t, "residual_below", ok4);

      if (G.order() > kPairCap) {
        sink.skip(e.name, t, "quotient_calculus", cap_reason(G.order(), kPairCap));
      } else {
        // (2) lifting along quotients and (3) pushing forward.
        bool ok23 = true;
        for (int n : proper_nontrivial_normals(*L)) {
          auto [Q, hom] = quotient(G, L->subgroup_group(n));
          auto LQ = lattice_of(Q);
          for (int h = 0; h < L->size(); ++h) {
            bool vh = subnormal_verdict(*L, h, pol);
            if (vh) {
              int img = image_node(*L, L->join(h, n), hom, *LQ);
              if (!subnormal_verdict(*LQ, img, pol)) ok23 = false;  // (3)
            }
            if (L->contains(h, n)) {
              int img = image_node(*L, h, hom, *LQ);
              if (subnormal_verdict(*LQ, img, pol) && !vh) ok23 = false;  // (2)
            }
          }
        }
        sink.add(e.name, t, "quotient_calculus", ok23);
      }

      if (G.order() > kDeepCap) {
        sink.skip(e.name, t, "transitive", cap_reason(G.order(), kDeepCap));
        sink.skip(e.name, t, "intersection", cap_reason(G.order(), kDeepCap));
      } else {
        // (1) transitivity and (5) heredity into arbitrary subgroups.
        bool ok1 = true, ok5 = true;
        for (int u = 0; u < L->size(); ++u) {
          PermGroup U = L->subgroup_group(u);
          bool vu = subnormal_verdict(*L, u, pol);
          for (int h = 0; h < L->size(); ++h) {
            bool vh = subnormal_verdict(*L, h, pol);
            if (L->contains(u, h) && vu &&
                is_subnormal_variant(U, L->subgroup_group(h), pol, false)
                    .subnormal &&
                !vh) {
              ok1 = false;
            }
            if (vh && !is_subnormal_variant(
                          U, L->subgroup_group(L->intersect(h, u)), pol,
                          false)
                          .subnormal) {
              ok5 = false;
            }
          }
        }
        sink.add(e.name, t, "transitive", ok1);
        sink.add(e.name, t, "intersection", ok5);
      }
    }
  }
}

void run_lemma_1_5(const Corpus& corpus, const std::vector<int>& t_values,
                   Sink& sink) {
  for (const auto& e : corpus.entries) {
    for (int t : t_values) {
      bool ok = !in_wF(e.group, FormationSpec::u_t0(t)) || is_soluble(e.group);
      sink.add(e.name, t, "w_class_soluble", ok);
    }
  }
}

void run_lemma_2_1(const Corpus& corpus, const std::vector<int>& t_values,
                   Sink& sink) {
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    for (int t : t_values) {
      StepPolicy pol = kpt(t);
      if (G.order() > kPairCap) {
        sink.skip(e.name, t, "conjugation", cap_reason(G.order(), kPairCap));
      } else {
        auto L = lattice_of(G);
        bool ok = true;
        for (int h = 0; h < L->size(); ++h) {
          bool v = subnormal_verdict(*L, h, pol);
          for (const auto& g : G.generators()) {
            int gi = L->table().index_of(g);
            if (subnormal_verdict(*L, L->conjugate_node(h, gi), pol) != v) {
              ok = false;
            }
          }
        }
        sink.add(e.name, t, "conjugation", ok);
      }
      if (G.order() > kDeepCap) {
        sink.skip(e.name, t, "transitive", cap_reason(G.order(), kDeepCap));
      } else {
        auto L = lattice_of(G);
        bool ok = true;
        for (int r = 0; r < L->size(); ++r) {
          if (!subnormal_verdict(*L, r, pol)) continue;
          PermGroup R = L->subgroup_group(r);
          for (int h = 0; h < L->size(); ++h) {
            if (!L->contains(r, h)) continue;
            if (is_subnormal_variant(R, L->subgroup_group(h), pol, false)
                    .subnormal &&
                !subnormal_verdict(*L, h, pol)) {
              ok = false;
            }
          }
        }
        sink.add(e.name, t, "transitive", ok);
      }
    }
  }
}

void run_lemma_2_2(const Corpus& corpus, const std::vector<int>& t_values,
                   Sink& sink) {
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    for (int t : t_values) {
      if (G.order() > kPairCap) {
        sink.skip(e.name, t, "normal_calculus", cap_reason(G.order(), kPairCap));
        continue;
      }
      StepPolicy pol = kpt(t);
      auto L = lattice_of(G);
      bool ok = true;
      auto normals = proper_nontrivial_normals(*L);
      for (int n : normals) {
        PermGroup N = L->subgroup_group(n);
        auto [Q, hom] = quotient(G, N);
        auto LQ = lattice_of(Q);
        auto LN = lattice_of(N);
        for (int h = 0; h < L->size(); ++h) {
          bool vh = subnormal_verdict(*L, h, pol);
          int hn = L->join(h, n);
          int img = image_node(*L, hn, hom, *LQ);
          bool vimg = subnormal_verdict(*LQ, img, pol);
          if (vh) {
            // (1): H∩N K-P_t-subnormal in N; HN/N in G/N.
            int hin = LN->node_of_group(
                L->subgroup_group(L->intersect(h, n)));
            if (!subnormal_verdict(*LN, hin, pol)) ok = false;
            if (!vimg) ok = false;
          }
          if (L->contains(h, n)) {
            // (2): lifting along the quotient map.
            int himg = image_node(*L, h, hom, *LQ);
            if (subnormal_verdict(*LQ, himg, pol) && !vh) ok = false;
          }
          // (3): HN subnormal in G iff HN/N subnormal in G/N.
          if (subnormal_verdict(*L, hn, pol) != vimg) ok = false;
        }
      }
      // (4): intersection of subnormal normal-products.
      for (size_t a = 0; a < normals.size(); ++a) {
        for (size_t b = a + 1; b < normals.size(); ++b) {
          for (int h = 0; h < L->size(); ++h) {
            int h1 = L->join(h, normals[a]);
            int h2 = L->join(h, normals[b]);
            if (subnormal_verdict(*L, h1, pol) &&
                subnormal_verdict(*L, h2, pol) &&
                !subnormal_verdict(*L, L->intersect(h1, h2), pol)) {
              ok = false;
            }
          }
        }
      }
      sink.add(e.name, t, "normal_calculus", ok);
    }
  }
}

void run_lemma_2_3(const Corpus& corpus, const std::vector<int>& t_values,
                   Sink& sink) {
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    if (!is_soluble(G)) continue;
    for (int t : t_values) {
      StepPolicy pol = kpt(t);
      if (G.order() > kDeepCap) {
        sink.skip(e.name, t, "intersect_subgroup",
                  cap_reason(G.order(), kDeepCap));
      } else {
        auto L = lattice_of(G);
        bool ok = true;
        for (int h = 0; h < L->size(); ++h) {
          if (!subnormal_verdict(*L, h, pol)) continue;
          for (int u = 0; u < L->size(); ++u) {
            PermGroup U = L->subgroup_group(u);
            PermGroup HiU = L->subgroup_group(L->intersect(h, u));
            if (!is_subnormal_variant(U, HiU, pol, false).subnormal) ok = false;
          }
        }
        sink.add(e.name, t, "intersect_subgroup", ok);
      }
      if (G.order() > kPairCap) {
        sink.skip(e.name, t, "intersect_subnormal",
                  cap_reason(G.order(), kPairCap));
      } else {
        auto L = lattice_of(G);
        bool ok = true;
        for (int h = 0; h < L->size(); ++h) {
          if (!subnormal_verdict(*L, h, pol)) continue;
          for (int u = h; u < L->size(); ++u) {
            if (!subnormal_verdict(*L, u, pol)) continue;
            if (!subnormal_verdict(*L, L->intersect(h, u), pol)) ok = false;
          }
        }
        sink.add(e.name, t, "intersect_subnormal", ok);
      }
    }
  }
}

void run_lemma_2_4(const Corpus& corpus, const std::vector<int>& t_values,
                   Sink& sink) {
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    if (!is_soluble(G)) continue;
    for (int t : t_values) {
      if (G.order() > kPairCap) {
        sink.skip(e.name, t, "kpt_implies_ut_sub",
                  cap_reason(G.order(), kPairCap));
        continue;
      }
      auto L = lattice_of(G);
      StepPolicy kp = kpt(t);
      StepPolicy fs = StepPolicy::f_sub(FormationSpec::u_k(t));
      bool ok = true;
      for (int h = 0; h < L->size(); ++h) {
        if (subnormal_verdict(*L, h, kp) && !subnormal_verdict(*L, h, fs)) {
          ok = false;
        }
      }
      sink.add(e.name, t, "kpt_implies_ut_sub", ok);
    }
  }
}

void run_examples_paper(const Corpus&, const std::vector<int>&, Sink& sink) {
  {
    // Hol(Z_17), order 272: an order-2 subgroup of the complement.
    PermGroup G = builtin_group("hol17");
    auto L = lattice_of(G);
    int h2 = -1;
    for (int i = 0; i < L->size(); ++i) {
      if (L->node(i).order == 2) { h2 = i; break; }
    }
    auto v = is_subnormal_variant(*L, h2, StepPolicy::k_p_sub());
    sink.add("hol17", 0, "kpsub",
             v.subnormal && v.witness && validate_witness(*L, h2, *v.witness,
                                                          StepPolicy::k_p_sub()));
    sink.add("hol17", 3, "kpt", !subnormal_verdict(*L, h2, kpt(3)));
    sink.add("hol17", 4, "kpt", subnormal_verdict(*L, h2, kpt(4)));
  }
  {
    // A_5, t = 2: the Sylow 2-subgroup.
    PermGroup G = builtin_group("A5");
    auto L = lattice_of(G);
    int s2 = L->sylow(2);
    auto v = is_subnormal_variant(*L, s2, kpt(2));
    sink.add("A5", 2, "kpt_witness",
             v.subnormal && v.witness && v.witness->length() == 2);
    sink.add("A5", 2, "not_u2_sub",
             !subnormal_verdict(*L, s2,
                                StepPolicy::f_sub(FormationSpec::u_k(2))));
    sink.add("A5", 2, "residual_full",
             residual(G, FormationSpec::u_k(2)).order() == 60);
    // The order-12 intermediate subgroup has U_2-residual = its Sylow 2.
    int a4 = -1;
    for (int i = 0; i < L->size(); ++i) {
      if (L->node(i).order == 12 && L->contains(i, s2)) { a4 = i; break; }
    }
    sink.add("A5", 2, "residual_a4",
             residual(L->subgroup_group(a4), FormationSpec::u_k(2)).order() ==
                 4);
  }
  {
    // Nonabelian group of order 39, t = 1: the Sylow 3-subgroup.
    PermGroup G = builtin_group("order39");
    auto L = lattice_of(G);
    int s3 = L->sylow(3);
    sink.add("order39", 1, "u1_sub",
             subnormal_verdict(*L, s3,
                               StepPolicy::f_sub(FormationSpec::u_k(1))));
    sink.add("order39", 1, "residual_trivial",
             residual(G, FormationSpec::u_k(1)).order() == 1);
    sink.add("order39", 1, "not_kpt", !subnormal_verdict(*L, s3, kpt(1)));
  }
  {
    // Hol(Z_5), order 20: the Sylow 2-subgroup Z_4 (index 5, 5-1 = 2^2).
    PermGroup G = builtin_group("hol5");
    auto L = lattice_of(G);
    int s2 = L->sylow(2);
    sink.add("hol5", 1, "kpt", !subnormal_verdict(*L, s2, kpt(1)));
    sink.add("hol5", 2, "kpt", subnormal_verdict(*L, s2, kpt(2)));
  }
}

void run_theorem_3_1(const Corpus& corpus, const std::vector<int>& t_values,
                     Sink& sink) {
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    for (int t : t_values) {
      bool ht = in_class_Ht(G, t);
      sink.add(e.name, t, "dispersive", !ht || is_ore_dispersive(G));

      auto L = lattice_of(G);
      bool quot_ok = true, r0_ok = true, sat_ok = true;
      auto normals = proper_nontrivial_normals(*L);
      std::vector<char> qmember(normals.size(), 0);
      for (size_t i = 0; i < normals.size(); ++i) {
        auto [Q, hom] = quotient(G, L->subgroup_group(normals[i]));
        (void)hom;
        qmember[i] = in_class_Ht(Q, t) ? 1 : 0;
        if (ht && !qmember[i]) quot_ok = false;
      }
      sink.add(e.name, t, "quotient_closed", quot_ok);

      if (G.order() > kPairCap) {
        sink.skip(e.name, t, "subgroup_closed", cap_reason(G.order(), kPairCap));
      } else {
        bool sub_ok = true;
        if (ht) {
          for (int i = 0; i < L->size(); ++i) {
            if (!in_class_Ht(L->subgroup_group(i), t)) sub_ok = false;
          }
        }
        sink.add(e.name, t, "subgroup_closed", sub_ok);
      }

      // R_0-closure over pairs of normal subgroups.
      for (size_t a = 0; a < normals.size(); ++a) {
        for (size_t b = a + 1; b < normals.size(); ++b) {
          if (!qmember[a] || !qmember[b]) continue;
          int m = L->intersect(normals[a], normals[b]);
          if (m == L->trivial_node()) {
            if (!ht) r0_ok = false;
          } else {
            auto [Q, hom] = quotient(G, L->subgroup_group(m));
            (void)hom;
            if (!in_class_Ht(Q, t)) r0_ok = false;
          }
        }
      }
      sink.add(e.name, t, "r0_closed", r0_ok);

      int phi = L->frattini();
      if (phi != L->trivial_node()) {
        auto [Q, hom] = quotient(G, L->subgroup_group(phi));
        (void)hom;
        if (in_class_Ht(Q, t) && !ht) sat_ok = false;
      }
      sink.add(e.name, t, "saturated", sat_ok);
    }
  }

  // Direct-product closure over the small named entries.
  std::vector<const CorpusEntry*> named;
  std::set<std::string> seen;
  for (const auto& e : corpus.entries) {
    if (e.name.find("_sub") != std::string::npos) continue;
    if (e.group.order() > 24) continue;
    if (!seen.insert(group_key(e.group)).second) continue;
    named.push_back(&e);
  }
  for (size_t a = 0; a < named.size(); ++a) {
    for (size_t b = a; b < named.size(); ++b) {
      const PermGroup& A = named[a]->group;
      const PermGroup& B = named[b]->group;
      if (A.order() * B.order() > kDeepCap) continue;
      PermGroup P = direct_product_group(A, B);
      for (int t : t_values) {
        if (!in_class_Ht(A, t) || !in_class_Ht(B, t)) continue;
        sink.add(named[a]->name + "x" + named[b]->name, t, "product_closed",
                 in_class_Ht(P, t));
      }
    }
  }
}

void run_theorem_3_2(const Corpus& corpus, const std::vector<int>& t_values,
                     Sink& sink) {
  for (const auto& e : corpus.entries) {
    for (int t : t_values) {
      bool lhs = in_class_Ht(e.group, t);
      bool rhs = lf_member(e.group, theorem32_local(t));
      sink.add(e.name, t, "local_definition", lhs == rhs,
               lhs ? "class=1 local=0" : "class=0 local=1");
    }
  }
}

void run_theorem_3_3(const Corpus& corpus, const std::vector<int>& t_values,
                     Sink& sink) {
  for (const auto& e : corpus.entries) {
    for (int t : t_values) {
      bool lhs = in_ut0(e.group, t);
      bool rhs = lf_member(e.group, theorem33_local(t));
      sink.add(e.name, t, "local_definition", lhs == rhs,
               lhs ? "class=1 local=0" : "class=0 local=1");
    }
  }
}

void run_theorem_3_4(const Corpus& corpus, const std::vector<int>& t_values,
                     Sink& sink) {
  for (const auto& e : corpus.entries) {
    for (int t : t_values) {
      bool lhs = in_class_Ht(e.group, t);
      bool rhs = in_wF(e.group, FormationSpec::u_t0(t));
      sink.add(e.name, t, "w_class_equality", lhs == rhs,
               lhs ? "class=1 w=0" : "class=0 w=1");
    }
  }
}

void run_oracle_equiv(const Corpus& corpus, const std::vector<int>&,
                      Sink& sink) {
  std::map<std::string, bool> memo;
  std::vector<StepPolicy> policies = {
      StepPolicy::subnormal(),
      StepPolicy::p_sub(),
      StepPolicy::k_p_sub(),
      kpt(1),
      kpt(2),
      kpt(3),
      StepPolicy::f_sub(FormationSpec::u_k(1)),
      StepPolicy::k_f_sub(FormationSpec::u_k(1)),
  };
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    if (G.order() > 48) {
      sink.skip(e.name, 0, "oracle", cap_reason(G.order(), 48));
      continue;
    }
    auto key = group_key(G);
    auto it = memo.find(key);
    bool ok;
    if (it != memo.end()) {
      ok = it->second;
    } else {
      ok = true;
      BruteForceOracle oracle(G);
      auto L = lattice_of(G);
      for (int i = 0; i < oracle.subgroup_count(); ++i) {
        const PermGroup& H = oracle.subgroup(i);
        int h = L->node_of_group(H);
        for (const auto& pol : policies) {
          if (subnormal_verdict(*L, h, pol) != oracle.check(H, pol)) {
            ok = false;
          }
        }
      }
      memo[key] = ok;
    }
    sink.add(e.name, 0, "oracle", ok);
  }
}

void run_lemma_3_1(const Corpus& corpus, const std::vector<int>& t_values,
                   Sink& sink) {
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    for (int t : t_values) {
      if (G.order() > kPairCap) {
        sink.skip(e.name, t, "sylow_descent", cap_reason(G.order(), kPairCap));
        continue;
      }
      auto L = lattice_of(G);
      bool ok = true;
      for (std::uint64_t p : prime_divisors(G.order())) {
        if (!subnormal_verdict(*L, L->sylow(p), kpt(t))) continue;
        for (int n : proper_nontrivial_normals(*L)) {
          PermGroup N = L->subgroup_group(n);
          PermGroup Pn = sylow_subgroup_direct(N, p);
          if (!is_subnormal_variant(N, Pn, kpt(t), false).subnormal) {
            ok = false;
          }
          auto [Q, hom] = quotient(G, N);
          (void)hom;
          PermGroup Pq = sylow_subgroup_direct(Q, p);
          if (!is_subnormal_variant(Q, Pq, kpt(t), false).subnormal) {
            ok = false;
          }
        }
      }
      sink.add(e.name, t, "sylow_descent", ok);
    }
  }
}

void run_lemma_3_2(const Corpus& corpus, const std::vector<int>& t_values,
                   Sink& sink) {
  // Class under test for a fixed prime p: every Sylow subgroup lies in
  // N_p A(p-1). Checked subgroup- and quotient-closed for admissible p.
  auto in_class = [](const PermGroup& X, std::uint64_t p) {
    for (std::uint64_t q : prime_divisors(X.order())) {
      if (!in_np_a(sylow_subgroup_direct(X, q), p)) return false;
    }
    return true;
  };
  for (const auto& e : corpus.entries) {
    const PermGroup& G = e.group;
    std::set<std::uint64_t> primes;
    for (int t : t_values) {
      for (std::uint64_t p : prime_divisors(G.order())) {
        if (pt_admissible(p, t)) primes.insert(p);
      }
    }
    if (G.order() > kPairCap) {
      sink.skip(e.name, 0, "syl_npa_closed", cap_reason(G.order(), kPairCap));
      continue;
    }
    bool ok = true;
    auto L = lattice_of(G);
    for (std::uint64_t p : primes) {
      if (!in_class(G, p)) continue;
      for (int i = 0; i < L->size(); ++i) {
        if (!in_class(L->subgroup_group(i), p)) ok = false;
      }
      for (int n : proper_nontrivial_normals(*L)) {
        auto [Q, hom] = quotient(G, L->subgroup_group(n));
        (void)hom;
        if (!in_class(Q, p)) ok = false;
      }
    }
    sink.add(e.name, 0, "syl_npa_closed", ok);
  }
}

}  // namespace

std::vector<SuiteId> all_suites() {
  std::vector<SuiteId> out;
  for (const auto& [id, name] : suite_table()) {
    (void)name;
    out.push_back(id);
  }
  return out;
}

std::string suite_name(SuiteId id) {
  for (const auto& [sid, name] : suite_table()) {
    if (sid == id) return name;
  }
  throw ArgumentError("unknown suite id");
}

SuiteId suite_from_name(const std::string& name) {
  for (const auto& [sid, sname] : suite_table()) {
    if (name == sname) return sid;
  }
  throw ArgumentError("unknown suite: " + name);
}

int Report::passed() const {
  return static_cast<int>(std::count_if(
      cases.begin(), cases.end(),
      [](const CaseResult& c) { return c.outcome == Outcome::Pass; }));
}
int Report::failed() const {
  return static_cast<int>(std::count_if(
      cases.begin(), cases.end(),
      [](const CaseResult& c) { return c.outcome == Outcome::Fail; }));
}
int Report::skipped() const {
  return static_cast<int>(std::count_if(
      cases.begin(), cases.end(),
      [](const CaseResult& c) { return c.outcome == Outcome::Skip; }));
}

std::string Report::render() const {
  std::ostringstream os;
  os << "SUITE " << suite_name(suite) << "\n";
  for (const auto& c : cases) {
    os << "CASE " << c.group << " t=" << c.t << " " << c.check << "=";
    switch (c.outcome) {
      case Outcome::Pass: os << "pass"; break;
      case Outcome::Fail: os << "fail"; break;
      case Outcome::Skip: os << "skip"; break;
    }
    if (!c.detail.empty()) os << " " << c.detail;
    os << "\n";
  }
  os << "TOTAL pass=" << passed() << " fail=" << failed()
     << " skip=" << skipped() << "\n";
  return os.str();
}

Report run_suite(SuiteId id, const Corpus& corpus,
                 const std::vector<int>& t_values, int jobs) {
  (void)jobs;  // cases are cheap relative to the shared caches; run serially
  if (corpus.entries.empty()) throw ArgumentError("empty corpus");
  for (int t : t_values) {
    if (t < 1 || t > 6) {
      throw ArgumentError("t out of range: " + std::to_string(t));
    }
  }
  Report report;
  report.suite = id;
  Sink sink{report.cases};
  auto t0 = std::chrono::steady_clock::now();
  switch (id) {
    case SuiteId::Lemma_1_1: run_lemma_1_1(corpus, t_values, sink); break;
    case SuiteId::Lemma_1_2: run_lemma_1_2(corpus, t_values, sink); break;
    case SuiteId::Lemma_1_3_Fwd: run_lemma_1_3(corpus, t_values, sink); break;
    case SuiteId::Lemma_1_4: run_lemma_1_4(corpus, t_values, sink); break;
    case SuiteId::Lemma_1_5: run_lemma_1_5(corpus, t_values, sink); break;
    case SuiteId::Lemma_2_1: run_lemma_2_1(corpus, t_values, sink); break;
    case SuiteId::Lemma_2_2: run_lemma_2_2(corpus, t_values, sink); break;
    case SuiteId::Lemma_2_3: run_lemma_2_3(corpus, t_values, sink); break;
    case SuiteId::Lemma_2_4: run_lemma_2_4(corpus, t_values, sink); break;
    case SuiteId::ExamplesPaper:
      run_examples_paper(corpus, t_values, sink);
      break;
    case SuiteId::Theorem_3_1: run_theorem_3_1(corpus, t_values, sink); break;
    case SuiteId::Theorem_3_2: run_theorem_3_2(corpus, t_values, sink); break;
    case SuiteId::Theorem_3_3: run_theorem_3_3(corpus, t_values, sink); break;
    case SuiteId::Theorem_3_4: run_theorem_3_4(corpus, t_values, sink); break;
    case SuiteId::OracleEquiv: run_oracle_equiv(corpus, t_values, sink); break;
    case SuiteId::Lemma_3_1: run_lemma_3_1(corpus, t_values, sink); break;
    case SuiteId::Lemma_3_2: run_lemma_3_2(corpus, t_values, sink); break;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

void emit_report(const Report& report, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw FormatError("cannot open report file: " + path);
  std::string text = report.render();
  size_t n = std::fwrite(text.data(), 1, text.size(), f);
  std::fclose(f);
  if (n != text.size()) throw FormatError("short write: " + path);
}

}  // namespace sublab
