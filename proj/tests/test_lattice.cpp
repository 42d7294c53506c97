#include <map>
#include <set>

#include "doctest.h"
#include "sublab/classes.hpp"
#include "sublab/corpus.hpp"
#include "sublab/errors.hpp"
#include "sublab/lattice.hpp"

using namespace sublab;

namespace {

PermGroup make(int degree, std::initializer_list<const char*> cycles) {
  std::vector<Permutation> gens;
  for (const char* c : cycles) {
    gens.push_back(Permutation::from_cycles(c, degree));
  }
  return PermGroup(degree, gens);
}

// Independent subgroup count: closures of all <=2-element subsets, then
// pairwise joins to a fixpoint (slow, only for small groups).
size_t brute_subgroup_count(const PermGroup& G) {
  GroupTable T(G);
  int n = T.size();
  auto close = [&](std::set<int> seed) {
    seed.insert(T.identity_index());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> snap(seed.begin(), seed.end());
      for (int a : snap) {
        for (int b : snap) {
          if (seed.insert(T.mul(a, b)).second) grew = true;
        }
        if (seed.insert(T.inv(a)).second) grew = true;
      }
    }
    return seed;
  };
  std::set<std::set<int>> subs;
  subs.insert(close({}));
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) subs.insert(close({a, b}));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::set<int>> snap(subs.begin(), subs.end());
    for (const auto& x : snap) {
      for (const auto& y : snap) {
        std::set<int> seed = x;
        seed.insert(y.begin(), y.end());
        if (subs.insert(close(seed)).second) grew = true;
      }
    }
  }
  return subs.size();
}

}  // namespace

TEST_CASE("subgroup enumeration counts") {
  CHECK(lattice_of(builtin_group("S3"))->size() == 6);
  CHECK(lattice_of(builtin_group("Z6"))->size() == 4);
  auto S4 = builtin_group("S4");
  auto L = lattice_of(S4);
  CHECK(L->size() == 30);
  CHECK(brute_subgroup_count(S4) == 30);
  CHECK(brute_subgroup_count(builtin_group("A4")) ==
        (size_t)lattice_of(builtin_group("A4"))->size());
  CHECK(brute_subgroup_count(builtin_group("Q8")) ==
        (size_t)lattice_of(builtin_group("Q8"))->size());
}

TEST_CASE("lattice structural invariants") {
  for (const char* name : {"S4", "A5", "Q8", "D6", "Z12"}) {
    auto G = builtin_group(name);
    auto L = lattice_of(G);
    CHECK(L->node(L->trivial_node()).order == 1);
    CHECK(L->node(L->full_node()).order == G.order());
    for (int i = 0; i < L->size(); ++i) {
      CHECK(G.order() % L->node(i).order == 0);  // Lagrange
      CHECK(L->contains(L->full_node(), i));
      CHECK(L->contains(i, L->trivial_node()));
      CHECK(L->contains(i, i));
    }
  }
}

TEST_CASE("normalizer") {
  auto S3 = builtin_group("S3");
  auto L3 = lattice_of(S3);
  int h = L3->node_of_group(make(3, {"(1 2)"}));
  CHECK(L3->normalizer(h) == h);  // self-normalizing

  auto A5 = builtin_group("A5");
  auto L5 = lattice_of(A5);
  int syl2 = L5->sylow(2);
  CHECK(L5->node(L5->normalizer(syl2)).order == 12);

  auto S4 = builtin_group("S4");
  auto L4 = lattice_of(S4);
  for (int n : L4->normal_nodes()) {
    CHECK(L4->normalizer(n) == L4->full_node());
  }
}

TEST_CASE("core") {
  auto S3 = builtin_group("S3");
  auto L3 = lattice_of(S3);
  CHECK(L3->core(L3->node_of_group(make(3, {"(1 2)"}))) == L3->trivial_node());

  auto S4 = builtin_group("S4");
  auto L4 = lattice_of(S4);
  int d8 = L4->sylow(2);
  CHECK(L4->node(d8).order == 8);
  int c = L4->core(d8);
  CHECK(L4->node(c).order == 4);
  CHECK(L4->is_normal_in(c, L4->full_node()));
  for (int n : L4->normal_nodes()) CHECK(L4->core(n) == n);
}

TEST_CASE("sylow") {
  auto L4 = lattice_of(builtin_group("S4"));
  CHECK(L4->node(L4->sylow(2)).order == 8);
  CHECK(L4->node(L4->sylow(3)).order == 3);
  auto L5 = lattice_of(builtin_group("A5"));
  CHECK(L5->node(L5->sylow(2)).order == 4);
  auto L15 = lattice_of(builtin_group("Z15"));
  CHECK(L15->node(L15->sylow(7)).order == 1);
  CHECK_THROWS_AS(L4->sylow(4), ArgumentError);
}

TEST_CASE("sylow counting congruence") {
  for (const char* name : {"S4", "A5", "D6", "order39", "hol5"}) {
    auto G = builtin_group(name);
    auto L = lattice_of(G);
    for (std::uint64_t p : prime_divisors(G.order())) {
      std::uint64_t pa = L->node(L->sylow(p)).order;
      size_t count = 0;
      for (int i = 0; i < L->size(); ++i) {
        if (L->node(i).order == pa) ++count;
      }
      CHECK(count % p == 1);
      CHECK((G.order() / pa) % count == 0);
    }
  }
}

TEST_CASE("maximal subgroups") {
  auto L3 = lattice_of(builtin_group("S3"));
  auto m3 = L3->maximal_subgroups();
  CHECK(m3.size() == 4);  // Z_3 and three Z_2

  auto L12 = lattice_of(builtin_group("Z12"));
  std::multiset<std::uint64_t> orders;
  for (int m : L12->maximal_subgroups()) orders.insert(L12->node(m).order);
  CHECK(orders == std::multiset<std::uint64_t>{4, 6});

  auto L5 = lattice_of(builtin_group("A5"));
  std::set<std::uint64_t> m5;
  for (int m : L5->maximal_subgroups()) m5.insert(L5->node(m).order);
  CHECK(m5 == std::set<std::uint64_t>{6, 10, 12});
}

TEST_CASE("minimal normal subgroups") {
  auto L4 = lattice_of(builtin_group("S4"));
  auto mins = L4->minimal_normal_subgroups();
  REQUIRE(mins.size() == 1);
  CHECK(L4->node(mins[0]).order == 4);

  auto L6 = lattice_of(builtin_group("Z6"));
  std::multiset<std::uint64_t> orders;
  for (int m : L6->minimal_normal_subgroups()) orders.insert(L6->node(m).order);
  CHECK(orders == std::multiset<std::uint64_t>{2, 3});

  auto L5 = lattice_of(builtin_group("A5"));
  auto m5 = L5->minimal_normal_subgroups();
  REQUIRE(m5.size() == 1);
  CHECK(m5[0] == L5->full_node());

  CHECK_THROWS_AS(lattice_of(builtin_group("Z1"))->minimal_normal_subgroups(),
                  ArgumentError);
}

TEST_CASE("frattini and fitting") {
  auto L4 = lattice_of(builtin_group("S4"));
  CHECK(L4->frattini() == L4->trivial_node());
  CHECK(L4->node(L4->fitting()).order == 4);

  auto LZ4 = lattice_of(builtin_group("Z4"));
  CHECK(LZ4->node(LZ4->frattini()).order == 2);

  auto LQ8 = lattice_of(builtin_group("Q8"));
  CHECK(LQ8->node(LQ8->frattini()).order == 2);
  CHECK(LQ8->fitting() == LQ8->full_node());  // nilpotent

  auto L5 = lattice_of(builtin_group("A5"));
  CHECK(L5->fitting() == L5->trivial_node());

  for (const char* name : {"S4", "Q8", "D6", "hol5"}) {
    auto L = lattice_of(builtin_group(name));
    int phi = L->frattini();
    CHECK(L->is_normal_in(phi, L->full_node()));
    CHECK(is_nilpotent(L->subgroup_group(phi)));
    CHECK(L->contains(L->fitting(), phi));
  }
}

TEST_CASE("o_p") {
  auto L4 = lattice_of(builtin_group("S4"));
  CHECK(L4->node(L4->o_p(2)).order == 4);
  auto L3 = lattice_of(builtin_group("S3"));
  CHECK(L3->node(L3->o_p(3)).order == 3);
  auto L5 = lattice_of(builtin_group("A5"));
  CHECK(L5->o_p(2) == L5->trivial_node());
}

TEST_CASE("direct sylow and o_p match the lattice") {
  for (const char* name : {"S4", "A5", "hol5", "order39", "D6"}) {
    auto G = builtin_group(name);
    auto L = lattice_of(G);
    for (std::uint64_t p : prime_divisors(G.order())) {
      CHECK(sylow_subgroup_direct(G, p).order() == L->node(L->sylow(p)).order);
      CHECK(o_p_direct(G, p).order() == L->node(L->o_p(p)).order);
    }
  }
}

TEST_CASE("chief series") {
  auto L4 = lattice_of(builtin_group("S4"));
  std::vector<std::uint64_t> orders;
  for (int n : L4->chief_series()) orders.push_back(L4->node(n).order);
  CHECK(orders == std::vector<std::uint64_t>{1, 4, 12, 24});

  auto L6 = lattice_of(builtin_group("Z6"));
  CHECK(L6->chief_series().size() == 3);

  auto L5 = lattice_of(builtin_group("A5"));
  CHECK(L5->chief_series().size() == 2);

  // Factors are chief: no intermediate normal subgroup of G between terms.
  for (const char* name : {"S4", "D6", "Q8", "hol5"}) {
    auto L = lattice_of(builtin_group(name));
    const auto& s = L->chief_series();
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      for (int n : L->normal_nodes()) {
        bool between = L->contains(n, s[i]) && L->contains(s[i + 1], n) &&
                       n != s[i] && n != s[i + 1];
        CHECK(!between);
      }
    }
  }
}

TEST_CASE("chief centralizer") {
  auto Z6 = builtin_group("Z6");
  auto L6 = lattice_of(Z6);
  const auto& s6 = L6->chief_series();
  CHECK(L6->chief_centralizer(s6[1], s6[0]) == L6->full_node());  // abelian

  auto L4 = lattice_of(builtin_group("S4"));
  const auto& s4 = L4->chief_series();
  // C_{S4}(V_4/1) = V_4.
  CHECK(L4->node(L4->chief_centralizer(s4[1], s4[0])).order == 4);

  auto L3 = lattice_of(builtin_group("S3"));
  const auto& s3 = L3->chief_series();
  CHECK(L3->node(L3->chief_centralizer(s3[1], s3[0])).order == 3);

  CHECK_THROWS_AS(
      L4->chief_centralizer(L4->sylow(2), L4->trivial_node()),
      ArgumentError);
}

TEST_CASE("automizer exponent test") {
  auto L4 = lattice_of(builtin_group("S4"));
  const auto& s4 = L4->chief_series();
  // A_4/V_4 has order 3; automizer S_4/C has order <= 2.
  CHECK(L4->automizer_abelian_exp_dividing(s4[2], s4[1], 2));

  auto L5 = lattice_of(builtin_group("A5"));
  const auto& s5 = L5->chief_series();
  CHECK(!L5->automizer_abelian_exp_dividing(s5[1], s5[0], 59));
}

TEST_CASE("intersect join conjugate") {
  auto S4 = builtin_group("S4");
  auto L = lattice_of(S4);
  for (int a = 0; a < L->size(); ++a) {
    for (int b = a; b < L->size(); ++b) {
      int m = L->intersect(a, b);
      int j = L->join(a, b);
      CHECK(L->contains(a, m));
      CHECK(L->contains(b, m));
      CHECK(L->contains(j, a));
      CHECK(L->contains(j, b));
    }
  }
  int h = L->node_of_group(make(4, {"(1 2)"}));
  int gi = L->table().index_of(Permutation::from_cycles("(1 3)", 4));
  int hc = L->conjugate_node(h, gi);
  CHECK(L->node(hc).order == 2);
  CHECK(hc != h);
}

TEST_CASE("dot export") {
  auto L = lattice_of(builtin_group("S3"));
  auto text = L->dot();
  CHECK(text.find("digraph") != std::string::npos);
  CHECK(text.find("order=6 normal=1") != std::string::npos);
  CHECK(text.find("order=2 normal=0") != std::string::npos);
}

TEST_CASE("lattice cap") {
  auto S6 = make(6, {"(1 2 3 4 5 6)", "(1 2)"});
  CHECK(S6.order() == 720);
  CHECK_THROWS_AS(SubgroupLattice{S6}, CapacityError);
}
